#include "ccfc/fractional.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <random>

namespace ccfc {

int mask_size(SetMask m) { return std::popcount(m); }

SetMask full_palette(int k) {
    if (k < 1 || k > 31) fail(ErrorCode::BadParams, "palette size out of range");
    return (1u << k) - 1;
}

SetMask take_lowest(SetMask pool, int count) {
    if (count < 0 || mask_size(pool) < count)
        fail(ErrorCode::Inconsistent, "color pool too small");
    SetMask out = 0;
    while (count-- > 0) {
        SetMask low = pool & (~pool + 1);
        out |= low;
        pool ^= low;
    }
    return out;
}

std::string mask_to_string(SetMask m) {
    std::string out = "{";
    bool first = true;
    for (int c = 0; c < 32; ++c) {
        if (!((m >> c) & 1u)) continue;
        if (!first) out += ",";
        out += std::to_string(c);
        first = false;
    }
    return out + "}";
}

std::vector<SetMask> all_subsets(int k, int b) {
    if (k < 1 || k > 20 || b < 0 || b > k) fail(ErrorCode::BadParams, "subset universe range");
    std::vector<SetMask> out;
    for (SetMask m = 0; m < (1u << k); ++m)
        if (std::popcount(m) == b) out.push_back(m);
    return out;
}

bool FractionalColoring::total() const {
    return std::all_of(assignment.begin(), assignment.end(), [](SetMask m) { return m != 0; });
}

bool check_fractional(const Graph& g, const FractionalColoring& col) {
    if (col.palette < 1 || col.subset_size < 1 || col.subset_size > col.palette)
        fail(ErrorCode::BadParams, "palette/subset sizes");
    if (col.size() != g.vertex_count())
        fail(ErrorCode::InvalidInput, "coloring size does not match graph");
    SetMask full = full_palette(col.palette);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!col.assigned(v)) fail(ErrorCode::PartialColoring, "vertex " + std::to_string(v));
        if ((col.assignment[v] & ~full) != 0) return false;
        if (mask_size(col.assignment[v]) != col.subset_size) return false;
    }
    for (const auto& [u, v] : g.edges())
        if ((col.assignment[u] & col.assignment[v]) != 0) return false;
    return true;
}

namespace {

void check_odd_k(int k) {
    if (k < 5 || k % 2 == 0)
        fail(ErrorCode::BadParams, "palette must be odd and at least 5, got " + std::to_string(k));
}

// Forced end overlap at distance t, valid for 0 <= t <= (k+1)/2.
int point_overlap(int k, int t) {
    return (t % 2 == 0) ? (k - 1 - t) / 2 : (t - 1) / 2;
}

}  // namespace

PathBound path_bound(int order, int k) {
    check_odd_k(k);
    if (order < 2 || order > k) fail(ErrorCode::BadParams, "path order out of range");
    if (order % 2 == 1) return {BoundKind::Lower, (k - order) / 2};
    return {BoundKind::Upper, (order - 2) / 2};
}

int cycle_intersection_required(int k, int dist) {
    check_odd_k(k);
    if (dist < 0 || dist > (k - 1) / 2)
        fail(ErrorCode::BadParams, "cycle distance out of range");
    return point_overlap(k, dist);
}

OverlapInterval feasible_overlap(int k, int dist) {
    check_odd_k(k);
    if (dist < 0) fail(ErrorCode::BadParams, "negative distance");
    int half = (k - 1) / 2;
    if (dist <= (k + 1) / 2) {
        int point = point_overlap(k, dist);
        return {point, point};
    }
    int lo = (dist % 2 == 0) ? (k - dist - 1) / 2 : (k - dist) / 2;
    int hi = (dist % 2 == 0) ? dist / 2 - 1 : (dist - 1) / 2;
    return {std::max(lo, 0), std::min(hi, half)};
}

int Q4::to_int() const {
    if (!is_integer()) fail(ErrorCode::Inconsistent, "quarter-integer is not integral");
    return num4 / 4;
}

MNResult compute_MN(int k, int s, int t, int l, bool case2) {
    check_odd_k(k);
    int half = (k - 1) / 2;
    if (s < 1 || s > half) fail(ErrorCode::HypothesisViolated, "cut distance s out of range");
    int rest = t - s;
    if (rest < 1 || rest > (k + 1) / 2)
        fail(ErrorCode::HypothesisViolated, "t-s out of range");
    if (case2 && rest != (k + 1) / 2)
        fail(ErrorCode::HypothesisViolated, "case 2 requires effective t-s = (k+1)/2");
    if (!feasible_overlap(k, t).contains(l))
        fail(ErrorCode::HypothesisViolated, "overlap outside the distance-t interval");
    Q4 beta{(s % 2 == 0 ? 1 : -1) * (k - 2 * s)};
    Q4 gamma = case2 ? Q4{(((k + 1) / 2) % 2 == 0) ? -1 : 1}
                     : Q4{(rest % 2 == 0 ? 1 : -1) * (k - 2 * rest)};
    int l4 = 4 * l;
    MNResult out;
    out.beta = beta;
    out.gamma = gamma;
    out.lower =
        Q4{std::max({beta.num4 + l4 - k, 0, gamma.num4 + l4 - k, beta.num4 + gamma.num4 - 2})};
    out.upper = Q4{std::min({(k - 2) + beta.num4, l4, (k - 2) + gamma.num4,
                             beta.num4 + gamma.num4 + l4 + 2})};
    return out;
}

std::optional<FractionalSplit> plan_necklace_split(int k, SetMask sx, SetMask sy, int s,
                                                   int rest, int right_target) {
    check_odd_k(k);
    int half = (k - 1) / 2;
    FractionalSplit split;
    split.palette = k;
    split.left_distance = s;
    split.right_distance = rest;
    split.end_overlap = mask_size(sx & sy);
    split.only_left = sx & ~sy;
    split.both = sx & sy;
    split.only_right = sy & ~sx;
    split.neither = full_palette(k) & ~(sx | sy);
    split.beta = Q4{(s % 2 == 0 ? 1 : -1) * (k - 2 * s)};
    split.gamma = Q4{4 * right_target - (k - 2)};
    int goal_left = point_overlap(k, s);
    int l = split.end_overlap;
    int side = half - l;  // |A| = |C|
    split.lower =
        std::max({0, goal_left - side, right_target - side, goal_left + right_target - half});
    split.upper = std::min(
        {goal_left, l, right_target, goal_left + right_target - half + l + 1});
    if (split.lower > split.upper) return std::nullopt;
    split.take_both = split.lower;
    split.take_left = goal_left - split.take_both;
    split.take_right = right_target - split.take_both;
    split.take_neither = half - split.take_left - split.take_both - split.take_right;
    split.cut_set = take_lowest(split.only_left, split.take_left) |
                    take_lowest(split.both, split.take_both) |
                    take_lowest(split.only_right, split.take_right) |
                    take_lowest(split.neither, split.take_neither);
    return split;
}

namespace {

NecklaceGeom slice_geom(const NecklaceGeom& geom, int first_link, int link_end) {
    NecklaceGeom out;
    out.spec.modulus = geom.spec.modulus;
    out.spec.links.assign(geom.spec.links.begin() + first_link,
                          geom.spec.links.begin() + link_end);
    out.anchors.assign(geom.anchors.begin() + first_link, geom.anchors.begin() + link_end + 1);
    out.links.assign(geom.links.begin() + first_link, geom.links.begin() + link_end);
    return out;
}

// Writes a canonical cycle coloring (ends at positions 0 and min-arc
// distance) onto a realized link cycle, whose far anchor sits at position
// split+1. When the short arc is the complementary thread, the cycle is
// traversed in reverse.
void fill_link_cycle(const LinkGeom& lg, int split, int k,
                     const std::vector<SetMask>& canonical, std::vector<SetMask>& colors) {
    int d = split + 1;
    bool forward = d <= k - d;
    for (int pos = 0; pos < k; ++pos) {
        int canonical_pos = forward ? pos : (k - pos) % k;
        colors[lg.cycle[pos]] = canonical[canonical_pos];
    }
}

NecklaceGeom thread_geom_from_path(const std::vector<int>& path, int k) {
    NecklaceGeom geom;
    geom.spec.modulus = k;
    geom.anchors = path;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        geom.spec.links.push_back(edge_link());
        LinkGeom lg;
        lg.left = path[i];
        lg.right = path[i + 1];
        geom.links.push_back(lg);
    }
    return geom;
}

// Constructive extension along a realized necklace. Writes end sets and all
// interior sets into `colors` on success; may leave partial writes on
// failure, so callers branch on copies.
bool extend_chain_fr(const NecklaceGeom& geom, SetMask sx, SetMask sy,
                     std::vector<SetMask>& colors) {
    const NecklaceSpec& spec = geom.spec;
    int k = spec.modulus;
    int total_dist = necklace_distance(spec);
    int overlap = mask_size(sx & sy);
    if (!feasible_overlap(k, total_dist).contains(overlap)) return false;
    colors[geom.left()] = sx;
    colors[geom.right()] = sy;
    if (spec.link_count() == 1) {
        if (spec.links[0].is_edge()) return true;
        auto cyc = color_cycle_fractional(k, sx, sy, link_distance(spec, 0));
        if (!cyc) return false;
        fill_link_cycle(geom.links[0], spec.links[0].split, k, *cyc, colors);
        return true;
    }

    int s = link_distance(spec, 0);
    int rest = total_dist - s;
    std::vector<int> targets;
    if (rest <= (k + 1) / 2) {
        targets.push_back(point_overlap(k, rest));
    } else {
        // Preferred right-hand target is the fixed half-distance value; when
        // the box constraints reject it, sweep the rest of the window.
        OverlapInterval window = feasible_overlap(k, rest);
        int sign = (((k + 1) / 2) % 2 == 0) ? 1 : -1;
        int preferred = (k - 2 - sign) / 4;
        if (window.contains(preferred)) targets.push_back(preferred);
        for (int v = window.lo; v <= window.hi; ++v)
            if (v != preferred) targets.push_back(v);
    }

    NecklaceGeom head = slice_geom(geom, 0, 1);
    NecklaceGeom tail = slice_geom(geom, 1, spec.link_count());
    for (int target : targets) {
        auto split = plan_necklace_split(k, sx, sy, s, rest, target);
        if (!split) continue;
        if (extend_chain_fr(head, sx, split->cut_set, colors) &&
            extend_chain_fr(tail, split->cut_set, sy, colors))
            return true;
    }
    return false;
}

// Exact per-necklace decision: dynamic programming over the anchor color
// sets, using the forced cycle-overlap criterion as the link relation.
bool extend_chain_exact_fr(const NecklaceGeom& geom, SetMask sx, SetMask sy,
                           std::vector<SetMask>& colors) {
    const NecklaceSpec& spec = geom.spec;
    int k = spec.modulus;
    int b = (k - 1) / 2;
    std::vector<SetMask> values = all_subsets(k, b);
    int nv = static_cast<int>(values.size());
    std::vector<int> index_of(1u << k, -1);
    for (int i = 0; i < nv; ++i) index_of[values[i]] = i;
    if (mask_size(sx) != b || mask_size(sy) != b) return false;

    auto link_ok = [&](int link, SetMask left, SetMask right) {
        if (spec.links[link].is_edge()) return (left & right) == 0;
        return mask_size(left & right) == point_overlap(k, link_distance(spec, link));
    };

    int links = spec.link_count();
    std::vector<std::vector<char>> reach(links + 1, std::vector<char>(nv, 0));
    reach[0][index_of[sx]] = 1;
    for (int i = 0; i < links; ++i)
        for (int from = 0; from < nv; ++from) {
            if (!reach[i][from]) continue;
            for (int to = 0; to < nv; ++to)
                if (!reach[i + 1][to] && link_ok(i, values[from], values[to]))
                    reach[i + 1][to] = 1;
        }
    if (!reach[links][index_of[sy]]) return false;

    std::vector<SetMask> chain(links + 1);
    chain[links] = sy;
    for (int i = links - 1; i >= 0; --i) {
        int found = -1;
        for (int from = 0; from < nv && found < 0; ++from)
            if (reach[i][from] && link_ok(i, values[from], chain[i + 1])) found = from;
        if (found < 0) fail(ErrorCode::Inconsistent, "reachable state lost a predecessor");
        chain[i] = values[found];
    }
    for (int i = 0; i <= links; ++i) colors[geom.anchors[i]] = chain[i];
    for (int i = 0; i < links; ++i) {
        if (spec.links[i].is_edge()) continue;
        auto cyc = color_cycle_fractional(k, chain[i], chain[i + 1], link_distance(spec, i));
        if (!cyc) fail(ErrorCode::Inconsistent, "cycle fill failed on a feasible link");
        fill_link_cycle(geom.links[i], spec.links[i].split, k, *cyc, colors);
    }
    return true;
}

// Bull interior construction. Hypotheses are validated by callers; this
// routine picks the split sizes, colors the center, and extends the two
// threads and the necklace arm.
bool extend_bull_core(int k, int t, const NecklaceGeom& thread_x, const NecklaceGeom& thread_y,
                      const NecklaceGeom& arm, SetMask sx, SetMask sy, SetMask sz,
                      std::vector<SetMask>& colors) {
    int s_arm = necklace_distance(arm.spec);
    SetMask region_a = sx & ~sy;
    SetMask region_b = sx & sy;
    SetMask region_c = sy & ~sx;
    SetMask region_d = full_palette(k) & ~(sx | sy);
    SetMask shared = (t % 2 == 0) ? region_b : region_d;
    SetMask shared_out = shared & ~sz;
    SetMask shared_in = shared & sz;
    int tau = (t % 2 == 0) ? t / 2 : (t - 1) / 2;
    int sigma = (t % 2 == 0) ? t / 2 : (t + 1) / 2;
    int s1 = mask_size(shared_out);
    int s2 = mask_size(shared_in);
    SetMask a_out = region_a & ~sz, a_in = region_a & sz;
    SetMask c_out = region_c & ~sz, c_in = region_c & sz;
    int wa1 = mask_size(a_out), wa2 = mask_size(a_in);
    int wc1 = mask_size(c_out), wc2 = mask_size(c_in);
    OverlapInterval window = feasible_overlap(k, s_arm);

    struct Sizes {
        int a1, a2, c1, c2;
    };
    std::vector<Sizes> attempts;
    auto push_attempt = [&](int a1, int a2, int c1, int c2) {
        if (a1 < 0 || a2 < 0 || c1 < 0 || c2 < 0) return;
        if (a1 > wa1 || a2 > wa2 || c1 > wc1 || c2 > wc2) return;
        if (a1 + a2 != tau || c1 + c2 != tau) return;
        for (const Sizes& seen : attempts)
            if (seen.a1 == a1 && seen.c1 == c1) return;
        attempts.push_back({a1, a2, c1, c2});
    };

    // Case split: one of A,C can cover the in-sz quota through S2, the other
    // the out-of-sz quota through S1; ties keep A in the first role.
    {
        bool swapped = wa2 < sigma - s2;
        int xa1 = swapped ? wc1 : wa1, xa2 = swapped ? wc2 : wa2;
        int xc1 = swapped ? wa1 : wc1, xc2 = swapped ? wa2 : wc2;
        int na1, na2, nc1, nc2;
        bool ok;
        if (xc1 >= sigma - s1) {
            nc1 = std::max({0, tau - xc2, sigma - s1});
            na2 = std::max({0, tau - xa1, sigma - s2});
            ok = nc1 <= std::min(xc1, tau) && na2 <= std::min(xa2, tau);
            nc2 = tau - nc1;
            na1 = tau - na2;
        } else {
            nc2 = std::max({0, tau - xc1, sigma - s2});
            na1 = std::max({0, tau - xa2, sigma - s1});
            ok = nc2 <= std::min(xc2, tau) && na1 <= std::min(xa1, tau);
            nc1 = tau - nc2;
            na2 = tau - na1;
        }
        if (ok) {
            if (swapped) push_attempt(nc1, nc2, na1, na2);
            else push_attempt(na1, na2, nc1, nc2);
        }
    }
    // Sweep aimed at the arm's overlap window, then any size-feasible split.
    for (int ov = window.lo; ov <= window.hi; ++ov)
        for (int a2 = std::max(0, tau - wa1); a2 <= std::min(wa2, tau); ++a2) {
            int c2 = ov - s2 - a2;
            if (c2 < 0 || c2 > std::min(wc2, tau) || tau - c2 > wc1) continue;
            push_attempt(tau - a2, a2, tau - c2, c2);
        }
    for (int a2 = std::max(0, tau - wa1); a2 <= std::min(wa2, tau); ++a2)
        for (int c2 = std::max(0, tau - wc1); c2 <= std::min(wc2, tau); ++c2)
            push_attempt(tau - a2, a2, tau - c2, c2);

    for (const Sizes& pick : attempts) {
        FractionalSplit split;
        split.palette = k;
        split.left_distance = t;
        split.right_distance = t;
        split.end_overlap = mask_size(sx & sy);
        split.only_left = region_a;
        split.both = region_b;
        split.only_right = region_c;
        split.neither = region_d;
        split.shared = shared;
        split.shared_out = shared_out;
        split.shared_in = shared_in;
        split.left_out = take_lowest(a_out, pick.a1);
        split.left_in = take_lowest(a_in, pick.a2);
        split.right_out = take_lowest(c_out, pick.c1);
        split.right_in = take_lowest(c_in, pick.c2);
        split.cut_set =
            split.left_out | split.left_in | shared | split.right_out | split.right_in;
        SetMask center = split.cut_set;
        int ov = mask_size(center & sz);
        std::vector<SetMask> trial = colors;
        bool arm_ok = window.contains(ov) && extend_chain_fr(arm, center, sz, trial);
        if (!arm_ok) {
            trial = colors;
            arm_ok = extend_chain_exact_fr(arm, center, sz, trial);
        }
        if (!arm_ok) continue;
        if (!extend_chain_fr(thread_x, center, sx, trial)) continue;
        if (!extend_chain_fr(thread_y, center, sy, trial)) continue;
        colors = std::move(trial);
        return true;
    }
    return false;
}

void check_bull_hypothesis(int k, int t, int s_arm, SetMask sx, SetMask sy) {
    int half = (k - 1) / 2;
    if (mask_size(sx) != half || mask_size(sy) != half)
        fail(ErrorCode::BadParams, "end sets must have (k-1)/2 colors");
    if (t < 1 || t > half) fail(ErrorCode::HypothesisViolated, "need 1 <= t <= (k-1)/2");
    if (t + s_arm < k) fail(ErrorCode::HypothesisViolated, "need t + d(v,z) >= k");
    if (mask_size(sx & sy) != (k - 1 - 2 * t) / 2)
        fail(ErrorCode::HypothesisViolated, "|sx n sy| must be (k-1-2t)/2");
}

std::vector<int> shortest_path(const Graph& g, int from, int to) {
    std::vector<int> parent(g.vertex_count(), -2);
    std::deque<int> queue{from};
    parent[from] = -1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == to) break;
        for (int w : g.neighbors(u))
            if (parent[w] == -2) {
                parent[w] = u;
                queue.push_back(w);
            }
    }
    if (parent[to] == -2) fail(ErrorCode::BadSpec, "vertices are disconnected");
    std::vector<int> path;
    for (int at = to; at != -1; at = parent[at]) path.push_back(at);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

std::optional<std::vector<SetMask>> color_cycle_fractional(int k, SetMask sx, SetMask sy,
                                                           int dist) {
    check_odd_k(k);
    int b = (k - 1) / 2;
    if (dist < 0 || dist > b) fail(ErrorCode::BadParams, "cycle distance out of range");
    if (mask_size(sx) != b || mask_size(sy) != b)
        fail(ErrorCode::BadParams, "end sets must have (k-1)/2 colors");
    if (mask_size(sx & sy) != cycle_intersection_required(k, dist)) return std::nullopt;

    // Canonical alternating pattern around the cycle, 0-based palette.
    std::vector<SetMask> canon(k, 0);
    for (int i = 0; 2 * i <= k - 1; ++i) {
        SetMask m = 0;
        for (int c = 0; c < b - i; ++c) m |= (1u << c);
        for (int c = k - i; c < k; ++c) m |= (1u << c);
        canon[2 * i] = m;
    }
    for (int i = 0; 2 * i + 1 <= k - 2; ++i) {
        SetMask m = 0;
        for (int c = b - i; c <= k - i - 2; ++c) m |= (1u << c);
        canon[2 * i + 1] = m;
    }

    // Map the canonical end regions onto the requested ones, lowest colors
    // first within each region.
    SetMask canon_x = canon[0], canon_y = canon[dist];
    std::array<std::pair<SetMask, SetMask>, 4> regions = {{
        {canon_x & ~canon_y, sx & ~sy},
        {canon_x & canon_y, sx & sy},
        {canon_y & ~canon_x, sy & ~sx},
        {full_palette(k) & ~(canon_x | canon_y), full_palette(k) & ~(sx | sy)},
    }};
    std::vector<int> perm(k, -1);
    for (const auto& [from_mask, to_mask] : regions) {
        std::vector<int> from, to;
        for (int c = 0; c < k; ++c) {
            if ((from_mask >> c) & 1u) from.push_back(c);
            if ((to_mask >> c) & 1u) to.push_back(c);
        }
        if (from.size() != to.size()) fail(ErrorCode::Inconsistent, "region size mismatch");
        for (size_t i = 0; i < from.size(); ++i) perm[from[i]] = to[i];
    }
    std::vector<SetMask> out(k, 0);
    for (int pos = 0; pos < k; ++pos)
        for (int c = 0; c < k; ++c)
            if ((canon[pos] >> c) & 1u) out[pos] |= (1u << perm[c]);
    return out;
}

std::optional<FractionalColoring> extend_necklace_fractional(const NecklaceSpec& spec,
                                                             SetMask sx, SetMask sy) {
    validate_necklace_spec(spec);
    check_odd_k(spec.modulus);
    int b = (spec.modulus - 1) / 2;
    if (mask_size(sx) != b || mask_size(sy) != b)
        fail(ErrorCode::BadParams, "end sets must have (k-1)/2 colors");
    auto [graph, geom] = build_necklace_geom(spec);
    FractionalColoring col = make_fractional_coloring(spec.modulus, graph.vertex_count());
    if (!extend_chain_fr(geom, sx, sy, col.assignment)) return std::nullopt;
    return col;
}

std::optional<FractionalColoring> extend_necklace_exact(const NecklaceSpec& spec, SetMask sx,
                                                        SetMask sy) {
    validate_necklace_spec(spec);
    check_odd_k(spec.modulus);
    auto [graph, geom] = build_necklace_geom(spec);
    FractionalColoring col = make_fractional_coloring(spec.modulus, graph.vertex_count());
    if (!extend_chain_exact_fr(geom, sx, sy, col.assignment)) return std::nullopt;
    return col;
}

std::optional<FractionalColoring> extend_bull_fractional(const MultiSpec& spec, SetMask sx,
                                                         SetMask sy, SetMask sz) {
    validate_multi_spec(spec);
    if (spec.center != CenterKind::Bull) fail(ErrorCode::BadSpec, "spec is not a bull");
    int k = spec.modulus;
    check_odd_k(k);
    int t = spec.bull_thread_length;
    int s_arm = necklace_distance(spec.arms[2]);
    check_bull_hypothesis(k, t, s_arm, sx, sy);
    if (mask_size(sz) != (k - 1) / 2)
        fail(ErrorCode::BadParams, "end sets must have (k-1)/2 colors");
    auto [graph, geom] = build_multi_geom(spec);
    FractionalColoring col = make_fractional_coloring(k, graph.vertex_count());
    if (!extend_bull_core(k, t, geom.arm_geoms[0], geom.arm_geoms[1], geom.arm_geoms[2], sx, sy,
                          sz, col.assignment))
        return std::nullopt;
    return col;
}

std::optional<FractionalColoring> certify_fv_extension(const Graph& fv, int k,
                                                       const FractionalColoring& outer) {
    check_odd_k(k);
    int vx = fv.landmark("x"), vy = fv.landmark("y");
    int vz = fv.landmark("z"), vv = fv.landmark("v");
    if (outer.palette != k || outer.subset_size != (k - 1) / 2 ||
        outer.size() != fv.vertex_count())
        fail(ErrorCode::InvalidInput, "outer coloring shape mismatch");

    int t = distance(fv, vv, vx);
    if (distance(fv, vv, vy) != t || t < 1 || t > (k - 1) / 2)
        fail(ErrorCode::BadParams, "thread distances do not describe a bull");

    // Arm = the component of fv - v containing z.
    std::vector<char> in_arm(fv.vertex_count(), 0);
    {
        std::deque<int> queue{vz};
        in_arm[vz] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : fv.neighbors(u))
                if (w != vv && !in_arm[w]) {
                    in_arm[w] = 1;
                    queue.push_back(w);
                }
        }
        if (in_arm[vx] || in_arm[vy]) fail(ErrorCode::BadSpec, "arm is not separated by v");
    }
    std::vector<char> arm_allowed = in_arm;
    arm_allowed[vv] = 1;
    NecklaceGeom arm = decompose_necklace(fv, arm_allowed, vv, vz, k);
    int s_arm = necklace_distance(arm.spec);
    if (t + s_arm < k) fail(ErrorCode::HypothesisViolated, "need t + d(v,z) >= k");

    std::vector<int> path_x = shortest_path(fv, vv, vx);
    std::vector<int> path_y = shortest_path(fv, vv, vy);
    if (static_cast<int>(path_x.size()) != t + 1 || static_cast<int>(path_y.size()) != t + 1)
        fail(ErrorCode::BadSpec, "thread paths have unexpected length");

    // The outer coloring must cover exactly the (x,y)-path and z.
    std::vector<char> interior(fv.vertex_count(), 0);
    interior[vv] = 1;
    for (size_t i = 1; i + 1 < path_x.size(); ++i) interior[path_x[i]] = 1;
    for (size_t i = 1; i + 1 < path_y.size(); ++i) interior[path_y[i]] = 1;
    for (int u = 0; u < fv.vertex_count(); ++u)
        if (in_arm[u] && u != vz) interior[u] = 1;
    for (int u = 0; u < fv.vertex_count(); ++u) {
        bool should = !interior[u];
        if (outer.assigned(u) != should)
            fail(ErrorCode::InvalidInput,
                 "outer coloring support mismatch at vertex " + std::to_string(u));
        if (should && mask_size(outer.assignment[u]) != (k - 1) / 2)
            fail(ErrorCode::InvalidInput, "outer set size mismatch");
    }
    for (const auto& [a, bb] : fv.edges())
        if (outer.assigned(a) && outer.assigned(bb) &&
            (outer.assignment[a] & outer.assignment[bb]) != 0)
            fail(ErrorCode::InvalidInput, "outer coloring violates disjointness");

    SetMask sx = outer.assignment[vx], sy = outer.assignment[vy], sz = outer.assignment[vz];
    if (mask_size(sx & sy) != (k - 1 - 2 * t) / 2) return std::nullopt;

    FractionalColoring result = outer;
    if (!extend_bull_core(k, t, thread_geom_from_path(path_x, k),
                          thread_geom_from_path(path_y, k), arm, sx, sy, sz,
                          result.assignment))
        return std::nullopt;
    if (!check_fractional(fv, result))
        fail(ErrorCode::Inconsistent, "extension produced an invalid coloring");
    return result;
}

// ---------------------------------------------------------------------------
// Exact solver over subset domains.

namespace {

struct FractionalSolver {
    const Graph& g;
    int k, b;
    std::vector<SetMask> values;
    int nv = 0;
    int words = 0;
    std::vector<std::vector<std::uint64_t>> compat;  // per value: disjoint partners
    long long budget;
    SearchStats stats;
    std::function<bool(const std::vector<std::uint64_t>&)> on_solution;
    bool stopped = false;
    bool fix_first_branch = false;
    bool first_branch_pending = true;

    FractionalSolver(const Graph& graph, int palette, long long node_budget)
        : g(graph), k(palette), b((palette - 1) / 2), budget(node_budget) {
        values = all_subsets(k, b);
        nv = static_cast<int>(values.size());
        words = (nv + 63) / 64;
        compat.assign(nv, std::vector<std::uint64_t>(words, 0));
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < nv; ++j)
                if ((values[i] & values[j]) == 0)
                    compat[i][static_cast<size_t>(j / 64)] |= (1ULL << (j % 64));
    }

    using Domains = std::vector<std::uint64_t>;  // g.vertex_count() * words

    std::uint64_t* dom(Domains& d, int v) const { return d.data() + static_cast<size_t>(v) * words; }
    const std::uint64_t* dom(const Domains& d, int v) const {
        return d.data() + static_cast<size_t>(v) * words;
    }

    int dom_size(const Domains& d, int v) const {
        int total = 0;
        for (int w = 0; w < words; ++w) total += std::popcount(dom(d, v)[w]);
        return total;
    }

    bool revise(Domains& d, int target, int against) {
        ++stats.revisions;
        bool changed = false;
        std::uint64_t* td = dom(d, target);
        const std::uint64_t* ad = dom(d, against);
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = td[w];
            while (bits) {
                int bit = std::countr_zero(bits);
                bits &= bits - 1;
                int value = w * 64 + bit;
                const std::uint64_t* cm = compat[value].data();
                bool supported = false;
                for (int aw = 0; aw < words && !supported; ++aw)
                    supported = (cm[aw] & ad[aw]) != 0;
                if (!supported) {
                    td[w] &= ~(1ULL << bit);
                    ++stats.prunings;
                    changed = true;
                }
            }
        }
        return changed;
    }

    bool propagate(Domains& d, std::vector<int> queue) {
        std::vector<char> queued(g.vertex_count(), 0);
        for (int v : queue) queued[v] = 1;
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            queued[u] = 0;
            for (int w : g.neighbors(u)) {
                if (revise(d, w, u)) {
                    if (dom_size(d, w) == 0) return false;
                    if (!queued[w]) {
                        queued[w] = 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        return true;
    }

    void search(Domains& d) {
        if (stopped) return;
        int pick = -1, best = nv + 1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            int size = dom_size(d, v);
            if (size >= 2 && size < best) {
                best = size;
                pick = v;
            }
        }
        if (pick == -1) {
            if (!on_solution(d)) stopped = true;
            return;
        }
        bool only_first = fix_first_branch && first_branch_pending;
        first_branch_pending = false;
        for (int w = 0; w < words && !stopped; ++w) {
            std::uint64_t bits = dom(d, pick)[w];
            while (bits && !stopped) {
                int bit = std::countr_zero(bits);
                bits &= bits - 1;
                ++stats.nodes;
                if (budget > 0 && stats.nodes > budget)
                    fail(ErrorCode::BudgetExceeded,
                         "search exceeded " + std::to_string(budget) + " nodes");
                Domains saved = d;
                for (int ww = 0; ww < words; ++ww) dom(d, pick)[ww] = 0;
                dom(d, pick)[w] = (1ULL << bit);
                if (propagate(d, {pick})) search(d);
                d = std::move(saved);
                if (only_first) return;
            }
        }
    }

    Domains initial_domains(const FractionalColoring* pre) {
        Domains d(static_cast<size_t>(g.vertex_count()) * words, 0);
        std::vector<std::uint64_t> full(words, 0);
        for (int i = 0; i < nv; ++i) full[static_cast<size_t>(i / 64)] |= (1ULL << (i % 64));
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int w = 0; w < words; ++w) dom(d, v)[w] = full[w];
        if (pre) {
            if (pre->palette != k || pre->size() != g.vertex_count() || pre->subset_size != b)
                fail(ErrorCode::InconsistentPrecoloring, "precoloring shape mismatch");
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (!pre->assigned(v)) continue;
                SetMask m = pre->assignment[v];
                if ((m & ~full_palette(k)) != 0 || mask_size(m) != b)
                    fail(ErrorCode::InconsistentPrecoloring,
                         "vertex " + std::to_string(v) + " has a malformed set");
                int idx = -1;
                for (int i = 0; i < nv; ++i)
                    if (values[i] == m) {
                        idx = i;
                        break;
                    }
                for (int w = 0; w < words; ++w) dom(d, v)[w] = 0;
                dom(d, v)[static_cast<size_t>(idx / 64)] |= (1ULL << (idx % 64));
            }
            for (const auto& [u, v] : g.edges())
                if (pre->assigned(u) && pre->assigned(v) &&
                    (pre->assignment[u] & pre->assignment[v]) != 0)
                    fail(ErrorCode::InconsistentPrecoloring,
                         "edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") sets overlap");
        }
        return d;
    }

    FractionalColoring extract(const Domains& d) const {
        FractionalColoring col(k, b, g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int w = 0; w < words; ++w)
                if (dom(d, v)[w]) {
                    col.assignment[v] = values[w * 64 + std::countr_zero(dom(d, v)[w])];
                    break;
                }
        return col;
    }
};

}  // namespace

FractionalSolveResult solve_fractional(const Graph& g, int k,
                                       const FractionalColoring* precoloring,
                                       long long budget) {
    check_odd_k(k);
    if (k > 15) fail(ErrorCode::BadParams, "palette above 15 not supported by the solver");
    FractionalSolver solver(g, k, budget);
    bool has_pre = false;
    if (precoloring)
        for (int v = 0; v < g.vertex_count() && !has_pre; ++v)
            has_pre = precoloring->assigned(v);
    solver.fix_first_branch = !has_pre;
    FractionalSolveResult result;
    FractionalSolver::Domains d = solver.initial_domains(precoloring);
    solver.on_solution = [&](const FractionalSolver::Domains& sol) {
        result.sat = true;
        result.coloring = solver.extract(sol);
        return false;
    };
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    if (solver.propagate(d, all)) solver.search(d);
    result.stats = solver.stats;
    if (result.sat && !check_fractional(g, result.coloring))
        fail(ErrorCode::Inconsistent, "solver produced an invalid coloring");
    return result;
}

long long enumerate_fractional(const Graph& g, int k, const FractionalColoring* precoloring,
                               const std::function<bool(const FractionalColoring&)>& visit,
                               long long budget) {
    check_odd_k(k);
    if (k > 15) fail(ErrorCode::BadParams, "palette above 15 not supported by the solver");
    FractionalSolver solver(g, k, budget);
    solver.fix_first_branch = false;
    long long count = 0;
    solver.on_solution = [&](const FractionalSolver::Domains& sol) {
        ++count;
        return visit(solver.extract(sol));
    };
    FractionalSolver::Domains d = solver.initial_domains(precoloring);
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    if (solver.propagate(d, all)) solver.search(d);
    return count;
}

ReducibilityReport certify_reducible_fractional(const Graph& h,
                                                const std::vector<std::string>& ends, int k,
                                                const OverlapPredicate& predicate,
                                                long long sample_count, std::uint64_t seed) {
    check_odd_k(k);
    int b = (k - 1) / 2;
    std::vector<int> end_ids;
    for (const auto& name : ends) end_ids.push_back(h.landmark(name));
    if (end_ids.size() != 2 && end_ids.size() != 3)
        fail(ErrorCode::BadParams, "need two or three ends");

    // Recover the structure once.
    NecklaceGeom necklace;
    NecklaceGeom arm, thread_x, thread_y;
    int bull_t = 0;
    if (end_ids.size() == 2) {
        std::vector<char> allowed(h.vertex_count(), 1);
        necklace = decompose_necklace(h, allowed, end_ids[0], end_ids[1], k);
    } else {
        int vv = h.landmark("v");
        std::vector<char> in_arm(h.vertex_count(), 0);
        std::deque<int> queue{end_ids[2]};
        in_arm[end_ids[2]] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : h.neighbors(u))
                if (w != vv && !in_arm[w]) {
                    in_arm[w] = 1;
                    queue.push_back(w);
                }
        }
        std::vector<char> arm_allowed = in_arm;
        arm_allowed[vv] = 1;
        arm = decompose_necklace(h, arm_allowed, vv, end_ids[2], k);
        std::vector<int> px = shortest_path(h, vv, end_ids[0]);
        std::vector<int> py = shortest_path(h, vv, end_ids[1]);
        if (px.size() != py.size()) fail(ErrorCode::BadSpec, "bull threads differ in length");
        bull_t = static_cast<int>(px.size()) - 1;
        thread_x = thread_geom_from_path(px, k);
        thread_y = thread_geom_from_path(py, k);
        std::vector<char> covered = in_arm;
        covered[vv] = 1;
        for (int u : px) covered[u] = 1;
        for (int u : py) covered[u] = 1;
        for (int u = 0; u < h.vertex_count(); ++u)
            if (!covered[u]) fail(ErrorCode::BadSpec, "graph has vertices outside the bull");
    }

    std::vector<SetMask> subsets = all_subsets(k, b);
    long long nsub = static_cast<long long>(subsets.size());
    long long space = 1;
    for (size_t i = 0; i < end_ids.size(); ++i) space *= nsub;

    std::mt19937_64 rng(seed);
    ReducibilityReport report;
    report.reducible = true;
    long long iterations = sample_count > 0 ? sample_count : space;
    for (long long it = 0; it < iterations; ++it) {
        long long code = it;
        if (sample_count > 0) code = static_cast<long long>(rng() % static_cast<std::uint64_t>(space));
        std::vector<SetMask> tuple;
        long long rest = code;
        for (size_t i = 0; i < end_ids.size(); ++i) {
            tuple.push_back(subsets[rest % nsub]);
            rest /= nsub;
        }
        if (!predicate(tuple)) continue;
        bool consistent = true;
        for (size_t a = 0; a < end_ids.size() && consistent; ++a)
            for (size_t c = a + 1; c < end_ids.size() && consistent; ++c)
                if (h.has_edge(end_ids[a], end_ids[c]) && (tuple[a] & tuple[c]) != 0)
                    consistent = false;
        if (!consistent) continue;
        ++report.cases_total;

        std::vector<SetMask> colors(h.vertex_count(), 0);
        bool ok = false;
        std::string note;
        if (end_ids.size() == 2) {
            ok = extend_chain_fr(necklace, tuple[0], tuple[1], colors);
            if (!ok) note = "constructive extension declined";
        } else {
            int s_arm = necklace_distance(arm.spec);
            if (bull_t < 1 || bull_t > b || bull_t + s_arm < k ||
                mask_size(tuple[0] & tuple[1]) != (k - 1 - 2 * bull_t) / 2) {
                note = "bull hypothesis violated";
            } else {
                ok = extend_bull_core(k, bull_t, thread_x, thread_y, arm, tuple[0], tuple[1],
                                      tuple[2], colors);
                if (!ok) note = "constructive extension declined";
            }
        }
        if (ok) {
            FractionalColoring col(k, b, h.vertex_count());
            col.assignment = colors;
            bool valid = check_fractional(h, col);
            for (size_t a = 0; a < end_ids.size(); ++a)
                valid = valid && col.assignment[end_ids[a]] == tuple[a];
            if (!valid) {
                ok = false;
                note = "extension failed verification";
            }
        }
        if (!ok) {
            ++report.cases_failed;
            report.reducible = false;
            std::string desc;
            for (size_t a = 0; a < end_ids.size(); ++a)
                desc += ends[a] + "=" + mask_to_string(tuple[a]) +
                        (a + 1 < end_ids.size() ? "," : "");
            report.failures.push_back({desc, "colorable extension", note});
        }
    }
    std::sort(report.failures.begin(), report.failures.end(),
              [](const ReducibilityCase& a, const ReducibilityCase& c) { return a.input < c.input; });
    return report;
}

}  // namespace ccfc
