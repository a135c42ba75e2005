#include "ccfc/circular.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace ccfc {

namespace {

int mod(long long value, int k) {
    int r = static_cast<int>(value % k);
    return r < 0 ? r + k : r;
}

void check_modulus_gap(int k, int d) {
    if (k < 1 || d < 1 || k < 2 * d)
        fail(ErrorCode::BadParams,
             "need k >= 2d >= 2, got k=" + std::to_string(k) + " d=" + std::to_string(d));
}

int mod_inverse(int d, int k) {
    int t = 0, nt = 1, r = k, nr = d % k;
    while (nr != 0) {
        int q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) fail(ErrorCode::NotCoprime, "gcd(d,k) != 1");
    return t < 0 ? t + k : t;
}

}  // namespace

bool is_prime(int n) {
    if (n < 2) return false;
    for (int f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

bool CircularColoring::total() const {
    return std::all_of(assignment.begin(), assignment.end(),
                       [](int c) { return c != kUnassigned; });
}

bool check_circular(const Graph& g, const CircularColoring& col) {
    check_modulus_gap(col.modulus, col.gap);
    if (col.size() != g.vertex_count())
        fail(ErrorCode::InvalidInput, "coloring size does not match graph");
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!col.assigned(v)) fail(ErrorCode::PartialColoring, "vertex " + std::to_string(v));
        if (col.assignment[v] < 0 || col.assignment[v] >= col.modulus) return false;
    }
    for (const auto& [u, v] : g.edges())
        if (circular_distance(col.assignment[u], col.assignment[v], col.modulus) < col.gap)
            return false;
    return true;
}

AvailableSet AvailableSet::of(int k, std::initializer_list<int> values) {
    AvailableSet s(k, 0);
    for (int v : values) s.insert(mod(v, k));
    return s;
}

int AvailableSet::size() const { return std::popcount(bits); }

std::vector<int> AvailableSet::values() const {
    std::vector<int> out;
    for (int r = 0; r < modulus; ++r)
        if (contains(r)) out.push_back(r);
    return out;
}

AvailableSet sumset(const AvailableSet& a, const AvailableSet& b) {
    if (a.modulus != b.modulus) fail(ErrorCode::ModulusMismatch, "sumset over different moduli");
    AvailableSet out(a.modulus, 0);
    for (int x = 0; x < a.modulus; ++x) {
        if (!a.contains(x)) continue;
        for (int y = 0; y < b.modulus; ++y)
            if (b.contains(y)) out.insert(mod(x + y, a.modulus));
    }
    return out;
}

bool cycle_precolor_feasible(int k, int i, int j, int ci, int cj) {
    if (k < 3 || k % 2 == 0) fail(ErrorCode::BadParams, "modulus must be odd >= 3");
    int diff = mod(ci - cj, k);
    long long delta = i - j;
    return diff == mod((k - 1) / 2 * delta, k) || diff == mod((k + 1) / 2 * delta, k);
}

std::optional<std::vector<int>> color_cycle_ck(int k, int i, int j, int ci, int cj) {
    if (k < 3 || k % 2 == 0) fail(ErrorCode::BadParams, "modulus must be odd >= 3");
    i = mod(i, k);
    j = mod(j, k);
    ci = mod(ci, k);
    cj = mod(cj, k);
    for (int slope : {(k - 1) / 2, (k + 1) / 2}) {
        if (mod(ci + static_cast<long long>(slope) * (j - i), k) != cj) continue;
        std::vector<int> colors(k);
        for (int t = 0; t < k; ++t)
            colors[t] = mod(ci + static_cast<long long>(slope) * (t - i), k);
        return colors;
    }
    return std::nullopt;
}

namespace {

// Color shift carried by one link, as the pair {+o, -o} mod p.
int link_offset(const NecklaceSpec& spec, int index) {
    int p = spec.modulus;
    const Link& link = spec.links[index];
    long long steps = link.is_edge() ? 1 : link.split + 1;
    return mod((p - 1) / 2 * steps, p);
}

AvailableSet offset_pair(int p, int o) { return AvailableSet::of(p, {o, p - o}); }

// Chain extension along a realized necklace with both end colors fixed.
// Fills anchor colors greedily backward over the exact reachable sets, then
// the interiors of the link cycles. Returns false iff cy is unreachable.
bool extend_chain_ck(const NecklaceGeom& geom, int cx, int cy, std::vector<int>& colors) {
    const NecklaceSpec& spec = geom.spec;
    int p = spec.modulus;
    std::vector<AvailableSet> reach = propagate_necklace(spec, AvailableSet::of(p, {cx}));
    int last = spec.link_count();
    if (!reach[last].contains(mod(cy, p))) return false;
    std::vector<int> anchor_colors(last + 1);
    anchor_colors[last] = mod(cy, p);
    for (int i = last - 1; i >= 0; --i) {
        int o = link_offset(spec, i);
        AvailableSet wanted = offset_pair(p, o);
        int chosen = -1;
        for (int r = 0; r < p; ++r) {
            if (!reach[i].contains(r)) continue;
            if (wanted.contains(mod(anchor_colors[i + 1] - r, p))) {
                chosen = r;
                break;
            }
        }
        if (chosen < 0) return false;  // cannot happen if reach[last] hit
        anchor_colors[i] = chosen;
    }
    for (int i = 0; i <= last; ++i) colors[geom.anchors[i]] = anchor_colors[i];
    for (int i = 0; i < last; ++i) {
        const LinkGeom& lg = geom.links[i];
        if (!lg.is_cycle) continue;
        int d = spec.links[i].split + 1;
        auto cyc = color_cycle_ck(p, 0, d, anchor_colors[i], anchor_colors[i + 1]);
        if (!cyc) return false;
        for (int pos = 0; pos < p; ++pos) colors[lg.cycle[pos]] = (*cyc)[pos];
    }
    return true;
}

}  // namespace

std::vector<AvailableSet> propagate_necklace(const NecklaceSpec& spec,
                                             const AvailableSet& start) {
    validate_necklace_spec(spec);
    if (start.modulus != spec.modulus)
        fail(ErrorCode::ModulusMismatch, "start set modulus differs from spec");
    if (start.bits == 0) fail(ErrorCode::BadParams, "start set must be nonempty");
    std::vector<AvailableSet> sets{start};
    for (int i = 0; i < spec.link_count(); ++i)
        sets.push_back(sumset(sets.back(), offset_pair(spec.modulus, link_offset(spec, i))));
    return sets;
}

std::optional<CircularColoring> extend_necklace_ck(const NecklaceSpec& spec, int p, int cx,
                                                   int cy) {
    validate_necklace_spec(spec);
    if (spec.modulus != p) fail(ErrorCode::BadParams, "spec modulus differs from p");
    if (!is_prime(p)) fail(ErrorCode::BadParams, "p must be prime");
    if (cx < 0 || cx >= p || cy < 0 || cy >= p) fail(ErrorCode::BadParams, "end color range");
    auto [graph, geom] = build_necklace_geom(spec);
    CircularColoring col = make_ck_coloring(p, graph.vertex_count());
    if (!extend_chain_ck(geom, cx, cy, col.assignment)) return std::nullopt;
    return col;
}

std::optional<CircularColoring> extend_crown_ck(const MultiSpec& spec, int p,
                                                const std::vector<int>& end_colors) {
    validate_multi_spec(spec);
    if (spec.center == CenterKind::Bull)
        fail(ErrorCode::BadSpec, "crown extension needs a necklace or crown center");
    if (spec.modulus != p) fail(ErrorCode::BadParams, "spec modulus differs from p");
    if (!is_prime(p)) fail(ErrorCode::BadParams, "p must be prime");
    if (static_cast<int>(end_colors.size()) != spec.arm_count())
        fail(ErrorCode::BadParams, "one end color per arm required");
    for (int c : end_colors)
        if (c < 0 || c >= p) fail(ErrorCode::BadParams, "end color range");

    auto [graph, geom] = build_multi_geom(spec);
    int half = (p - 1) / 2;

    // Reachability from each end to its center-side anchor; link offsets are
    // symmetric, so propagating along the arm in build order gives the same
    // final set.
    std::vector<AvailableSet> root_sets;
    for (int a = 0; a < spec.arm_count(); ++a)
        root_sets.push_back(
            propagate_necklace(spec.arms[a], AvailableSet::of(p, {end_colors[a]})).back());

    // A center-cycle coloring is one of two slope families; intersect the
    // shifted reachable sets for each family in turn.
    for (int family : {+1, -1}) {
        AvailableSet meet = AvailableSet::full_set(p);
        meet.modulus = p;
        for (int a = 0; a < spec.arm_count(); ++a) {
            int d_a = spec.center == CenterKind::Cycle ? spec.offsets[a] : 0;
            AvailableSet shifted(p, 0);
            for (int r : root_sets[a].values()) shifted.insert(mod(r - family * half * d_a, p));
            meet.bits &= shifted.bits;
        }
        if (meet.bits == 0) continue;
        int base = *meet.values().begin();
        CircularColoring col = make_ck_coloring(p, graph.vertex_count());
        if (spec.center == CenterKind::Cycle) {
            for (int j = 0; j < p; ++j)
                col.assignment[geom.center_cycle[j]] = mod(base + family * half * j, p);
        } else {
            col.assignment[geom.center] = base;
        }
        bool ok = true;
        for (int a = 0; a < spec.arm_count() && ok; ++a) {
            int root_color = col.assignment[geom.arm_roots[a]];
            ok = extend_chain_ck(geom.arm_geoms[a], root_color, end_colors[a], col.assignment);
        }
        if (ok) return col;
        fail(ErrorCode::Inconsistent, "arm extension failed despite reachable center");
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exact (k,d) solver: MAC over residue bit-set domains.

namespace {

struct CircularSolver {
    const Graph& g;
    int k, d;
    long long budget;
    SearchStats stats;
    std::vector<std::uint32_t> allowed;  // allowed[r] = partner residues for r

    CircularSolver(const Graph& graph, int modulus, int gap, long long node_budget)
        : g(graph), k(modulus), d(gap), budget(node_budget), allowed(modulus, 0) {
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (circular_distance(a, b, k) >= d) allowed[a] |= (1u << b);
    }

    bool revise(std::vector<std::uint32_t>& dom, int target, int against) {
        ++stats.revisions;
        std::uint32_t kept = 0;
        std::uint32_t bits = dom[target];
        while (bits) {
            int r = std::countr_zero(bits);
            bits &= bits - 1;
            if (allowed[r] & dom[against]) kept |= (1u << r);
        }
        if (kept != dom[target]) {
            stats.prunings += std::popcount(dom[target] ^ kept);
            dom[target] = kept;
            return true;
        }
        return false;
    }

    // Arc consistency from the given seed vertices; false on wipeout.
    bool propagate(std::vector<std::uint32_t>& dom, std::vector<int> queue) {
        std::vector<char> queued(g.vertex_count(), 0);
        for (int v : queue) queued[v] = 1;
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            queued[u] = 0;
            for (int w : g.neighbors(u)) {
                if (revise(dom, w, u)) {
                    if (dom[w] == 0) return false;
                    if (!queued[w]) {
                        queued[w] = 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        return true;
    }

    bool search(std::vector<std::uint32_t>& dom) {
        int pick = -1, best = k + 1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            int size = std::popcount(dom[v]);
            if (size >= 2 && size < best) {
                best = size;
                pick = v;
            }
        }
        if (pick == -1) return true;  // all singletons
        std::uint32_t options = dom[pick];
        while (options) {
            int r = std::countr_zero(options);
            options &= options - 1;
            ++stats.nodes;
            if (budget > 0 && stats.nodes > budget)
                fail(ErrorCode::BudgetExceeded,
                     "search exceeded " + std::to_string(budget) + " nodes");
            std::vector<std::uint32_t> saved = dom;
            dom[pick] = (1u << r);
            if (propagate(dom, {pick}) && search(dom)) return true;
            dom = std::move(saved);
        }
        return false;
    }
};

}  // namespace

CircularSolveResult solve_circular(const Graph& g, int k, int d,
                                   const CircularColoring* precoloring, long long budget) {
    check_modulus_gap(k, d);
    if (k > 31) fail(ErrorCode::BadParams, "modulus above 31 not supported");
    CircularSolver solver(g, k, d, budget);
    std::vector<std::uint32_t> dom(g.vertex_count(), AvailableSet::full_set(k).bits);
    if (precoloring) {
        if (precoloring->modulus != k || precoloring->size() != g.vertex_count())
            fail(ErrorCode::InconsistentPrecoloring, "precoloring shape mismatch");
        for (int v = 0; v < g.vertex_count(); ++v) {
            int c = precoloring->assignment[v];
            if (c == CircularColoring::kUnassigned) continue;
            if (c < 0 || c >= k)
                fail(ErrorCode::InconsistentPrecoloring, "residue out of range");
            dom[v] = (1u << c);
        }
        for (const auto& [u, v] : g.edges())
            if (precoloring->assigned(u) && precoloring->assigned(v) &&
                circular_distance(precoloring->assignment[u], precoloring->assignment[v], k) < d)
                fail(ErrorCode::InconsistentPrecoloring,
                     "edge (" + std::to_string(u) + "," + std::to_string(v) + ") violates gap");
    }
    CircularSolveResult result;
    std::vector<int> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    bool sat = solver.propagate(dom, all) && solver.search(dom);
    result.stats = solver.stats;
    result.sat = sat;
    if (sat) {
        result.coloring = CircularColoring(k, d, g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            result.coloring.assignment[v] = std::countr_zero(dom[v]);
        if (!check_circular(g, result.coloring))
            fail(ErrorCode::Inconsistent, "solver produced an invalid coloring");
    }
    return result;
}

ReducibilityReport certify_reducible_ck(const Graph& h, const std::vector<std::string>& ends,
                                        int p) {
    if (!is_prime(p) || p < 3) fail(ErrorCode::BadParams, "p must be an odd prime");
    std::vector<int> end_ids;
    for (const auto& name : ends) end_ids.push_back(h.landmark(name));
    ReducibilityReport report;
    report.reducible = true;
    std::vector<int> tuple(end_ids.size(), 0);
    int gap = (p - 1) / 2;
    while (true) {
        bool consistent = true;
        for (size_t a = 0; a < end_ids.size() && consistent; ++a)
            for (size_t b = a + 1; b < end_ids.size() && consistent; ++b)
                if (h.has_edge(end_ids[a], end_ids[b]) &&
                    circular_distance(tuple[a], tuple[b], p) < gap)
                    consistent = false;
        if (consistent) {
            ++report.cases_total;
            CircularColoring pre = make_ck_coloring(p, h.vertex_count());
            for (size_t a = 0; a < end_ids.size(); ++a) pre.assignment[end_ids[a]] = tuple[a];
            auto res = solve_circular(h, p, gap, &pre);
            if (!res.sat) {
                ++report.cases_failed;
                report.reducible = false;
                std::string desc;
                for (size_t a = 0; a < end_ids.size(); ++a)
                    desc += ends[a] + "=" + std::to_string(tuple[a]) + (a + 1 < end_ids.size() ? "," : "");
                report.failures.push_back({desc, "extendable", "UNSAT"});
            }
        }
        size_t pos = 0;
        while (pos < tuple.size() && ++tuple[pos] == p) tuple[pos++] = 0;
        if (pos == tuple.size()) break;
    }
    return report;
}

CircularColoring transfer_to_replacement(const Graph& g, const CircularColoring& col, int d,
                                         int k) {
    if (k < 3 || k % 2 == 0) fail(ErrorCode::BadParams, "k must be odd >= 3");
    mod_inverse(d, k);  // throws NotCoprime when gcd(d,k) != 1
    if (col.modulus != k || col.gap != (k - 1) / 2 || col.size() != g.vertex_count() ||
        !col.total() || !check_circular(g, col))
        fail(ErrorCode::InvalidInput, "input is not a valid circular coloring of g");
    int n = g.vertex_count();
    int m = g.edge_count();
    CircularColoring out = make_ck_coloring(k, n + (k - 2) * m);
    for (int v = 0; v < n; ++v) out.assignment[v] = mod(static_cast<long long>(d) * col.assignment[v], k);
    // Interior ids follow d_ck_replace_all: per sorted edge, positions
    // 1..d-1 then d+1..k-1.
    int next = n;
    for (const auto& [x, y] : g.edges()) {
        int cx = out.assignment[x];
        int cy = out.assignment[y];
        auto cyc = color_cycle_ck(k, 0, d, cx, cy);
        if (!cyc) fail(ErrorCode::Inconsistent, "replacement cycle has no slope fill");
        for (int pos = 1; pos < k; ++pos) {
            if (pos == d) continue;
            out.assignment[next++] = (*cyc)[pos];
        }
    }
    return out;
}

CircularColoring inverse_transfer(const Graph& g, const CircularColoring& col_on_replacement,
                                  int d, int k) {
    if (k < 3 || k % 2 == 0) fail(ErrorCode::BadParams, "k must be odd >= 3");
    int inv = mod_inverse(d, k);
    if (col_on_replacement.modulus != k ||
        col_on_replacement.size() < g.vertex_count())
        fail(ErrorCode::InvalidInput, "replacement coloring too small");
    CircularColoring out = make_ck_coloring(k, g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        int c = col_on_replacement.assignment[v];
        if (c == CircularColoring::kUnassigned)
            fail(ErrorCode::InvalidInput, "original vertex uncolored");
        out.assignment[v] = mod(static_cast<long long>(inv) * c, k);
    }
    if (!check_circular(g, out))
        fail(ErrorCode::InvalidInput, "restriction does not induce a coloring of g");
    return out;
}

}  // namespace ccfc
