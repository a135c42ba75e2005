#include "ccfc/gadgets.hpp"

#include <algorithm>
#include <deque>

namespace ccfc {

namespace {

struct Builder {
    int n = 0;
    std::vector<Edge> edges;
    std::map<std::string, int> landmarks;

    explicit Builder(int vertices = 0) : n(vertices) {}

    static Builder from_graph(const Graph& g) {
        Builder b(g.vertex_count());
        b.edges = g.edges();
        b.landmarks = g.landmarks();
        return b;
    }

    int add_vertex() { return n++; }

    void add_edge(int u, int v) { edges.push_back(make_edge(u, v)); }

    bool remove_edge(int u, int v) {
        auto it = std::find(edges.begin(), edges.end(), make_edge(u, v));
        if (it == edges.end()) return false;
        edges.erase(it);
        return true;
    }

    // Path of length internals+1 from a to b; returns [a, ..., b].
    std::vector<int> add_path(int a, int b, int internals) {
        std::vector<int> path{a};
        int prev = a;
        for (int i = 0; i < internals; ++i) {
            int w = add_vertex();
            add_edge(prev, w);
            path.push_back(w);
            prev = w;
        }
        add_edge(prev, b);
        path.push_back(b);
        return path;
    }

    // k-cycle v_0..v_{k-1} with v_0 = a and v_d = b; the k-2 interior
    // vertices are appended in position order v_1..v_{d-1}, v_{d+1}..v_{k-1}.
    std::vector<int> add_cycle_between(int a, int b, int d, int k) {
        std::vector<int> cyc(k, -1);
        cyc[0] = a;
        cyc[d] = b;
        for (int pos = 1; pos < k; ++pos)
            if (pos != d) cyc[pos] = add_vertex();
        for (int pos = 0; pos < k; ++pos) add_edge(cyc[pos], cyc[(pos + 1) % k]);
        return cyc;
    }

    Graph freeze() const { return Graph::build(n, edges, landmarks); }
};

void check_odd_modulus(int k, ErrorCode code) {
    if (k < 3 || k % 2 == 0)
        fail(code, "modulus must be odd and at least 3, got " + std::to_string(k));
}

NecklaceGeom build_arm(Builder& bld, int root, const NecklaceSpec& spec) {
    NecklaceGeom geom;
    geom.spec = spec;
    geom.anchors.push_back(root);
    for (int i = 0; i < spec.link_count(); ++i) geom.anchors.push_back(bld.add_vertex());
    for (int i = 0; i < spec.link_count(); ++i) {
        const Link& link = spec.links[i];
        LinkGeom lg;
        lg.left = geom.anchors[i];
        lg.right = geom.anchors[i + 1];
        if (link.is_edge()) {
            bld.add_edge(lg.left, lg.right);
        } else {
            lg.is_cycle = true;
            lg.cycle = bld.add_cycle_between(lg.left, lg.right, link.split + 1, spec.modulus);
        }
        geom.links.push_back(std::move(lg));
    }
    return geom;
}

}  // namespace

namespace {

MultiGeom build_multi_into(Builder& bld, const MultiSpec& spec) {
    MultiGeom geom;
    geom.spec = spec;
    if (spec.center == CenterKind::Cycle) {
        for (int i = 0; i < spec.modulus; ++i) geom.center_cycle.push_back(bld.add_vertex());
        for (int i = 0; i < spec.modulus; ++i)
            bld.add_edge(geom.center_cycle[i], geom.center_cycle[(i + 1) % spec.modulus]);
        bld.landmarks["y0"] = geom.center_cycle[0];
        for (int a = 0; a < spec.arm_count(); ++a)
            geom.arm_roots.push_back(geom.center_cycle[spec.offsets[a]]);
    } else {
        geom.center = bld.add_vertex();
        for (int a = 0; a < spec.arm_count(); ++a) geom.arm_roots.push_back(geom.center);
        bld.landmarks[spec.center == CenterKind::Bull ? "v" : "center"] = geom.center;
    }
    for (int a = 0; a < spec.arm_count(); ++a) {
        geom.arm_geoms.push_back(build_arm(bld, geom.arm_roots[a], spec.arms[a]));
        geom.arm_ends.push_back(geom.arm_geoms.back().right());
    }
    if (spec.center == CenterKind::Bull) {
        bld.landmarks["x"] = geom.arm_ends[0];
        bld.landmarks["y"] = geom.arm_ends[1];
        bld.landmarks["z"] = geom.arm_ends[2];
    } else {
        for (int a = 0; a < spec.arm_count(); ++a)
            bld.landmarks["y" + std::to_string(a + 1)] = geom.arm_ends[a];
    }
    return geom;
}

}  // namespace

std::vector<Link> parse_links(const std::string& text) {
    std::vector<Link> links;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
        if (item == "e" || item == "E") {
            links.push_back(edge_link());
        } else if (item.size() >= 2 && (item[0] == 'c' || item[0] == 'C')) {
            try {
                links.push_back(cycle_link(std::stoi(item.substr(1))));
            } catch (const std::exception&) {
                fail(ErrorCode::BadSpec, "bad link token '" + item + "'");
            }
        } else {
            fail(ErrorCode::BadSpec, "bad link token '" + item + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (links.empty()) fail(ErrorCode::BadSpec, "empty link list");
    return links;
}

void validate_necklace_spec(const NecklaceSpec& spec) {
    check_odd_modulus(spec.modulus, ErrorCode::BadSpec);
    if (spec.links.empty()) fail(ErrorCode::BadSpec, "necklace needs at least one link");
    for (const Link& link : spec.links) {
        if (link.is_edge()) continue;
        if (link.split < 0 || link.split > spec.modulus - 2)
            fail(ErrorCode::BadSpec, "cycle split " + std::to_string(link.split) +
                                         " out of range for modulus " +
                                         std::to_string(spec.modulus));
    }
}

int link_distance(const NecklaceSpec& spec, int index) {
    const Link& link = spec.links[index];
    if (link.is_edge()) return 1;
    return std::min(link.split, spec.modulus - 2 - link.split) + 1;
}

int necklace_distance(const NecklaceSpec& spec) {
    int total = 0;
    for (int i = 0; i < spec.link_count(); ++i) total += link_distance(spec, i);
    return total;
}

void validate_multi_spec(const MultiSpec& spec) {
    check_odd_modulus(spec.modulus, ErrorCode::BadSpec);
    for (const NecklaceSpec& arm : spec.arms) {
        validate_necklace_spec(arm);
        if (arm.modulus != spec.modulus)
            fail(ErrorCode::BadSpec, "arm modulus differs from center modulus");
    }
    switch (spec.center) {
        case CenterKind::Vertex:
            if (spec.arm_count() < 3) fail(ErrorCode::BadSpec, "necklace center needs >= 3 arms");
            break;
        case CenterKind::Cycle:
            if (spec.arm_count() < 3) fail(ErrorCode::BadSpec, "crown needs >= 3 arms");
            if (static_cast<int>(spec.offsets.size()) != spec.arm_count())
                fail(ErrorCode::BadSpec, "crown needs one attachment offset per arm");
            for (int d : spec.offsets)
                if (d < 0 || d >= spec.modulus)
                    fail(ErrorCode::BadSpec, "crown offset out of range");
            break;
        case CenterKind::Bull: {
            if (spec.arm_count() != 3) fail(ErrorCode::BadSpec, "bull needs exactly 3 arms");
            if (spec.bull_thread_length < 1)
                fail(ErrorCode::BadSpec, "bull thread length must be >= 1");
            for (int i = 0; i < 2; ++i) {
                const NecklaceSpec& thread = spec.arms[i];
                if (thread.link_count() != spec.bull_thread_length)
                    fail(ErrorCode::BadSpec, "bull thread arm has wrong length");
                for (const Link& link : thread.links)
                    if (!link.is_edge())
                        fail(ErrorCode::BadSpec, "bull thread arms must be plain threads");
            }
            break;
        }
    }
}

MultiSpec make_bull_spec(int k, int t, const NecklaceSpec& arm) {
    MultiSpec spec;
    spec.modulus = k;
    spec.center = CenterKind::Bull;
    spec.bull_thread_length = t;
    NecklaceSpec thread{k, std::vector<Link>(static_cast<size_t>(t), edge_link())};
    spec.arms = {thread, thread, arm};
    validate_multi_spec(spec);
    return spec;
}

Graph build_graph(int n, const std::vector<Edge>& edges,
                  const std::map<std::string, int>& landmarks) {
    return Graph::build(n, edges, landmarks);
}

std::pair<Graph, NecklaceGeom> build_necklace_geom(const NecklaceSpec& spec) {
    validate_necklace_spec(spec);
    Builder bld(1);
    NecklaceGeom geom = build_arm(bld, 0, spec);
    bld.landmarks["x"] = geom.left();
    bld.landmarks["y"] = geom.right();
    return {bld.freeze(), std::move(geom)};
}

Graph build_necklace(const NecklaceSpec& spec) { return build_necklace_geom(spec).first; }

std::pair<Graph, MultiGeom> build_multi_geom(const MultiSpec& spec) {
    validate_multi_spec(spec);
    Builder bld;
    MultiGeom geom = build_multi_into(bld, spec);
    return {bld.freeze(), std::move(geom)};
}

Graph build_multi(const MultiSpec& spec) { return build_multi_geom(spec).first; }

Graph d_ck_replace_edge(const Graph& g, Edge e, int d, int k) {
    check_odd_modulus(k, ErrorCode::BadParams);
    if (d < 1 || d > k - 1) fail(ErrorCode::BadOffset, "offset d = " + std::to_string(d));
    Builder bld = Builder::from_graph(g);
    if (!bld.remove_edge(e.first, e.second))
        fail(ErrorCode::MissingEdge,
             "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
    bld.add_cycle_between(e.first, e.second, d, k);
    return bld.freeze();
}

Graph d_ck_replace_all(const Graph& g, int d, int k) {
    check_odd_modulus(k, ErrorCode::BadParams);
    if (d < 1 || d > k - 1) fail(ErrorCode::BadOffset, "offset d = " + std::to_string(d));
    Builder bld = Builder::from_graph(g);
    for (const Edge& e : g.edges()) {
        bld.remove_edge(e.first, e.second);
        bld.add_cycle_between(e.first, e.second, d, k);
    }
    return bld.freeze();
}

Graph build_nonprime_gadget(int s, int t, int m) {
    if (s <= 1 || t < s) fail(ErrorCode::BadParams, "need t >= s > 1");
    int k = s * t;
    if (k % 2 == 0) fail(ErrorCode::BadParams, "k = s*t must be odd");
    if (m <= k) fail(ErrorCode::BadParams, "need m > k");
    Builder bld(m + 1);
    for (int i = 0; i < m; ++i) bld.add_edge(i, i + 1);
    bld.add_edge(m, 0);
    for (int i = 0; i < m; ++i) {
        bld.remove_edge(i, i + 1);
        bld.add_cycle_between(i, i + 1, s, k);
    }
    for (int i = 0; i <= m; ++i) bld.landmarks["z" + std::to_string(i)] = i;
    return bld.freeze();
}

Graph build_devos_wheel(int p) {
    if (p < 5 || p % 2 == 0) fail(ErrorCode::BadParams, "p must be odd and at least 5");
    int rim = 2 * p - 3;
    Builder bld(rim + 1);
    int center = rim;
    for (int i = 0; i < rim; ++i) bld.add_edge(i, (i + 1) % rim);
    for (int i = 0; i < rim; ++i) bld.add_path(center, i, p - 3);
    bld.landmarks["center"] = center;
    for (int i = 0; i < rim; ++i) bld.landmarks["z" + std::to_string(i)] = i;
    return bld.freeze();
}

Graph build_hp(int p) { return d_ck_replace_all(build_devos_wheel(p), (p - 1) / 2, p); }

Graph build_five_color_reduction(const Graph& g) {
    Builder bld = Builder::from_graph(g);
    for (const Edge& e : g.edges()) {
        bld.remove_edge(e.first, e.second);
        bld.add_path(e.first, e.second, 2);
    }
    for (int i = 0; i < g.vertex_count(); ++i)
        bld.landmarks.emplace("v" + std::to_string(i), i);
    return d_ck_replace_all(bld.freeze(), 2, 5);
}

Graph build_odd_counterexample(int k, int t) {
    check_odd_modulus(k, ErrorCode::BadParams);
    if (k < 5) fail(ErrorCode::BadParams, "k must be at least 5");
    if (t <= (k - 1) / 2) fail(ErrorCode::BadParams, "need t > (k-1)/2");
    Builder bld(2 * t * k + 1);
    int apex = 2 * t * k;
    auto x = [&](int i) { return (i - 1) * k; };
    auto y = [&](int i) { return (i - 1) * k + 1; };
    auto z = [&](int i) { return (i - 1) * k + 2; };
    for (int i = 1; i <= 2 * t; ++i) {
        int base = (i - 1) * k;
        for (int j = 0; j < k; ++j) bld.add_edge(base + j, base + (j + 1) % k);
        bld.landmarks["x" + std::to_string(i)] = x(i);
        bld.landmarks["y" + std::to_string(i)] = y(i);
        bld.landmarks["z" + std::to_string(i)] = z(i);
    }
    for (int i = 1; i <= 2 * t - 1; ++i) {
        bld.add_edge(x(i), y(i + 1));
        bld.add_edge(z(i), y(i + 1));
    }
    bld.add_edge(apex, x(2 * t));
    bld.add_edge(apex, z(2 * t));
    bld.add_edge(apex, y(1));
    bld.landmarks["v"] = apex;
    return bld.freeze();
}

std::pair<Graph, FvGeom> build_fv_geom(int t, const NecklaceSpec& arm, int k) {
    check_odd_modulus(k, ErrorCode::BadParams);
    if (t < 1 || t > (k - 1) / 2) fail(ErrorCode::BadParams, "need 1 <= t <= (k-1)/2");
    MultiSpec bull = make_bull_spec(k, t, arm);
    Builder bld;
    FvGeom geom;
    geom.t = t;
    geom.bull = build_multi_into(bld, bull);
    geom.xy_path = bld.add_path(geom.bull.arm_ends[0], geom.bull.arm_ends[1], k - 2 * t - 1);
    return {bld.freeze(), std::move(geom)};
}

Graph build_fv(int t, const NecklaceSpec& arm, int k) { return build_fv_geom(t, arm, k).first; }

namespace {

// Remainder of the link cycle: the shortest path between the two forward
// neighbors of `cur` avoiding cur itself. Interior link vertices have degree
// 2, so this is the unique route.
std::vector<int> link_cycle_remainder(const Graph& g, const std::vector<char>& avail, int cur,
                                      int from, int to) {
    std::vector<int> parent(g.vertex_count(), -2);
    parent[from] = -1;
    std::deque<int> queue{from};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == to) break;
        for (int w : g.neighbors(u))
            if (w != cur && avail[w] && parent[w] == -2) {
                parent[w] = u;
                queue.push_back(w);
            }
    }
    if (parent[to] == -2) fail(ErrorCode::BadSpec, "link threads do not close a cycle");
    std::vector<int> path;
    for (int at = to; at != -1; at = parent[at]) path.push_back(at);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

NecklaceGeom decompose_necklace(const Graph& g, const std::vector<char>& allowed, int from,
                                int to, int k) {
    check_odd_modulus(k, ErrorCode::BadParams);
    if (!allowed[from] || !allowed[to]) fail(ErrorCode::BadSpec, "ends not in allowed set");
    std::vector<char> avail = allowed;
    NecklaceGeom geom;
    geom.spec.modulus = k;
    geom.anchors.push_back(from);
    int cur = from;
    avail[cur] = 0;
    int guard = g.vertex_count() + 1;
    while (cur != to && guard-- > 0) {
        std::vector<int> forward;
        for (int w : g.neighbors(cur))
            if (avail[w]) forward.push_back(w);
        if (forward.size() == 1) {
            int next = forward[0];
            LinkGeom lg;
            lg.left = cur;
            lg.right = next;
            geom.links.push_back(lg);
            geom.spec.links.push_back(edge_link());
            avail[next] = 0;
            geom.anchors.push_back(next);
            cur = next;
            continue;
        }
        if (forward.size() != 2) fail(ErrorCode::BadSpec, "not a necklace: branching anchor");
        std::vector<int> remainder = link_cycle_remainder(g, avail, cur, forward[0], forward[1]);
        if (static_cast<int>(remainder.size()) != k - 1)
            fail(ErrorCode::BadSpec, "link cycle has wrong length");
        std::vector<int> ring{cur};
        ring.insert(ring.end(), remainder.begin(), remainder.end());
        // The far anchor: the target if it lies on the ring, otherwise the
        // one ring vertex with branches beyond the ring.
        int far_pos = -1;
        for (int pos = 1; pos < k; ++pos) {
            int v = ring[pos];
            if (v == to) {
                far_pos = pos;
                break;
            }
            int degree = 0;
            for (int w : g.neighbors(v))
                if (avail[w] || w == cur) ++degree;
            if (degree >= 3) {
                if (far_pos != -1) fail(ErrorCode::BadSpec, "link cycle has two exits");
                far_pos = pos;
            }
        }
        if (far_pos == -1) fail(ErrorCode::BadSpec, "link cycle never rejoins the necklace");
        int far = ring[far_pos];
        LinkGeom lg;
        lg.is_cycle = true;
        lg.left = cur;
        lg.right = far;
        if (far_pos <= k - far_pos) {
            lg.cycle = ring;
        } else {
            lg.cycle.push_back(cur);
            for (int pos = k - 1; pos >= 1; --pos) lg.cycle.push_back(ring[pos]);
            far_pos = k - far_pos;
        }
        for (int v : lg.cycle) avail[v] = 0;
        geom.spec.links.push_back(cycle_link(far_pos - 1));
        geom.links.push_back(std::move(lg));
        geom.anchors.push_back(far);
        cur = far;
    }
    if (cur != to) fail(ErrorCode::BadSpec, "walk did not reach the far end");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (avail[v]) fail(ErrorCode::BadSpec, "allowed set contains vertices off the necklace");
    validate_necklace_spec(geom.spec);
    return geom;
}

}  // namespace ccfc
