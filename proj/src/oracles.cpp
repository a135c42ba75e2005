#include "ccfc/oracles.hpp"

#include <algorithm>

namespace ccfc::oracle {

namespace {

bool gap_ok(int a, int b, int k) { return circular_distance(a, b, k) >= (k - 1) / 2; }

bool extend_positions_ck(int k, const std::map<int, int>& fixed, std::vector<int>& colors,
                         int pos) {
    if (pos == k) return gap_ok(colors[k - 1], colors[0], k);
    auto it = fixed.find(pos);
    for (int c = 0; c < k; ++c) {
        if (it != fixed.end() && it->second != c) continue;
        if (pos > 0 && !gap_ok(colors[pos - 1], c, k)) continue;
        colors[pos] = c;
        if (extend_positions_ck(k, fixed, colors, pos + 1)) return true;
    }
    return false;
}

}  // namespace

bool cycle_extension_ck(int k, const std::map<int, int>& fixed) {
    std::vector<int> colors(k, -1);
    auto it = fixed.find(0);
    for (int c = 0; c < k; ++c) {
        if (it != fixed.end() && it->second != c) continue;
        colors[0] = c;
        if (extend_positions_ck(k, fixed, colors, 1)) return true;
    }
    return false;
}

std::vector<AvailableSet> link_pair_rows(int p, const NecklaceSpec& spec, int index) {
    const Link& link = spec.links[index];
    std::vector<AvailableSet> rows(p, AvailableSet(p, 0));
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            bool ok;
            if (link.is_edge()) {
                ok = gap_ok(a, b, p);
            } else {
                ok = cycle_extension_ck(p, {{0, a}, {link.split + 1, b}});
            }
            if (ok) rows[a].insert(b);
        }
    return rows;
}

std::vector<AvailableSet> necklace_reachable(const NecklaceSpec& spec,
                                             const AvailableSet& start) {
    int p = spec.modulus;
    std::vector<AvailableSet> sets{start};
    for (int i = 0; i < spec.link_count(); ++i) {
        std::vector<AvailableSet> rows = link_pair_rows(p, spec, i);
        AvailableSet next(p, 0);
        for (int a = 0; a < p; ++a)
            if (sets.back().contains(a)) next.bits |= rows[a].bits;
        sets.push_back(next);
    }
    return sets;
}

namespace {

long long path_rec(const std::vector<SetMask>& subsets, int order,
                   std::vector<SetMask>& partial,
                   const std::function<bool(const std::vector<SetMask>&)>& visit, bool& stop) {
    if (static_cast<int>(partial.size()) == order) {
        if (!visit(partial)) stop = true;
        return 1;
    }
    long long count = 0;
    for (SetMask m : subsets) {
        if (!partial.empty() && (partial.back() & m) != 0) continue;
        partial.push_back(m);
        count += path_rec(subsets, order, partial, visit, stop);
        partial.pop_back();
        if (stop) break;
    }
    return count;
}

}  // namespace

long long enumerate_path_colorings(int k, int b, int order, bool fix_first,
                                   const std::function<bool(const std::vector<SetMask>&)>& visit) {
    std::vector<SetMask> subsets = all_subsets(k, b);
    std::vector<SetMask> partial;
    bool stop = false;
    if (fix_first) {
        partial.push_back(subsets.front());
        return path_rec(subsets, order, partial, visit, stop);
    }
    return path_rec(subsets, order, partial, visit, stop);
}

bool cycle_extension_fractional(int k, SetMask sx, SetMask sy, int dist) {
    int b = (k - 1) / 2;
    std::vector<SetMask> subsets = all_subsets(k, b);
    std::vector<SetMask> colors(k, 0);
    colors[0] = sx;
    colors[dist == 0 ? 0 : dist] = sy;
    if (dist == 0 && sx != sy) return false;
    std::function<bool(int)> rec = [&](int pos) -> bool {
        if (pos == k) return (colors[k - 1] & colors[0]) == 0;
        if (pos == dist && dist != 0) {
            if ((colors[pos - 1] & sy) != 0) return false;
            return rec(pos + 1);
        }
        for (SetMask m : subsets) {
            if ((colors[pos - 1] & m) != 0) continue;
            colors[pos] = m;
            if (rec(pos + 1)) return true;
        }
        colors[pos] = 0;
        return false;
    };
    return rec(1);
}

std::set<int> cycle_lengths_by_edge_subsets(const Graph& g) {
    int m = g.edge_count();
    if (m > 22) fail(ErrorCode::BadParams, "edge-subset enumeration limited to 22 edges");
    const auto& edges = g.edges();
    std::set<int> lengths;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> degree(g.vertex_count(), 0);
        int count = 0;
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1u) {
                ++degree[edges[e].first];
                ++degree[edges[e].second];
                ++count;
            }
        bool two_regular = true;
        for (int v = 0; v < g.vertex_count() && two_regular; ++v)
            if (degree[v] != 0 && degree[v] != 2) two_regular = false;
        if (!two_regular) continue;
        // connected on its support?
        int start = -1;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (degree[v] == 2) {
                start = v;
                break;
            }
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        int visited = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e = 0; e < m; ++e) {
                if (!((mask >> e) & 1u)) continue;
                int other = -1;
                if (edges[e].first == u) other = edges[e].second;
                if (edges[e].second == u) other = edges[e].first;
                if (other >= 0 && !seen[other]) {
                    seen[other] = 1;
                    ++visited;
                    stack.push_back(other);
                }
            }
        }
        int support = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (degree[v] == 2) ++support;
        if (visited == support) lengths.insert(count);
    }
    return lengths;
}

std::uint64_t split_mix(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Graph random_graph(std::uint64_t& state, int max_vertices, int max_edges) {
    int n = 1 + static_cast<int>(split_mix(state) % static_cast<std::uint64_t>(max_vertices));
    std::vector<Edge> pool;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pool.emplace_back(u, v);
    std::vector<Edge> chosen;
    for (const Edge& e : pool) {
        if (static_cast<int>(chosen.size()) >= max_edges) break;
        if (split_mix(state) % 100 < 35) chosen.push_back(e);
    }
    return Graph::build(n, chosen);
}

}  // namespace ccfc::oracle
