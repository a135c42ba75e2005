#include "ccfc/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace ccfc {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidEdge: return "InvalidEdge";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::BadLandmark: return "BadLandmark";
        case ErrorCode::BadVertex: return "BadVertex";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::BadSpec: return "BadSpec";
        case ErrorCode::MissingEdge: return "MissingEdge";
        case ErrorCode::BadOffset: return "BadOffset";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::PartialColoring: return "PartialColoring";
        case ErrorCode::InconsistentPrecoloring: return "InconsistentPrecoloring";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::ModulusMismatch: return "ModulusMismatch";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::UnknownSuite: return "UnknownSuite";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::Inconsistent: return "Inconsistent";
    }
    return "Error";
}

Graph Graph::build(int vertex_count, const std::vector<Edge>& edges,
                   const std::map<std::string, int>& landmarks) {
    if (vertex_count < 0) fail(ErrorCode::BadParams, "negative vertex count");
    Graph g;
    g.n_ = vertex_count;
    g.edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
            fail(ErrorCode::InvalidEdge, "endpoint out of range: (" + std::to_string(a) + "," +
                                             std::to_string(b) + ")");
        if (a == b) fail(ErrorCode::InvalidEdge, "self-loop at " + std::to_string(a));
        g.edges_.push_back(make_edge(a, b));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (size_t i = 1; i < g.edges_.size(); ++i)
        if (g.edges_[i] == g.edges_[i - 1])
            fail(ErrorCode::DuplicateEdge, "edge (" + std::to_string(g.edges_[i].first) + "," +
                                               std::to_string(g.edges_[i].second) + ") repeated");
    g.adj_.assign(vertex_count, {});
    for (const auto& [a, b] : g.edges_) {
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    for (const auto& [name, id] : landmarks) {
        if (id < 0 || id >= vertex_count)
            fail(ErrorCode::BadLandmark, "landmark '" + name + "' -> invalid vertex " +
                                             std::to_string(id));
    }
    g.landmarks_ = landmarks;
    return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::landmark(const std::string& name) const {
    auto it = landmarks_.find(name);
    if (it == landmarks_.end()) fail(ErrorCode::BadLandmark, "no landmark named '" + name + "'");
    return it->second;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) fail(ErrorCode::BadVertex, "vertex " + std::to_string(v));
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    g.check_vertex(src);
    std::vector<int> dist(g.vertex_count(), kInfinity);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (dist[w] == kInfinity) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

int distance(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) return 0;
    return bfs_distances(g, u)[v];
}

int girth(const Graph& g) {
    // BFS from every root; a non-tree edge (x,y) closes a walk of length
    // dist[x]+dist[y]+1 which contains a cycle no longer than that, and for a
    // shortest cycle some root realizes its exact length.
    int best = kInfinity;
    int n = g.vertex_count();
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), kInfinity);
        std::deque<int> queue{root};
        dist[root] = 0;
        parent[root] = -1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (best != kInfinity && 2 * dist[u] >= best) continue;
            for (int w : g.neighbors(u)) {
                if (dist[w] == kInfinity) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u] && dist[w] >= dist[u] - 1) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

namespace {

struct SpectrumSearch {
    const Graph& g;
    int max_len;
    long long budget;
    long long steps = 0;
    std::set<int> lengths;
    std::vector<char> on_path;
    std::vector<int> dist_to_start;
    int start = 0;
    int second = -1;

    explicit SpectrumSearch(const Graph& graph, int limit, long long node_budget)
        : g(graph), max_len(limit), budget(node_budget), on_path(graph.vertex_count(), 0) {}

    void spend() {
        if (++steps > budget)
            fail(ErrorCode::BudgetExceeded,
                 "cycle enumeration exceeded " + std::to_string(budget) + " steps");
    }

    // Distances from `start` within the subgraph induced on vertices >= start,
    // used to prune paths that cannot close within max_len.
    void compute_dists() {
        dist_to_start.assign(g.vertex_count(), kInfinity);
        std::deque<int> queue{start};
        dist_to_start[start] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (w >= start && dist_to_start[w] == kInfinity) {
                    dist_to_start[w] = dist_to_start[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }

    void dfs(int u, int len) {
        for (int w : g.neighbors(u)) {
            spend();
            if (w == start) {
                // Count each cycle once by requiring the entry neighbor to be
                // smaller than the exit neighbor.
                if (len >= 2 && second < u) lengths.insert(len + 1);
                continue;
            }
            if (w <= start || on_path[w]) continue;
            if (len + 1 + dist_to_start[w] > max_len) continue;
            on_path[w] = 1;
            if (second == -1) {
                second = w;
                dfs(w, len + 1);
                second = -1;
            } else {
                dfs(w, len + 1);
            }
            on_path[w] = 0;
        }
    }

    std::set<int> run() {
        for (start = 0; start < g.vertex_count(); ++start) {
            compute_dists();
            on_path[start] = 1;
            second = -1;
            dfs(start, 0);
            on_path[start] = 0;
        }
        return lengths;
    }
};

}  // namespace

CycleSpectrum cycle_spectrum(const Graph& g, int max_len, long long budget) {
    if (max_len < 3) fail(ErrorCode::BadParams, "max_len must be at least 3");
    SpectrumSearch search(g, max_len, budget);
    return CycleSpectrum{max_len, search.run()};
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep,
                       std::vector<int>* old_of_new) {
    std::vector<int> new_id(g.vertex_count(), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        g.check_vertex(keep[i]);
        if (new_id[keep[i]] != -1) fail(ErrorCode::BadParams, "duplicate vertex in keep list");
        new_id[keep[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (new_id[u] != -1 && new_id[v] != -1) edges.push_back(make_edge(new_id[u], new_id[v]));
    std::map<std::string, int> landmarks;
    for (const auto& [name, id] : g.landmarks())
        if (new_id[id] != -1) landmarks[name] = new_id[id];
    if (old_of_new) *old_of_new = keep;
    return Graph::build(static_cast<int>(keep.size()), edges, landmarks);
}

Graph remove_vertex(const Graph& g, int v) {
    g.check_vertex(v);
    std::vector<int> keep;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

bool is_two_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return false;
    // Iterative Tarjan lowlink articulation-point search.
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
    std::vector<size_t> next_edge(n, 0);
    int timer = 0;
    int visited = 0;
    std::vector<int> stack{0};
    disc[0] = low[0] = timer++;
    ++visited;
    while (!stack.empty()) {
        int u = stack.back();
        const auto& nb = g.neighbors(u);
        if (next_edge[u] < nb.size()) {
            int w = nb[next_edge[u]++];
            if (disc[w] == -1) {
                parent[w] = u;
                ++child_count[u];
                disc[w] = low[w] = timer++;
                ++visited;
                stack.push_back(w);
            } else if (w != parent[u]) {
                low[u] = std::min(low[u], disc[w]);
            }
        } else {
            stack.pop_back();
            int p = parent[u];
            if (p != -1) {
                low[p] = std::min(low[p], low[u]);
                if (p != 0 && low[u] >= disc[p]) return false;  // p is a cut vertex
            }
        }
    }
    if (visited != n) return false;       // disconnected
    return child_count[0] <= 1;           // root cut vertex check
}

}  // namespace ccfc
