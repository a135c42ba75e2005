#pragma once

#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ccfc/errors.hpp"

namespace ccfc {

// Unordered edge, stored normalized with first < second.
using Edge = std::pair<int, int>;

// Distances and girths use kInfinity for "no path" / "no cycle".
inline constexpr int kInfinity = std::numeric_limits<int>::max();

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Immutable simple undirected graph with named landmark vertices.
class Graph {
public:
    Graph() = default;

    /// Validates and builds. Throws InvalidEdge, DuplicateEdge, BadLandmark.
    static Graph build(int vertex_count, const std::vector<Edge>& edges,
                       const std::map<std::string, int>& landmarks = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;

    const std::map<std::string, int>& landmarks() const { return landmarks_; }
    bool has_landmark(const std::string& name) const { return landmarks_.count(name) != 0; }
    int landmark(const std::string& name) const;

    void check_vertex(int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;  // sorted lexicographically
    std::vector<std::vector<int>> adj_;
    std::map<std::string, int> landmarks_;
};

/// BFS distances from src; unreachable vertices get kInfinity.
std::vector<int> bfs_distances(const Graph& g, int src);

/// Shortest-path length between u and v, kInfinity if disconnected.
int distance(const Graph& g, int u, int v);

/// Length of a shortest cycle, kInfinity for forests.
int girth(const Graph& g);

struct CycleSpectrum {
    int max_length = 0;
    std::set<int> present_lengths;
};

inline constexpr long long kDefaultSpectrumBudget = 100000000LL;

/// Exact set of cycle lengths <= max_len, by bounded DFS enumeration of
/// simple cycles. Throws BudgetExceeded once `budget` extension steps are
/// spent, so callers can distinguish "no cycle" from "gave up".
CycleSpectrum cycle_spectrum(const Graph& g, int max_len,
                             long long budget = kDefaultSpectrumBudget);

/// True iff connected, at least 3 vertices, and no cut vertex.
bool is_two_connected(const Graph& g);

/// Subgraph induced on `keep` (ids compacted in the given order). Landmarks
/// on kept vertices are remapped, the rest dropped. `old_of_new[i]` reports
/// the original id of new vertex i when non-null.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep,
                       std::vector<int>* old_of_new = nullptr);

/// Deletes one vertex; ids above it shift down by one.
Graph remove_vertex(const Graph& g, int v);

}  // namespace ccfc
