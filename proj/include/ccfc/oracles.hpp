#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "ccfc/circular.hpp"
#include "ccfc/fractional.hpp"
#include "ccfc/gadgets.hpp"
#include "ccfc/graph.hpp"

// Brute-force reference procedures used by the verification suites. These
// deliberately avoid the structure the solvers and extenders exploit: they
// enumerate raw assignments under nothing but the edge constraints.

namespace ccfc::oracle {

/// Whether a k-cycle with the given fixed positions admits a C_k-coloring,
/// by position-by-position enumeration over all residues.
bool cycle_extension_ck(int k, const std::map<int, int>& fixed);

/// Allowed (left,right) color pairs across one necklace link, as a matrix of
/// bit rows. Cycle links defer to cycle_extension_ck.
std::vector<AvailableSet> link_pair_rows(int p, const NecklaceSpec& spec, int index);

/// Reachable color sets along a necklace obtained by composing the
/// brute-forced link relations.
std::vector<AvailableSet> necklace_reachable(const NecklaceSpec& spec,
                                             const AvailableSet& start);

/// Visits every fractional (k:b)-coloring of a path with `order` vertices.
/// With fix_first, the first vertex is pinned to the lexicographically first
/// subset. The callback returns false to stop.
long long enumerate_path_colorings(int k, int b, int order, bool fix_first,
                                   const std::function<bool(const std::vector<SetMask>&)>& visit);

/// Whether a k-cycle with positions 0 and dist precolored sx and sy admits a
/// fractional (k:(k-1)/2)-coloring, by direct enumeration around the cycle.
bool cycle_extension_fractional(int k, SetMask sx, SetMask sy, int dist);

/// All simple-cycle lengths of a small graph, found by scanning edge subsets
/// for 2-regular connected ones. Requires at most 22 edges.
std::set<int> cycle_lengths_by_edge_subsets(const Graph& g);

/// Deterministic small random graph (n <= max_vertices, at most max_edges
/// edges) drawn from the given generator state.
Graph random_graph(std::uint64_t& state, int max_vertices, int max_edges);

std::uint64_t split_mix(std::uint64_t& state);

}  // namespace ccfc::oracle
