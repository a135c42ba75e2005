#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ccfc/circular.hpp"
#include "ccfc/gadgets.hpp"
#include "ccfc/graph.hpp"

namespace ccfc {

// Color subsets of the 0-based palette {0,...,k-1} as bit masks.
using SetMask = std::uint32_t;

int mask_size(SetMask m);
SetMask full_palette(int k);
/// The `count` lowest set bits of `pool`; pool must have at least that many.
SetMask take_lowest(SetMask pool, int count);
std::string mask_to_string(SetMask m);
/// All b-element subsets of {0..k-1} in ascending bitmask order.
std::vector<SetMask> all_subsets(int k, int b);

/// Fractional (k : b)-coloring with b-element palette subsets per vertex;
/// the constructive machinery is specific to b = (k-1)/2. Unassigned
/// vertices hold mask 0.
struct FractionalColoring {
    int palette = 0;      // k
    int subset_size = 0;  // b
    std::vector<SetMask> assignment;

    FractionalColoring() = default;
    FractionalColoring(int k, int b, int n)
        : palette(k), subset_size(b), assignment(static_cast<size_t>(n), 0) {}

    bool assigned(int v) const { return assignment[v] != 0; }
    bool total() const;
    int size() const { return static_cast<int>(assignment.size()); }
};

inline FractionalColoring make_fractional_coloring(int k, int n) {
    return {k, (k - 1) / 2, n};
}

/// True iff every set has exactly b elements and adjacent sets are disjoint.
/// Throws PartialColoring on unassigned vertices.
bool check_fractional(const Graph& g, const FractionalColoring& col);

enum class BoundKind { Lower, Upper };

struct PathBound {
    BoundKind kind;
    int value;
};

/// End-set intersection bound along a path with `order` vertices:
/// at least (k-order)/2 for odd order, at most (order-2)/2 for even order.
PathBound path_bound(int order, int k);

/// Exact end-set intersection forced by a k-cycle between two vertices at
/// cycle distance `dist` <= (k-1)/2: (k-1-dist)/2 for even dist,
/// (dist-1)/2 for odd dist.
int cycle_intersection_required(int k, int dist);

struct OverlapInterval {
    int lo = 0;
    int hi = 0;
    bool contains(int value) const { return lo <= value && value <= hi; }
};

/// Sufficient end-overlap interval for extending a necklace of the given end
/// distance: the single forced value up to distance (k+1)/2, a widening
/// window beyond, and all of [0,(k-1)/2] from distance k on.
OverlapInterval feasible_overlap(int k, int dist);

/// Quarter-integer rational, stored as 4x the value.
struct Q4 {
    int num4 = 0;

    static Q4 of_int(int v) { return {4 * v}; }
    bool is_integer() const { return num4 % 4 == 0; }
    int to_int() const;
    bool operator<(const Q4& o) const { return num4 < o.num4; }
    bool operator==(const Q4& o) const = default;
};

struct MNResult {
    Q4 lower;  // M
    Q4 upper;  // N
    Q4 beta;
    Q4 gamma;

    int M() const { return lower.to_int(); }
    int N() const { return upper.to_int(); }
};

/// The integer window [M, N] for the middle-region size b when splitting a
/// necklace of end distance t at a cut vertex at distance s from the left
/// end, with end overlap l. With case2 the right-hand target is the fixed
/// half-distance value (requires t - s = (k+1)/2). Exact rational arithmetic
/// over denominator 4. Throws HypothesisViolated outside the hypotheses.
MNResult compute_MN(int k, int s, int t, int l, bool case2);

/// Bookkeeping record for one constructive split: the four end-set regions,
/// the quarter-integer window, the per-region counts (with the middle count
/// pinned to M), and the resulting cut-vertex set. The bull extension
/// additionally fills the shared region S = B or D and its partition against
/// the third end set.
struct FractionalSplit {
    int palette = 0;
    int left_distance = 0;   // d(x,u)
    int right_distance = 0;  // d(u,y)
    int end_overlap = 0;     // |sx n sy|

    SetMask only_left = 0;   // A = sx \ sy
    SetMask both = 0;        // B = sx n sy
    SetMask only_right = 0;  // C = sy \ sx
    SetMask neither = 0;     // D = the rest of the palette

    Q4 beta, gamma;
    int lower = 0;  // M
    int upper = 0;  // N
    int take_left = 0, take_both = 0, take_right = 0, take_neither = 0;
    SetMask cut_set = 0;

    // bull bookkeeping: S, S1, S2 and the chosen A1, A2, C1, C2
    SetMask shared = 0, shared_out = 0, shared_in = 0;
    SetMask left_out = 0, left_in = 0, right_out = 0, right_in = 0;
};

/// Plans the cut-vertex set for one necklace split: regions of (sx, sy),
/// the [M, N] window for the given left-distance goal and right-hand overlap
/// target, counts with take_both = M, and lowest-indexed color choices.
/// Nullopt when the window is empty.
std::optional<FractionalSplit> plan_necklace_split(int k, SetMask sx, SetMask sy, int s,
                                                   int rest, int right_target);

/// Full coloring of a k-cycle whose positions 0 and `dist` carry sx and sy,
/// built from the canonical alternating pattern via a region-wise palette
/// permutation. Infeasible (nullopt) iff the overlap is not the forced value.
std::optional<std::vector<SetMask>> color_cycle_fractional(int k, SetMask sx, SetMask sy,
                                                           int dist);

/// Constructive necklace extension: splits at the first anchor, solves the
/// region-count system with b = M, takes lowest-indexed colors, and recurses.
/// Succeeds whenever the end overlap lies in feasible_overlap; declines
/// (nullopt) all end pairs outside the interval. Coloring is over
/// build_necklace(spec).
std::optional<FractionalColoring> extend_necklace_fractional(const NecklaceSpec& spec,
                                                             SetMask sx, SetMask sy);

/// Exact chain decision for one necklace, by dynamic programming over the
/// reachable end sets of each anchor. Complete for the specific necklace,
/// unlike the interval criterion.
std::optional<FractionalColoring> extend_necklace_exact(const NecklaceSpec& spec, SetMask sx,
                                                        SetMask sy);

/// Constructive bull extension per the region bookkeeping (A,B,C,D,S,...):
/// requires 1 <= t <= (k-1)/2, t + d(v,z) >= k and |sx n sy| = (k-1-2t)/2
/// (HypothesisViolated otherwise). Coloring is over build_multi(spec).
std::optional<FractionalColoring> extend_bull_fractional(const MultiSpec& spec, SetMask sx,
                                                         SetMask sy, SetMask sz);

/// Checks the cycle-forced (x,y) overlap of an F_v graph, then extends the
/// bull interior against the given coloring of the (x,y)-path and z.
/// The graph must carry landmarks "x","y","z","v".
std::optional<FractionalColoring> certify_fv_extension(const Graph& fv, int k,
                                                       const FractionalColoring& outer);

struct FractionalSolveResult {
    bool sat = false;
    FractionalColoring coloring;
    SearchStats stats;
};

inline constexpr const char* kFractionalSearchOrderId = "mrv-lowid/asc-mask/ac3/sym1";

/// Exact backtracking search over the C(k,(k-1)/2) subset domains with
/// pairwise-disjointness arc consistency. Deterministic MRV + ascending
/// bitmask order; with no precoloring the first branched vertex is fixed to
/// the lexicographically first subset (palette symmetry).
FractionalSolveResult solve_fractional(const Graph& g, int k,
                                       const FractionalColoring* precoloring = nullptr,
                                       long long budget = 0);

/// Visits every total coloring extending the precoloring (no symmetry
/// reduction). The callback returns false to stop early. Returns the number
/// of solutions visited.
long long enumerate_fractional(const Graph& g, int k, const FractionalColoring* precoloring,
                               const std::function<bool(const FractionalColoring&)>& visit,
                               long long budget = 0);

using OverlapPredicate = std::function<bool(const std::vector<SetMask>&)>;

/// Runs the constructive extender over every end precoloring satisfying the
/// predicate (all tuples when sample_count = 0, else a seeded sample) and
/// verifies the result with check_fractional. Two ends: the graph is
/// decomposed as an (ends[0],ends[1])-necklace; three ends: as a bull with
/// landmark "v".
ReducibilityReport certify_reducible_fractional(const Graph& h,
                                                const std::vector<std::string>& ends, int k,
                                                const OverlapPredicate& predicate,
                                                long long sample_count = 0,
                                                std::uint64_t seed = 0);

}  // namespace ccfc
