#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccfc/gadgets.hpp"
#include "ccfc/graph.hpp"

namespace ccfc {

/// Circular (k,d)-coloring assignment; C_k-coloring is the d = (k-1)/2 case.
/// May be partial: unassigned vertices hold kUnassigned.
struct CircularColoring {
    static constexpr int kUnassigned = -1;

    int modulus = 0;  // k
    int gap = 0;      // d, with k >= 2d
    std::vector<int> assignment;

    CircularColoring() = default;
    CircularColoring(int k, int d, int n)
        : modulus(k), gap(d), assignment(static_cast<size_t>(n), kUnassigned) {}

    bool assigned(int v) const { return assignment[v] != kUnassigned; }
    bool total() const;
    int size() const { return static_cast<int>(assignment.size()); }
};

inline CircularColoring make_ck_coloring(int k, int n) { return {k, (k - 1) / 2, n}; }

inline int circular_distance(int a, int b, int k) {
    int diff = a - b;
    if (diff < 0) diff = -diff;
    return std::min(diff, k - diff);
}

/// True iff every edge satisfies d <= |c(u)-c(v)| <= k-d. Throws
/// PartialColoring if any vertex is unassigned.
bool check_circular(const Graph& g, const CircularColoring& col);

/// Subset of Z_k as a fixed-width bit set.
struct AvailableSet {
    int modulus = 0;
    std::uint32_t bits = 0;

    AvailableSet() = default;
    AvailableSet(int k, std::uint32_t mask) : modulus(k), bits(mask) {}
    static AvailableSet empty_set(int k) { return {k, 0}; }
    static AvailableSet full_set(int k) { return {k, (k >= 32 ? ~0u : ((1u << k) - 1))}; }
    static AvailableSet of(int k, std::initializer_list<int> values);

    bool contains(int r) const { return (bits >> r) & 1u; }
    void insert(int r) { bits |= (1u << r); }
    int size() const;
    std::vector<int> values() const;

    bool operator==(const AvailableSet& other) const = default;
};

/// {a + b mod k : a in A, b in B}.
AvailableSet sumset(const AvailableSet& a, const AvailableSet& b);

/// Whether fixing positions i and j of a k-cycle to residues ci and cj leaves
/// the cycle colorable: the color difference must match one of the two slopes
/// (k-1)/2 and (k+1)/2 times the position difference, mod k. Positions are
/// taken mod k.
bool cycle_precolor_feasible(int k, int i, int j, int ci, int cj);

/// Full k-cycle coloring realizing the given two fixed positions, or nullopt.
/// Tries slope (k-1)/2 before (k+1)/2.
std::optional<std::vector<int>> color_cycle_ck(int k, int i, int j, int ci, int cj);

/// Exact reachable color sets B(x_0..x_L) along a necklace, starting from
/// `start` at x_0. An edge link shifts by +-(k-1)/2, a cycle link with split
/// s by +-(k-1)/2*(s+1).
std::vector<AvailableSet> propagate_necklace(const NecklaceSpec& spec,
                                             const AvailableSet& start);

/// Coloring of build_necklace(spec) with the stated end colors, or nullopt
/// when the end constraint is unreachable. Always succeeds when the internal
/// anchor count is at least p-2 (prime p).
std::optional<CircularColoring> extend_necklace_ck(const NecklaceSpec& spec, int p, int cx,
                                                   int cy);

/// Coloring of build_multi(spec) matching the given arm-end colors, for a
/// necklace- or crown-center spec. Exact: succeeds iff some center-cycle
/// coloring is simultaneously reachable from every end.
std::optional<CircularColoring> extend_crown_ck(const MultiSpec& spec, int p,
                                                const std::vector<int>& end_colors);

struct SearchStats {
    long long nodes = 0;
    long long revisions = 0;
    long long prunings = 0;
};

inline constexpr const char* kCircularSearchOrderId = "mrv-lowid/asc-residue/ac3";

struct CircularSolveResult {
    bool sat = false;
    CircularColoring coloring;  // total when sat
    SearchStats stats;
};

/// Exact backtracking search with arc consistency over residue bit sets.
/// Deterministic: minimum-remaining-values variable order with lowest-id
/// tie-break, ascending residue value order. `budget` = 0 means unlimited;
/// exceeding it throws BudgetExceeded.
CircularSolveResult solve_circular(const Graph& g, int k, int d,
                                   const CircularColoring* precoloring = nullptr,
                                   long long budget = 0);

struct ReducibilityCase {
    std::string input;
    std::string expected;
    std::string got;
};

struct ReducibilityReport {
    bool reducible = false;
    long long cases_total = 0;
    long long cases_failed = 0;
    std::vector<ReducibilityCase> failures;
};

/// Exhaustively checks that every internally consistent precoloring of the
/// named landmark vertices extends to a C_p-coloring of h.
ReducibilityReport certify_reducible_ck(const Graph& h, const std::vector<std::string>& ends,
                                        int p);

/// C_k-coloring of G -> C_k-coloring of d_ck_replace_all(g, d, k) via
/// residue scaling by d, with the replacement cycles filled in. Requires
/// gcd(d, k) = 1.
CircularColoring transfer_to_replacement(const Graph& g, const CircularColoring& col, int d,
                                         int k);

/// Inverse map: scales the restriction to the original vertices by d^{-1}.
CircularColoring inverse_transfer(const Graph& g, const CircularColoring& col_on_replacement,
                                  int d, int k);

bool is_prime(int n);

}  // namespace ccfc
