#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccfc/graph.hpp"

namespace ccfc {

// A necklace link between consecutive anchors: either a plain edge, or a
// k-cycle split into a `split`-thread and a (k-2-split)-thread.
struct Link {
    static constexpr int kEdge = -1;
    int split = kEdge;

    bool is_edge() const { return split == kEdge; }
};

inline Link edge_link() { return Link{Link::kEdge}; }
inline Link cycle_link(int split) { return Link{split}; }

/// Symbolic necklace: odd modulus plus an ordered list of links. A spec with
/// L links realizes an (L-1)-necklace on anchors x_0..x_L.
struct NecklaceSpec {
    int modulus = 0;
    std::vector<Link> links;

    int link_count() const { return static_cast<int>(links.size()); }
    int internal_anchor_count() const { return link_count() - 1; }
};

void validate_necklace_spec(const NecklaceSpec& spec);

/// Comma-separated link list: "e" for an edge, "c<n>" for a cycle with
/// split n. Example: "e,c1,e".
std::vector<Link> parse_links(const std::string& text);

/// Shortest-path contribution of one link: 1 for an edge,
/// min(split, k-2-split)+1 for a cycle.
int link_distance(const NecklaceSpec& spec, int index);

/// Anchor-to-anchor distance x_0 -> x_L implied by the link list.
int necklace_distance(const NecklaceSpec& spec);

enum class CenterKind { Vertex, Cycle, Bull };

/// Multi-armed necklace: t arms sharing a center vertex (necklace), a center
/// k-cycle with per-arm attachment offsets (crown), or a bull (two plain
/// threads plus one necklace arm).
struct MultiSpec {
    int modulus = 0;
    CenterKind center = CenterKind::Vertex;
    std::vector<NecklaceSpec> arms;
    std::vector<int> offsets;  // crown only: attachment offset per arm, in [0,k)
    int bull_thread_length = 0;  // bull only: the parameter t of B_v(t,s)

    int arm_count() const { return static_cast<int>(arms.size()); }
};

void validate_multi_spec(const MultiSpec& spec);

/// Two length-t plain threads plus the given necklace arm, i.e. B_v(t, s)
/// with s = necklace_distance(arm).
MultiSpec make_bull_spec(int k, int t, const NecklaceSpec& arm);

// ---------------------------------------------------------------------------
// Realized geometry. Constructors return plain Graphs; the *_geom variants
// additionally report which vertices play which structural role, so the
// coloring extenders can work on concrete vertex ids.

struct LinkGeom {
    bool is_cycle = false;
    int left = 0;
    int right = 0;
    // For cycles: the k vertices in cyclic order, cycle[0] == left and
    // cycle[split+1] == right.
    std::vector<int> cycle;
};

struct NecklaceGeom {
    NecklaceSpec spec;
    std::vector<int> anchors;  // x_0..x_L
    std::vector<LinkGeom> links;

    int left() const { return anchors.front(); }
    int right() const { return anchors.back(); }
};

struct MultiGeom {
    MultiSpec spec;
    int center = -1;                    // necklace / bull center vertex
    std::vector<int> center_cycle;      // crown only: cycle vertices, position = index
    std::vector<int> arm_roots;         // center-side anchor per arm
    std::vector<int> arm_ends;
    std::vector<NecklaceGeom> arm_geoms;
};

// ---------------------------------------------------------------------------
// Constructors. Every constructor appends new vertices after existing ids, so
// landmark ids survive all transforms.

Graph build_graph(int n, const std::vector<Edge>& edges,
                  const std::map<std::string, int>& landmarks = {});

/// Landmarks "x" (= x_0) and "y" (= x_L). An all-edge spec is a plain thread.
Graph build_necklace(const NecklaceSpec& spec);
std::pair<Graph, NecklaceGeom> build_necklace_geom(const NecklaceSpec& spec);

/// Necklace/crown landmarks: "center" (or "y0" for the crown's cycle anchor)
/// plus "y1".."yt" arm ends. Bull landmarks: "v", "x", "y", "z".
Graph build_multi(const MultiSpec& spec);
std::pair<Graph, MultiGeom> build_multi_geom(const MultiSpec& spec);

/// Replace edge e with a k-cycle v_0..v_{k-1}, identifying the endpoints with
/// v_0 and v_d. Landmarks preserved.
Graph d_ck_replace_edge(const Graph& g, Edge e, int d, int k);

/// Apply the replacement to every edge of g, in sorted edge order. Original
/// vertices keep their ids.
Graph d_ck_replace_all(const Graph& g, int d, int k);

/// Ring of m replaced edges plus one plain edge, for odd nonprime k = s*t.
/// Landmarks "z0".."z<m>".
Graph build_nonprime_gadget(int s, int t, int m);

/// (2p-3)-cycle z_0..z_{2p-4} plus a center joined to every z_i by a path of
/// length p-2. Landmarks "center", "z0"..
Graph build_devos_wheel(int p);

/// build_devos_wheel(p) with every edge replaced by a p-cycle at offset (p-1)/2.
Graph build_hp(int p);

/// Subdivide every edge into a path of length 3, then replace each edge with
/// a 5-cycle at offset 2. Original ids are preserved and exposed as landmarks
/// "v0".."v<n-1>".
Graph build_five_color_reduction(const Graph& g);

/// 2t disjoint k-cycles chained through the y_i vertices plus an apex vertex.
/// Landmarks "v" and "x1".."x<2t>", "y1".., "z1..".
Graph build_odd_counterexample(int k, int t);

struct FvGeom {
    int t = 0;
    MultiGeom bull;
    std::vector<int> xy_path;  // x .. y, length k-2t
};

/// Bull B_v(t, s) plus a new (x,y)-path of length k-2t closing a k-cycle
/// through x, v, y. Landmarks "x", "y", "z", "v".
Graph build_fv(int t, const NecklaceSpec& arm, int k);
std::pair<Graph, FvGeom> build_fv_geom(int t, const NecklaceSpec& arm, int k);

// ---------------------------------------------------------------------------
// Structural decomposition, used to run the constructive extenders on graphs
// loaded from files rather than built in-process.

/// Interprets the subgraph induced on `allowed` (which must contain both
/// ends) as an (x,y)-necklace and recovers its geometry. Throws BadSpec if
/// the subgraph is not a necklace.
NecklaceGeom decompose_necklace(const Graph& g, const std::vector<char>& allowed,
                                int from, int to, int k);

}  // namespace ccfc
