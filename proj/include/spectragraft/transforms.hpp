#ifndef SPECTRAGRAFT_TRANSFORMS_HPP
#define SPECTRAGRAFT_TRANSFORMS_HPP

#include <array>
#include <span>
#include <vector>

#include "spectragraft/graph.hpp"

namespace spectragraft {

/// Result of contracting a cut edge uv into u and attaching a fresh pendant
/// edge at u. Order is preserved. relabel maps old vertex ids to new ids (v
/// maps to the merged vertex); the new pendant always gets label n-1.
struct ContractionResult {
    Graph graph;
    std::vector<int> relabel;
    int merged = 0;      // new label of u (and of the absorbed v)
    int new_pendant = 0; // label of the attached pendant vertex
};

/// C-transformation for cut edge {u,v}. Throws if {u,v} is not an edge or not
/// a cut edge.
ContractionResult c_transform(const Graph& g, int u, int v);

bool is_cut_edge(const Graph& g, int u, int v);

/// Branches of g at v0: connected components of g - v0, each listed as a
/// sorted vertex set (v0 excluded), ordered by smallest member.
std::vector<std::vector<int>> branches_at(const Graph& g, int v0);

/// A cut vertex v0 with its branches grouped into three nonempty parts
/// G1, G2, G3 (each part together with v0 induces a connected subgraph).
struct BranchDecomposition {
    int v0 = 0;
    std::vector<std::vector<int>> branches;
    std::array<std::vector<int>, 3> groups; // branch indices per part
};

/// Groups the branches at v0 one per part; requires exactly 3 branches.
BranchDecomposition branch_decomposition(const Graph& g, int v0);
/// Explicit grouping: groups must partition the branch index set, all nonempty.
BranchDecomposition branch_decomposition(const Graph& g, int v0,
                                         const std::array<std::vector<int>, 3>& groups);

/// Rewires every edge from v0 into part G3 to start from u instead; u must lie
/// in G2 and differ from v0. Order preserved; the result stays connected.
Graph move_branch(const Graph& g, const BranchDecomposition& dec, int u);

/// Perron-vector side condition for the branch move: the double sum of
/// (x_i + x_j)^2 over i in G3\{v0}, j in all of G1 (v0 included) is at least
/// the same sum taken over j in all of G2. When true, moving G3 from v0 to any
/// u in G2\{v0} strictly increases the spectral radius.
bool branch_move_condition(const BranchDecomposition& dec, std::span<const double> x);

/// Pendant path hanging at some vertex u: vertices listed from the neighbor of
/// u out to the leaf; every interior vertex has degree 2.
struct PendantPath {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
};

/// All pendant paths attached at u, ordered by first vertex.
std::vector<PendantPath> pendant_paths_at(const Graph& g, int u);

/// Moves the leaf of the shorter path onto the end of the longer one:
/// G_{p,q} -> G_{p-1,q+1} with q >= p >= 1. Both paths must hang at u, be
/// disjoint, and leave a base graph of order >= 2 (u plus at least one vertex
/// outside both paths). Order preserved.
Graph pendant_path_shift(const Graph& g, int u, const PendantPath& shorter, const PendantPath& longer);

} // namespace spectragraft

#endif
