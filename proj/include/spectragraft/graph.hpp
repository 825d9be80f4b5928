#ifndef SPECTRAGRAFT_GRAPH_HPP
#define SPECTRAGRAFT_GRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectragraft/errors.hpp"

namespace spectragraft {

/// Simple undirected graph on vertices 0..n-1. No self-loops, no duplicate
/// edges; adjacency lists are kept consistent with the edge set. Connectivity
/// and tree-ness are validated by the operations that need them, never assumed.
class Graph {
public:
    explicit Graph(int order);

    static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges);

    int order() const noexcept { return order_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    /// Inserts edge {u,v}. Throws on out-of-range ids, self-loops and duplicates.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;

    /// Edges normalized to u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> sorted_edges() const;

    bool is_connected() const;
    bool is_tree() const;

    /// Throws error(disconnected) naming one representative vertex per side.
    void require_connected() const;
    void require_tree() const;

private:
    int order_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;

    void check_vertex(int v) const;
};

/// Exact all-pairs shortest-path distances (entries are hop counts).
struct DistanceMatrix {
    int n = 0;
    std::vector<int> d; // row-major n*n

    int operator()(int u, int v) const { return d[static_cast<size_t>(u) * n + v]; }
};

/// Per-vertex transmissions Tr(v) = sum_u d(u,v), with cached extremes.
struct TransmissionVector {
    std::vector<std::int64_t> tr;
    std::int64_t tr_max = 0;
    std::int64_t tr_min = 0;
};

/// Distance signless Laplacian: Q(v,v) = Tr(v), Q(u,v) = d(u,v) for u != v.
/// Exact integers; row sum of row v equals 2*Tr(v).
struct QMatrix {
    int n = 0;
    std::vector<std::int64_t> q; // row-major n*n

    std::int64_t operator()(int u, int v) const { return q[static_cast<size_t>(u) * n + v]; }
};

/// BFS from every vertex. Throws error(disconnected) on disconnected input.
DistanceMatrix all_pairs_distances(const Graph& g);

TransmissionVector transmissions(const DistanceMatrix& d);

QMatrix q_matrix(const Graph& g);
QMatrix q_matrix(const DistanceMatrix& d);

struct GraphStats {
    std::vector<int> degrees;
    std::vector<int> pendant_vertices; // degree-1 vertices, ascending
    int diameter = 0;
    int high_degree_count = 0; // vertices of degree >= 3
    std::int64_t wiener = 0;   // sum of d(u,v) over unordered pairs
};

GraphStats graph_stats(const Graph& g);

/// Edge-list document: first line "n m", then m lines "u v".
/// Rejects malformed input with the offending line number in the message.
Graph parse_edge_list(std::string_view text);

/// Writer for the same format; edges normalized to u < v and sorted.
std::string write_edge_list(const Graph& g);

/// Single-line variant "n m u1 v1 u2 v2 ..." used by fixture files.
std::string write_edge_list_inline(const Graph& g);
Graph parse_edge_list_inline(std::string_view text);

} // namespace spectragraft

#endif
