#ifndef SPECTRAGRAFT_FAMILIES_HPP
#define SPECTRAGRAFT_FAMILIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectragraft/graph.hpp"

namespace spectragraft {

// Deterministic constructors for the named tree families. Labelings are fixed
// so edge lists and fixtures are bit-reproducible:
//   path:   0-1-...-(n-1)
//   star:   center 0, leaves 1..n-1
//   broom B(n;n0,n1..nr): center 0; arms 1..r; n0 center pendants next;
//          then the arm-1..arm-r pendants in consecutive blocks
//   spider S(n;n1..nr): center 0; leg i occupies the next n_i consecutive
//          labels, chained outward from the center
//   double broom T(n,k;t1,t2): path 0..l-1 (l = n-k); t1 pendants at 0,
//          then t2 pendants at l-1
//   P(n;i,j): spine path labels 0..n-4 (spine vertex v_t has label t-1);
//          pendant edge at v_i gets label n-3; the 2-path at v_j gets n-2, n-1

Graph make_path(int n);
Graph make_star(int n);

/// B(n;n0,n1..nr): star S_{1,r} with n0 extra pendants at the center and n_i
/// pendants at arm i. Requires r >= 1, n0 >= 0, 1 <= n1 <= ... <= nr and
/// n0 + sum(parts) == n - r - 1.
Graph make_broom(int n, int n0, const std::vector<int>& parts);

/// S(n;n1..nr): r paths of n1 <= ... <= nr vertices, each joined to a common
/// center by an edge. Requires sum(legs) == n - 1.
Graph make_spider(int n, const std::vector<int>& legs);

/// T(n,k;t1,t2): path of l = n-k >= 2 vertices with t1 pendants at one end and
/// t2 at the other. Requires t1 >= 1, t2 >= 1, t1 + t2 == k.
Graph make_double_broom(int n, int k, int t1, int t2);

/// P(n;i,j): spine path of n-3 vertices with a pendant edge at spine vertex i
/// and a pendant 2-path at spine vertex j. Requires n >= 8, 2 <= i,j <= n-4,
/// i != j.
Graph make_p_tree(int n, int i, int j);

/// At most one vertex of degree >= 3.
bool is_starlike(const Graph& g);
/// Deleting all pendant vertices leaves a path (empty and single-vertex count).
bool is_caterpillar(const Graph& g);
/// Isomorphic to some T(n,k;t1,t2): the degree->=2 vertices induce a path of at
/// least two vertices whose interior vertices have degree exactly 2.
bool is_double_broom(const Graph& g);
/// (t1, t2) with t1 <= t2 when is_double_broom, else nullopt.
std::optional<std::pair<int, int>> double_broom_params(const Graph& g);

int pendant_count(const Graph& g);

struct ClassFlags {
    bool non_caterpillar = false; // membership in the class of non-caterpillar trees
    bool non_starlike = false;    // membership in the class of non-starlike trees
    int pendant_count = 0;        // the k of the k-pendant-vertex class
    bool double_broom = false;
};

ClassFlags class_membership(const Graph& g);

/// Parsed family mini-syntax, e.g. "B:n=10,n0=3,parts=1,1,1", "S:n=8,legs=2,2,3",
/// "T:n=9,t1=2,t2=2", "P:n=10,i=2,j=5", "Path:n=6", "Star:n=5".
struct FamilySpec {
    enum class Tag { path, star, broom, spider, double_broom, p_tree };
    Tag tag = Tag::path;
    int n = 0;
    int n0 = 0;               // broom
    std::vector<int> parts;   // broom arms / spider legs
    int t1 = 0, t2 = 0;       // double broom
    int i = 0, j = 0;         // p-tree
};

FamilySpec parse_family_spec(std::string_view text);
Graph build_family(const FamilySpec& spec);

} // namespace spectragraft

#endif
