#ifndef SPECTRAGRAFT_TREE_ENUM_HPP
#define SPECTRAGRAFT_TREE_ENUM_HPP

#include <string>
#include <vector>

#include "spectragraft/graph.hpp"

namespace spectragraft {

/// Default bound on enumeration order; SPECTRA_GRAFT_CAP overrides it.
inline constexpr int kDefaultEnumerationCap = 16;

int enumeration_cap();

/// Canonical code of an unlabeled tree. Byte-exact encoding:
///   - the code of a rooted tree is "(" + the child codes sorted as byte
///     strings and concatenated + ")";
///   - a tree with one centroid is encoded rooted at the centroid;
///   - a tree with two (adjacent) centroids is split across the centroid
///     edge, each half encoded rooted at its centroid, and the code is the
///     lexicographically smaller of the two concatenation orders.
/// Equal codes <=> isomorphic trees.
std::string canonical_code(const Graph& g);

/// One and two adjacent centroids come out sorted.
std::vector<int> tree_centroids(const Graph& g);

/// One representative per unlabeled tree of the given order, sorted by
/// canonical code. Generation walks the canonical rooted level sequences
/// (lexicographic successor rule) and dedups across roots by canonical code.
std::vector<Graph> enumerate_trees(int n);

/// Independent counting oracle: decodes every labeled tree on n vertices from
/// its sequence encoding and counts distinct canonical codes. O(n^(n-2)),
/// capped at n <= 9.
long prufer_count_oracle(int n);

/// Fixture line "code<TAB>n m u1 v1 u2 v2 ..." (edges sorted).
std::string fixture_line(const Graph& g);

} // namespace spectragraft

#endif
