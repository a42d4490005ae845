#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "stratifold/graph.hpp"

namespace stratifold {

// Total-order isomorphism invariant. Two connected trees have equal codes
// iff they are isomorphic by a color-, genus- and label-preserving graph
// isomorphism; for connected non-trees the code is still an isomorphism
// invariant but not complete.
struct CanonicalCode {
  std::string code;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

// AHU subtree encoding minimized over the 1-2 centroids, with color, genus
// and incident edge labels folded into the vertex symbols. Throws
// std::invalid_argument on empty or disconnected input.
CanonicalCode canonical_code(const StratGraph& g);

// canonical_code(a) == canonical_code(b); both inputs must be connected trees.
bool are_isomorphic(const StratGraph& a, const StratGraph& b);

// Canonical code of an unlabeled tree on vertices 0..n-1, optionally carrying
// per-vertex decoration symbols (complete invariant for decorated trees).
std::string tree_code(std::size_t n, const std::vector<std::pair<int, int>>& edges,
                      const std::vector<std::string>* symbols = nullptr);

// Code of the same tree rooted at a distinguished vertex.
std::string rooted_tree_code(std::size_t n, const std::vector<std::pair<int, int>>& edges,
                             std::size_t root,
                             const std::vector<std::string>* symbols = nullptr);

// All automorphisms of a connected StratGraph tree, as permutations of vertex
// indices. Color, genus and edge labels are preserved.
std::vector<std::vector<std::size_t>> automorphisms(const StratGraph& g);

}  // namespace stratifold
