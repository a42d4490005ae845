#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stratifold/graph.hpp"

namespace stratifold {

// Canonical level sequence of an unlabeled rooted tree: depths in preorder,
// levels[0] == 0, lexicographically maximal over all plane embeddings.
struct RootedTree {
  std::vector<int> levels;

  int order() const { return static_cast<int>(levels.size()); }
  std::vector<int> parents() const;                 // -1 for the root (index 0)
  std::vector<std::pair<int, int>> edge_list() const;
};

// All rooted trees on n vertices, generated by constant-amortized-time level
// sequence successor iteration (no duplicates by construction). Throws
// std::invalid_argument for n < 1.
std::vector<RootedTree> enum_rooted(int n);

// |enum_rooted(n)| without storing the trees.
std::uint64_t count_rooted(int n);

// Free (unrooted, unlabeled) trees on n vertices as edge lists of canonical
// representatives, sorted by tree code.
std::vector<std::vector<std::pair<int, int>>> free_trees(int n);

// Tree with an ordered list of pairwise-distinct marks and a root (which may
// coincide with one mark). The attachment unit of the census engine.
struct AttachmentTree {
  int order = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> marks;
  int root = 0;
  std::string code;  // canonical decorated-tree code
};

// All isomorphism classes of trees on n vertices with `mark_count` ordered
// distinct marks plus a root, deduplicated by decorated canonical code and
// sorted by it. Isomorphisms must fix each mark position and the root.
std::vector<AttachmentTree> enum_marked(int n, int mark_count);

struct BiRootedTree {
  int order = 0;
  std::vector<std::pair<int, int>> edges;
  int mark = 0;
  int root = 0;  // mark may equal root
  std::string code;
};

// All bi-rooted trees on n vertices, built from rooted trees by mark
// placement (an independent route, free trees x ordered pairs, is
// enum_marked(n, 1)). Sorted by code.
std::vector<BiRootedTree> enum_birooted(int n);

// M_n - R_n: bi-rooted trees whose mark differs from the root.
std::uint64_t count_birooted_off_root(int n);

struct DRootedTree {
  int order = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> marks;  // d-1 ordered, pairwise distinct
  int root = 0;
  std::string code;
};

// All d-rooted trees on n vertices for d >= 3; requires n >= d-1.
std::vector<DRootedTree> enum_drooted(int n, int d);

// The (2,1)-collapsible tree of a rooted tree: white originals of genus 0,
// black bisection vertices, label 2 on the parent side and label 1 on the
// child side of every bisected edge.
StratGraph rooted_to_collapsible(const RootedTree& t);

struct SequenceRow {
  int n = 0;
  std::uint64_t rooted = 0;            // R_n
  std::uint64_t birooted = 0;          // M_n
  std::uint64_t birooted_off_root = 0; // U_n = M_n - R_n
};

std::vector<SequenceRow> sequence_table(int max_n);

AttachmentTree to_attachment(const BiRootedTree& t);
AttachmentTree to_attachment(const DRootedTree& t);

}  // namespace stratifold
