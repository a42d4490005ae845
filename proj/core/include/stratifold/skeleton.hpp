#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stratifold/graph.hpp"

namespace stratifold {

// Unlabeled tree with exactly `black_count` black vertices and every white
// vertex of degree >= 3. For black_count == 0 a single degenerate empty
// marker is produced; the census handles that case by the rooted-tree count
// and never builds a skeleton for it.
struct GeneratingTree {
  int black_count = 0;
  int order = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<VertexColor> colors;  // by vertex index
  std::string code;
};

std::vector<GeneratingTree> enum_generating_trees(int b);

// Skeleton of a generating tree: black-black edges subdivided by new whites,
// pendant whites attached until every black vertex has degree 3. All edges
// carry label 1; the white vertices are the attachment slots.
struct Skeleton {
  StratGraph base;
  std::vector<VertexId> slots;  // all whites, sorted by id
  std::vector<std::vector<std::size_t>> slot_symmetries;  // permutations of
                                                          // slot indices from
                                                          // base automorphisms
};

Skeleton skeleton_of(const GeneratingTree& t);

// A skeleton with some non-terminal white vertices split into copies; each
// copy set must receive a single attachment tree spanning it through that
// many distinct marks.
struct SlotGroup {
  std::vector<VertexId> copies;  // one entry for an unsplit slot
};

struct SplitSkeleton {
  StratGraph base;
  std::vector<SlotGroup> groups;  // multi-copy groups first, then singletons
  std::vector<std::vector<std::size_t>> group_symmetries;  // permutations of
                                                           // group indices
  std::string descriptor;  // e.g. "split{2:1+1}"; empty for the unsplit form
};

// All ways to split subsets of the non-terminal (degree >= 2) white slots,
// one variant per partition choice, deduplicated up to isomorphism of the
// grouped base. The unsplit skeleton itself is not included.
std::vector<SplitSkeleton> split_variants(const Skeleton& s);

// The skeleton viewed as a trivial SplitSkeleton (every slot its own group).
SplitSkeleton as_unsplit(const Skeleton& s);

}  // namespace stratifold
