#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stratifold/graph.hpp"

namespace stratifold {

struct CollapsibleVerdict {
  bool is_collapsible = false;
  std::optional<VertexId> root;  // present iff is_collapsible: the unique white
                                 // vertex without an incident label-1 edge
};

// True iff g is the bisected-and-labeled image of some rooted tree: a tree of
// genus-0 whites and degree-2 blacks with labels {1,2}, with a unique
// all-label-2 white vertex from which every black is entered through its
// label-2 edge. The one-vertex white graph qualifies.
CollapsibleVerdict is_21_collapsible(const StratGraph& g);

struct ClosedStar {
  StratGraph star;                       // degree-3 blacks, their edges, their white neighbours
  std::vector<VertexId> boundary_whites;  // white vertices of the star, sorted
  std::vector<StratGraph> components;     // components of g minus the open star
};

// Closed star of the degree-3 black vertices plus the component decomposition
// of the rest. Requires a tree.
ClosedStar closed_star_b(const StratGraph& g);

// St(B) with a path w -(1)- b -(2)- w' attached to every white vertex of the
// star that is not the root of its collapsible component. Throws
// std::runtime_error naming a vertex of the offending component if some
// component is not (2,1)-collapsible.
StratGraph reduced_graph(const StratGraph& g);

// Whole-graph test for the horned-tree construction: arms W -(2)- b -(1)- w
// -(1)- B around an inner tree of degree-3 blacks joined through bisection
// whites, every terminal edge of label 2 and every other edge of label 1.
bool is_horned_tree(const StratGraph& g);

// Search for a horned subtree (subgraph with inherited colors and labels).
// Complete for reduced-graph outputs, where every black vertex is either
// degree 3 with three label-1 edges or degree 2 with labels {1,2}.
std::optional<StratGraph> find_horned_subtree(const StratGraph& g);
bool contains_horned_tree(const StratGraph& g);

// The classification: accepted iff g is a tree, all whites have genus 0, all
// terminal vertices are white, g is trivalent, every component of g minus the
// open star of the degree-3 blacks is (2,1)-collapsible, and the reduced
// graph contains no horned tree. Every failed clause yields a reason.
Verdict is_simply_connected(const StratGraph& g);

struct Pi1Presentation {
  std::vector<std::string> generators;  // one per black vertex, one per edge
  std::vector<std::string> relations;   // one product per white vertex, one
                                        // power relation per edge
};

// Fundamental group presentation for a tree with genus-0 whites; throws
// std::invalid_argument otherwise. Generator order and relation word order
// are fixed by subtree canonical codes, so the output is deterministic and
// relabeling produces the same presentation text up to generator naming.
Pi1Presentation pi1_presentation(const StratGraph& g);

}  // namespace stratifold
