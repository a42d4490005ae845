#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stratifold {

enum class VertexColor : std::uint8_t { White, Black };

using VertexId = std::uint32_t;

// Vertex of a bi-colored labeled graph. The genus is meaningful for white
// vertices only (negative genus marks a nonorientable surface component).
struct Vertex {
  VertexId id = 0;
  VertexColor color = VertexColor::White;
  int genus = 0;
};

// Every edge joins a white vertex to a black vertex and carries the covering
// degree of the corresponding boundary circle as its label.
struct Edge {
  VertexId white = 0;
  VertexId black = 0;
  int label = 1;
};

// Bi-colored, edge-labeled graph. Parallel edges are representable; every
// operation that requires a tree rejects them or returns false. Values are
// immutable by convention after construction.
struct StratGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

struct Reason {
  std::string code;    // machine-readable, e.g. "non-bipartite-edge"
  std::string detail;  // human text
};

struct Verdict {
  bool accepted = true;
  std::vector<Reason> reasons;  // nonempty iff !accepted

  void reject(std::string code, std::string detail) {
    accepted = false;
    reasons.push_back({std::move(code), std::move(detail)});
  }
  explicit operator bool() const { return accepted; }
};

// Structural validation: unique vertex ids, edges joining an existing white
// vertex to an existing black vertex, labels >= 1. Violations are reported
// in the Verdict, never thrown.
Verdict validate(const StratGraph& g);

// Connected and acyclic (|edges| == |vertices| - 1). Expects a graph that
// passes validate.
bool is_tree(const StratGraph& g);

// Every black vertex is incident to either one edge of label 3, or two edges
// of labels 1 and 2, or three edges of label 1. A graph without black
// vertices qualifies only as the degenerate single-white-vertex case.
bool is_trivalent(const StratGraph& g);

// Index-based adjacency view over a graph whose ids and edge endpoints are
// well-formed; throws std::invalid_argument otherwise.
class Adjacency {
 public:
  struct Arc {
    std::size_t nbr;   // neighbour vertex index
    std::size_t edge;  // index into StratGraph::edges
  };

  explicit Adjacency(const StratGraph& g);

  std::size_t size() const { return arcs_.size(); }
  const StratGraph& graph() const { return *g_; }
  const Vertex& vertex(std::size_t v) const { return g_->vertices[v]; }
  std::size_t index_of(VertexId id) const;  // throws on unknown id
  const std::vector<Arc>& arcs(std::size_t v) const { return arcs_[v]; }
  std::size_t degree(std::size_t v) const { return arcs_[v].size(); }
  int edge_label(const Arc& a) const { return g_->edges[a.edge].label; }
  bool connected() const;

 private:
  const StratGraph* g_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<std::pair<VertexId, std::size_t>> ids_;  // sorted by id
};

}  // namespace stratifold
