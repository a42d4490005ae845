#include "stratifold/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace stratifold {

Verdict validate(const StratGraph& g) {
  Verdict v;

  std::vector<VertexId> ids;
  ids.reserve(g.vertices.size());
  for (const auto& vx : g.vertices) ids.push_back(vx.id);
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 1; i < ids.size(); ++i) {
    if (ids[i] == ids[i - 1]) {
      v.reject("duplicate-id", "vertex id " + std::to_string(ids[i]) + " occurs more than once");
      break;
    }
  }

  auto find = [&g](VertexId id) -> const Vertex* {
    for (const auto& vx : g.vertices)
      if (vx.id == id) return &vx;
    return nullptr;
  };

  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    const Vertex* w = find(e.white);
    const Vertex* b = find(e.black);
    if (w == nullptr || b == nullptr) {
      v.reject("unknown-endpoint",
               "edge " + std::to_string(i) + " references a vertex id that does not exist");
      continue;
    }
    if (w->color != VertexColor::White || b->color != VertexColor::Black) {
      v.reject("non-bipartite-edge",
               "edge " + std::to_string(i) + " does not join a white vertex to a black vertex");
    }
    if (e.label < 1) {
      v.reject("nonpositive-label",
               "edge " + std::to_string(i) + " has label " + std::to_string(e.label));
    }
  }
  return v;
}

bool is_tree(const StratGraph& g) {
  if (g.vertices.empty()) return false;
  if (g.edges.size() + 1 != g.vertices.size()) return false;
  return Adjacency(g).connected();
}

bool is_trivalent(const StratGraph& g) {
  Adjacency adj(g);
  bool has_black = false;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (adj.vertex(v).color != VertexColor::Black) continue;
    has_black = true;
    std::vector<int> labels;
    for (const auto& a : adj.arcs(v)) labels.push_back(adj.edge_label(a));
    std::sort(labels.begin(), labels.end());
    const bool ok = labels == std::vector<int>{3} || labels == std::vector<int>{1, 2} ||
                    labels == std::vector<int>{1, 1, 1};
    if (!ok) return false;
  }
  if (!has_black) {
    return g.vertices.size() == 1 && g.vertices[0].color == VertexColor::White;
  }
  return true;
}

Adjacency::Adjacency(const StratGraph& g) : g_(&g) {
  ids_.reserve(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) ids_.emplace_back(g.vertices[i].id, i);
  std::sort(ids_.begin(), ids_.end());
  for (std::size_t i = 1; i < ids_.size(); ++i)
    if (ids_[i].first == ids_[i - 1].first)
      throw std::invalid_argument("duplicate vertex id " + std::to_string(ids_[i].first));

  arcs_.resize(g.vertices.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const std::size_t w = index_of(g.edges[e].white);
    const std::size_t b = index_of(g.edges[e].black);
    arcs_[w].push_back({b, e});
    arcs_[b].push_back({w, e});
  }
}

std::size_t Adjacency::index_of(VertexId id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), std::make_pair(id, std::size_t{0}));
  if (it == ids_.end() || it->first != id)
    throw std::invalid_argument("unknown vertex id " + std::to_string(id));
  return it->second;
}

bool Adjacency::connected() const {
  if (arcs_.empty()) return false;
  std::vector<char> seen(arcs_.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (const auto& a : arcs_[v]) {
      if (!seen[a.nbr]) {
        seen[a.nbr] = 1;
        ++count;
        stack.push_back(a.nbr);
      }
    }
  }
  return count == arcs_.size();
}

}  // namespace stratifold
