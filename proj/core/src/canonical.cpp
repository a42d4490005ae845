#include "stratifold/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace stratifold {

namespace {

// Shared tree-encoding engine: vertices 0..n-1, arcs (nbr, edge index),
// per-edge tag and per-vertex tag strings.
struct TreeView {
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj;
  std::vector<std::string> edge_tag;
  std::vector<std::string> vertex_tag;
};

std::string rooted_code(const TreeView& t, std::size_t v, std::size_t parent_edge) {
  std::vector<std::string> entries;
  for (const auto& [nbr, e] : t.adj[v]) {
    if (e == parent_edge) continue;
    entries.push_back(t.edge_tag[e] + "~" + rooted_code(t, nbr, e));
  }
  std::sort(entries.begin(), entries.end());
  std::string out = t.vertex_tag[v];
  out += '(';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += entries[i];
  }
  out += ')';
  return out;
}

// The 1 or 2 vertices minimizing the largest component of the forest left by
// their removal; an isomorphism invariant of the underlying tree.
std::vector<std::size_t> centroids(const TreeView& t) {
  const std::size_t n = t.n;
  if (n == 1) return {0};
  std::vector<std::size_t> size(n, 1), best;
  std::vector<std::size_t> order;
  std::vector<std::size_t> parent(n, SIZE_MAX);
  order.reserve(n);
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t v = order[i];
    for (const auto& [nbr, e] : t.adj[v])
      if (nbr != parent[v]) {
        parent[nbr] = v;
        order.push_back(nbr);
      }
  }
  for (std::size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];
  std::size_t best_max = n;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t mx = n - size[v];
    for (const auto& [nbr, e] : t.adj[v])
      if (parent[nbr] == v) mx = std::max(mx, size[nbr]);
    if (mx < best_max) {
      best_max = mx;
      best = {v};
    } else if (mx == best_max) {
      best.push_back(v);
    }
  }
  return best;
}

std::string canonical_tree(const TreeView& t) {
  std::string best;
  for (std::size_t c : centroids(t)) {
    std::string code = rooted_code(t, c, SIZE_MAX);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::string vertex_symbol(const Vertex& v) {
  if (v.color == VertexColor::White) return "w" + std::to_string(v.genus);
  return "b";
}

TreeView view_of(const StratGraph& g, const Adjacency& adj) {
  TreeView t;
  t.n = adj.size();
  t.adj.resize(t.n);
  for (std::size_t v = 0; v < t.n; ++v)
    for (const auto& a : adj.arcs(v)) t.adj[v].emplace_back(a.nbr, a.edge);
  t.edge_tag.reserve(g.edges.size());
  for (const auto& e : g.edges) t.edge_tag.push_back(std::to_string(e.label));
  t.vertex_tag.reserve(t.n);
  for (std::size_t v = 0; v < t.n; ++v) t.vertex_tag.push_back(vertex_symbol(adj.vertex(v)));
  return t;
}

// Color-refinement invariant for connected non-trees; not complete, but a
// pure function of the isomorphism class.
std::string refinement_code(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<std::string> color(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::string> labels;
    for (const auto& a : adj.arcs(v)) labels.push_back(std::to_string(adj.edge_label(a)));
    std::sort(labels.begin(), labels.end());
    color[v] = vertex_symbol(adj.vertex(v)) + "/d" + std::to_string(adj.degree(v)) + "/";
    for (const auto& l : labels) color[v] += l + ".";
  }
  auto compress = [&color]() {
    std::vector<std::string> sorted(color);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto& c : color) {
      const auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
      c = "#" + std::to_string(it - sorted.begin());
    }
  };
  compress();
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::string> next(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::string> nbrs;
      for (const auto& a : adj.arcs(v))
        nbrs.push_back(std::to_string(adj.edge_label(a)) + ":" + color[a.nbr]);
      std::sort(nbrs.begin(), nbrs.end());
      next[v] = color[v] + "{";
      for (const auto& s : nbrs) next[v] += s + ",";
      next[v] += "}";
    }
    color = std::move(next);
    compress();
  }
  std::sort(color.begin(), color.end());
  std::string out;
  for (const auto& c : color) out += c + ";";
  return out;
}

}  // namespace

CanonicalCode canonical_code(const StratGraph& g) {
  if (g.vertices.empty()) throw std::invalid_argument("canonical_code: empty graph");
  Adjacency adj(g);
  if (!adj.connected()) throw std::invalid_argument("canonical_code: disconnected graph");
  if (g.edges.size() + 1 == g.vertices.size()) {
    return {"T!" + canonical_tree(view_of(g, adj))};
  }
  return {"G!" + refinement_code(adj)};
}

bool are_isomorphic(const StratGraph& a, const StratGraph& b) {
  return canonical_code(a) == canonical_code(b);
}

namespace {

TreeView plain_view(std::size_t n, const std::vector<std::pair<int, int>>& edges,
                    const std::vector<std::string>* symbols) {
  if (n == 0) throw std::invalid_argument("tree_code: empty tree");
  if (edges.size() + 1 != n) throw std::invalid_argument("tree_code: not a tree");
  TreeView t;
  t.n = n;
  t.adj.resize(n);
  t.edge_tag.assign(edges.size(), "");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    t.adj[static_cast<std::size_t>(u)].emplace_back(v, e);
    t.adj[static_cast<std::size_t>(v)].emplace_back(u, e);
  }
  if (symbols != nullptr) {
    if (symbols->size() != n) throw std::invalid_argument("tree_code: symbol count mismatch");
    t.vertex_tag = *symbols;
  } else {
    t.vertex_tag.assign(n, "");
  }
  return t;
}

}  // namespace

std::string tree_code(std::size_t n, const std::vector<std::pair<int, int>>& edges,
                      const std::vector<std::string>* symbols) {
  return canonical_tree(plain_view(n, edges, symbols));
}

std::string rooted_tree_code(std::size_t n, const std::vector<std::pair<int, int>>& edges,
                             std::size_t root, const std::vector<std::string>* symbols) {
  return rooted_code(plain_view(n, edges, symbols), root, SIZE_MAX);
}

std::vector<std::vector<std::size_t>> automorphisms(const StratGraph& g) {
  if (!is_tree(g)) throw std::invalid_argument("automorphisms: input must be a tree");
  Adjacency adj(g);
  const std::size_t n = adj.size();

  // Per-vertex invariant used to prune candidate images.
  std::vector<std::string> inv(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<int> labels;
    for (const auto& a : adj.arcs(v)) labels.push_back(adj.edge_label(a));
    std::sort(labels.begin(), labels.end());
    inv[v] = vertex_symbol(adj.vertex(v)) + "/" + std::to_string(adj.degree(v)) + "/";
    for (int l : labels) inv[v] += std::to_string(l) + ".";
  }

  // BFS order; every non-root vertex is placed through its parent edge.
  std::vector<std::size_t> order{0};
  std::vector<std::size_t> parent(n, SIZE_MAX);
  std::vector<int> parent_label(n, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t v = order[i];
    for (const auto& a : adj.arcs(v))
      if (a.nbr != parent[v] && a.nbr != 0) {
        if (parent[a.nbr] != SIZE_MAX) continue;
        parent[a.nbr] = v;
        parent_label[a.nbr] = adj.edge_label(a);
        order.push_back(a.nbr);
      }
  }

  std::vector<std::vector<std::size_t>> result;
  std::vector<std::size_t> map(n, SIZE_MAX);
  std::vector<char> used(n, 0);

  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == n) {
      result.push_back(map);
      return;
    }
    const std::size_t v = order[i];
    if (i == 0) {
      for (std::size_t c = 0; c < n; ++c) {
        if (inv[c] != inv[v]) continue;
        map[v] = c;
        used[c] = 1;
        place(i + 1);
        used[c] = 0;
        map[v] = SIZE_MAX;
      }
      return;
    }
    const std::size_t pimg = map[parent[v]];
    for (const auto& a : adj.arcs(pimg)) {
      const std::size_t c = a.nbr;
      if (used[c] || inv[c] != inv[v]) continue;
      if (adj.edge_label(a) != parent_label[v]) continue;
      map[v] = c;
      used[c] = 1;
      place(i + 1);
      used[c] = 0;
      map[v] = SIZE_MAX;
    }
  };
  place(0);

  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

}  // namespace stratifold
