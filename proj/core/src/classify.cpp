#include "stratifold/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "stratifold/canonical.hpp"

namespace stratifold {

namespace {

bool labels_of(const Adjacency& adj, std::size_t v, std::vector<int>& out) {
  out.clear();
  for (const auto& a : adj.arcs(v)) out.push_back(adj.edge_label(a));
  std::sort(out.begin(), out.end());
  return true;
}

}  // namespace

CollapsibleVerdict is_21_collapsible(const StratGraph& g) {
  if (!validate(g).accepted) return {};
  if (!is_tree(g)) return {};
  Adjacency adj(g);
  const std::size_t n = adj.size();

  if (n == 1) {
    const Vertex& v = adj.vertex(0);
    if (v.color == VertexColor::White && v.genus == 0) return {true, v.id};
    return {};
  }

  std::vector<int> labels;
  for (std::size_t v = 0; v < n; ++v) {
    const Vertex& vx = adj.vertex(v);
    if (vx.color == VertexColor::White) {
      if (vx.genus != 0) return {};
    } else {
      labels_of(adj, v, labels);
      if (labels != std::vector<int>{1, 2}) return {};
    }
  }

  // Unique root candidate: the white vertex without a label-1 edge.
  std::size_t root = SIZE_MAX;
  for (std::size_t v = 0; v < n; ++v) {
    if (adj.vertex(v).color != VertexColor::White) continue;
    bool all2 = true;
    for (const auto& a : adj.arcs(v))
      if (adj.edge_label(a) != 2) all2 = false;
    if (all2) {
      if (root != SIZE_MAX) return {};
      root = v;
    }
  }
  if (root == SIZE_MAX) return {};

  // Walk away from the root: every black is entered through its label-2 edge
  // and left through its label-1 edge.
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  std::vector<std::size_t> frontier{root};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t w : frontier) {
      for (const auto& a : adj.arcs(w)) {
        if (seen[a.nbr]) continue;
        if (adj.edge_label(a) != 2) return {};
        seen[a.nbr] = 1;
        for (const auto& b : adj.arcs(a.nbr)) {
          if (seen[b.nbr]) continue;
          if (adj.edge_label(b) != 1) return {};
          seen[b.nbr] = 1;
          next.push_back(b.nbr);
        }
      }
    }
    frontier = std::move(next);
  }
  return {true, adj.vertex(root).id};
}

ClosedStar closed_star_b(const StratGraph& g) {
  if (!is_tree(g)) throw std::invalid_argument("closed_star_b requires a tree");
  Adjacency adj(g);
  const std::size_t n = adj.size();

  std::vector<char> in_b(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (adj.vertex(v).color == VertexColor::Black && adj.degree(v) == 3) in_b[v] = 1;

  ClosedStar out;
  std::set<std::size_t> star_vertices;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in_b[v]) continue;
    star_vertices.insert(v);
    for (const auto& a : adj.arcs(v)) {
      star_vertices.insert(a.nbr);
      out.star.edges.push_back(g.edges[a.edge]);
    }
  }
  for (std::size_t v : star_vertices) {
    out.star.vertices.push_back(adj.vertex(v));
    if (adj.vertex(v).color == VertexColor::White) out.boundary_whites.push_back(adj.vertex(v).id);
  }
  std::sort(out.boundary_whites.begin(), out.boundary_whites.end());

  // Components of g minus the open star: drop the degree-3 blacks and their
  // incident edges, keep everything else.
  std::vector<char> assigned(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (in_b[s] || assigned[s]) continue;
    std::vector<std::size_t> members;
    std::vector<std::size_t> stack{s};
    assigned[s] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (const auto& a : adj.arcs(v)) {
        if (in_b[a.nbr] || assigned[a.nbr]) continue;
        assigned[a.nbr] = 1;
        stack.push_back(a.nbr);
      }
    }
    std::sort(members.begin(), members.end());
    StratGraph comp;
    std::vector<char> in_comp(n, 0);
    for (std::size_t v : members) {
      comp.vertices.push_back(adj.vertex(v));
      in_comp[v] = 1;
    }
    for (std::size_t v : members)
      for (const auto& a : adj.arcs(v))
        if (a.nbr > v && in_comp[a.nbr]) comp.edges.push_back(g.edges[a.edge]);
    out.components.push_back(std::move(comp));
  }
  return out;
}

namespace {

// Roots of the collapsible components, indexed by every member vertex id.
// Throws if some component is not collapsible.
std::map<VertexId, VertexId> component_roots(const ClosedStar& cs) {
  std::map<VertexId, VertexId> root_of;
  for (const auto& comp : cs.components) {
    const CollapsibleVerdict cv = is_21_collapsible(comp);
    if (!cv.is_collapsible) {
      throw std::runtime_error("component not collapsible: contains vertex " +
                               std::to_string(comp.vertices.front().id));
    }
    for (const auto& v : comp.vertices) root_of[v.id] = *cv.root;
  }
  return root_of;
}

StratGraph build_reduced(const StratGraph& g, const ClosedStar& cs,
                         const std::map<VertexId, VertexId>& root_of) {
  StratGraph r = cs.star;
  VertexId next = 0;
  for (const auto& v : g.vertices) next = std::max(next, v.id + 1);
  for (VertexId w : cs.boundary_whites) {
    if (root_of.at(w) == w) continue;
    const VertexId arm_black = next++;
    const VertexId arm_white = next++;
    r.vertices.push_back({arm_black, VertexColor::Black, 0});
    r.vertices.push_back({arm_white, VertexColor::White, 0});
    r.edges.push_back({w, arm_black, 1});
    r.edges.push_back({arm_white, arm_black, 2});
  }
  return r;
}

}  // namespace

StratGraph reduced_graph(const StratGraph& g) {
  const ClosedStar cs = closed_star_b(g);
  return build_reduced(g, cs, component_roots(cs));
}

bool is_horned_tree(const StratGraph& g) {
  if (!validate(g).accepted) return false;
  if (g.vertices.empty() || !is_tree(g)) return false;
  Adjacency adj(g);
  const std::size_t n = adj.size();

  enum class Role { Unset, Inner, ArmEnd, Tip, Mid, Bisect };
  std::vector<Role> role(n, Role::Unset);
  std::vector<int> labels;

  for (std::size_t v = 0; v < n; ++v) {
    const Vertex& vx = adj.vertex(v);
    labels_of(adj, v, labels);
    if (vx.color == VertexColor::Black) {
      if (labels == std::vector<int>{1, 1, 1})
        role[v] = Role::Inner;
      else if (labels == std::vector<int>{1, 2})
        role[v] = Role::ArmEnd;
      else
        return false;
    } else {
      if (vx.genus != 0) return false;
      if (labels == std::vector<int>{2})
        role[v] = Role::Tip;
      else if (labels == std::vector<int>{1, 1})
        role[v] = Role::Mid;  // refined below
      else
        return false;
    }
  }

  std::size_t inner_count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    switch (role[v]) {
      case Role::Inner:
        ++inner_count;
        for (const auto& a : adj.arcs(v)) {
          const Role r = role[a.nbr];
          if (r != Role::Mid && r != Role::Bisect) return false;
        }
        break;
      case Role::ArmEnd: {
        // label-2 edge to a tip, label-1 edge to a mid white
        for (const auto& a : adj.arcs(v)) {
          if (adj.edge_label(a) == 2 && role[a.nbr] != Role::Tip) return false;
          if (adj.edge_label(a) == 1 && role[a.nbr] != Role::Mid) return false;
        }
        break;
      }
      case Role::Tip:
        if (role[adj.arcs(v)[0].nbr] != Role::ArmEnd) return false;
        break;
      case Role::Mid: {
        // arm middle: one arm-end neighbour, one inner neighbour;
        // bisection white: two inner neighbours
        const Role a = role[adj.arcs(v)[0].nbr];
        const Role b = role[adj.arcs(v)[1].nbr];
        const bool mid = (a == Role::ArmEnd && b == Role::Inner) ||
                         (a == Role::Inner && b == Role::ArmEnd);
        const bool bisect = a == Role::Inner && b == Role::Inner;
        if (!mid && !bisect) return false;
        if (bisect) role[v] = Role::Bisect;
        break;
      }
      default:
        return false;
    }
  }
  return inner_count >= 1;
}

std::optional<StratGraph> find_horned_subtree(const StratGraph& g) {
  if (!validate(g).accepted) return std::nullopt;
  if (g.vertices.empty()) return std::nullopt;
  Adjacency adj(g);
  const std::size_t n = adj.size();

  // The reduced graph is a forest whenever the closed star is disconnected;
  // a horned subtree lives inside one of its components. Reject cycles.
  {
    std::vector<std::size_t> uf(n);
    for (std::size_t i = 0; i < n; ++i) uf[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    for (const auto& e : g.edges) {
      const std::size_t a = find(adj.index_of(e.white));
      const std::size_t b = find(adj.index_of(e.black));
      if (a == b) return std::nullopt;
      uf[a] = b;
    }
  }

  // Candidate inner vertices: degree-3 blacks with three label-1 edges.
  std::vector<std::size_t> inner;
  std::vector<int> labels;
  for (std::size_t v = 0; v < n; ++v) {
    if (adj.vertex(v).color != VertexColor::Black) continue;
    labels_of(adj, v, labels);
    if (labels == std::vector<int>{1, 1, 1}) inner.push_back(v);
  }
  if (inner.empty()) return std::nullopt;

  // Arm continuation from a white w: a degree-2 black with labels {1,2}
  // reached through its label-1 edge, whose label-2 edge ends in a white tip.
  struct Arm {
    std::size_t to_black_edge, black, to_tip_edge, tip;
  };
  std::vector<std::optional<Arm>> arm(n);
  for (std::size_t w = 0; w < n; ++w) {
    if (adj.vertex(w).color != VertexColor::White || adj.vertex(w).genus != 0) continue;
    for (const auto& a : adj.arcs(w)) {
      if (adj.edge_label(a) != 1) continue;
      const std::size_t b = a.nbr;
      if (adj.degree(b) != 2) continue;
      labels_of(adj, b, labels);
      if (labels != std::vector<int>{1, 2}) continue;
      for (const auto& t : adj.arcs(b)) {
        if (adj.edge_label(t) != 2 || t.nbr == w) continue;
        if (adj.vertex(t.nbr).color != VertexColor::White || adj.vertex(t.nbr).genus != 0) continue;
        arm[w] = Arm{a.edge, b, t.edge, t.nbr};
        break;
      }
      if (arm[w]) break;
    }
  }

  const std::size_t k = inner.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> sel;
    std::vector<char> in_s(n, 0);
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i)) {
        sel.push_back(inner[i]);
        in_s[inner[i]] = 1;
      }

    // Count, per white, how many selected inner blacks touch it; a white
    // touched once needs an arm whose tip stays outside the selection's
    // neighbourhood, a white touched twice becomes a bisection vertex.
    std::map<std::size_t, int> touched;
    for (std::size_t b : sel)
      for (const auto& a : adj.arcs(b)) ++touched[a.nbr];
    bool ok = true;
    std::set<std::size_t> tips;
    for (const auto& [w, c] : touched) {
      if (c > 2) {
        ok = false;
        break;
      }
      if (c == 1) {
        if (!arm[w] || touched.contains(arm[w]->tip) || !tips.insert(arm[w]->tip).second) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;

    // The selection must be connected through its bisection whites.
    std::vector<std::size_t> uf(n);
    for (std::size_t i = 0; i < n; ++i) uf[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    for (const auto& [w, c] : touched) {
      if (c != 2 || in_s[w]) continue;
      std::size_t first = SIZE_MAX;
      for (const auto& a : adj.arcs(w)) {
        if (!in_s[a.nbr]) continue;
        if (first == SIZE_MAX)
          first = a.nbr;
        else
          uf[find(first)] = find(a.nbr);
      }
    }
    std::size_t root = find(sel[0]);
    bool connected = true;
    for (std::size_t b : sel)
      if (find(b) != root) connected = false;
    if (!connected) continue;

    // Assemble the witness subtree.
    StratGraph h;
    std::set<std::size_t> verts;
    std::set<std::size_t> edges_used;
    for (std::size_t b : sel) {
      verts.insert(b);
      for (const auto& a : adj.arcs(b)) {
        verts.insert(a.nbr);
        edges_used.insert(a.edge);
      }
    }
    for (const auto& [w, c] : touched) {
      if (c != 1 || in_s[w]) continue;
      const Arm& ar = *arm[w];
      verts.insert(ar.black);
      verts.insert(ar.tip);
      edges_used.insert(ar.to_black_edge);
      edges_used.insert(ar.to_tip_edge);
    }
    for (std::size_t v : verts) h.vertices.push_back(adj.vertex(v));
    for (std::size_t e : edges_used) h.edges.push_back(g.edges[e]);
    return h;
  }
  return std::nullopt;
}

bool contains_horned_tree(const StratGraph& g) { return find_horned_subtree(g).has_value(); }

Verdict is_simply_connected(const StratGraph& g) {
  Verdict structural = validate(g);
  if (!structural.accepted) return structural;

  Verdict out;
  const bool tree = is_tree(g);
  if (!tree) out.reject("not-a-tree", "graph is not connected and acyclic");

  for (const auto& v : g.vertices) {
    if (v.color == VertexColor::White && v.genus != 0) {
      out.reject("nonzero-genus",
                 "white vertex " + std::to_string(v.id) + " has genus " + std::to_string(v.genus));
      break;
    }
  }

  {
    Adjacency adj(g);
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (adj.degree(v) <= 1 && adj.vertex(v).color == VertexColor::Black) {
        out.reject("black-terminal",
                   "terminal vertex " + std::to_string(adj.vertex(v).id) + " is black");
        break;
      }
    }
  }

  if (!is_trivalent(g)) {
    out.reject("not-trivalent", "some black vertex matches none of the patterns {3}, {1,2}, {1,1,1}");
  }

  if (tree) {
    const ClosedStar cs = closed_star_b(g);
    bool collapsible = true;
    for (const auto& comp : cs.components) {
      if (!is_21_collapsible(comp).is_collapsible) {
        out.reject("component-not-collapsible",
                   "component containing vertex " + std::to_string(comp.vertices.front().id) +
                       " is not (2,1)-collapsible");
        collapsible = false;
        break;
      }
    }
    if (collapsible) {
      const StratGraph r = build_reduced(g, cs, component_roots(cs));
      if (!r.vertices.empty() && contains_horned_tree(r)) {
        out.reject("horned-tree", "reduced graph contains a horned subtree");
      }
    }
  }
  return out;
}

namespace {

// Code of the part of the tree hanging off `v` when arriving through
// `banned_edge`; used to give every edge and vertex a relabeling-stable key.
std::string side_code(const Adjacency& adj, std::size_t v, std::size_t banned_edge) {
  std::vector<std::string> entries;
  for (const auto& a : adj.arcs(v)) {
    if (a.edge == banned_edge) continue;
    entries.push_back(std::to_string(adj.edge_label(a)) + "~" + side_code(adj, a.nbr, a.edge));
  }
  std::sort(entries.begin(), entries.end());
  std::string out = adj.vertex(v).color == VertexColor::White
                        ? "w" + std::to_string(adj.vertex(v).genus)
                        : "b";
  out += '(';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += entries[i];
  }
  out += ')';
  return out;
}

}  // namespace

Pi1Presentation pi1_presentation(const StratGraph& g) {
  if (!validate(g).accepted) throw std::invalid_argument("pi1_presentation: invalid graph");
  if (!is_tree(g)) throw std::invalid_argument("pi1_presentation: requires a tree");
  for (const auto& v : g.vertices)
    if (v.color == VertexColor::White && v.genus != 0)
      throw std::invalid_argument("pi1_presentation: white vertex of nonzero genus");

  Adjacency adj(g);
  const std::size_t n = adj.size();

  // Deterministic generator names: blacks and edges ordered by subtree codes.
  std::vector<std::size_t> blacks;
  for (std::size_t v = 0; v < n; ++v)
    if (adj.vertex(v).color == VertexColor::Black) blacks.push_back(v);
  std::sort(blacks.begin(), blacks.end(), [&](std::size_t a, std::size_t b) {
    const std::string ca = side_code(adj, a, SIZE_MAX), cb = side_code(adj, b, SIZE_MAX);
    return std::tie(ca, a) < std::tie(cb, b);
  });
  std::vector<std::string> black_name(n);
  for (std::size_t i = 0; i < blacks.size(); ++i)
    black_name[blacks[i]] = "b" + std::to_string(i + 1);

  std::vector<std::size_t> edge_order(g.edges.size());
  std::vector<std::string> edge_key(g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const std::size_t b = adj.index_of(g.edges[e].black);
    edge_key[e] = side_code(adj, b, e) + "/" + std::to_string(g.edges[e].label);
    edge_order[e] = e;
  }
  std::sort(edge_order.begin(), edge_order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(edge_key[a], a) < std::tie(edge_key[b], b);
  });
  std::vector<std::string> edge_name(g.edges.size());
  for (std::size_t i = 0; i < edge_order.size(); ++i)
    edge_name[edge_order[i]] = "c" + std::to_string(i + 1);

  Pi1Presentation p;
  for (std::size_t b : blacks) p.generators.push_back(black_name[b]);
  for (std::size_t e : edge_order) p.generators.push_back(edge_name[e]);

  // One relation c_1 ... c_p = 1 per white vertex, incident edges in key order.
  std::vector<std::size_t> whites;
  for (std::size_t v = 0; v < n; ++v)
    if (adj.vertex(v).color == VertexColor::White) whites.push_back(v);
  std::sort(whites.begin(), whites.end(), [&](std::size_t a, std::size_t b) {
    const std::string ca = side_code(adj, a, SIZE_MAX), cb = side_code(adj, b, SIZE_MAX);
    return std::tie(ca, a) < std::tie(cb, b);
  });
  for (std::size_t w : whites) {
    std::vector<std::size_t> incident;
    for (const auto& a : adj.arcs(w)) incident.push_back(a.edge);
    std::sort(incident.begin(), incident.end(), [&](std::size_t a, std::size_t b) {
      return std::tie(edge_key[a], a) < std::tie(edge_key[b], b);
    });
    if (incident.empty()) continue;  // empty product, trivially 1
    std::string word;
    for (std::size_t e : incident) {
      if (!word.empty()) word += ' ';
      word += edge_name[e];
    }
    p.relations.push_back(std::move(word));
  }

  // One relation b^m = c per edge.
  for (std::size_t e : edge_order) {
    const Edge& ed = g.edges[e];
    const std::string bname = black_name[adj.index_of(ed.black)];
    std::string rel = bname;
    if (ed.label != 1) rel += "^" + std::to_string(ed.label);
    rel += " " + edge_name[e] + "^-1";
    p.relations.push_back(std::move(rel));
  }
  return p;
}

}  // namespace stratifold
