#include "stratifold/skeleton.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "stratifold/canonical.hpp"
#include "stratifold/tree_enum.hpp"

namespace stratifold {

std::vector<GeneratingTree> enum_generating_trees(int b) {
  if (b < 0) throw std::invalid_argument("enum_generating_trees requires b >= 0");
  if (b == 0) {
    // Degenerate marker; the census bypasses skeletons for b = 0.
    return {GeneratingTree{0, 0, {}, {}, "degenerate"}};
  }

  // White vertices need degree >= 3, which bounds the order: summing degrees
  // in a tree on k whites and b blacks gives 3k + b <= 2(k + b - 1).
  const int vmax = b == 1 ? 1 : 2 * b - 2;
  std::map<std::string, GeneratingTree> dedup;
  for (int v = b; v <= vmax; ++v) {
    for (const auto& edges : free_trees(v)) {
      std::vector<int> degree(static_cast<std::size_t>(v), 0);
      for (const auto& [x, y] : edges) {
        ++degree[static_cast<std::size_t>(x)];
        ++degree[static_cast<std::size_t>(y)];
      }
      // every b-subset of vertices as the black set
      std::vector<int> pick(static_cast<std::size_t>(b));
      std::iota(pick.begin(), pick.end(), 0);
      for (;;) {
        std::vector<VertexColor> colors(static_cast<std::size_t>(v), VertexColor::White);
        for (int p : pick) colors[static_cast<std::size_t>(p)] = VertexColor::Black;
        bool ok = true;
        for (int x = 0; x < v; ++x)
          if (colors[static_cast<std::size_t>(x)] == VertexColor::White &&
              degree[static_cast<std::size_t>(x)] < 3)
            ok = false;
        // whites stand for components of the complement of the open star,
        // which meet only through black vertices: no white-white edges
        for (const auto& [x, y] : edges)
          if (colors[static_cast<std::size_t>(x)] == VertexColor::White &&
              colors[static_cast<std::size_t>(y)] == VertexColor::White)
            ok = false;
        if (ok) {
          std::vector<std::string> symbols(static_cast<std::size_t>(v));
          for (int x = 0; x < v; ++x)
            symbols[static_cast<std::size_t>(x)] =
                colors[static_cast<std::size_t>(x)] == VertexColor::Black ? "B" : "W";
          std::string code = tree_code(static_cast<std::size_t>(v), edges, &symbols);
          if (!dedup.contains(code)) dedup.emplace(code, GeneratingTree{b, v, edges, colors, code});
        }
        // next combination
        int i = b - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == v - b + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < b; ++j)
          pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  std::vector<GeneratingTree> out;
  for (auto& [code, t] : dedup) out.push_back(std::move(t));
  std::sort(out.begin(), out.end(),
            [](const GeneratingTree& a, const GeneratingTree& b2) {
              return std::tie(a.order, a.code) < std::tie(b2.order, b2.code);
            });
  return out;
}

Skeleton skeleton_of(const GeneratingTree& t) {
  if (t.black_count == 0) throw std::invalid_argument("skeleton_of: degenerate b=0 marker");

  Skeleton sk;
  StratGraph& base = sk.base;
  for (int v = 0; v < t.order; ++v)
    base.vertices.push_back({static_cast<VertexId>(v), t.colors[static_cast<std::size_t>(v)], 0});
  VertexId next = static_cast<VertexId>(t.order);

  auto color = [&t](int v) { return t.colors[static_cast<std::size_t>(v)]; };
  for (const auto& [u, v] : t.edges) {
    if (color(u) == VertexColor::Black && color(v) == VertexColor::Black) {
      const VertexId w = next++;
      base.vertices.push_back({w, VertexColor::White, 0});
      base.edges.push_back({w, static_cast<VertexId>(u), 1});
      base.edges.push_back({w, static_cast<VertexId>(v), 1});
    } else if (color(u) != color(v)) {
      const VertexId w = static_cast<VertexId>(color(u) == VertexColor::White ? u : v);
      const VertexId b = static_cast<VertexId>(color(u) == VertexColor::Black ? u : v);
      base.edges.push_back({w, b, 1});
    } else {
      throw std::invalid_argument("skeleton_of: generating tree has a white-white edge");
    }
  }

  // pendant whites until every black vertex has degree 3
  std::map<VertexId, int> degree;
  for (const auto& e : base.edges) {
    ++degree[e.white];
    ++degree[e.black];
  }
  for (int v = 0; v < t.order; ++v) {
    if (color(v) != VertexColor::Black) continue;
    while (degree[static_cast<VertexId>(v)] < 3) {
      const VertexId w = next++;
      base.vertices.push_back({w, VertexColor::White, 0});
      base.edges.push_back({w, static_cast<VertexId>(v), 1});
      ++degree[static_cast<VertexId>(v)];
      ++degree[w];
    }
  }

  for (const auto& v : base.vertices)
    if (v.color == VertexColor::White) sk.slots.push_back(v.id);
  std::sort(sk.slots.begin(), sk.slots.end());

  // slot permutations induced by base automorphisms
  Adjacency adj(base);
  std::map<VertexId, std::size_t> slot_index;
  for (std::size_t i = 0; i < sk.slots.size(); ++i) slot_index[sk.slots[i]] = i;
  std::set<std::vector<std::size_t>> perms;
  for (const auto& aut : automorphisms(base)) {
    std::vector<std::size_t> perm(sk.slots.size());
    for (std::size_t i = 0; i < sk.slots.size(); ++i) {
      const std::size_t img = aut[adj.index_of(sk.slots[i])];
      perm[i] = slot_index.at(base.vertices[img].id);
    }
    perms.insert(std::move(perm));
  }
  sk.slot_symmetries.assign(perms.begin(), perms.end());
  return sk;
}

namespace {

// Set partitions of {0..k-1} with blocks ordered by least element.
std::vector<std::vector<std::vector<int>>> set_partitions(int k) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> current;
  std::function<void(int)> rec = [&](int item) {
    if (item == k) {
      out.push_back(current);
      return;
    }
    // index-based: the recursion grows and shrinks `current`
    for (std::size_t bi = 0, blocks = current.size(); bi < blocks; ++bi) {
      current[bi].push_back(item);
      rec(item + 1);
      current[bi].pop_back();
    }
    current.push_back({item});
    rec(item + 1);
    current.pop_back();
  };
  rec(0);
  return out;
}

// A split choice: per splittable slot, either no split or a set partition of
// its incident edge indices. Rendered canonically so the automorphism action
// on choices can be compared and minimized.
using Blocks = std::vector<std::vector<std::size_t>>;  // edge indices

std::string choice_string(const std::map<VertexId, Blocks>& choice) {
  std::string out;
  for (const auto& [slot, blocks] : choice) {
    out += std::to_string(slot) + ":";
    for (const auto& block : blocks) {
      out += "[";
      for (std::size_t e : block) out += std::to_string(e) + ",";
      out += "]";
    }
    out += ";";
  }
  return out;
}

std::map<VertexId, Blocks> apply_to_choice(const StratGraph& base, const Adjacency& adj,
                                           const std::vector<std::size_t>& aut,
                                           const std::map<std::pair<VertexId, VertexId>, std::size_t>& edge_index,
                                           const std::map<VertexId, Blocks>& choice) {
  std::map<VertexId, Blocks> image;
  for (const auto& [slot, blocks] : choice) {
    const VertexId slot_img = base.vertices[aut[adj.index_of(slot)]].id;
    Blocks img_blocks;
    for (const auto& block : blocks) {
      std::vector<std::size_t> img_block;
      for (std::size_t e : block) {
        const VertexId w = base.vertices[aut[adj.index_of(base.edges[e].white)]].id;
        const VertexId b = base.vertices[aut[adj.index_of(base.edges[e].black)]].id;
        img_block.push_back(edge_index.at({w, b}));
      }
      std::sort(img_block.begin(), img_block.end());
      img_blocks.push_back(std::move(img_block));
    }
    std::sort(img_blocks.begin(), img_blocks.end());
    image.emplace(slot_img, std::move(img_blocks));
  }
  return image;
}

}  // namespace

SplitSkeleton as_unsplit(const Skeleton& s) {
  SplitSkeleton out;
  out.base = s.base;
  for (VertexId slot : s.slots) out.groups.push_back({{slot}});
  out.group_symmetries = s.slot_symmetries;
  return out;
}

std::vector<SplitSkeleton> split_variants(const Skeleton& s) {
  Adjacency adj(s.base);
  const auto auts = automorphisms(s.base);
  std::map<std::pair<VertexId, VertexId>, std::size_t> edge_index;
  for (std::size_t e = 0; e < s.base.edges.size(); ++e)
    edge_index[{s.base.edges[e].white, s.base.edges[e].black}] = e;

  // splittable: non-terminal whites, with their candidate edge partitions
  struct SlotChoice {
    VertexId slot;
    std::vector<std::size_t> incident;
    std::vector<Blocks> partitions;  // >= 2 blocks, normalized
  };
  std::vector<SlotChoice> choices;
  for (VertexId slot : s.slots) {
    if (adj.degree(adj.index_of(slot)) < 2) continue;
    SlotChoice c{slot, {}, {}};
    for (std::size_t e = 0; e < s.base.edges.size(); ++e)
      if (s.base.edges[e].white == slot) c.incident.push_back(e);
    for (const auto& part : set_partitions(static_cast<int>(c.incident.size()))) {
      if (part.size() < 2) continue;
      Blocks blocks;
      for (const auto& block : part) {
        std::vector<std::size_t> edges;
        for (int ei : block) edges.push_back(c.incident[static_cast<std::size_t>(ei)]);
        std::sort(edges.begin(), edges.end());
        blocks.push_back(std::move(edges));
      }
      std::sort(blocks.begin(), blocks.end());
      c.partitions.push_back(std::move(blocks));
    }
    choices.push_back(std::move(c));
  }

  std::vector<SplitSkeleton> out;
  // Each pick holds -1 (no split) or a partition index per splittable slot.
  std::vector<int> pick(choices.size(), -1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i < choices.size()) {
      pick[i] = -1;
      rec(i + 1);
      for (int p = 0; p < static_cast<int>(choices[i].partitions.size()); ++p) {
        pick[i] = p;
        rec(i + 1);
      }
      pick[i] = -1;
      return;
    }

    std::map<VertexId, Blocks> choice;
    for (std::size_t ci = 0; ci < choices.size(); ++ci)
      if (pick[ci] >= 0)
        choice.emplace(choices[ci].slot,
                       choices[ci].partitions[static_cast<std::size_t>(pick[ci])]);
    if (choice.empty()) return;

    // one variant per automorphism orbit of split choices
    const std::string self = choice_string(choice);
    std::vector<std::vector<std::size_t>> stabilizer;
    for (const auto& aut : auts) {
      const auto image = apply_to_choice(s.base, adj, aut, edge_index, choice);
      const std::string img = choice_string(image);
      if (img < self) return;  // a smaller representative exists
      if (img == self) stabilizer.push_back(aut);
    }

    SplitSkeleton variant;
    variant.base = s.base;
    VertexId next = 0;
    for (const auto& v : s.base.vertices) next = std::max(next, v.id + 1);
    std::string descr = "split{";
    bool first_group = true;
    for (const auto& [slot, blocks] : choice) {
      SlotGroup group;
      if (!first_group) descr += ",";
      first_group = false;
      descr += std::to_string(slot) + ":";
      for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        const VertexId copy = next++;
        variant.base.vertices.push_back({copy, VertexColor::White, 0});
        for (std::size_t e : blocks[bi]) variant.base.edges[e].white = copy;
        group.copies.push_back(copy);
        if (bi) descr += "+";
        descr += std::to_string(blocks[bi].size());
      }
      variant.groups.push_back(std::move(group));
    }
    descr += "}";
    auto& vs = variant.base.vertices;
    vs.erase(std::remove_if(vs.begin(), vs.end(),
                            [&choice](const Vertex& v) { return choice.contains(v.id); }),
             vs.end());
    for (VertexId slot : s.slots)
      if (!choice.contains(slot)) variant.groups.push_back({{slot}});
    variant.descriptor = descr;

    // group permutations induced by the choice-stabilizing automorphisms
    std::map<VertexId, std::size_t> group_of_slot;  // original slot -> group index
    {
      std::size_t gi = 0;
      for (const auto& [slot, blocks] : choice) group_of_slot[slot] = gi++;
      for (VertexId slot : s.slots)
        if (!choice.contains(slot)) group_of_slot[slot] = gi++;
    }
    std::set<std::vector<std::size_t>> perms;
    for (const auto& aut : stabilizer) {
      std::vector<std::size_t> perm(variant.groups.size());
      for (const auto& [slot, gi] : group_of_slot) {
        const VertexId img = s.base.vertices[aut[adj.index_of(slot)]].id;
        perm[gi] = group_of_slot.at(img);
      }
      perms.insert(std::move(perm));
    }
    variant.group_symmetries.assign(perms.begin(), perms.end());

    out.push_back(std::move(variant));
  };
  rec(0);
  return out;
}

}  // namespace stratifold
