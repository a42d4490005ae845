#include "stratifold/tree_enum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "stratifold/canonical.hpp"

namespace stratifold {

std::vector<int> RootedTree::parents() const {
  std::vector<int> par(levels.size(), -1);
  std::vector<int> last_at_depth(levels.size() + 1, -1);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const int d = levels[i];
    if (d > 0) par[i] = last_at_depth[d - 1];
    last_at_depth[d] = static_cast<int>(i);
  }
  return par;
}

std::vector<std::pair<int, int>> RootedTree::edge_list() const {
  const auto par = parents();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(levels.size() - 1);
  for (std::size_t i = 1; i < levels.size(); ++i) edges.emplace_back(par[i], static_cast<int>(i));
  return edges;
}

namespace {

// Beyer-Hedetniemi successor: find the rightmost entry of depth > 1, then
// replicate the block ending at its depth-minus-one ancestor. Sequences are
// produced in decreasing lexicographic order, from the path to the star.
bool successor(std::vector<int>& levels) {
  const std::size_t n = levels.size();
  std::size_t p = n;
  for (std::size_t i = n; i-- > 0;) {
    if (levels[i] > 1) {
      p = i;
      break;
    }
  }
  if (p == n) return false;
  std::size_t q = p;
  while (levels[q] != levels[p] - 1) --q;
  for (std::size_t i = p; i < n; ++i) levels[i] = levels[i - (p - q)];
  return true;
}

template <typename Fn>
void for_each_rooted(int n, Fn&& fn) {
  if (n < 1) throw std::invalid_argument("rooted tree enumeration requires n >= 1");
  std::vector<int> levels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) levels[static_cast<std::size_t>(i)] = i;
  for (;;) {
    fn(levels);
    if (!successor(levels)) break;
  }
}

}  // namespace

std::vector<RootedTree> enum_rooted(int n) {
  std::vector<RootedTree> out;
  for_each_rooted(n, [&out](const std::vector<int>& levels) { out.push_back({levels}); });
  return out;
}

std::uint64_t count_rooted(int n) {
  std::uint64_t count = 0;
  for_each_rooted(n, [&count](const std::vector<int>&) { ++count; });
  return count;
}

std::vector<std::vector<std::pair<int, int>>> free_trees(int n) {
  std::map<std::string, std::vector<std::pair<int, int>>> dedup;
  for_each_rooted(n, [&dedup, n](const std::vector<int>& levels) {
    RootedTree t{levels};
    auto edges = t.edge_list();
    std::string code = tree_code(static_cast<std::size_t>(n), edges);
    dedup.emplace(std::move(code), std::move(edges));
  });
  std::vector<std::vector<std::pair<int, int>>> out;
  out.reserve(dedup.size());
  for (auto& [code, edges] : dedup) out.push_back(std::move(edges));
  return out;
}

namespace {

std::vector<std::string> decoration(int n, const std::vector<int>& marks, int root) {
  std::vector<std::string> symbols(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < marks.size(); ++i)
    symbols[static_cast<std::size_t>(marks[i])] += "m" + std::to_string(i);
  symbols[static_cast<std::size_t>(root)] += "r";
  return symbols;
}

}  // namespace

std::vector<AttachmentTree> enum_marked(int n, int mark_count) {
  if (n < 1) throw std::invalid_argument("enum_marked requires n >= 1");
  if (mark_count < 1) throw std::invalid_argument("enum_marked requires mark_count >= 1");
  if (n < mark_count)
    throw std::invalid_argument("enum_marked: marks must be pairwise distinct vertices");

  std::map<std::string, AttachmentTree> dedup;
  std::vector<int> marks(static_cast<std::size_t>(mark_count));
  for (const auto& edges : free_trees(n)) {
    // ordered tuples of distinct mark vertices
    std::vector<int> idx(static_cast<std::size_t>(mark_count), 0);
    std::vector<char> taken(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == mark_count) {
        for (int root = 0; root < n; ++root) {
          auto symbols = decoration(n, marks, root);
          std::string code = tree_code(static_cast<std::size_t>(n), edges, &symbols);
          if (!dedup.contains(code)) {
            dedup.emplace(code, AttachmentTree{n, edges, marks, root, code});
          }
        }
        return;
      }
      for (int v = 0; v < n; ++v) {
        if (taken[static_cast<std::size_t>(v)]) continue;
        taken[static_cast<std::size_t>(v)] = 1;
        marks[static_cast<std::size_t>(pos)] = v;
        rec(pos + 1);
        taken[static_cast<std::size_t>(v)] = 0;
      }
    };
    rec(0);
  }
  std::vector<AttachmentTree> out;
  out.reserve(dedup.size());
  for (auto& [code, t] : dedup) out.push_back(std::move(t));
  return out;
}

std::vector<BiRootedTree> enum_birooted(int n) {
  if (n < 1) throw std::invalid_argument("enum_birooted requires n >= 1");
  std::map<std::string, BiRootedTree> dedup;
  for_each_rooted(n, [&dedup, n](const std::vector<int>& levels) {
    RootedTree t{levels};
    const auto edges = t.edge_list();
    for (int mark = 0; mark < n; ++mark) {
      auto symbols = decoration(n, {mark}, 0);
      std::string code = tree_code(static_cast<std::size_t>(n), edges, &symbols);
      if (!dedup.contains(code)) {
        dedup.emplace(code, BiRootedTree{n, edges, mark, 0, code});
      }
    }
  });
  std::vector<BiRootedTree> out;
  out.reserve(dedup.size());
  for (auto& [code, t] : dedup) out.push_back(std::move(t));
  return out;
}

std::uint64_t count_birooted_off_root(int n) {
  return enum_birooted(n).size() - count_rooted(n);
}

std::vector<DRootedTree> enum_drooted(int n, int d) {
  if (d < 3) throw std::invalid_argument("enum_drooted requires d >= 3");
  if (n < d - 1) throw std::invalid_argument("enum_drooted requires n >= d-1 distinct mark vertices");
  std::vector<DRootedTree> out;
  for (auto& t : enum_marked(n, d - 1))
    out.push_back({t.order, std::move(t.edges), std::move(t.marks), t.root, std::move(t.code)});
  return out;
}

StratGraph rooted_to_collapsible(const RootedTree& t) {
  const int n = t.order();
  const auto par = t.parents();
  StratGraph g;
  for (int i = 0; i < n; ++i)
    g.vertices.push_back({static_cast<VertexId>(i), VertexColor::White, 0});
  for (int i = 1; i < n; ++i) {
    const VertexId black = static_cast<VertexId>(n + i - 1);
    g.vertices.push_back({black, VertexColor::Black, 0});
    g.edges.push_back({static_cast<VertexId>(par[static_cast<std::size_t>(i)]), black, 2});
    g.edges.push_back({static_cast<VertexId>(i), black, 1});
  }
  return g;
}

std::vector<SequenceRow> sequence_table(int max_n) {
  if (max_n < 1) throw std::invalid_argument("sequence_table requires max_n >= 1");
  std::vector<SequenceRow> rows;
  rows.reserve(static_cast<std::size_t>(max_n));
  for (int n = 1; n <= max_n; ++n) {
    const std::uint64_t r = count_rooted(n);
    const std::uint64_t m = enum_birooted(n).size();
    rows.push_back({n, r, m, m - r});
  }
  return rows;
}

AttachmentTree to_attachment(const BiRootedTree& t) {
  return {t.order, t.edges, {t.mark}, t.root, t.code};
}

AttachmentTree to_attachment(const DRootedTree& t) {
  return {t.order, t.edges, t.marks, t.root, t.code};
}

}  // namespace stratifold
