#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "stratifold/classify.hpp"

namespace oracles {

std::vector<std::vector<std::pair<int, int>>> labeled_trees(int n) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (n == 1) {
    out.push_back({});
    return out;
  }
  if (n == 2) {
    out.push_back({{0, 1}});
    return out;
  }
  // decode every Prufer sequence of length n-2
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  for (;;) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++degree[static_cast<std::size_t>(x)];
    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
      if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    std::vector<int> work = seq;
    for (int x : work) {
      const int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      edges.emplace_back(leaf, x);
      if (--degree[static_cast<std::size_t>(x)] == 1) leaves.insert(x);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    out.push_back(std::move(edges));

    int i = n - 3;
    while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) {
      seq[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++seq[static_cast<std::size_t>(i)];
  }
  return out;
}

namespace {

// Local decorated rooted code, deliberately separate from the library's.
std::string deco_code(const std::vector<std::vector<int>>& adj, const std::vector<std::string>& deco,
                      int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[static_cast<std::size_t>(v)])
    if (w != parent) kids.push_back(deco_code(adj, deco, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "[" + deco[static_cast<std::size_t>(v)] + "](";
  for (const auto& k : kids) out += k + ",";
  return out + ")";
}

}  // namespace

std::uint64_t count_marked_classes(int n, int mark_count) {
  std::set<std::string> classes;
  std::vector<int> marks(static_cast<std::size_t>(mark_count));
  for (const auto& edges : labeled_trees(n)) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::function<void(int)> rec = [&](int pos) {
      if (pos == mark_count) {
        for (int root = 0; root < n; ++root) {
          std::vector<std::string> deco(static_cast<std::size_t>(n));
          for (int i = 0; i < mark_count; ++i)
            deco[static_cast<std::size_t>(marks[static_cast<std::size_t>(i)])] +=
                "m" + std::to_string(i);
          deco[static_cast<std::size_t>(root)] += "r";
          // rooting at the decorated root makes the code a complete invariant
          classes.insert(deco_code(adj, deco, root, -1));
        }
        return;
      }
      for (int v = 0; v < n; ++v) {
        bool used = false;
        for (int j = 0; j < pos; ++j)
          if (marks[static_cast<std::size_t>(j)] == v) used = true;
        if (used) continue;
        marks[static_cast<std::size_t>(pos)] = v;
        rec(pos + 1);
      }
    };
    rec(0);
  }
  return classes.size();
}

bool contains_horned_exhaustive(const stratifold::StratGraph& g) {
  const std::size_t e = g.edges.size();
  if (e == 0 || e > 20) throw std::invalid_argument("exhaustive oracle needs 1..20 edges");
  std::map<stratifold::VertexId, stratifold::Vertex> by_id;
  for (const auto& v : g.vertices) by_id[v.id] = v;

  for (std::size_t mask = 1; mask < (std::size_t{1} << e); ++mask) {
    stratifold::StratGraph sub;
    std::set<stratifold::VertexId> used;
    for (std::size_t i = 0; i < e; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      sub.edges.push_back(g.edges[i]);
      used.insert(g.edges[i].white);
      used.insert(g.edges[i].black);
    }
    for (auto id : used) sub.vertices.push_back(by_id.at(id));
    if (stratifold::is_horned_tree(sub)) return true;
  }
  return false;
}

stratifold::StratGraph relabel(const stratifold::StratGraph& g, std::mt19937& rng) {
  std::vector<stratifold::VertexId> ids;
  for (const auto& v : g.vertices) ids.push_back(v.id);
  std::vector<stratifold::VertexId> images = ids;
  std::shuffle(images.begin(), images.end(), rng);
  // also push ids into a sparser range
  std::uniform_int_distribution<stratifold::VertexId> offset(0, 1000);
  const stratifold::VertexId shift = offset(rng);
  std::map<stratifold::VertexId, stratifold::VertexId> map;
  for (std::size_t i = 0; i < ids.size(); ++i)
    map[ids[i]] = static_cast<stratifold::VertexId>(images[i] * 3 + shift);

  stratifold::StratGraph out;
  for (const auto& v : g.vertices) out.vertices.push_back({map.at(v.id), v.color, v.genus});
  for (const auto& e : g.edges) out.edges.push_back({map.at(e.white), map.at(e.black), e.label});
  std::shuffle(out.vertices.begin(), out.vertices.end(), rng);
  std::shuffle(out.edges.begin(), out.edges.end(), rng);
  return out;
}

namespace {

// HLT-style coset enumeration with coincidence processing.
class CosetTable {
 public:
  CosetTable(int ngens, std::vector<std::vector<int>> relators, int cap)
      : ngens_(ngens), cap_(cap), relators_(std::move(relators)) {
    new_coset();  // coset 0: the trivial subgroup
  }

  int run() {
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!alive(c)) continue;
      for (const auto& rel : relators_) {
        scan_and_fill(static_cast<int>(c), rel);
        if (overflow_) return -1;
      }
      if (!alive(c)) continue;
      for (int x = 0; x < 2 * ngens_; ++x) {
        if (entry(static_cast<int>(c), x) == -1) {
          const int d = new_coset();
          if (overflow_) return -1;
          set_entry(static_cast<int>(c), x, d);
        }
      }
    }
    int live = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (alive(c)) ++live;
    return live;
  }

 private:
  int ngens_, cap_;
  bool overflow_ = false;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  std::deque<int> dead_queue_;

  bool alive(std::size_t c) const { return parent_[c] == static_cast<int>(c); }
  static int inv(int x) { return x ^ 1; }

  int find(int a) {
    while (parent_[static_cast<std::size_t>(a)] != a) {
      parent_[static_cast<std::size_t>(a)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(a)])];
      a = parent_[static_cast<std::size_t>(a)];
    }
    return a;
  }

  int new_coset() {
    if (static_cast<int>(table_.size()) >= cap_) {
      overflow_ = true;
      return 0;
    }
    table_.emplace_back(2 * ngens_, -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  int entry(int c, int x) const { return table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)]; }

  void set_entry(int a, int x, int b) {
    table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)] = b;
    table_[static_cast<std::size_t>(b)][static_cast<std::size_t>(inv(x))] = a;
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    dead_queue_.push_back(b);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!dead_queue_.empty()) {
      const int dead = dead_queue_.front();
      dead_queue_.pop_front();
      for (int x = 0; x < 2 * ngens_; ++x) {
        const int d = entry(dead, x);
        if (d == -1) continue;
        table_[static_cast<std::size_t>(d)][static_cast<std::size_t>(inv(x))] = -1;
        table_[static_cast<std::size_t>(dead)][static_cast<std::size_t>(x)] = -1;
        const int mu = find(dead);
        const int nu = find(d);
        if (entry(mu, x) != -1)
          merge(nu, entry(mu, x));
        else if (entry(nu, inv(x)) != -1)
          merge(mu, entry(nu, inv(x)));
        else
          set_entry(mu, x, nu);
      }
    }
  }

  void scan_and_fill(int c, const std::vector<int>& word) {
    c = find(c);
    if (word.empty()) return;
    for (;;) {
      int f = c;
      std::size_t i = 0;
      while (i < word.size() && entry(f, word[i]) != -1) f = entry(f, word[i]), ++i;
      if (i == word.size()) {
        if (f != c) coincidence(f, c);
        return;
      }
      int b = c;
      std::size_t j = word.size();
      while (j > i && entry(b, inv(word[j - 1])) != -1) b = entry(b, inv(word[j - 1])), --j;
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set_entry(f, word[i], b);
        return;
      }
      const int d = new_coset();
      if (overflow_) return;
      set_entry(f, word[i], d);
      // loop: keep scanning the same relator
    }
  }
};

}  // namespace

int coset_enumerate(int generator_count, const std::vector<std::vector<int>>& relators,
                    int max_cosets) {
  CosetTable table(generator_count, relators, max_cosets);
  return table.run();
}

int presentation_order(const std::vector<std::string>& generators,
                       const std::vector<std::string>& relations, int max_cosets) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < generators.size(); ++i)
    index[generators[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> relators;
  for (const auto& rel : relations) {
    std::vector<int> word;
    std::size_t pos = 0;
    while (pos < rel.size()) {
      std::size_t end = rel.find(' ', pos);
      if (end == std::string::npos) end = rel.size();
      std::string token = rel.substr(pos, end - pos);
      pos = end + 1;
      if (token.empty()) continue;
      int exp = 1;
      const std::size_t caret = token.find('^');
      if (caret != std::string::npos) {
        exp = std::stoi(token.substr(caret + 1));
        token = token.substr(0, caret);
      }
      const int g = index.at(token);
      const int letter = exp >= 0 ? 2 * g : 2 * g + 1;
      for (int k = 0; k < std::abs(exp); ++k) word.push_back(letter);
    }
    relators.push_back(std::move(word));
  }
  return coset_enumerate(static_cast<int>(generators.size()), relators, max_cosets);
}

}  // namespace oracles
