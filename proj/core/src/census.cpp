#include "stratifold/census.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "stratifold/canonical.hpp"
#include "stratifold/classify.hpp"

namespace stratifold {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) throw std::overflow_error("binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t multiset_count(std::uint64_t m, std::uint64_t r) {
  if (m == 0 || r == 0) throw std::invalid_argument("multiset_count requires m >= 1 and r >= 1");
  return binomial(m + r - 1, r);
}

std::uint64_t count_b0(int n) { return count_rooted(n); }

B1Counts count_b1(int n) {
  B1Counts out;
  if (n < 3) return out;

  std::vector<std::uint64_t> m(static_cast<std::size_t>(n), 0), u(static_cast<std::size_t>(n), 0);
  for (int a = 1; a <= n - 2; ++a) {
    const std::uint64_t ma = enum_birooted(a).size();
    const std::uint64_t ra = count_rooted(a);
    m[static_cast<std::size_t>(a)] = ma;
    u[static_cast<std::size_t>(a)] = ma - ra;
  }
  auto M = [&m](int a) { return m[static_cast<std::size_t>(a)]; };
  auto U = [&u](int a) { return u[static_cast<std::size_t>(a)]; };

  for (int a1 = n - 2; a1 >= 1; --a1)
    for (int a2 = a1 - 1; a2 >= 1; --a2) {
      const int a3 = n - a1 - a2;
      if (a3 < 1 || a3 >= a2) continue;
      out.scalene += M(a1) * M(a2) * M(a3) - U(a1) * U(a2) * U(a3);
    }
  out.rows.push_back({'S', 0, 0, out.scalene});

  for (int a = 1; 2 * a < n; ++a) {
    const int a1 = n - 2 * a;
    if (a1 == a) continue;
    const std::uint64_t count =
        M(a1) * binomial(M(a) + 1, 2) - U(a1) * binomial(U(a) + 1, 2);
    out.isosceles += count;
    out.rows.push_back({'I', a1, a, count});
  }

  if (n % 3 == 0) {
    const int a = n / 3;
    out.equilateral = binomial(M(a) + 2, 3) - binomial(U(a) + 2, 3);
  }
  out.rows.push_back({'E', 0, 0, out.equilateral});

  out.total = out.scalene + out.isosceles + out.equilateral;
  return out;
}

StratGraph attach(const SplitSkeleton& s, const std::vector<AttachmentTree>& assignment) {
  if (assignment.size() != s.groups.size())
    throw std::invalid_argument("attach: one attachment tree required per slot group");

  StratGraph out;
  VertexId next = 0;
  for (const auto& v : s.base.vertices) {
    next = std::max(next, v.id + 1);
    if (v.color == VertexColor::Black) out.vertices.push_back(v);
  }

  std::map<VertexId, VertexId> mark_of_copy;
  for (std::size_t gi = 0; gi < s.groups.size(); ++gi) {
    const SlotGroup& group = s.groups[gi];
    const AttachmentTree& t = assignment[gi];
    if (t.marks.size() != group.copies.size())
      throw std::invalid_argument("attach: mark count does not match the slot group size");
    if (t.order < static_cast<int>(t.marks.size()))
      throw std::invalid_argument("attach: marks must be pairwise distinct vertices");

    // fresh white per tree vertex
    std::vector<VertexId> white(static_cast<std::size_t>(t.order));
    for (int v = 0; v < t.order; ++v) {
      white[static_cast<std::size_t>(v)] = next;
      out.vertices.push_back({next, VertexColor::White, 0});
      ++next;
    }

    // bisect each edge, label 2 toward the root and 1 away from it
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(t.order));
    for (const auto& [x, y] : t.edges) {
      adj[static_cast<std::size_t>(x)].push_back(y);
      adj[static_cast<std::size_t>(y)].push_back(x);
    }
    std::vector<int> parent(static_cast<std::size_t>(t.order), -2);
    std::vector<int> order{t.root};
    parent[static_cast<std::size_t>(t.root)] = -1;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int y : adj[static_cast<std::size_t>(order[i])])
        if (parent[static_cast<std::size_t>(y)] == -2) {
          parent[static_cast<std::size_t>(y)] = order[i];
          order.push_back(y);
        }
    for (std::size_t i = 1; i < order.size(); ++i) {
      const int child = order[i];
      const VertexId black = next++;
      out.vertices.push_back({black, VertexColor::Black, 0});
      out.edges.push_back({white[static_cast<std::size_t>(parent[static_cast<std::size_t>(child)])],
                           black, 2});
      out.edges.push_back({white[static_cast<std::size_t>(child)], black, 1});
    }

    for (std::size_t i = 0; i < group.copies.size(); ++i)
      mark_of_copy[group.copies[i]] = white[static_cast<std::size_t>(t.marks[i])];
  }

  // skeleton edges, re-targeted from slot copies to mark vertices
  for (const auto& e : s.base.edges) out.edges.push_back({mark_of_copy.at(e.white), e.black, 1});
  return out;
}

StratGraph attach(const Skeleton& s, const std::vector<AttachmentTree>& assignment) {
  return attach(as_unsplit(s), assignment);
}

namespace {

std::string sizes_descriptor(const std::vector<int>& sizes, std::size_t multi_count) {
  std::string out = "(";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i > 0) out += (i == multi_count && multi_count > 0) ? "|" : ",";
    out += std::to_string(sizes[i]);
  }
  out += ")";
  return out;
}

// Lexicographically maximal image of the assignment under the group symmetries.
std::vector<int> orbit_representative(const std::vector<int>& sizes,
                                      const std::vector<std::vector<std::size_t>>& perms) {
  std::vector<int> best = sizes;
  std::vector<int> image(sizes.size());
  for (const auto& perm : perms) {
    for (std::size_t i = 0; i < sizes.size(); ++i) image[perm[i]] = sizes[i];
    if (image > best) best = image;
  }
  return best;
}

using MarkedCache = std::map<std::pair<int, int>, std::vector<AttachmentTree>>;

const std::vector<AttachmentTree>& marked_trees(MarkedCache& cache, int order, int marks) {
  auto it = cache.find({order, marks});
  if (it == cache.end()) it = cache.emplace(std::pair{order, marks}, enum_marked(order, marks)).first;
  return it->second;
}

}  // namespace

ConstructiveCensus constructive_census(int n, int b) {
  if (n < 1) throw std::invalid_argument("constructive_census requires n >= 1");
  if (b < 0) throw std::invalid_argument("constructive_census requires b >= 0");

  ConstructiveCensus out;
  std::set<std::string> all;

  if (b == 0) {
    CensusRowDetail row{0, "collapsible", false, {n}, {}};
    std::set<std::string> codes;
    for (const auto& t : enum_rooted(n)) codes.insert(canonical_code(rooted_to_collapsible(t)).code);
    row.codes.assign(codes.begin(), codes.end());
    out.codes = row.codes;
    out.rows.push_back(std::move(row));
    return out;
  }

  MarkedCache cache;
  const auto generating = enum_generating_trees(b);
  for (std::size_t gi = 0; gi < generating.size(); ++gi) {
    const Skeleton sk = skeleton_of(generating[gi]);
    std::vector<SplitSkeleton> variants{as_unsplit(sk)};
    for (auto& v : split_variants(sk)) variants.push_back(std::move(v));

    for (const SplitSkeleton& variant : variants) {
      const std::size_t k = variant.groups.size();
      std::size_t multi_count = 0;
      int min_total = 0;
      std::vector<int> mins(k);
      for (std::size_t i = 0; i < k; ++i) {
        mins[i] = static_cast<int>(variant.groups[i].copies.size());
        min_total += mins[i];
        if (mins[i] > 1) ++multi_count;
      }
      if (min_total > n) continue;

      // enumerate size assignments, process one representative per orbit
      std::vector<int> sizes(k);
      std::vector<int> suffix_min(k + 1, 0);
      for (std::size_t i = k; i-- > 0;) suffix_min[i] = suffix_min[i + 1] + mins[i];
      std::function<void(std::size_t, int)> assign = [&](std::size_t i, int remaining) {
        if (i == k) {
          if (remaining != 0) return;
          if (orbit_representative(sizes, variant.group_symmetries) != sizes) return;

          CensusRowDetail row;
          row.b = b;
          row.split = multi_count > 0;
          row.sizes = sizes;
          row.descriptor = "sk" + std::to_string(gi + 1) +
                           (variant.descriptor.empty() ? "" : " " + variant.descriptor) + " " +
                           sizes_descriptor(sizes, multi_count);

          std::set<std::string> codes;
          std::function<void(std::size_t, std::vector<AttachmentTree>&)> product =
              [&](std::size_t gidx, std::vector<AttachmentTree>& chosen) {
                if (gidx == k) {
                  const StratGraph g = attach(variant, chosen);
                  if (is_simply_connected(g).accepted) codes.insert(canonical_code(g).code);
                  return;
                }
                for (const auto& t : marked_trees(cache, sizes[gidx], mins[gidx])) {
                  chosen.push_back(t);
                  product(gidx + 1, chosen);
                  chosen.pop_back();
                }
              };
          std::vector<AttachmentTree> chosen;
          chosen.reserve(k);
          product(0, chosen);

          row.codes.assign(codes.begin(), codes.end());
          all.insert(row.codes.begin(), row.codes.end());
          out.rows.push_back(std::move(row));
          return;
        }
        for (int a = mins[i]; a <= remaining - suffix_min[i + 1]; ++a) {
          sizes[i] = a;
          assign(i + 1, remaining - a);
        }
      };
      assign(0, n);
    }
  }

  out.codes.assign(all.begin(), all.end());
  return out;
}

namespace {

void census_over_trees(int n, int limit, bool keep_graphs,
                       std::map<int, std::vector<std::string>>* codes_out,
                       std::map<int, std::vector<std::pair<std::string, StratGraph>>>* graphs_out) {
  if (n < 1) throw std::invalid_argument("brute_force_census requires n >= 1");
  if (n > limit)
    throw std::invalid_argument("brute_force_census: n exceeds the configured limit of " +
                                std::to_string(limit));

  std::map<int, std::set<std::string>> seen;
  std::map<int, std::vector<std::pair<std::string, StratGraph>>> reps;
  const int max_b = (n - 1) / 2;
  for (int b = 0; b <= max_b; ++b) {
    seen[b];
    const int m = n - 1 - b;  // blacks forced by the handshake identity
    const int v = n + m;
    for (const auto& edges : free_trees(v)) {
      std::vector<std::vector<int>> adj(static_cast<std::size_t>(v));
      for (const auto& [x, y] : edges) {
        adj[static_cast<std::size_t>(x)].push_back(y);
        adj[static_cast<std::size_t>(y)].push_back(x);
      }
      // the unique 2-coloring, up to swapping the sides
      std::vector<int> side(static_cast<std::size_t>(v), -1);
      side[0] = 0;
      std::vector<int> stack{0};
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : adj[static_cast<std::size_t>(x)])
          if (side[static_cast<std::size_t>(y)] < 0) {
            side[static_cast<std::size_t>(y)] = 1 - side[static_cast<std::size_t>(x)];
            stack.push_back(y);
          }
      }
      for (int white_side = 0; white_side <= 1; ++white_side) {
        int whites = 0;
        for (int x = 0; x < v; ++x)
          if (side[static_cast<std::size_t>(x)] == white_side) ++whites;
        if (whites != n) continue;

        bool ok = true;
        int deg3 = 0;
        std::vector<int> deg2_blacks;
        for (int x = 0; x < v && ok; ++x) {
          if (side[static_cast<std::size_t>(x)] == white_side) continue;
          const std::size_t d = adj[static_cast<std::size_t>(x)].size();
          if (d == 3)
            ++deg3;
          else if (d == 2)
            deg2_blacks.push_back(x);
          else
            ok = false;  // degree-1 blacks are black terminal vertices
        }
        if (!ok || deg3 != b) continue;

        StratGraph base;
        for (int x = 0; x < v; ++x)
          base.vertices.push_back({static_cast<VertexId>(x),
                                   side[static_cast<std::size_t>(x)] == white_side
                                       ? VertexColor::White
                                       : VertexColor::Black,
                                   0});
        std::vector<Edge> fixed;
        for (int x = 0; x < v; ++x) {
          if (side[static_cast<std::size_t>(x)] == white_side) continue;
          if (adj[static_cast<std::size_t>(x)].size() != 3) continue;
          for (int y : adj[static_cast<std::size_t>(x)])
            fixed.push_back({static_cast<VertexId>(y), static_cast<VertexId>(x), 1});
        }

        const std::size_t orientations = std::size_t{1} << deg2_blacks.size();
        for (std::size_t bits = 0; bits < orientations; ++bits) {
          base.edges = fixed;
          for (std::size_t i = 0; i < deg2_blacks.size(); ++i) {
            const int x = deg2_blacks[i];
            int lo = adj[static_cast<std::size_t>(x)][0];
            int hi = adj[static_cast<std::size_t>(x)][1];
            if (lo > hi) std::swap(lo, hi);
            const int lo_label = (bits >> i) & 1 ? 1 : 2;
            base.edges.push_back({static_cast<VertexId>(lo), static_cast<VertexId>(x), lo_label});
            base.edges.push_back({static_cast<VertexId>(hi), static_cast<VertexId>(x), 3 - lo_label});
          }
          if (!is_simply_connected(base).accepted) continue;
          std::string code = canonical_code(base).code;
          if (seen[b].insert(code).second && keep_graphs) {
            reps[b].emplace_back(std::move(code), base);
          }
        }
      }
    }
  }

  if (codes_out != nullptr) {
    for (auto& [b, codes] : seen) (*codes_out)[b].assign(codes.begin(), codes.end());
  }
  if (graphs_out != nullptr) {
    for (auto& [b, list] : reps) {
      std::sort(list.begin(), list.end(),
                [](const auto& a, const auto& c) { return a.first < c.first; });
      (*graphs_out)[b] = std::move(list);
    }
    for (int b = 0; b <= max_b; ++b) (*graphs_out)[b];
  }
}

}  // namespace

std::map<int, std::vector<std::string>> brute_force_census(int n, int limit) {
  std::map<int, std::vector<std::string>> out;
  census_over_trees(n, limit, false, &out, nullptr);
  return out;
}

std::map<int, std::vector<std::pair<std::string, StratGraph>>> brute_force_census_graphs(int n,
                                                                                         int limit) {
  std::map<int, std::vector<std::pair<std::string, StratGraph>>> out;
  census_over_trees(n, limit, true, nullptr, &out);
  return out;
}

CensusReport reconcile(int n, int limit) {
  CensusReport report;
  report.n = n;

  const auto brute = brute_force_census(n, limit);
  const int max_b = (n - 1) / 2;

  const std::uint64_t b0 = count_b0(n);
  const B1Counts b1 = count_b1(n);

  report.rows.push_back({n, 0, "R", b0});
  if (max_b >= 1) {
    for (const auto& row : b1.rows) {
      std::string descriptor(1, row.shape);
      if (row.shape == 'I')
        descriptor += "(a1=" + std::to_string(row.a1) + ",a=" + std::to_string(row.a) + ")";
      report.rows.push_back({n, 1, descriptor, row.count});
    }
  }

  auto note = [&report](std::string line) {
    report.engines_agree = false;
    report.disagreements.push_back(std::move(line));
  };

  for (int b = 0; b <= max_b; ++b) {
    const ConstructiveCensus cons = constructive_census(n, b);
    const auto it = brute.find(b);
    const std::vector<std::string> empty;
    const std::vector<std::string>& bf = it == brute.end() ? empty : it->second;

    EngineTotals totals;
    totals.constructive = cons.codes.size();
    totals.brute = bf.size();
    if (b == 0) totals.formula = b0;
    if (b == 1) totals.formula = b1.total;
    report.by_b[b] = totals;

    if (b >= 2)
      for (const auto& row : cons.rows)
        report.rows.push_back({n, b, row.descriptor, row.codes.size()});

    // internal consistency: constructive rows partition the constructive set
    std::uint64_t row_sum = 0;
    for (const auto& row : cons.rows) row_sum += row.codes.size();
    if (row_sum != cons.codes.size())
      note("b=" + std::to_string(b) + ": constructive rows overlap (sum " +
           std::to_string(row_sum) + " vs " + std::to_string(cons.codes.size()) + " distinct)");

    if (totals.formula && *totals.formula != cons.codes.size())
      note("b=" + std::to_string(b) + ": formula count " + std::to_string(*totals.formula) +
           " != constructive count " + std::to_string(cons.codes.size()));

    if (cons.codes != bf) {
      std::vector<std::string> only_cons, only_bf;
      std::set_difference(cons.codes.begin(), cons.codes.end(), bf.begin(), bf.end(),
                          std::back_inserter(only_cons));
      std::set_difference(bf.begin(), bf.end(), cons.codes.begin(), cons.codes.end(),
                          std::back_inserter(only_bf));
      if (!only_cons.empty())
        note("b=" + std::to_string(b) + ": constructive-only witness " + only_cons.front());
      if (!only_bf.empty())
        note("b=" + std::to_string(b) + ": brute-force-only witness " + only_bf.front());
    }

    report.grand_total += bf.size();
  }
  return report;
}

}  // namespace stratifold
