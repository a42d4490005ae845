#include <doctest.h>

#include <stdexcept>

#include <set>

#include "builders.hpp"
#include "oracles.hpp"
#include "stratifold/canonical.hpp"
#include "stratifold/classify.hpp"
#include "stratifold/tree_enum.hpp"

using namespace stratifold;

namespace {
// https://oeis.org/A000081
constexpr std::uint64_t kRooted[] = {1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842, 4766, 12486};
// https://oeis.org/A000055
constexpr std::uint64_t kFree[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};
}  // namespace

TEST_CASE("rooted tree counts match the reference sequence") {
  for (int n = 1; n <= 13; ++n) {
    CHECK(count_rooted(n) == kRooted[n - 1]);
    if (n <= 9) CHECK(enum_rooted(n).size() == kRooted[n - 1]);
  }
  CHECK_THROWS_AS(enum_rooted(0), std::invalid_argument);
}

TEST_CASE("level sequences are canonical") {
  for (const auto& t : enum_rooted(7)) {
    REQUIRE(t.levels[0] == 0);
    for (std::size_t i = 1; i < t.levels.size(); ++i) {
      CHECK(t.levels[i] >= 1);
      CHECK(t.levels[i] <= t.levels[i - 1] + 1);
    }
  }
  // no duplicates as unlabeled rooted trees: decorate the root and compare codes
  std::set<std::string> codes;
  for (const auto& t : enum_rooted(7)) {
    std::vector<std::string> symbols(7);
    symbols[0] = "r";
    codes.insert(tree_code(7, t.edge_list(), &symbols));
  }
  CHECK(codes.size() == 48);
}

TEST_CASE("free tree counts match the reference sequence") {
  for (int n = 1; n <= 11; ++n) CHECK(free_trees(n).size() == kFree[n - 1]);
}

TEST_CASE("bi-rooted counts: two production routes and the labeled-tree oracle agree") {
  // the acceptance suite's pinned reference lists 256 for n=7; that value is
  // not consistent with the mark/root isomorphism rule, which gives 262 here
  // by three independent routes (see also the acceptance_c1 failure note)
  const std::uint64_t expected[] = {1, 2, 5, 13, 35, 95, 262};
  for (int n = 1; n <= 7; ++n) {
    const auto direct = enum_birooted(n);
    CHECK(direct.size() == expected[n - 1]);
    CHECK(oracles::count_marked_classes(n, 1) == expected[n - 1]);
  }
  // rooted-tree route and free-tree route produce identical code sets
  for (int n = 1; n <= 8; ++n) {
    const auto direct = enum_birooted(n);
    const auto via_free = enum_marked(n, 1);
    REQUIRE(direct.size() == via_free.size());
    for (std::size_t i = 0; i < direct.size(); ++i) CHECK(direct[i].code == via_free[i].code);
  }
  CHECK_THROWS_AS(enum_birooted(0), std::invalid_argument);
}

TEST_CASE("bi-rooted trees with mark == root are the rooted trees") {
  for (int n = 1; n <= 10; ++n) {
    std::size_t diagonal = 0;
    for (const auto& t : enum_birooted(n))
      if (t.mark == t.root) ++diagonal;
    CHECK(diagonal == count_rooted(n));
  }
}

TEST_CASE("count_birooted_off_root") {
  const std::uint64_t expected[] = {0, 1, 3, 9, 26, 75, 214};
  for (int n = 1; n <= 7; ++n) {
    CHECK(count_birooted_off_root(n) == expected[n - 1]);
    std::size_t off = 0;
    for (const auto& t : enum_birooted(n))
      if (t.mark != t.root) ++off;
    CHECK(off == expected[n - 1]);
  }
}

TEST_CASE("d-rooted enumeration against the labeled-tree oracle") {
  CHECK(enum_drooted(2, 3).size() == 2);
  CHECK(enum_drooted(3, 3).size() == 9);
  CHECK(enum_drooted(3, 3).size() == oracles::count_marked_classes(3, 2));
  for (int n = 2; n <= 6; ++n)
    CHECK(enum_drooted(n, 3).size() == oracles::count_marked_classes(n, 2));
  for (int n = 3; n <= 5; ++n)
    CHECK(enum_drooted(n, 4).size() == oracles::count_marked_classes(n, 3));

  CHECK_THROWS_AS(enum_drooted(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(enum_drooted(5, 2), std::invalid_argument);
}

TEST_CASE("marks are pairwise distinct and ordered") {
  for (const auto& t : enum_drooted(4, 3)) {
    REQUIRE(t.marks.size() == 2);
    CHECK(t.marks[0] != t.marks[1]);
  }
  // ordered marks: swapping m0 and m1 on an asymmetric placement is a
  // different class, so there are more tri-rooted than unordered placements
  CHECK(enum_drooted(3, 3).size() > 5);
}

TEST_CASE("rooted_to_collapsible shapes") {
  const auto one = enum_rooted(1);
  const StratGraph g1 = rooted_to_collapsible(one[0]);
  CHECK(g1.vertices.size() == 1);
  CHECK(g1.edges.empty());

  const auto two = enum_rooted(2);
  const StratGraph g2 = rooted_to_collapsible(two[0]);
  CHECK(are_isomorphic(g2, builders::two_vertex_collapsible()));
}

TEST_CASE("rooted_to_collapsible is injective") {
  for (int n : {5, 6, 7}) {
    std::set<std::string> codes;
    for (const auto& t : enum_rooted(n)) codes.insert(canonical_code(rooted_to_collapsible(t)).code);
    CHECK(codes.size() == count_rooted(n));
  }
}

TEST_CASE("collapsible outputs: root is the unique white without a label-1 edge") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& t : enum_rooted(n)) {
      const StratGraph g = rooted_to_collapsible(t);
      CHECK(is_trivalent(g));
      CHECK(validate(g).accepted);
      Adjacency adj(g);
      std::size_t without_label1 = 0;
      for (std::size_t v = 0; v < adj.size(); ++v) {
        if (adj.vertex(v).color != VertexColor::White) continue;
        bool has1 = false;
        for (const auto& a : adj.arcs(v))
          if (adj.edge_label(a) == 1) has1 = true;
        if (!has1) {
          ++without_label1;
          CHECK(adj.vertex(v).id == 0);  // the root keeps vertex id 0
        }
      }
      CHECK(without_label1 == 1);
    }
  }
}

TEST_CASE("sequence table") {
  const auto rows = sequence_table(7);
  REQUIRE(rows.size() == 7);
  for (const auto& r : rows) CHECK(r.birooted_off_root == r.birooted - r.rooted);
  CHECK(rows[4].rooted == 9);
  CHECK(rows[4].birooted == 35);
  CHECK(rows[4].birooted_off_root == 26);
  CHECK_THROWS_AS(sequence_table(0), std::invalid_argument);
}
