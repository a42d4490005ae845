#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "builders.hpp"
#include "stratifold/canonical.hpp"
#include "stratifold/census.hpp"
#include "stratifold/classify.hpp"
#include "stratifold/graph.hpp"
#include "stratifold/io.hpp"
#include "stratifold/skeleton.hpp"

using namespace stratifold;

TEST_CASE("binomial and multiset_count") {
  CHECK(binomial(13, 6) == 1716);
  CHECK(binomial(4, 7) == 0);
  for (std::uint64_t m : {1, 2, 5, 9}) CHECK(multiset_count(m, 1) == m);
  CHECK(multiset_count(3, 2) == 6);     // {11,21,22,31,32,33}
  CHECK(multiset_count(8, 6) == 1716);  // the stars-and-bars worked example
  CHECK_THROWS_AS(multiset_count(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(multiset_count(3, 0), std::invalid_argument);
}

TEST_CASE("count_b0 equals the rooted-tree counts") {
  CHECK(count_b0(1) == 1);
  CHECK(count_b0(6) == 20);
  CHECK(count_b0(7) == 48);
}

TEST_CASE("count_b1 for n=7 reproduces the published rows") {
  const auto c = count_b1(7);
  CHECK(c.scalene == 26);
  CHECK(c.isosceles == 62);
  CHECK(c.equilateral == 0);
  CHECK(c.total == 88);
  // rows: S, I(5,1)=35, I(3,2)=12, I(1,3)=15, E
  REQUIRE(c.rows.size() == 5);
  CHECK(c.rows[0].shape == 'S');
  CHECK(c.rows[0].count == 26);
  CHECK(c.rows[1].a1 == 5);
  CHECK(c.rows[1].count == 35);
  CHECK(c.rows[2].a1 == 3);
  CHECK(c.rows[2].count == 12);
  CHECK(c.rows[3].a1 == 1);
  CHECK(c.rows[3].count == 15);
  CHECK(c.rows[4].shape == 'E');
  CHECK(c.rows[4].count == 0);
}

TEST_CASE("count_b1 small cases") {
  CHECK(count_b1(2).total == 0);
  const auto n3 = count_b1(3);
  CHECK(n3.scalene == 0);
  CHECK(n3.isosceles == 0);
  CHECK(n3.equilateral == 1);  // C(M_1+2,3) - C(U_1+2,3) = 1 - 0
  CHECK(n3.total == 1);
}

TEST_CASE("count_b1 totals match the brute-force engine") {
  const std::uint64_t expected[] = {1, 2, 8, 26, 88, 284};  // n = 3..8
  for (int n = 3; n <= 8; ++n) {
    CHECK(count_b1(n).total == expected[n - 3]);
    const auto brute = brute_force_census(n);
    CHECK(brute.at(1).size() == expected[n - 3]);
  }
}

TEST_CASE("attach: unit attachments reproduce the bare star") {
  const Skeleton sk = skeleton_of(enum_generating_trees(1)[0]);
  const auto units = enum_birooted(1);
  REQUIRE(units.size() == 1);
  const std::vector<AttachmentTree> assignment(3, to_attachment(units[0]));
  const StratGraph g = attach(sk, assignment);
  CHECK(are_isomorphic(g, builders::b111_star()));
  CHECK(is_simply_connected(g).accepted);
}

TEST_CASE("attach validates group sizes") {
  const Skeleton sk = skeleton_of(enum_generating_trees(1)[0]);
  const auto units = enum_birooted(1);
  CHECK_THROWS_AS(attach(sk, {to_attachment(units[0])}), std::invalid_argument);
  // a two-mark tree on a single slot group
  const auto tri = enum_drooted(2, 3);
  CHECK_THROWS_AS(
      attach(sk, {to_attachment(tri[0]), to_attachment(units[0]), to_attachment(units[0])}),
      std::invalid_argument);
}

TEST_CASE("attach output invariants") {
  const Skeleton sk = skeleton_of(enum_generating_trees(1)[0]);
  for (const auto& t1 : enum_birooted(3))
    for (const auto& t2 : enum_birooted(2)) {
      const auto units = enum_birooted(1);
      const StratGraph g =
          attach(sk, {to_attachment(t1), to_attachment(t2), to_attachment(units[0])});
      CHECK(validate(g).accepted);
      CHECK(is_tree(g));
      CHECK(is_trivalent(g));
      std::size_t whites = 0;
      for (const auto& v : g.vertices)
        if (v.color == VertexColor::White) ++whites;
      CHECK(whites == 6);
    }
}

TEST_CASE("constructive census small cases") {
  CHECK(constructive_census(3, 1).codes.size() == 1);
  CHECK(constructive_census(1, 0).codes.size() == 1);
  CHECK(constructive_census(7, 0).codes.size() == 48);
  CHECK_THROWS_AS(constructive_census(0, 0), std::invalid_argument);
}

TEST_CASE("constructive census n=7 b=2 reproduces the published rows") {
  const auto cons = constructive_census(7, 2);
  CHECK(cons.codes.size() == 29);
  std::multiset<std::uint64_t> connected, split;
  for (const auto& row : cons.rows) {
    if (row.split)
      split.insert(row.codes.size());
    else
      connected.insert(row.codes.size());
  }
  CHECK(connected == std::multiset<std::uint64_t>{3, 3, 4, 5, 5});
  CHECK(split == std::multiset<std::uint64_t>{4, 5});
}

TEST_CASE("constructive census n=7 b=3 has the linear and star cases") {
  const auto cons = constructive_census(7, 3);
  CHECK(cons.codes.size() == 2);
  std::size_t nonempty = 0;
  for (const auto& row : cons.rows)
    if (!row.codes.empty()) ++nonempty;
  CHECK(nonempty == 2);
}

TEST_CASE("brute force census basics") {
  const auto n1 = brute_force_census(1);
  CHECK(n1.at(0).size() == 1);

  const auto n2 = brute_force_census(2);
  CHECK(n2.at(0).size() == 1);  // the single 2-white collapsible tree

  CHECK_THROWS_AS(brute_force_census(9), std::invalid_argument);
  CHECK(brute_force_census(9, 9).size() == 5);  // raising the limit works
}

TEST_CASE("brute force census n=7 per-b counts") {
  const auto brute = brute_force_census(7);
  CHECK(brute.at(0).size() == 48);
  CHECK(brute.at(1).size() == 88);
  CHECK(brute.at(2).size() == 29);
  CHECK(brute.at(3).size() == 2);
}

TEST_CASE("census totals for n <= 6") {
  const std::uint64_t totals[] = {1, 1, 3, 6, 18, 51};
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t total = 0;
    for (const auto& [b, codes] : brute_force_census(n)) total += codes.size();
    CHECK(total == totals[n - 1]);
  }
}

TEST_CASE("constructive equals brute force as code sets") {
  for (int n = 1; n <= 6; ++n) {
    const auto brute = brute_force_census(n);
    for (int b = 0; b <= (n - 1) / 2; ++b) {
      CAPTURE(n);
      CAPTURE(b);
      CHECK(constructive_census(n, b).codes == brute.at(b));
    }
  }
}

TEST_CASE("every brute-force graph satisfies the handshake identity") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& [b, list] : brute_force_census_graphs(n)) {
      for (const auto& [code, g] : list) {
        int blacks = 0, deg3 = 0;
        Adjacency adj(g);
        for (std::size_t v = 0; v < adj.size(); ++v) {
          if (adj.vertex(v).color != VertexColor::Black) continue;
          ++blacks;
          if (adj.degree(v) == 3) ++deg3;
        }
        CHECK(deg3 == b);
        CHECK(blacks == n - 1 - b);
        CHECK(is_simply_connected(g).accepted);
      }
    }
  }
}

TEST_CASE("constructive equals brute force at n=9 with a raised limit") {
  // exercises double splits (b=3 linear), degree-4 white splits and the b=4
  // generating trees, none of which occur at n <= 8
  const auto brute = brute_force_census(9, 9);
  const std::size_t expected[] = {286, 925, 632, 107, 4};
  for (int b = 0; b <= 4; ++b) {
    CAPTURE(b);
    const auto cons = constructive_census(9, b);
    CHECK(cons.codes.size() == expected[b]);
    CHECK(cons.codes == brute.at(b));
  }
}

TEST_CASE("reconcile") {
  const auto r3 = reconcile(3);
  CHECK(r3.grand_total == 3);
  CHECK(r3.engines_agree);

  const auto r1 = reconcile(1);
  CHECK(r1.grand_total == 1);
  CHECK(r1.engines_agree);

  CHECK_THROWS_AS(reconcile(20), std::invalid_argument);
}

TEST_CASE("census rendering is deterministic") {
  const auto a = render_census_csv(reconcile(5));
  const auto b = render_census_csv(reconcile(5));
  CHECK(a == b);
  const auto t1 = render_table_csv(sequence_table(6));
  const auto t2 = render_table_csv(sequence_table(6));
  CHECK(t1 == t2);
}
