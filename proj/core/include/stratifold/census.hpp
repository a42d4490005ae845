#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stratifold/graph.hpp"
#include "stratifold/skeleton.hpp"
#include "stratifold/tree_enum.hpp"

namespace stratifold {

inline constexpr int kDefaultBruteLimit = 8;

// Exact binomial coefficient; throws std::overflow_error if it exceeds 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// C(m+r-1, r): non-increasing functions {1..r} -> {1..m} (stars and bars).
// Throws std::invalid_argument on m == 0 or r == 0.
std::uint64_t multiset_count(std::uint64_t m, std::uint64_t r);

// Number of 1-connected trivalent graphs with n whites and no degree-3 black:
// the rooted-tree count R_n.
std::uint64_t count_b0(int n);

// Closed-form counts for one degree-3 black vertex, by partition shape.
struct B1Row {
  char shape = 'S';  // 'S', 'I' or 'E'
  int a1 = 0, a = 0;  // isosceles decomposition n = a1 + 2a; unused for S/E
  std::uint64_t count = 0;
};

struct B1Counts {
  std::uint64_t scalene = 0;
  std::uint64_t isosceles = 0;
  std::uint64_t equilateral = 0;
  std::uint64_t total = 0;
  std::vector<B1Row> rows;
};

// S_n + I_n + E_n; all-zero for n < 3.
B1Counts count_b1(int n);

// Assemble a graph from a (possibly split) skeleton: every attachment tree is
// bisected and labeled by distance parity to its root, then its marks are
// identified with the copies of its slot group. Throws std::invalid_argument
// when a group's mark count does not match its copy count.
StratGraph attach(const SplitSkeleton& s, const std::vector<AttachmentTree>& assignment);
StratGraph attach(const Skeleton& s, const std::vector<AttachmentTree>& assignment);

struct CensusRowDetail {
  int b = 0;
  std::string descriptor;
  bool split = false;
  std::vector<int> sizes;              // orbit-representative size assignment
  std::vector<std::string> codes;      // sorted canonical codes
};

struct ConstructiveCensus {
  std::vector<CensusRowDetail> rows;
  std::vector<std::string> codes;      // sorted union over rows
};

// All 1-connected trivalent graphs with n whites and b degree-3 blacks,
// generated from skeletons, split variants, slot partitions and attachment
// tuples, filtered by the classification and deduplicated by canonical code.
// Size assignments are processed once per orbit of the skeleton symmetry,
// giving one row per orbit.
ConstructiveCensus constructive_census(int n, int b);

// Independent engine: enumerates all bipartite trees with n genus-0 whites
// and m = n-1-b blacks (b of degree 3 with label-1 edges, m-b of degree 2
// with one label-1 and one label-2 edge, both orientations), filters by the
// classification, deduplicates canonically. Throws above the limit.
std::map<int, std::vector<std::string>> brute_force_census(int n, int limit = kDefaultBruteLimit);

// Same enumeration keeping one representative graph per canonical code.
std::map<int, std::vector<std::pair<std::string, StratGraph>>> brute_force_census_graphs(
    int n, int limit = kDefaultBruteLimit);

struct CensusRow {
  int n = 0;
  int b = 0;
  std::string descriptor;
  std::uint64_t count = 0;
};

struct EngineTotals {
  std::optional<std::uint64_t> formula;
  std::optional<std::uint64_t> constructive;
  std::optional<std::uint64_t> brute;
};

struct CensusReport {
  int n = 0;
  std::vector<CensusRow> rows;
  std::map<int, EngineTotals> by_b;
  std::uint64_t grand_total = 0;
  bool engines_agree = true;
  std::vector<std::string> disagreements;  // human lines with witness codes
};

// Runs the formula (b <= 1), constructive and brute-force engines and
// reconciles them; any disagreement is reported with a canonical-code witness
// present in one engine's set and absent in the other.
CensusReport reconcile(int n, int limit = kDefaultBruteLimit);

}  // namespace stratifold
