#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "stratifold/canonical.hpp"
#include "stratifold/census.hpp"
#include "stratifold/classify.hpp"
#include "stratifold/io.hpp"
#include "stratifold/tree_enum.hpp"

namespace {

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInputError = 2;
constexpr int kExitEngineDisagreement = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw stratifold::DocumentError("cannot read \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

stratifold::StratGraph load_graph(const std::string& path) {
  const auto parsed = stratifold::parse_document(read_file(path));
  const auto verdict = stratifold::validate(parsed.graph);
  if (!verdict.accepted) {
    std::cerr << "invalid graph document:\n";
    for (const auto& r : verdict.reasons) std::cerr << "  " << r.code << ": " << r.detail << "\n";
    throw stratifold::DocumentError("validation failed");
  }
  return parsed.graph;
}

int cmd_check(const std::string& path, bool verbose) {
  const auto g = load_graph(path);
  const auto verdict = stratifold::is_simply_connected(g);
  std::cout << stratifold::render_verdict(verdict);
  if (verbose && stratifold::is_tree(g)) {
    try {
      const auto reduced = stratifold::reduced_graph(g);
      std::cout << "reduced graph:\n" << stratifold::write_document(reduced);
      if (const auto witness = stratifold::find_horned_subtree(reduced)) {
        std::cout << "horned subtree witness:\n" << stratifold::write_document(*witness);
      }
    } catch (const std::runtime_error& e) {
      std::cout << "reduced graph unavailable: " << e.what() << "\n";
    }
  }
  return verdict.accepted ? kExitAccepted : kExitRejected;
}

int cmd_pi1(const std::string& path) {
  const auto g = load_graph(path);
  const auto p = stratifold::pi1_presentation(g);  // throws on non-tree / genus
  std::cout << stratifold::render_pi1(p) << "\n";
  return kExitAccepted;
}

int cmd_census(int n, const std::string& engine, const std::string& format, int b_filter,
               int limit) {
  using namespace stratifold;
  CensusReport report;
  report.n = n;
  const int max_b = (n - 1) / 2;

  if (engine == "formula") {
    if (b_filter > 1) {
      std::cerr << "the formula engine covers b <= 1 only\n";
      return kExitInputError;
    }
    report.rows.push_back({n, 0, "R", count_b0(n)});
    const auto b1 = count_b1(n);
    report.by_b[0].formula = count_b0(n);
    if (max_b >= 1) {
      for (const auto& row : b1.rows) {
        std::string d(1, row.shape);
        if (row.shape == 'I') d += "(a1=" + std::to_string(row.a1) + ",a=" + std::to_string(row.a) + ")";
        report.rows.push_back({n, 1, d, row.count});
      }
      report.by_b[1].formula = b1.total;
    }
    report.grand_total = count_b0(n) + b1.total;
  } else if (engine == "constructive") {
    for (int b = 0; b <= max_b; ++b) {
      const auto cons = constructive_census(n, b);
      for (const auto& row : cons.rows)
        report.rows.push_back({n, b, row.descriptor, row.codes.size()});
      report.by_b[b].constructive = cons.codes.size();
      report.grand_total += cons.codes.size();
    }
  } else if (engine == "brute") {
    const auto brute = brute_force_census(n, limit);
    for (const auto& [b, codes] : brute) {
      report.rows.push_back({n, b, "brute", codes.size()});
      report.by_b[b].brute = codes.size();
      report.grand_total += codes.size();
    }
  } else {  // all
    report = reconcile(n, limit);
  }

  if (b_filter >= 0) {
    std::erase_if(report.rows, [b_filter](const CensusRow& r) { return r.b != b_filter; });
    std::erase_if(report.by_b, [b_filter](const auto& kv) { return kv.first != b_filter; });
    std::uint64_t total = 0;
    const auto it = report.by_b.find(b_filter);
    if (it != report.by_b.end()) {
      if (it->second.brute)
        total = *it->second.brute;
      else if (it->second.constructive)
        total = *it->second.constructive;
      else if (it->second.formula)
        total = *it->second.formula;
    }
    report.grand_total = total;
  }

  std::cout << (format == "csv" ? render_census_csv(report) : render_census_text(report));
  return report.engines_agree ? kExitAccepted : kExitEngineDisagreement;
}

int cmd_enumerate(int n, const std::string& out_dir, const std::string& emit, int limit) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "cannot create output directory \"" << out_dir << "\": " << ec.message() << "\n";
    return kExitInputError;
  }

  const auto census = stratifold::brute_force_census_graphs(n, limit);
  std::size_t written = 0;
  std::map<std::string, int> digest_uses;
  for (const auto& [b, graphs] : census) {
    for (const auto& [code, graph] : graphs) {
      std::string stem = stratifold::code_digest(code);
      const int uses = digest_uses[stem]++;
      if (uses > 0) stem += "-" + std::to_string(uses);
      const fs::path path =
          fs::path(out_dir) / (stem + (emit == "dot" ? ".dot" : ".json"));
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write \"" << path.string() << "\"\n";
        return kExitInputError;
      }
      out << (emit == "dot" ? stratifold::write_dot(graph) : stratifold::write_document(graph));
      ++written;
    }
  }
  std::cout << "wrote " << written << " graphs to " << out_dir << "\n";
  return kExitAccepted;
}

int cmd_tables(int max_n) {
  std::cout << stratifold::render_table_csv(stratifold::sequence_table(max_n));
  return kExitAccepted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"enumeration and verification of trivalent 2-stratifold graphs"};
  app.require_subcommand(1);

  std::string path;
  bool verbose = false;
  auto* check = app.add_subcommand("check", "decide whether a graph document is simply connected");
  check->add_option("file", path, "GraphDocument JSON file")->required();
  check->add_flag("--verbose", verbose, "print the reduced graph and any horned-subtree witness");

  auto* pi1 = app.add_subcommand("pi1", "print a fundamental group presentation");
  pi1->add_option("file", path, "GraphDocument JSON file")->required();

  int n = 1;
  std::string engine = "all";
  std::string format = "text";
  int b_filter = -1;
  int limit = stratifold::kDefaultBruteLimit;
  auto* census = app.add_subcommand("census", "count 1-connected trivalent graphs with n whites");
  census->add_option("-n,--white-vertices", n, "number of white vertices")->required();
  census->add_option("--engine", engine, "formula | constructive | brute | all")
      ->check(CLI::IsMember({"formula", "constructive", "brute", "all"}));
  census->add_option("--format", format, "csv | structured-text")
      ->check(CLI::IsMember({"csv", "text", "structured-text"}));
  census->add_option("-b,--black3", b_filter, "restrict to a given number of degree-3 blacks");
  census->add_option("--limit", limit, "brute-force cap on n");

  std::string out_dir;
  std::string emit = "documents";
  auto* enumerate = app.add_subcommand("enumerate", "write every census graph to a directory");
  enumerate->add_option("-n,--white-vertices", n, "number of white vertices")->required();
  enumerate->add_option("--out", out_dir, "output directory")->required();
  enumerate->add_option("--emit", emit, "documents | dot")
      ->check(CLI::IsMember({"documents", "dot"}));
  enumerate->add_option("--limit", limit, "brute-force cap on n");

  int max_n = 7;
  auto* tables = app.add_subcommand("tables", "print the n,R,M,U sequence table as CSV");
  tables->add_option("--max-n", max_n, "last row of the table")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (check->parsed()) return cmd_check(path, verbose);
    if (pi1->parsed()) return cmd_pi1(path);
    if (census->parsed()) return cmd_census(n, engine, format, b_filter, limit);
    if (enumerate->parsed()) return cmd_enumerate(n, out_dir, emit, limit);
    if (tables->parsed()) return cmd_tables(max_n);
  } catch (const stratifold::DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
