#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "stratifold/census.hpp"
#include "stratifold/classify.hpp"
#include "stratifold/graph.hpp"
#include "stratifold/tree_enum.hpp"

namespace stratifold {

class DocumentError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParsedDocument {
  StratGraph graph;
  std::vector<std::string> names;  // document id per vertex index
};

// GraphDocument: a JSON object with exactly the keys "vertices" (list of
// {id, color, genus}) and "edges" (list of {white, black, label}). genus is
// required for white vertices and forbidden for black ones; unknown keys are
// rejected. Throws DocumentError.
ParsedDocument parse_document(const std::string& text);

// Deterministic serialization; names defaults to w0..,b0.. per color.
std::string write_document(const StratGraph& g);
std::string write_document(const StratGraph& g, const std::vector<std::string>& names);

// DOT rendering: whites as circles with a genus annotation, blacks as filled
// points, edge labels printed.
std::string write_dot(const StratGraph& g);

std::string render_table_csv(const std::vector<SequenceRow>& rows);  // header n,R,M,U
std::string render_census_csv(const CensusReport& r);
std::string render_census_text(const CensusReport& r);
std::string render_verdict(const Verdict& v);
std::string render_pi1(const Pi1Presentation& p);

// FNV-1a 64-bit digest of a canonical code, as 16 hex characters; used for
// stable enumeration file names.
std::string code_digest(const std::string& canonical_code);

}  // namespace stratifold
