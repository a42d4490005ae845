#include "stratifold/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace stratifold {

namespace {

using nlohmann::ordered_json;

void require_keys(const ordered_json& obj, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional, const std::string& where) {
  for (const auto& key : required)
    if (!obj.contains(key)) throw DocumentError(where + ": missing key \"" + key + "\"");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(required.begin(), required.end(), key) == required.end() &&
        std::find(optional.begin(), optional.end(), key) == optional.end())
      throw DocumentError(where + ": unknown key \"" + key + "\"");
  }
}

}  // namespace

ParsedDocument parse_document(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DocumentError("document: top level must be an object");
  require_keys(doc, {"vertices", "edges"}, {}, "document");
  if (!doc["vertices"].is_array()) throw DocumentError("\"vertices\" must be a list");
  if (!doc["edges"].is_array()) throw DocumentError("\"edges\" must be a list");

  ParsedDocument out;
  std::map<std::string, VertexId> index;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_object()) throw DocumentError("vertex entries must be objects");
    require_keys(v, {"id", "color"}, {"genus"}, "vertex");
    if (!v["id"].is_string()) throw DocumentError("vertex id must be a string");
    const std::string id = v["id"].get<std::string>();
    if (index.contains(id)) throw DocumentError("duplicate vertex id \"" + id + "\"");
    if (!v["color"].is_string()) throw DocumentError("vertex color must be a string");
    const std::string color = v["color"].get<std::string>();
    Vertex vertex;
    vertex.id = static_cast<VertexId>(out.graph.vertices.size());
    if (color == "white") {
      vertex.color = VertexColor::White;
      if (!v.contains("genus")) throw DocumentError("white vertex \"" + id + "\" requires a genus");
      if (!v["genus"].is_number_integer())
        throw DocumentError("genus of \"" + id + "\" must be an integer");
      vertex.genus = v["genus"].get<int>();
    } else if (color == "black") {
      vertex.color = VertexColor::Black;
      if (v.contains("genus"))
        throw DocumentError("black vertex \"" + id + "\" must not carry a genus");
    } else {
      throw DocumentError("vertex color must be \"white\" or \"black\"");
    }
    index.emplace(id, vertex.id);
    out.graph.vertices.push_back(vertex);
    out.names.push_back(id);
  }

  for (const auto& e : doc["edges"]) {
    if (!e.is_object()) throw DocumentError("edge entries must be objects");
    require_keys(e, {"white", "black", "label"}, {}, "edge");
    if (!e["white"].is_string() || !e["black"].is_string())
      throw DocumentError("edge endpoints must be vertex id strings");
    const std::string w = e["white"].get<std::string>();
    const std::string b = e["black"].get<std::string>();
    if (!index.contains(w)) throw DocumentError("edge references unknown vertex \"" + w + "\"");
    if (!index.contains(b)) throw DocumentError("edge references unknown vertex \"" + b + "\"");
    if (!e["label"].is_number_integer()) throw DocumentError("edge label must be an integer");
    out.graph.edges.push_back({index.at(w), index.at(b), e["label"].get<int>()});
  }
  return out;
}

namespace {

std::vector<std::string> default_names(const StratGraph& g) {
  std::vector<std::string> names;
  names.reserve(g.vertices.size());
  std::size_t whites = 0, blacks = 0;
  for (const auto& v : g.vertices) {
    if (v.color == VertexColor::White)
      names.push_back("w" + std::to_string(whites++));
    else
      names.push_back("b" + std::to_string(blacks++));
  }
  return names;
}

std::map<VertexId, std::size_t> index_by_id(const StratGraph& g) {
  std::map<VertexId, std::size_t> out;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) out[g.vertices[i].id] = i;
  return out;
}

}  // namespace

std::string write_document(const StratGraph& g) { return write_document(g, default_names(g)); }

std::string write_document(const StratGraph& g, const std::vector<std::string>& names) {
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const Vertex& v = g.vertices[i];
    ordered_json jv;
    jv["id"] = names[i];
    jv["color"] = v.color == VertexColor::White ? "white" : "black";
    if (v.color == VertexColor::White) jv["genus"] = v.genus;
    doc["vertices"].push_back(std::move(jv));
  }
  const auto index = index_by_id(g);
  doc["edges"] = ordered_json::array();
  for (const auto& e : g.edges) {
    ordered_json je;
    je["white"] = names[index.at(e.white)];
    je["black"] = names[index.at(e.black)];
    je["label"] = e.label;
    doc["edges"].push_back(std::move(je));
  }
  return doc.dump(2) + "\n";
}

std::string write_dot(const StratGraph& g) {
  const auto names = default_names(g);
  const auto index = index_by_id(g);
  std::ostringstream out;
  out << "graph stratifold {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const Vertex& v = g.vertices[i];
    if (v.color == VertexColor::White) {
      out << "  \"" << names[i] << "\" [shape=circle, label=\"g=" << v.genus << "\"];\n";
    } else {
      out << "  \"" << names[i] << "\" [shape=point, width=0.12];\n";
    }
  }
  for (const auto& e : g.edges) {
    out << "  \"" << names[index.at(e.white)] << "\" -- \"" << names[index.at(e.black)]
        << "\" [label=\"" << e.label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_table_csv(const std::vector<SequenceRow>& rows) {
  std::ostringstream out;
  out << "n,R,M,U\n";
  for (const auto& r : rows)
    out << r.n << ',' << r.rooted << ',' << r.birooted << ',' << r.birooted_off_root << '\n';
  return out.str();
}

std::string render_census_csv(const CensusReport& r) {
  std::ostringstream out;
  out << "n,b,descriptor,count\n";
  for (const auto& row : r.rows)
    out << row.n << ',' << row.b << ",\"" << row.descriptor << "\"," << row.count << '\n';
  for (const auto& [b, totals] : r.by_b) {
    if (totals.brute)
      out << r.n << ',' << b << ",\"total\"," << *totals.brute << '\n';
    else if (totals.constructive)
      out << r.n << ',' << b << ",\"total\"," << *totals.constructive << '\n';
  }
  out << r.n << ",all,\"total\"," << r.grand_total << '\n';
  return out.str();
}

std::string render_census_text(const CensusReport& r) {
  std::ostringstream out;
  out << "census for n=" << r.n << " white vertices\n";
  int last_b = -1;
  for (const auto& row : r.rows) {
    if (row.b != last_b) {
      out << " b=" << row.b << "\n";
      last_b = row.b;
    }
    out << "   " << row.descriptor;
    for (std::size_t i = row.descriptor.size(); i < 40; ++i) out << ' ';
    out << row.count << "\n";
  }
  out << " totals by b:\n";
  for (const auto& [b, totals] : r.by_b) {
    out << "   b=" << b << ":";
    if (totals.formula) out << " formula=" << *totals.formula;
    if (totals.constructive) out << " constructive=" << *totals.constructive;
    if (totals.brute) out << " brute=" << *totals.brute;
    out << "\n";
  }
  out << " grand total: " << r.grand_total << "\n";
  out << " engines agree: " << (r.engines_agree ? "yes" : "NO") << "\n";
  for (const auto& d : r.disagreements) out << "   disagreement: " << d << "\n";
  return out.str();
}

std::string render_verdict(const Verdict& v) {
  if (v.accepted) return "accepted\n";
  std::string out = "rejected\n";
  for (const auto& r : v.reasons) out += "  " + r.code + ": " + r.detail + "\n";
  return out;
}

std::string render_pi1(const Pi1Presentation& p) {
  std::string out = "\u27e8";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += p.generators[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    if (i) out += ", ";
    out += p.relations[i];
  }
  out += "\u27e9";
  return out;
}

std::string code_digest(const std::string& canonical_code) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : canonical_code) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

}  // namespace stratifold
