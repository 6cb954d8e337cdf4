#pragma once

#include <sstream>

#include <json.hpp>

#include "braidscope/config_complex.hpp"
#include "braidscope/graph.hpp"
#include "braidscope/sun_models.hpp"
#include "braidscope/van_kampen.hpp"

namespace braidscope {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------- graphs

inline json graph_to_json(const Graph& g) {
  json j;
  j["vertex_count"] = g.vertex_count;
  j["edges"] = json::array();
  for (const auto& [u, v] : g.edges) j["edges"].push_back({u, v});
  json labels = json::object();
  for (const auto& [v, role] : g.labels) labels[std::to_string(v)] = role_name(role);
  j["labels"] = labels;
  return j;
}

inline Graph graph_from_json(const json& j) {
  if (!j.contains("vertex_count") || !j.contains("edges"))
    throw std::invalid_argument("graph json: vertex_count and edges are required");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph json: each edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::map<int, VertexRole> labels;
  if (j.contains("labels"))
    for (const auto& [key, value] : j.at("labels").items())
      labels[std::stoi(key)] = role_from_name(value.get<std::string>());
  return make_graph(j.at("vertex_count").get<int>(), std::move(edges), std::move(labels));
}

// ----------------------------------------------------------- presentations

inline json presentation_to_json(const Presentation& p) {
  json j;
  j["generators"] = p.generator_names;
  j["relators"] = json::array();
  for (const auto& r : p.relators) j["relators"].push_back(r);
  return j;
}

inline Presentation presentation_from_json(const json& j) {
  std::vector<std::string> names = j.at("generators").get<std::vector<std::string>>();
  std::vector<Word> relators;
  if (j.contains("relators"))
    for (const auto& r : j.at("relators")) relators.push_back(r.get<Word>());
  return make_presentation(std::move(names), std::move(relators));
}

/// Text format: first line "gens: a,b,...", then one relator per line in
/// "a b^-1 a" syntax ("1" for the trivial word).
inline std::string presentation_to_text(const Presentation& p) {
  std::string out = "gens: ";
  for (size_t i = 0; i < p.generator_names.size(); ++i) {
    if (i) out += ',';
    out += p.generator_names[i];
  }
  out += '\n';
  for (const auto& r : p.relators) out += word_to_text(r, p.generator_names) + '\n';
  return out;
}

inline Presentation presentation_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("gens:", 0) != 0)
    throw std::invalid_argument("presentation text: expected leading 'gens:' line");
  std::vector<std::string> names;
  {
    std::string rest = line.substr(5);
    std::string cur;
    for (char c : rest) {
      if (c == ',') {
        if (!cur.empty()) names.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
    if (!cur.empty()) names.push_back(cur);
  }
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) index[names[i]] = i;
  std::vector<Word> relators;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    Word w;
    std::string tok;
    bool any = false;
    while (ls >> tok) {
      any = true;
      if (tok == "1") continue;
      int power = 1;
      std::string name = tok;
      if (auto caret = tok.find('^'); caret != std::string::npos) {
        name = tok.substr(0, caret);
        power = std::stoi(tok.substr(caret + 1));
      }
      auto it = index.find(name);
      if (it == index.end())
        throw std::invalid_argument("presentation text: unknown generator " + name);
      for (int i = 0; i < std::abs(power); ++i)
        w.push_back(power > 0 ? it->second + 1 : -(it->second + 1));
    }
    if (any) relators.push_back(std::move(w));
  }
  return make_presentation(std::move(names), std::move(relators));
}

// ------------------------------------------------------------- complexes

inline json counts_to_json(const std::vector<long long>& counts, long long euler) {
  json j;
  j["counts"] = counts;
  j["euler"] = euler;
  return j;
}

/// DOT rendering of the 1-skeleton: 0-cells as nodes labeled by their
/// occupied vertex sets.
inline std::string skeleton_to_dot(const ConfigComplex& cx) {
  std::string out = "graph config_skeleton {\n";
  for (size_t i = 0; i < cx.zero_cells.size(); ++i) {
    std::string label = "{";
    bool first = true;
    for (const auto& a : cx.zero_cells[i].atoms) {
      if (!first) label += ',';
      label += std::to_string(a.index);
      first = false;
    }
    label += '}';
    out += "  c" + std::to_string(i) + " [label=\"" + label + "\"];\n";
  }
  for (const auto& oc : cx.one_cells)
    out += "  c" + std::to_string(oc.endpoints[0]) + " -- c" + std::to_string(oc.endpoints[1]) +
           ";\n";
  out += "}\n";
  return out;
}

// ------------------------------------------------------------ van kampen

inline json gvk_to_json(const GvkInput& input) {
  json j;
  j["A"] = presentation_to_json(input.a);
  j["B"] = presentation_to_json(input.b);
  j["components"] = json::array();
  for (const auto& comp : input.components) {
    json c;
    c["pres"] = presentation_to_json(comp.pres);
    c["homA"] = json::array();
    for (const auto& w : comp.into_a.images) c["homA"].push_back(w);
    c["homB"] = json::array();
    for (const auto& w : comp.into_b.images) c["homB"].push_back(w);
    j["components"].push_back(std::move(c));
  }
  return j;
}

inline GvkInput gvk_from_json(const json& j) {
  GvkInput input;
  input.a = presentation_from_json(j.at("A"));
  input.b = presentation_from_json(j.at("B"));
  for (const auto& c : j.at("components")) {
    GvkComponent comp;
    comp.pres = presentation_from_json(c.at("pres"));
    std::vector<Word> images_a, images_b;
    for (const auto& w : c.at("homA")) images_a.push_back(w.get<Word>());
    for (const auto& w : c.at("homB")) images_b.push_back(w.get<Word>());
    comp.into_a = PresHom{comp.pres, input.a, std::move(images_a)};
    comp.into_b = PresHom{comp.pres, input.b, std::move(images_b)};
    input.components.push_back(std::move(comp));
  }
  return input;
}

// ---------------------------------------------------------------- reports

inline json verify_row_to_json(const VerifyRow& row) {
  json j;
  j["family"] = row.family;
  j["param"] = row.param;
  j["expected"] = row.expected;
  if (row.computed)
    j["computed"] = *row.computed;
  else
    j["computed"] = nullptr;
  j["chi"] = row.chi;
  j["consistent"] = row.consistent;
  j["status"] = row.pass ? "pass" : "fail";
  return j;
}

inline json verify_report_to_json(const VerifyReport& report) {
  json j = json::array();
  for (const auto& row : report.rows) j.push_back(verify_row_to_json(row));
  return j;
}

}  // namespace braidscope
