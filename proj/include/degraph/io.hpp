#pragma once

// JSON and DOT serialization. All emitters return compact single-line JSON
// with keys in a fixed order so output is byte-stable.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "degraph/degrees.hpp"
#include "degraph/family.hpp"
#include "degraph/graph.hpp"
#include "degraph/verify.hpp"

namespace degraph {

using ordered_json = nlohmann::ordered_json;

inline std::string degrees_to_json(const DegreeSet& d) {
  ordered_json j;
  j["degrees"] = d.values();
  return j.dump();
}

inline std::string graph_to_json(const DegreeGraph& g) {
  ordered_json j;
  j["vertices"] = g.vertices();
  j["edges"] = ordered_json::array();
  for (const auto& [p, q] : g.edges()) j["edges"].push_back({p, q});
  return j.dump();
}

// vertex statements, then one statement per edge with the smaller endpoint
// first, edges in ascending lexicographic order
inline std::string graph_to_dot(const DegreeGraph& g) {
  std::string out = "graph G {\n";
  for (std::uint64_t v : g.vertices()) out += "  " + std::to_string(v) + ";\n";
  for (const auto& [p, q] : g.edges())
    out += "  " + std::to_string(p) + " -- " + std::to_string(q) + ";\n";
  out += "}";
  return out;
}

inline DegreeGraph graph_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("graph JSON is unparseable: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON must be an object with vertices and edges");
  if (!j["vertices"].is_array() || !j["edges"].is_array())
    throw std::invalid_argument("graph JSON vertices and edges must be arrays");

  std::vector<std::uint64_t> verts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_number_unsigned())
      throw std::invalid_argument("graph JSON vertices must be unsigned integers");
    verts.push_back(v.get<std::uint64_t>());
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned())
      throw std::invalid_argument("graph JSON edges must be pairs of unsigned integers");
    edges.emplace_back(e[0].get<std::uint64_t>(), e[1].get<std::uint64_t>());
  }
  return DegreeGraph::from_edges(verts, edges);
}

inline std::string clique_to_json(const MaxClique& c) {
  ordered_json j;
  j["size"] = c.size;
  j["witness"] = c.witness;
  return j.dump();
}

inline std::string cover_to_json(const std::optional<TwoCliqueCover>& c) {
  ordered_json j;
  j["exists"] = c.has_value();
  if (c) {
    j["part_a"] = c->part_a;
    j["part_b"] = c->part_b;
  }
  return j.dump();
}

inline ordered_json signature_to_json(const Signature& s) {
  ordered_json j;
  j["q"] = s.q.q;
  j["u"] = s.q.u;
  j["alpha"] = s.q.alpha;
  j["p_minus"] = s.p_minus;
  j["p_plus"] = s.p_plus;
  return j;
}

inline std::string candidates_to_json(std::uint64_t limit, bool prime_powers,
                                      const std::vector<Signature>& sigs) {
  ordered_json j;
  j["limit"] = limit;
  j["prime_powers"] = prime_powers;
  j["count"] = sigs.size();
  j["candidates"] = ordered_json::array();
  for (const Signature& s : sigs) j["candidates"].push_back(signature_to_json(s));
  return j.dump();
}

inline std::string pack_to_json(std::uint64_t limit, bool prime_powers, const std::string& strategy,
                                std::size_t candidate_count, const std::vector<Signature>& family) {
  ordered_json j;
  j["limit"] = limit;
  j["prime_powers"] = prime_powers;
  j["strategy"] = strategy;
  j["candidates"] = candidate_count;
  j["n"] = family.size();
  j["family"] = ordered_json::array();
  for (const Signature& s : family) j["family"].push_back(signature_to_json(s));
  return j.dump();
}

inline std::string family_report_to_json(const FamilyReport& rep) {
  ordered_json j;
  j["n"] = rep.n;
  j["vertices"] = rep.vertex_count;
  j["omega"] = rep.clique_number;
  j["ratio"] = ordered_json{{"num", rep.ratio_num}, {"den", rep.ratio_den}};
  j["ineq_2w_plus_1"] = rep.bound_2w1_holds;
  j["ineq_3w_minus_4"] = rep.bound_3w4_holds;
  j["family"] = ordered_json::array();
  for (const Signature& s : rep.family) j["family"].push_back(signature_to_json(s));
  return j.dump();
}

inline std::string bound_report_to_json(const BoundReport& rep) {
  ordered_json j;
  j["vertices"] = rep.vertex_count;
  j["omega"] = rep.clique_number;
  j["bound"] = rep.bound_value;
  j["holds"] = rep.holds;
  j["ineq_2w_plus_1"] = rep.ineq1_holds;
  return j.dump();
}

inline std::string scan_report_to_json(const ScanReport& rep) {
  ordered_json j;
  j["limit"] = rep.limit;
  j["checked"] = rep.checked;
  j["failures"] = ordered_json::array();
  for (const ScanFailure& f : rep.failures)
    j["failures"].push_back(ordered_json{{"q", f.q}, {"clause", f.clause}});
  return j.dump();
}

}  // namespace degraph
