#pragma once

/**
 * @file json_format.hpp
 * @brief JSON rendering of reports and parsing of generator files.
 *
 * Field order is fixed (insertion-ordered objects) so identical inputs
 * produce byte-identical output.  Group orders are emitted as decimal
 * strings: they overflow 64-bit integers well before the degrees handled
 * here become interesting.
 */

#include <string>
#include <vector>

#include "json.hpp"

#include "ct/class_transposition.hpp"
#include "ct/errors.hpp"
#include "ct/permutation.hpp"
#include "ct/product_graph.hpp"
#include "ct/search.hpp"
#include "ct/stabilizer_chain.hpp"

namespace ct {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const cycle_structure& cs) {
  ordered_json j;
  j["degree"] = cs.degree;
  j["cycles"] = cs.cycles;
  j["fixed"] = cs.fixed;
  j["order"] = structure_order(cs).str();
  return j;
}

inline ordered_json to_json(const order_report& rep) {
  ordered_json j;
  j["t1"] = rep.t1_text;
  j["t2"] = rep.t2_text;
  j["status"] = rep.status;
  j["order"] = rep.order ? ordered_json(rep.order->str()) : ordered_json(nullptr);
  j["cycle_lengths"] = rep.cycle_lengths;
  ordered_json comps = ordered_json::array();
  for (const component_summary& c : rep.components) {
    ordered_json e;
    e["kind"] = to_string(c.kind);
    e["shape"] = c.shape ? ordered_json(*c.shape) : ordered_json(nullptr);
    e["vertices"] = c.vertices;
    e["type1_edges"] = c.type1_edges;
    e["mu_min"] = c.mu_min;
    comps.push_back(std::move(e));
  }
  j["components"] = std::move(comps);
  j["budget"] = rep.budget;
  j["window"] = rep.window ? ordered_json(*rep.window) : ordered_json(nullptr);
  return j;
}

inline ordered_json to_json(const conjecture_report& rep) {
  ordered_json j;
  j["k"] = rep.k;
  j["N"] = rep.degree;
  j["order"] = rep.group_order.str();
  j["n_factorial"] = rep.symmetric_order.str();
  j["equal"] = rep.equal;
  return j;
}

inline ordered_json to_json(const search_result& r) {
  const search_summary& s = r.summary;
  ordered_json j;
  j["max_modulus"] = s.max_modulus;
  j["transpositions"] = s.transpositions;
  j["pairs"] = s.pairs;
  ordered_json records = ordered_json::array();
  for (const search_record& rec : r.records) {
    ordered_json e;
    e["t1"] = to_string(rec.t1);
    e["t2"] = to_string(rec.t2);
    e["order"] = rec.order.str();
    e["status"] = "exact";
    e["method"] = "finite";
    records.push_back(std::move(e));
  }
  j["records"] = std::move(records);
  ordered_json realized = ordered_json::array();
  for (const bigint& o : s.realized) realized.push_back(o.str());
  j["realized"] = std::move(realized);
  ordered_json witnesses = ordered_json::array();
  for (const order_witness& w : s.witnesses) {
    ordered_json e;
    e["order"] = w.order.str();
    e["t1"] = to_string(w.record.t1);
    e["t2"] = to_string(w.record.t2);
    e["support_disjoint"] = w.support_disjoint;
    witnesses.push_back(std::move(e));
  }
  j["witnesses"] = std::move(witnesses);
  j["contained"] = s.contained;
  ordered_json violations = ordered_json::array();
  for (const search_record& rec : s.violations) {
    ordered_json e;
    e["t1"] = to_string(rec.t1);
    e["t2"] = to_string(rec.t2);
    e["order"] = rec.order.str();
    violations.push_back(std::move(e));
  }
  j["violations"] = std::move(violations);
  j["note"] = s.note;
  return j;
}

// Reads {"degree": N, "generators": [{"cycles": [[...], ...]}, ...]}.  The
// cycle lists use the same canonical form the library prints; each generator
// is validated against the declared degree.
inline generator_set parse_generators_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid generators JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    throw parse_error("generators JSON must be an object with 'degree' and 'generators'");
  if (!j["degree"].is_number_integer())
    throw parse_error("'degree' must be an integer");
  generator_set out;
  out.degree = j["degree"].get<int>();
  if (out.degree < 1) throw parse_error("'degree' must be positive");
  if (!j["generators"].is_array()) throw parse_error("'generators' must be an array");
  std::size_t i = 0;
  for (const auto& g : j["generators"]) {
    if (!g.is_object() || !g.contains("cycles") || !g["cycles"].is_array())
      throw parse_error("each generator must be an object with a 'cycles' array");
    std::string cycles_text;
    for (const auto& cyc : g["cycles"]) {
      if (!cyc.is_array()) throw parse_error("each cycle must be an array of points");
      cycles_text += '(';
      bool first = true;
      for (const auto& pt : cyc) {
        if (!pt.is_number_integer()) throw parse_error("cycle entries must be integers");
        if (!first) cycles_text += ',';
        cycles_text += std::to_string(pt.get<long long>());
        first = false;
      }
      cycles_text += ')';
    }
    if (cycles_text.empty()) cycles_text = "()";
    out.gens.push_back({"g" + std::to_string(i), parse_cycles(cycles_text, out.degree)});
    ++i;
  }
  return out;
}

}  // namespace ct
