#pragma once

// JSON encodings shared by every command report.

#include <string>

#include "json.hpp"
#include "knotslope/bracket.hpp"
#include "knotslope/jones.hpp"
#include "knotslope/laurent.hpp"
#include "knotslope/states.hpp"

namespace knotslope {

// [[exponent, "coefficient"], ...] in ascending exponent order.
inline nlohmann::json poly_to_json(const LaurentPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& t : p.terms()) arr.push_back({t.exp, t.coeff.str()});
  return arr;
}

inline LaurentPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("polynomial must be an array of [exponent, coefficient] pairs");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string()) {
      throw InputError("polynomial term must be [integer, \"decimal\"]");
    }
    try {
      terms.push_back({t[0].get<Exponent>(), Integer(t[1].get<std::string>())});
    } catch (const std::runtime_error&) {
      throw InputError("malformed coefficient '" + t[1].get<std::string>() + "'");
    }
  }
  return LaurentPoly::from_terms(std::move(terms));
}

inline nlohmann::json rational_to_json(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

inline nlohmann::json slope_to_json(const Slope& s) { return {{"num", s.num}, {"den", s.den}}; }

inline nlohmann::json stats_to_json(const DiagramStats& s) {
  return {{"c", s.c}, {"c_plus", s.c_plus}, {"c_minus", s.c_minus}, {"w", s.w}, {"components", s.components}};
}

inline nlohmann::json state_to_json(const KauffmanState& s) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < s.size(); ++i) j[std::to_string(i)] = s[i] == Smoothing::A ? "A" : "B";
  return j;
}

inline nlohmann::json graph_to_json(const StateGraph& g) {
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  return {{"vertices", g.vertex_count}, {"edges", edges}};
}

inline nlohmann::json telemetry_to_json(const EngineTelemetry& t) {
  return {{"max_width", t.max_width}, {"support_peak", t.support_peak}, {"crossings", t.crossings}};
}

inline nlohmann::json table_to_json(const ColoredJonesTable& t) {
  auto entries = nlohmann::json::array();
  for (const auto& e : t.entries) {
    entries.push_back({{"n", e.n}, {"J", poly_to_json(e.j)}, {"J_text", e.j.to_string("q")}, {"jmax", e.jmax}, {"jmin", e.jmin}});
  }
  auto tel = nlohmann::json::array();
  for (const auto& [m, te] : t.telemetry) {
    auto j = telemetry_to_json(te);
    j["cable"] = m;
    tel.push_back(j);
  }
  return {{"entries", entries}, {"telemetry", tel}};
}

inline nlohmann::json sequences_to_json(const SlopeSequences& s) {
  auto rats = [](const std::vector<Rational>& v) {
    auto a = nlohmann::json::array();
    for (const auto& r : v) a.push_back(rational_to_json(r));
    return a;
  };
  return {{"js", rats(s.js)}, {"js_star", rats(s.js_star)}, {"d2j", s.d2j}, {"d2j_star", s.d2j_star}};
}

inline nlohmann::json side_to_json(const SideVerdict& s) {
  nlohmann::json j{{"side", to_string(s.side)},
                   {"adequate", s.adequate},
                   {"predicted_slope", slope_to_json(s.predicted)},
                   {"diagnostic", rational_to_json(s.diagnostic)}};
  j["estimated_slope"] = s.estimated ? nlohmann::json(*s.estimated) : nlohmann::json(nullptr);
  if (s.adequate) {
    j["exact_match"] = s.exact_match;
    j["degrees_match_prediction"] = s.degrees_match_prediction;
    j["gating"] = true;
  } else {
    j["gating"] = false;
  }
  return j;
}

inline nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j{{"stats", stats_to_json(v.stats)},
                   {"A_adequate", v.adequacy.a_adequate},
                   {"B_adequate", v.adequacy.b_adequate},
                   {"v_A", v.adequacy.v_a},
                   {"v_B", v.adequacy.v_b},
                   {"slope_A", slope_to_json(v.slopes.a)},
                   {"slope_B", slope_to_json(v.slopes.b)},
                   {"seifert_slope", slope_to_json(v.seifert_slope)},
                   {"A_side", side_to_json(v.a_side)},
                   {"B_side", side_to_json(v.b_side)},
                   {"table", table_to_json(v.table)},
                   {"sequences", sequences_to_json(v.sequences)},
                   {"notes", v.notes},
                   {"passed", v.passed()}};
  j["slopes_distinct"] = v.slopes_distinct ? nlohmann::json(*v.slopes_distinct) : nlohmann::json(nullptr);
  return j;
}

}  // namespace knotslope
