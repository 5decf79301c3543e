#pragma once

// Built-in knot catalog. Expected values are independent of the pipeline:
// adequacy flags of the (-2,3,p) pretzels, slopes of positive braids from their
// crossing counts, and Jones polynomials from the torus-knot closed form or
// published tables.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotslope/diagram.hpp"
#include "knotslope/laurent.hpp"

namespace knotslope {

enum class SourceKind { Unknot, Braid, PD, Pretzel };

struct CatalogExpectation {
  std::optional<bool> a_adequate;
  std::optional<bool> b_adequate;
  std::optional<std::int64_t> slope_a;
  std::optional<std::int64_t> slope_b;
  std::optional<LaurentPoly> jones2;  // J(2, q)
};

struct CatalogEntry {
  std::string name;
  SourceKind kind = SourceKind::Unknot;
  std::string source;  // braid text, PD JSON, or comma-separated pretzel parameters
  CatalogExpectation expected;
};

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) throw InputError("empty entry in integer list '" + text + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InputError("malformed integer '" + tok + "'");
    }
    if (used != tok.size()) throw InputError("malformed integer '" + tok + "'");
    out.push_back(v);
    tok.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (ch != ' ') {
      tok.push_back(ch);
    }
  }
  flush();
  return out;
}

inline PDDiagram build(const CatalogEntry& e) {
  PDDiagram d;
  switch (e.kind) {
    case SourceKind::Unknot: d = unknot_pd(); break;
    case SourceKind::Braid: d = braid_to_pd(parse_braid(e.source)); break;
    case SourceKind::PD: d = parse_pd(e.source); break;
    case SourceKind::Pretzel: {
      const auto params = parse_int_list(e.source);
      for (int q : params) {
        if (q == 0) throw InputError("pretzel parameters must be nonzero");
      }
      d = pretzel_pd(params);
      break;
    }
  }
  d.name = e.name;
  return d;
}

// Jones polynomial of the positive (p,q) torus knot:
// t^((p-1)(q-1)/2) (1 - t^(p+1) - t^(q+1) + t^(p+q)) / (1 - t^2).
inline LaurentPoly torus_knot_jones(int p, int q) {
  const LaurentPoly num{{0, 1}, {p + 1, -1}, {q + 1, -1}, {p + q, 1}};
  const LaurentPoly den{{0, 1}, {2, -1}};
  return divide_exact(num, den).shifted((p - 1) * (q - 1) / 2);
}

inline std::vector<CatalogEntry> builtin_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&](std::string name, SourceKind kind, std::string src, CatalogExpectation ex = {}) {
    c.push_back({std::move(name), kind, std::move(src), std::move(ex)});
  };
  add("unknot", SourceKind::Unknot, "", {true, true, 0, 0, LaurentPoly::constant(1)});
  add("trefoil", SourceKind::Braid, "2: 1 1 1", {true, true, 0, 6, LaurentPoly{{1, 1}, {3, 1}, {4, -1}}});
  add("trefoil-left", SourceKind::Braid, "2: -1 -1 -1", {true, true, -6, 0, LaurentPoly{{-1, 1}, {-3, 1}, {-4, -1}}});
  add("figure-eight", SourceKind::Braid, "3: 1 -2 1 -2",
      {true, true, -4, 4, LaurentPoly{{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}});
  for (int p = 5; p <= 9; p += 2) {
    std::string word = "2:";
    for (int i = 0; i < p; ++i) word += " 1";
    add("torus-2-" + std::to_string(p), SourceKind::Braid, word, {true, true, 0, 2 * p, torus_knot_jones(2, p)});
  }
  // Standard (-2,3,p) pretzel diagrams: A-adequate iff p > 0, B-adequate iff p < 0.
  add("pretzel-(-2,3,3)", SourceKind::Pretzel, "-2,3,3", {true, false, {}, {}, torus_knot_jones(3, 4)});
  add("pretzel-(-2,3,5)", SourceKind::Pretzel, "-2,3,5", {true, false, {}, {}, torus_knot_jones(3, 5)});
  add("pretzel-(-2,3,7)", SourceKind::Pretzel, "-2,3,7", {true, false, {}, {}, {}});
  add("pretzel-(-2,3,-5)", SourceKind::Pretzel, "-2,3,-5", {false, true, {}, {}, {}});
  // All parameters of one sign: reduced alternating.
  add("pretzel-(3,3,3)", SourceKind::Pretzel, "3,3,3", {true, true, {}, {}, {}});
  add("pretzel-(-3,-3,-3)", SourceKind::Pretzel, "-3,-3,-3", {true, true, {}, {}, {}});
  // Positive braids with every exponent >= 3: slopes 0 and 2 * (sum of exponents).
  add("posbraid-3-3", SourceKind::Braid, "3: 1 1 1 2 2 2", {true, true, 0, 12, {}});
  add("posbraid-3-5", SourceKind::Braid, "3: 1 1 1 2 2 2 2 2", {true, true, 0, 16, {}});
  add("posbraid-4-333", SourceKind::Braid, "4: 1 1 1 2 2 2 3 3 3", {true, true, 0, 18, {}});
  // Knot atlas PD codes; Jones polynomials from the same tables.
  add("3_1", SourceKind::PD, R"({"crossings":[[1,4,2,5],[3,6,4,1],[5,2,6,3]]})",
      {true, true, -6, 0, LaurentPoly{{-4, -1}, {-3, 1}, {-1, 1}}});
  add("4_1", SourceKind::PD, R"({"crossings":[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]})",
      {true, true, -4, 4, LaurentPoly{{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}});
  add("5_1", SourceKind::PD, R"({"crossings":[[1,6,2,7],[3,8,4,9],[5,10,6,1],[7,2,8,3],[9,4,10,5]]})",
      {true, true, -10, 0, LaurentPoly{{-7, -1}, {-6, 1}, {-5, -1}, {-4, 1}, {-2, 1}}});
  add("5_2", SourceKind::PD, R"({"crossings":[[1,4,2,5],[3,8,4,9],[5,10,6,1],[9,6,10,7],[7,2,8,3]]})",
      {true, true, -10, 0, LaurentPoly{{-6, -1}, {-5, 1}, {-4, -1}, {-3, 2}, {-2, -1}, {-1, 1}}});
  return c;
}

inline const CatalogEntry& find_catalog_entry(const std::vector<CatalogEntry>& cat, const std::string& name) {
  for (const auto& e : cat) {
    if (e.name == name) return e;
  }
  throw InputError("no catalog entry named '" + name + "'");
}

}  // namespace knotslope
