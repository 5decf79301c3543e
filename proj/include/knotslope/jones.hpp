#pragma once

// Colored Jones polynomials through Chebyshev cabling, their extreme degrees,
// and the comparison of degree growth with the state-surface slopes.
//
// For color n+1 the unnormalized invariant is
//   U_n = ((-1)^n A^(n^2+2n))^(-w) * <S_n(D)>,
// where <S_n(D)> = sum_m a_{n,m} <D^m> in the delta normalization. J(n+1, q)
// is U_n divided by the same quantity for the crossingless unknot, with
// q = A^-4, so that the unknot has J = 1 for every color.

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "knotslope/bracket.hpp"
#include "knotslope/diagram.hpp"
#include "knotslope/laurent.hpp"
#include "knotslope/states.hpp"

namespace knotslope {

using Rational = boost::rational<std::int64_t>;

// S_n(x) = sum_m coeffs[m] x^m.
struct ChebyshevExpansion {
  int n = 0;
  std::map<int, Integer> coeffs;

  Integer coeff(int m) const {
    auto it = coeffs.find(m);
    return it == coeffs.end() ? Integer(0) : it->second;
  }
};

inline ChebyshevExpansion chebyshev(int n) {
  if (n < 0) throw InputError("Chebyshev index must be nonnegative");
  // S_{k+1} = x S_k - S_{k-1}, S_0 = 1, S_1 = x.
  std::vector<Integer> prev{1};
  std::vector<Integer> cur{0, 1};
  if (n == 0) cur = prev;
  for (int k = 1; k < n; ++k) {
    std::vector<Integer> nxt(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) nxt[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) nxt[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(nxt);
  }
  ChebyshevExpansion e;
  e.n = n;
  for (std::size_t m = 0; m < cur.size(); ++m) {
    if (cur[m] != 0) e.coeffs[static_cast<int>(m)] = cur[m];
  }
  return e;
}

struct JonesOptions {
  Engine engine = Engine::Dp;
  int threads = 1;
  int oracle_bound = kDefaultOracleBound;
};

// Brackets <D^m> of the blackboard cables of one sweep, computed on demand.
class CableBrackets {
 public:
  CableBrackets(MorsePresentation base, JonesOptions opts) : base_(std::move(base)), opts_(opts) {}

  // Ensures <D^m> is available for every m <= m_max.
  void prepare(int m_max) {
    std::vector<int> missing;
    for (int m = 0; m <= m_max; ++m) {
      if (!values_.count(m)) missing.push_back(m);
    }
    if (missing.empty()) return;
    std::vector<CombinationTerm> terms;
    for (int m : missing) terms.push_back({1, m == 0 ? MorsePresentation{} : cable(base_, m)});
    // Evaluate one at a time so telemetry stays attached to its cable.
    auto r = std::vector<BracketValue>(terms.size());
    if (opts_.threads <= 1) {
      for (std::size_t i = 0; i < terms.size(); ++i) r[i] = bracket(terms[i].diagram, opts_.engine, opts_.oracle_bound);
    } else {
      std::vector<std::future<BracketValue>> fut;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        fut.push_back(std::async(std::launch::async,
                                 [&, i] { return bracket(terms[i].diagram, opts_.engine, opts_.oracle_bound); }));
      }
      for (std::size_t i = 0; i < terms.size(); ++i) r[i] = fut[i].get();
    }
    for (std::size_t i = 0; i < missing.size(); ++i) values_.emplace(missing[i], std::move(r[i]));
  }

  const BracketValue& at(int m) {
    prepare(m);
    return values_.at(m);
  }

  // <S_n(D)> in the delta normalization.
  LaurentPoly cabled(int n) {
    prepare(n);
    LaurentPoly sum;
    for (const auto& [m, a] : chebyshev(n).coeffs) sum += values_.at(m).delta * a;
    return sum;
  }

  const std::map<int, BracketValue>& values() const noexcept { return values_; }

 private:
  MorsePresentation base_;
  JonesOptions opts_;
  std::map<int, BracketValue> values_;
};

inline LaurentPoly cabled_bracket(const MorsePresentation& d, int n, const JonesOptions& opts = {}) {
  CableBrackets cb(d, opts);
  return cb.cabled(n);
}

// <S_n(unknot)> = (-1)^n (A^(2n+2) - A^(-2n-2)) / (A^2 - A^-2).
inline LaurentPoly unknot_cabled_value(int n) {
  LaurentPoly p;
  const Integer sign = (n % 2 == 0) ? 1 : -1;
  for (int k = 0; k <= n; ++k) p += LaurentPoly::mono(sign, 2 * n - 4 * k);
  return p;
}

namespace detail {

inline LaurentPoly framing_factor(int n, int writhe) {
  // ((-1)^n A^(n^2+2n))^(-w)
  const std::int64_t e = -static_cast<std::int64_t>(writhe) * (static_cast<std::int64_t>(n) * n + 2 * n);
  const bool negative = (n % 2 != 0) && (writhe % 2 != 0);
  return LaurentPoly::mono(negative ? -1 : 1, e);
}

inline LaurentPoly jones_from_cabled(const LaurentPoly& cabled, int n, int writhe) {
  const LaurentPoly u = detail::framing_factor(n, writhe) * cabled;
  return divide_exact(u, unknot_cabled_value(n)).substitute_q();
}

}  // namespace detail

inline LaurentPoly colored_jones(const PDDiagram& d, int n_color, const JonesOptions& opts = {}) {
  if (n_color < 1) throw InputError("color must be at least 1");
  const auto st = stats(d);
  if (st.components != 1) throw MultiComponent(st.components);
  const int n = n_color - 1;
  return detail::jones_from_cabled(cabled_bracket(to_morse(d), n, opts), n, st.w);
}

struct JonesEntry {
  int n = 0;
  LaurentPoly j;  // in q
  std::int64_t jmax = 0;
  std::int64_t jmin = 0;
};

struct ColoredJonesTable {
  std::vector<JonesEntry> entries;  // colors 1..n_max
  std::vector<std::pair<int, EngineTelemetry>> telemetry;  // per cable size

  const JonesEntry& at(int n) const { return entries.at(static_cast<std::size_t>(n - 1)); }
  int n_max() const noexcept { return static_cast<int>(entries.size()); }
};

inline ColoredJonesTable jones_table(const PDDiagram& d, int n_max, const JonesOptions& opts = {}) {
  if (n_max < 1) throw InputError("n_max must be at least 1");
  const auto st = stats(d);
  if (st.components != 1) throw MultiComponent(st.components);
  CableBrackets cb(to_morse(d), opts);
  cb.prepare(n_max - 1);
  ColoredJonesTable t;
  for (int color = 1; color <= n_max; ++color) {
    const int n = color - 1;
    JonesEntry e;
    e.n = color;
    e.j = detail::jones_from_cabled(cb.cabled(n), n, st.w);
    const auto b = e.j.degree_bounds();
    e.jmin = b.min;
    e.jmax = b.max;
    t.entries.push_back(std::move(e));
  }
  for (const auto& [m, v] : cb.values()) t.telemetry.emplace_back(m, v.telemetry);
  return t;
}

enum class Side { A, B };

inline std::string to_string(Side s) { return s == Side::A ? "A" : "B"; }

// Exact extreme q-degree of J(n_color) for a diagram adequate on `side`:
// side A gives j*(n_color) from v = v_A, side B gives j(n_color) from v = v_B.
inline std::int64_t predict_extreme_degree(const DiagramStats& s, int v, int n_color, Side side) {
  const std::int64_t n = n_color - 1;
  const std::int64_t c = s.c, w = s.w;
  std::int64_t num = 0;
  if (side == Side::A) {
    // max A-degree = -w(n^2+2n) + n^2 c + 2n v_A - 2n, and j* = -max/4.
    num = w * (n * n + 2 * n) - n * n * c - 2 * n * v + 2 * n;
  } else {
    // min A-degree = -w(n^2+2n) - n^2 c - 2n v_B + 2n, and j = -min/4.
    num = w * (n * n + 2 * n) + n * n * c + 2 * n * v - 2 * n;
  }
  if (num % 4 != 0) throw NotDivisibleBy4("predicted A-degree is not divisible by 4");
  return num / 4;
}

inline std::int64_t predict_extreme_degree(const PDDiagram& d, int n_color, Side side) {
  const auto a = is_adequate(d);
  if ((side == Side::A && !a.a_adequate) || (side == Side::B && !a.b_adequate)) {
    throw InputError("diagram is not " + to_string(side) + "-adequate");
  }
  return predict_extreme_degree(stats(d), side == Side::A ? a.v_a : a.v_b, n_color, side);
}

struct SlopeSequences {
  std::vector<Rational> js;       // 4 j(n) / n^2, n = 1..N
  std::vector<Rational> js_star;  // 4 j*(n) / n^2
  std::vector<std::int64_t> d2j;       // j(n+1) - 2j(n) + j(n-1), n = 2..N-1
  std::vector<std::int64_t> d2j_star;
};

inline SlopeSequences slope_sequences(const ColoredJonesTable& t) {
  if (t.n_max() < 3) throw InputError("slope sequences need at least 3 colors");
  SlopeSequences s;
  for (const auto& e : t.entries) {
    const std::int64_t n2 = static_cast<std::int64_t>(e.n) * e.n;
    s.js.emplace_back(4 * e.jmax, n2);
    s.js_star.emplace_back(4 * e.jmin, n2);
  }
  for (int n = 2; n < t.n_max(); ++n) {
    s.d2j.push_back(t.at(n + 1).jmax - 2 * t.at(n).jmax + t.at(n - 1).jmax);
    s.d2j_star.push_back(t.at(n + 1).jmin - 2 * t.at(n).jmin + t.at(n - 1).jmin);
  }
  return s;
}

struct SideVerdict {
  Side side = Side::A;
  bool adequate = false;
  Slope predicted;  // state-surface slope: -2c_- or +2c_+
  // 2 * (second difference) when all second differences agree.
  std::optional<std::int64_t> estimated;
  bool exact_match = false;
  // Every computed extreme degree equals the closed-form prediction.
  bool degrees_match_prediction = false;
  // Non-gating 4 j(N)/N^2 (or j*) at the largest computed color.
  Rational diagnostic;
};

struct Verdict {
  DiagramStats stats;
  Adequacy adequacy;
  BoundarySlopes slopes;
  Slope seifert_slope;
  SideVerdict a_side;
  SideVerdict b_side;
  ColoredJonesTable table;
  SlopeSequences sequences;
  std::optional<bool> slopes_distinct;
  std::vector<std::string> notes;

  // All checks on adequate sides hold.
  bool passed() const {
    auto side_ok = [](const SideVerdict& s) { return !s.adequate || (s.exact_match && s.degrees_match_prediction); };
    return side_ok(a_side) && side_ok(b_side) && slopes_distinct.value_or(true) && seifert_slope == Slope::integer(0);
  }
};

inline int default_max_n(int crossings) {
  if (crossings <= 4) return 5;
  if (crossings <= 10) return 4;
  return 3;
}

inline Verdict verify(const PDDiagram& d, int n_max, const JonesOptions& opts = {}) {
  if (n_max < 3) throw InputError("verification needs n_max >= 3");
  Verdict v;
  v.stats = stats(d);
  if (v.stats.components != 1) throw MultiComponent(v.stats.components);
  v.adequacy = is_adequate(d);
  v.slopes = boundary_slopes(d);
  v.seifert_slope = state_slope(d, seifert_state(d));
  v.table = jones_table(d, n_max, opts);
  v.sequences = slope_sequences(v.table);

  auto fill = [&](SideVerdict& sv, Side side) {
    sv.side = side;
    const bool a = side == Side::A;
    sv.adequate = a ? v.adequacy.a_adequate : v.adequacy.b_adequate;
    sv.predicted = a ? v.slopes.a : v.slopes.b;
    const auto& d2 = a ? v.sequences.d2j_star : v.sequences.d2j;
    if (!d2.empty() && std::all_of(d2.begin(), d2.end(), [&](std::int64_t x) { return x == d2.front(); })) {
      sv.estimated = 2 * d2.front();
    }
    const auto& last = v.table.entries.back();
    sv.diagnostic = Rational(4 * (a ? last.jmin : last.jmax), static_cast<std::int64_t>(last.n) * last.n);
    if (sv.adequate) {
      sv.exact_match = sv.estimated.has_value() && Slope::integer(*sv.estimated) == sv.predicted;
      sv.degrees_match_prediction = true;
      for (const auto& e : v.table.entries) {
        const auto p = predict_extreme_degree(v.stats, a ? v.adequacy.v_a : v.adequacy.v_b, e.n, side);
        if (p != (a ? e.jmin : e.jmax)) sv.degrees_match_prediction = false;
      }
    }
  };
  fill(v.a_side, Side::A);
  fill(v.b_side, Side::B);

  if (!v.a_side.adequate && !v.b_side.adequate) {
    v.notes.push_back("no adequate side; the slope detection statement does not apply");
  }
  for (const auto* sv : {&v.a_side, &v.b_side}) {
    if (!sv->adequate) {
      v.notes.push_back(to_string(sv->side) + " side not adequate; diagnostic only (non-gating)");
    }
  }
  if (v.a_side.adequate && v.b_side.adequate && v.stats.c > 0) {
    v.slopes_distinct = v.a_side.estimated && v.b_side.estimated && *v.a_side.estimated != *v.b_side.estimated;
  }
  return v;
}

}  // namespace knotslope
