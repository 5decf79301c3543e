#pragma once

// Kauffman bracket: <crossing> = A <A-smoothing> + A^-1 <B-smoothing>, each
// closed circle contributes delta = -A^2 - A^-2 and the empty diagram is 1.
//
// Two engines compute the same value: a state-sum oracle over all 2^c
// Kauffman states of a PD code, and a sweep over a Morse presentation that
// carries a map from noncrossing matchings of the frontier to amplitudes.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <future>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "knotslope/diagram.hpp"
#include "knotslope/laurent.hpp"
#include "knotslope/states.hpp"

namespace knotslope {

enum class Engine { Naive, Dp };

inline std::string to_string(Engine e) { return e == Engine::Naive ? "naive" : "dp"; }

inline Engine parse_engine(const std::string& s) {
  if (s == "naive") return Engine::Naive;
  if (s == "dp") return Engine::Dp;
  throw InputError("unknown engine '" + s + "' (expected naive or dp)");
}

inline constexpr int kDefaultOracleBound = 16;

struct EngineTelemetry {
  int max_width = 0;
  std::size_t support_peak = 0;  // largest number of live matchings
  int crossings = 0;
};

struct BracketValue {
  // Empty diagram = 1, every circle contributes delta.
  LaurentPoly delta;
  // delta / delta-value of one circle; absent for the empty diagram.
  std::optional<LaurentPoly> circle;
  EngineTelemetry telemetry;
};

namespace detail {

inline BracketValue finish(LaurentPoly delta_poly, bool nonempty, EngineTelemetry t) {
  BracketValue v;
  if (nonempty) v.circle = divide_exact(delta_poly, LaurentPoly::delta());
  v.delta = std::move(delta_poly);
  v.telemetry = t;
  return v;
}

}  // namespace detail

inline BracketValue bracket_naive(const PDDiagram& d, int oracle_bound = kDefaultOracleBound) {
  const int c = d.crossing_count();
  if (c > oracle_bound) {
    throw ResourceError("state-sum oracle limited to " + std::to_string(oracle_bound) + " crossings, diagram has " +
                        std::to_string(c));
  }
  const int na = d.arc_count();
  // counts[#A][#circles]
  std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(c + 1),
                                                 std::vector<std::uint64_t>(static_cast<std::size_t>(na + d.free_loops + 2), 0));
  std::vector<int> parent(static_cast<std::size_t>(na));
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  const std::uint64_t states = std::uint64_t{1} << c;
  for (std::uint64_t mask = 0; mask < states; ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int circles = na;
    int num_a = 0;
    for (int i = 0; i < c; ++i) {
      const bool is_b = (mask >> i) & 1;
      num_a += is_b ? 0 : 1;
      const auto& x = d.crossings[static_cast<std::size_t>(i)];
      const auto& pr = kSmoothingPairs[is_b ? 1 : 0];
      for (int k = 0; k < 4; k += 2) {
        const int r1 = find(x[static_cast<std::size_t>(pr[static_cast<std::size_t>(k)])] - 1);
        const int r2 = find(x[static_cast<std::size_t>(pr[static_cast<std::size_t>(k + 1)])] - 1);
        if (r1 != r2) {
          parent[static_cast<std::size_t>(r2)] = r1;
          --circles;
        }
      }
    }
    ++counts[static_cast<std::size_t>(num_a)][static_cast<std::size_t>(circles + d.free_loops)];
  }
  std::vector<LaurentPoly> delta_pow{LaurentPoly::constant(1)};
  LaurentPoly sum;
  for (int a = 0; a <= c; ++a) {
    for (std::size_t k = 0; k < counts[static_cast<std::size_t>(a)].size(); ++k) {
      const auto n = counts[static_cast<std::size_t>(a)][k];
      if (n == 0) continue;
      while (delta_pow.size() <= k) delta_pow.push_back(delta_pow.back() * LaurentPoly::delta());
      sum.add_shifted(delta_pow[k] * Integer(n), a - (c - a));
    }
  }
  EngineTelemetry t;
  t.crossings = c;
  return detail::finish(std::move(sum), c > 0 || d.free_loops > 0, t);
}

namespace detail {

// partner[i] = index matched with i; stored as bytes in a string key.
using Matching = std::string;

inline Matching insert_cup(const Matching& m, std::size_t p) {
  Matching r;
  r.reserve(m.size() + 2);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == p) {
      r.push_back(static_cast<char>(p + 1));
      r.push_back(static_cast<char>(p));
    }
    auto q = static_cast<std::size_t>(static_cast<unsigned char>(m[i]));
    r.push_back(static_cast<char>(q >= p ? q + 2 : q));
  }
  if (p == m.size()) {
    r.push_back(static_cast<char>(p + 1));
    r.push_back(static_cast<char>(p));
  }
  return r;
}

// Joins points p and p+1; reports whether they closed a circle.
inline Matching apply_cap(const Matching& m, std::size_t p, bool& closed) {
  const auto i = static_cast<std::size_t>(static_cast<unsigned char>(m[p]));
  const auto j = static_cast<std::size_t>(static_cast<unsigned char>(m[p + 1]));
  closed = (i == p + 1);
  Matching t = m;
  if (!closed) {
    t[i] = static_cast<char>(j);
    t[j] = static_cast<char>(i);
  }
  Matching r;
  r.reserve(m.size() - 2);
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k == p || k == p + 1) continue;
    auto q = static_cast<std::size_t>(static_cast<unsigned char>(t[k]));
    r.push_back(static_cast<char>(q > p + 1 ? q - 2 : q));
  }
  return r;
}

inline void accumulate(std::unordered_map<Matching, LaurentPoly>& into, const Matching& key, const LaurentPoly& amp,
                       Exponent shift, bool times_delta) {
  auto& slot = into[key];
  if (times_delta) {
    slot.add_shifted(amp, shift + 2, true);
    slot.add_shifted(amp, shift - 2, true);
  } else {
    slot.add_shifted(amp, shift, false);
  }
}

}  // namespace detail

inline BracketValue bracket_dp(const MorsePresentation& m) {
  EngineTelemetry t;
  t.max_width = m.validate();
  using Map = std::unordered_map<detail::Matching, LaurentPoly>;
  Map cur;
  cur.emplace(detail::Matching{}, LaurentPoly::constant(1));
  bool nonempty = false;
  for (const auto& e : m.events) {
    const auto p = static_cast<std::size_t>(e.position);
    Map next;
    next.reserve(cur.size() * 2);
    switch (e.kind) {
      case EventKind::Cup:
        nonempty = true;
        for (auto& [key, amp] : cur) next.emplace(detail::insert_cup(key, p), std::move(amp));
        break;
      case EventKind::Cap:
        for (auto& [key, amp] : cur) {
          bool closed = false;
          auto k2 = detail::apply_cap(key, p, closed);
          detail::accumulate(next, k2, amp, 0, closed);
        }
        break;
      default: {
        ++t.crossings;
        // CrossPos = A * identity + A^-1 * cap-cup; CrossNeg swaps the weights.
        const Exponent id_shift = e.kind == EventKind::CrossPos ? 1 : -1;
        for (auto& [key, amp] : cur) {
          bool closed = false;
          auto k2 = detail::insert_cup(detail::apply_cap(key, p, closed), p);
          detail::accumulate(next, k2, amp, -id_shift, closed);
          detail::accumulate(next, key, amp, id_shift, false);
        }
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    cur = std::move(next);
    t.support_peak = std::max(t.support_peak, cur.size());
  }
  LaurentPoly result = cur.empty() ? LaurentPoly{} : std::move(cur.begin()->second);
  return detail::finish(std::move(result), nonempty, t);
}

// Bracket of a sweep with the chosen engine. The oracle runs on the PD image.
inline BracketValue bracket(const MorsePresentation& m, Engine engine, int oracle_bound = kDefaultOracleBound) {
  if (engine == Engine::Dp) return bracket_dp(m);
  if (m.crossing_count() > oracle_bound) {
    throw ResourceError("state-sum oracle limited to " + std::to_string(oracle_bound) + " crossings, diagram has " +
                        std::to_string(m.crossing_count()));
  }
  auto v = bracket_naive(morse_to_pd(orient(m)), oracle_bound);
  v.telemetry.max_width = m.max_width();
  return v;
}

struct CombinationTerm {
  Integer coeff;
  MorsePresentation diagram;
};

struct CombinationResult {
  LaurentPoly value;
  std::vector<EngineTelemetry> telemetry;
};

// Sum of coeff * <diagram> in the delta normalization, terms evaluated on up to `threads` workers.
inline CombinationResult bracket_combination(const std::vector<CombinationTerm>& terms, Engine engine = Engine::Dp,
                                             int threads = 1, int oracle_bound = kDefaultOracleBound) {
  std::vector<BracketValue> values(terms.size());
  if (threads <= 1 || terms.size() <= 1) {
    for (std::size_t i = 0; i < terms.size(); ++i) values[i] = bracket(terms[i].diagram, engine, oracle_bound);
  } else {
    std::size_t next = 0;
    while (next < terms.size()) {
      std::vector<std::future<BracketValue>> batch;
      for (int k = 0; k < threads && next < terms.size(); ++k, ++next) {
        batch.push_back(std::async(std::launch::async, [&, i = next] { return bracket(terms[i].diagram, engine, oracle_bound); }));
      }
      const std::size_t first = next - batch.size();
      for (std::size_t k = 0; k < batch.size(); ++k) values[first + k] = batch[k].get();
    }
  }
  CombinationResult r;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    r.value += values[i].delta * terms[i].coeff;
    r.telemetry.push_back(values[i].telemetry);
  }
  return r;
}

}  // namespace knotslope
