#pragma once

// Kauffman states, state circles, state graphs, adequacy and the boundary
// slopes of state surfaces.

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "knotslope/diagram.hpp"

namespace knotslope {

enum class Smoothing : std::uint8_t { A, B };

// One choice per crossing, indexed like PDDiagram::crossings.
using KauffmanState = std::vector<Smoothing>;

inline KauffmanState all_a(const PDDiagram& d) { return KauffmanState(d.crossings.size(), Smoothing::A); }
inline KauffmanState all_b(const PDDiagram& d) { return KauffmanState(d.crossings.size(), Smoothing::B); }

// For X[a,b,c,d] the A-smoothing joins (a,b),(c,d) and the B-smoothing
// (a,d),(b,c). Flipping this pairing is the single switch that would change
// the A/B calibration.
inline constexpr std::array<std::array<int, 4>, 2> kSmoothingPairs{{{0, 1, 2, 3}, {0, 3, 1, 2}}};

struct StateCircles {
  int circle_count = 0;
  // Circle id per arc label (index label-1). Free loops take the last ids.
  std::vector<int> arc_circle;
};

struct StateGraph {
  int vertex_count = 0;
  // One edge per crossing, in crossing order.
  std::vector<std::pair<int, int>> edges;

  std::vector<int> loop_edges() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].first == edges[i].second) out.push_back(static_cast<int>(i));
    }
    return out;
  }
};

namespace detail {

inline void check_state(const PDDiagram& d, const KauffmanState& s) {
  if (s.size() != d.crossings.size()) {
    throw InputError("state has " + std::to_string(s.size()) + " choices for " + std::to_string(d.crossings.size()) +
                     " crossings");
  }
}

// Circles plus, for each crossing, the two circle ids its smoothing arcs lie on.
inline std::pair<StateCircles, StateGraph> resolve_full(const PDDiagram& d, const KauffmanState& s) {
  check_state(d, s);
  const int na = d.arc_count();
  UnionFind uf(static_cast<std::size_t>(na));
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& x = d.crossings[i];
    const auto& pr = kSmoothingPairs[s[i] == Smoothing::A ? 0 : 1];
    uf.unite(static_cast<std::size_t>(x[pr[0]] - 1), static_cast<std::size_t>(x[pr[1]] - 1));
    uf.unite(static_cast<std::size_t>(x[pr[2]] - 1), static_cast<std::size_t>(x[pr[3]] - 1));
  }
  StateCircles sc;
  sc.arc_circle.assign(static_cast<std::size_t>(na), -1);
  std::vector<int> root_id(static_cast<std::size_t>(na), -1);
  for (int a = 0; a < na; ++a) {
    const auto r = uf.find(static_cast<std::size_t>(a));
    if (root_id[r] == -1) root_id[r] = sc.circle_count++;
    sc.arc_circle[static_cast<std::size_t>(a)] = root_id[r];
  }
  sc.circle_count += d.free_loops;
  StateGraph g;
  g.vertex_count = sc.circle_count;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& x = d.crossings[i];
    const auto& pr = kSmoothingPairs[s[i] == Smoothing::A ? 0 : 1];
    g.edges.emplace_back(sc.arc_circle[static_cast<std::size_t>(x[pr[0]] - 1)],
                         sc.arc_circle[static_cast<std::size_t>(x[pr[2]] - 1)]);
  }
  return {std::move(sc), std::move(g)};
}

}  // namespace detail

inline StateCircles resolve(const PDDiagram& d, const KauffmanState& s) { return detail::resolve_full(d, s).first; }

inline StateGraph state_graph(const PDDiagram& d, const KauffmanState& s) { return detail::resolve_full(d, s).second; }

struct Adequacy {
  bool a_adequate = false;
  bool b_adequate = false;
  int v_a = 0;
  int v_b = 0;
  // Crossings whose edge is a 1-edge loop in the all-A / all-B graph.
  std::vector<int> a_loops;
  std::vector<int> b_loops;
};

inline Adequacy is_adequate(const PDDiagram& d) {
  Adequacy r;
  const auto ga = state_graph(d, all_a(d));
  const auto gb = state_graph(d, all_b(d));
  r.v_a = ga.vertex_count;
  r.v_b = gb.vertex_count;
  r.a_loops = ga.loop_edges();
  r.b_loops = gb.loop_edges();
  r.a_adequate = r.a_loops.empty();
  r.b_adequate = r.b_loops.empty();
  return r;
}

// A at positive crossings, B at negative ones: the state that follows the orientation.
inline KauffmanState seifert_state(const PDDiagram& d) {
  const auto o = analyze(d);
  KauffmanState s(d.crossings.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = o.sign[i] > 0 ? Smoothing::A : Smoothing::B;
  return s;
}

struct StateStats {
  int c_plus_b = 0;   // positive crossings resolved B
  int c_minus_a = 0;  // negative crossings resolved A

  friend bool operator==(const StateStats&, const StateStats&) = default;
};

inline StateStats state_stats(const PDDiagram& d, const KauffmanState& s) {
  detail::check_state(d, s);
  const auto o = analyze(d);
  StateStats st;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (o.sign[i] > 0 && s[i] == Smoothing::B) ++st.c_plus_b;
    if (o.sign[i] < 0 && s[i] == Smoothing::A) ++st.c_minus_a;
  }
  return st;
}

// p/q in lowest terms; q == 0 encodes 1/0.
struct Slope {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Slope make(std::int64_t p, std::int64_t q) {
    if (q < 0) {
      p = -p;
      q = -q;
    }
    if (q == 0) return {1, 0};
    const auto g = std::gcd(p < 0 ? -p : p, q);
    return {p / g, q / g};
  }
  static Slope integer(std::int64_t p) { return {p, 1}; }

  bool is_integer() const noexcept { return den == 1; }
  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
  friend bool operator==(const Slope&, const Slope&) = default;
};

inline void require_knot(const PDDiagram& d) {
  const auto s = stats(d);
  if (s.components != 1) throw MultiComponent(s.components);
}

// Boundary slope of the state surface: 2 c+^B - 2 c-^A.
inline Slope state_slope(const PDDiagram& d, const KauffmanState& s) {
  require_knot(d);
  const auto st = state_stats(d, s);
  return Slope::integer(2 * st.c_plus_b - 2 * st.c_minus_a);
}

struct BoundarySlopes {
  Slope a;  // all-A surface: -2 c_-
  Slope b;  // all-B surface: +2 c_+
};

inline BoundarySlopes boundary_slopes(const PDDiagram& d) {
  return {state_slope(d, all_a(d)), state_slope(d, all_b(d))};
}

inline std::string to_string(const KauffmanState& s) {
  std::string out;
  out.reserve(s.size());
  for (auto c : s) out.push_back(c == Smoothing::A ? 'A' : 'B');
  return out;
}

}  // namespace knotslope
