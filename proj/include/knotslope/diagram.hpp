#pragma once

// Knot diagram representations and the conversions between them.
//
// PDDiagram follows the planar-diagram convention of the knot atlas: each
// crossing is X[a,b,c,d] where a is the incoming under-strand and b,c,d follow
// counterclockwise; arcs are numbered consecutively along each oriented
// component. A diagram may additionally carry crossingless circles.
//
// MorsePresentation is a bottom-to-top sweep of cups, caps and crossings
// between adjacent points. CrossPos is the crossing whose over-strand runs
// from the lower-left point to the upper-right point: its Kauffman
// A-smoothing is the vertical identity tangle, and it is the positive braid
// generator when both strands point up.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "knotslope/error.hpp"

namespace knotslope {

using Crossing = std::array<int, 4>;

struct PDDiagram {
  std::vector<Crossing> crossings;
  // Crossingless components.
  int free_loops = 0;
  std::string name;

  int crossing_count() const noexcept { return static_cast<int>(crossings.size()); }
  int arc_count() const noexcept { return 2 * crossing_count(); }

  friend bool operator==(const PDDiagram& x, const PDDiagram& y) {
    return x.crossings == y.crossings && x.free_loops == y.free_loops;
  }
};

inline PDDiagram unknot_pd() {
  PDDiagram d;
  d.free_loops = 1;
  d.name = "unknot";
  return d;
}

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

enum class EventKind : std::uint8_t { Cup, Cap, CrossPos, CrossNeg };

struct MorseEvent {
  EventKind kind;
  int position;
  // Cups only: the left leg of the cup is oriented upward.
  bool left_up = true;

  bool is_crossing() const noexcept { return kind == EventKind::CrossPos || kind == EventKind::CrossNeg; }
  friend bool operator==(const MorseEvent&, const MorseEvent&) = default;
};

struct MorsePresentation {
  std::vector<MorseEvent> events;

  int crossing_count() const {
    return static_cast<int>(std::count_if(events.begin(), events.end(), [](const MorseEvent& e) { return e.is_crossing(); }));
  }

  // Checks the width profile; returns the maximal width.
  int validate() const {
    int width = 0;
    int peak = 0;
    for (std::size_t i = 0; i < events.size(); ++i) {
      const auto& e = events[i];
      const bool ok = e.kind == EventKind::Cup ? (e.position >= 0 && e.position <= width)
                                               : (e.position >= 0 && e.position + 1 < width);
      if (!ok) throw InputError("Morse event " + std::to_string(i) + " at position " + std::to_string(e.position) +
                                " is outside width " + std::to_string(width));
      if (e.kind == EventKind::Cup) width += 2;
      if (e.kind == EventKind::Cap) width -= 2;
      peak = std::max(peak, width);
    }
    if (width != 0) throw InputError("Morse presentation does not close up (final width " + std::to_string(width) + ")");
    return peak;
  }

  int max_width() const { return validate(); }

  friend bool operator==(const MorsePresentation&, const MorsePresentation&) = default;
};

struct DiagramStats {
  int c = 0;
  int c_plus = 0;
  int c_minus = 0;
  int w = 0;
  int components = 0;

  friend bool operator==(const DiagramStats&, const DiagramStats&) = default;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }
  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
};

// Union-find that tracks a parity between each element and its root.
class ParityUnionFind {
 public:
  std::size_t add() {
    parent_.push_back(parent_.size());
    parity_.push_back(0);
    return parent_.size() - 1;
  }
  std::pair<std::size_t, int> find(std::size_t x) {
    int p = 0;
    std::size_t r = x;
    while (parent_[r] != r) {
      p ^= parity_[r];
      r = parent_[r];
    }
    // Path compression with parity fix-up.
    int acc = p;
    while (parent_[x] != x) {
      const std::size_t next = parent_[x];
      const int px = parity_[x];
      parent_[x] = r;
      parity_[x] = acc;
      acc ^= px;
      x = next;
    }
    return {r, p};
  }
  // Requires value(a) XOR value(b) == rel. Returns false on contradiction.
  bool relate(std::size_t a, std::size_t b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ rel;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Braid words

inline BraidWord parse_braid(const std::string& text) {
  std::string body = text;
  std::optional<int> strands;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    std::istringstream head(text.substr(0, colon));
    int s = 0;
    std::string extra;
    if (!(head >> s) || (head >> extra)) throw InputError("malformed strand count in braid '" + text + "'");
    if (s < 1) throw InputError("strand count must be positive");
    strands = s;
    body = text.substr(colon + 1);
  }
  std::istringstream in(body);
  BraidWord b;
  std::string tok;
  int max_abs = 0;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InputError("malformed braid token '" + tok + "'");
    }
    if (used != tok.size() || v == 0) throw InputError("malformed braid token '" + tok + "'");
    b.letters.push_back(v);
    max_abs = std::max(max_abs, std::abs(v));
  }
  b.strands = strands.value_or(max_abs + 1);
  if (max_abs > b.strands - 1) {
    throw InputError("braid letter " + std::to_string(max_abs) + " out of range for " + std::to_string(b.strands) +
                     " strands");
  }
  return b;
}

inline std::string to_string(const BraidWord& b) {
  std::ostringstream os;
  os << b.strands << ':';
  for (int l : b.letters) os << ' ' << l;
  return os.str();
}

// ---------------------------------------------------------------------------
// Morse presentations

inline MorsePresentation mirror(const MorsePresentation& m) {
  MorsePresentation r = m;
  for (auto& e : r.events) {
    if (e.kind == EventKind::CrossPos) {
      e.kind = EventKind::CrossNeg;
    } else if (e.kind == EventKind::CrossNeg) {
      e.kind = EventKind::CrossPos;
    }
  }
  return r;
}

// Sets every cup's orientation so that each component is consistently
// oriented; the first cup of each component keeps left_up = true.
inline MorsePresentation orient(const MorsePresentation& m) {
  m.validate();
  detail::ParityUnionFind uf;  // value = "points up"
  std::vector<std::size_t> frontier;
  std::vector<std::pair<std::size_t, std::size_t>> cup_left;  // (event index, point)
  for (std::size_t i = 0; i < m.events.size(); ++i) {
    const auto& e = m.events[i];
    const auto p = static_cast<std::size_t>(e.position);
    switch (e.kind) {
      case EventKind::Cup: {
        auto u = uf.add();
        auto v = uf.add();
        uf.relate(u, v, 1);
        frontier.insert(frontier.begin() + static_cast<std::ptrdiff_t>(p), {u, v});
        cup_left.emplace_back(i, u);
        break;
      }
      case EventKind::Cap:
        uf.relate(frontier[p], frontier[p + 1], 1);
        frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(p), frontier.begin() + static_cast<std::ptrdiff_t>(p) + 2);
        break;
      default: {
        auto tl = uf.add();
        auto tr = uf.add();
        uf.relate(frontier[p], tr, 0);
        uf.relate(frontier[p + 1], tl, 0);
        frontier[p] = tl;
        frontier[p + 1] = tr;
      }
    }
  }
  MorsePresentation r = m;
  std::map<std::size_t, int> root_value;
  for (auto [idx, u] : cup_left) {
    auto [root, par] = uf.find(u);
    auto it = root_value.find(root);
    if (it == root_value.end()) it = root_value.emplace(root, 1 ^ par).first;
    r.events[idx].left_up = (it->second ^ par) == 1;
  }
  return r;
}

// Blackboard m-cable: every point becomes m parallel points.
inline MorsePresentation cable(const MorsePresentation& d, int m) {
  if (m < 1) throw InputError("cable multiplicity must be positive");
  if (m == 1) return d;
  MorsePresentation r;
  r.events.reserve(d.events.size() * static_cast<std::size_t>(m * m));
  for (const auto& e : d.events) {
    const int base = e.position * m;
    switch (e.kind) {
      case EventKind::Cup:
        for (int k = 0; k < m; ++k) r.events.push_back({EventKind::Cup, base + k, e.left_up});
        break;
      case EventKind::Cap:
        for (int k = m - 1; k >= 0; --k) r.events.push_back({EventKind::Cap, base + k, true});
        break;
      default:
        // Move the right ribbon across the left one strand by strand; every
        // elementary crossing keeps the over/under type of the original.
        for (int j = 0; j < m; ++j) {
          for (int q = base + m + j - 1; q >= base + j; --q) r.events.push_back({e.kind, q, true});
        }
    }
  }
  return r;
}

inline MorsePresentation braid_to_morse(const BraidWord& b) {
  for (int l : b.letters) {
    if (l == 0 || std::abs(l) > b.strands - 1) throw InputError("braid letter out of range");
  }
  MorsePresentation m;
  for (int k = 0; k < b.strands; ++k) m.events.push_back({EventKind::Cup, k, true});
  for (int l : b.letters) m.events.push_back({l > 0 ? EventKind::CrossPos : EventKind::CrossNeg, std::abs(l) - 1, true});
  for (int k = b.strands - 1; k >= 0; --k) m.events.push_back({EventKind::Cap, k, true});
  return m;
}

// Standard pretzel diagram: vertical two-strand twist regions side by side,
// closed by an outer arc and short arcs between neighbouring regions.
inline MorsePresentation pretzel_morse(const std::vector<int>& params) {
  if (params.size() < 2) throw InputError("a pretzel diagram needs at least 2 twist regions");
  const int k = static_cast<int>(params.size());
  MorsePresentation m;
  m.events.push_back({EventKind::Cup, 0, true});
  for (int i = 0; i + 1 < k; ++i) m.events.push_back({EventKind::Cup, 2 * i + 1, true});
  for (int i = 0; i < k; ++i) {
    if (params[static_cast<std::size_t>(i)] == 0) throw InputError("pretzel parameters must be nonzero");
    const auto kind = params[static_cast<std::size_t>(i)] > 0 ? EventKind::CrossPos : EventKind::CrossNeg;
    for (int j = 0; j < std::abs(params[static_cast<std::size_t>(i)]); ++j) m.events.push_back({kind, 2 * i, true});
  }
  for (int i = k - 2; i >= 0; --i) m.events.push_back({EventKind::Cap, 2 * i + 1, true});
  m.events.push_back({EventKind::Cap, 0, true});
  return orient(m);
}

// Converts a consistently oriented sweep into a PD code. Arcs are numbered
// along each component starting from the lowest-index crossing.
inline PDDiagram morse_to_pd(const MorsePresentation& m) {
  m.validate();
  // Point ids: 4*i + slot for crossing i (slots BL, BR, TR, TL, counterclockwise),
  // then cup points.
  const int nc = m.crossing_count();
  detail::UnionFind arcs(static_cast<std::size_t>(4 * nc));
  detail::ParityUnionFind dir;
  for (int i = 0; i < 4 * nc; ++i) dir.add();
  std::vector<std::size_t> frontier;
  std::vector<std::pair<std::size_t, bool>> anchors;
  std::vector<EventKind> kinds;
  kinds.reserve(static_cast<std::size_t>(nc));
  int ci = 0;
  for (const auto& e : m.events) {
    const auto p = static_cast<std::size_t>(e.position);
    switch (e.kind) {
      case EventKind::Cup: {
        auto u = arcs.add();
        auto v = arcs.add();
        dir.add();
        dir.add();
        arcs.unite(u, v);
        dir.relate(u, v, 1);
        anchors.emplace_back(u, e.left_up);
        frontier.insert(frontier.begin() + static_cast<std::ptrdiff_t>(p), {u, v});
        break;
      }
      case EventKind::Cap:
        arcs.unite(frontier[p], frontier[p + 1]);
        if (!dir.relate(frontier[p], frontier[p + 1], 1)) throw InputError("inconsistent orientation at a cap");
        frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(p), frontier.begin() + static_cast<std::ptrdiff_t>(p) + 2);
        break;
      default: {
        const auto base = static_cast<std::size_t>(4 * ci);
        arcs.unite(frontier[p], base + 0);
        arcs.unite(frontier[p + 1], base + 1);
        if (!dir.relate(frontier[p], base + 0, 0) || !dir.relate(frontier[p + 1], base + 1, 0))
          throw InputError("inconsistent orientation at a crossing");
        dir.relate(base + 0, base + 2, 0);
        dir.relate(base + 1, base + 3, 0);
        frontier[p] = base + 3;
        frontier[p + 1] = base + 2;
        kinds.push_back(e.kind);
        ++ci;
      }
    }
  }
  // Resolve directions from cup anchors.
  std::map<std::size_t, int> root_up;
  for (auto [pt, up] : anchors) {
    auto [root, par] = dir.find(pt);
    const int want = (up ? 1 : 0) ^ par;
    auto [it, fresh] = root_up.emplace(root, want);
    if (!fresh && it->second != want) throw InputError("inconsistent cup orientations within a component");
  }
  auto points_up = [&](std::size_t pt) {
    auto [root, par] = dir.find(pt);
    auto it = root_up.find(root);
    const int base = it == root_up.end() ? 1 : it->second;
    return (base ^ par) == 1;
  };
  auto incoming = [&](int leg) {
    const bool up = points_up(static_cast<std::size_t>(leg));
    return (leg % 4 < 2) ? up : !up;
  };

  // Each arc class holds one incoming and one outgoing leg, or no legs (a free loop).
  std::map<std::size_t, std::vector<int>> members;
  for (int leg = 0; leg < 4 * nc; ++leg) members[arcs.find(static_cast<std::size_t>(leg))].push_back(leg);
  std::vector<int> partner(static_cast<std::size_t>(4 * nc), -1);
  for (auto& [root, legs] : members) {
    if (legs.size() != 2 || incoming(legs[0]) == incoming(legs[1])) throw InputError("malformed arc in Morse presentation");
    partner[static_cast<std::size_t>(legs[0])] = legs[1];
    partner[static_cast<std::size_t>(legs[1])] = legs[0];
  }
  std::set<std::size_t> loop_roots;
  for (std::size_t pt = static_cast<std::size_t>(4 * nc); pt < arcs.size(); ++pt) {
    const auto r = arcs.find(pt);
    if (!members.count(r)) loop_roots.insert(r);
  }

  std::vector<int> label(static_cast<std::size_t>(4 * nc), 0);
  int next = 1;
  for (int start = 0; start < nc; ++start) {
    // Outgoing legs of this crossing not yet labelled start a new component.
    for (int slot = 0; slot < 4; ++slot) {
      int leg = 4 * start + slot;
      if (incoming(leg) || label[static_cast<std::size_t>(leg)] != 0) continue;
      while (label[static_cast<std::size_t>(leg)] == 0) {
        const int head = partner[static_cast<std::size_t>(leg)];
        label[static_cast<std::size_t>(leg)] = next;
        label[static_cast<std::size_t>(head)] = next;
        ++next;
        leg = (head / 4) * 4 + (head % 4 + 2) % 4;
      }
    }
  }

  PDDiagram d;
  d.free_loops = static_cast<int>(loop_roots.size());
  d.crossings.reserve(static_cast<std::size_t>(nc));
  for (int i = 0; i < nc; ++i) {
    // Under-strand is BR-TL for CrossPos, BL-TR for CrossNeg.
    const int u0 = kinds[static_cast<std::size_t>(i)] == EventKind::CrossPos ? 1 : 0;
    const int start = incoming(4 * i + u0) ? u0 : u0 + 2;
    Crossing x{};
    for (int k = 0; k < 4; ++k) x[static_cast<std::size_t>(k)] = label[static_cast<std::size_t>(4 * i + (start + k) % 4)];
    d.crossings.push_back(x);
  }
  return d;
}

inline PDDiagram braid_to_pd(const BraidWord& b) {
  PDDiagram d = morse_to_pd(braid_to_morse(b));
  d.name = "braid " + to_string(b);
  return d;
}

inline PDDiagram pretzel_pd(const std::vector<int>& params) {
  PDDiagram d = morse_to_pd(pretzel_morse(params));
  std::ostringstream os;
  os << "pretzel(";
  for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
  os << ')';
  d.name = os.str();
  return d;
}

// ---------------------------------------------------------------------------
// PD analysis: validation, components, crossing signs

struct PDOrientation {
  // Per crossing: +1 / -1.
  std::vector<int> sign;
  // Per crossing: the over-strand enters at slot b (index 1) rather than d (index 3).
  std::vector<bool> over_enters_at_b;
  // Per arc label (index label-1): component id.
  std::vector<int> arc_component;
  int components = 0;

  // Whether the strand at a given slot of crossing i enters the crossing.
  bool incoming(int crossing, int slot) const {
    switch (slot) {
      case 0: return true;
      case 2: return false;
      case 1: return over_enters_at_b[static_cast<std::size_t>(crossing)];
      default: return !over_enters_at_b[static_cast<std::size_t>(crossing)];
    }
  }
};

inline PDOrientation analyze(const PDDiagram& d) {
  const int nc = d.crossing_count();
  const int na = 2 * nc;
  if (d.free_loops < 0) throw InputError("negative free loop count");
  std::vector<int> seen(static_cast<std::size_t>(na + 1), 0);
  for (const auto& x : d.crossings) {
    for (int l : x) {
      if (l < 1 || l > na) throw InputError("arc label " + std::to_string(l) + " outside 1.." + std::to_string(na));
      ++seen[static_cast<std::size_t>(l)];
    }
  }
  for (int l = 1; l <= na; ++l) {
    if (seen[static_cast<std::size_t>(l)] != 2) {
      throw InputError("arc label " + std::to_string(l) + " appears " + std::to_string(seen[static_cast<std::size_t>(l)]) +
                       " times (expected 2)");
    }
  }

  // Passages (a,c) and (b,d) link arcs into one cycle per component.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(na + 1));
  for (const auto& x : d.crossings) {
    adj[static_cast<std::size_t>(x[0])].push_back(x[2]);
    adj[static_cast<std::size_t>(x[2])].push_back(x[0]);
    adj[static_cast<std::size_t>(x[1])].push_back(x[3]);
    adj[static_cast<std::size_t>(x[3])].push_back(x[1]);
  }
  PDOrientation o;
  o.arc_component.assign(static_cast<std::size_t>(na), -1);
  std::vector<int> lo(static_cast<std::size_t>(na + 1)), hi(static_cast<std::size_t>(na + 1));
  int comp = 0;
  for (int s = 1; s <= na; ++s) {
    if (o.arc_component[static_cast<std::size_t>(s - 1)] != -1) continue;
    std::vector<int> stack{s};
    std::vector<int> members;
    o.arc_component[static_cast<std::size_t>(s - 1)] = comp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int u : adj[static_cast<std::size_t>(v)]) {
        if (o.arc_component[static_cast<std::size_t>(u - 1)] == -1) {
          o.arc_component[static_cast<std::size_t>(u - 1)] = comp;
          stack.push_back(u);
        }
      }
    }
    const auto [mn, mx] = std::minmax_element(members.begin(), members.end());
    if (*mx - *mn + 1 != static_cast<int>(members.size())) {
      throw InputError("arc labels of a component are not consecutive");
    }
    for (int v : members) {
      lo[static_cast<std::size_t>(v)] = *mn;
      hi[static_cast<std::size_t>(v)] = *mx;
    }
    ++comp;
  }
  o.components = comp + d.free_loops;
  auto succ = [&](int x) { return x == hi[static_cast<std::size_t>(x)] ? lo[static_cast<std::size_t>(x)] : x + 1; };

  // Every arc has exactly one head; under-passages fix theirs directly.
  std::vector<int> head(static_cast<std::size_t>(na + 1), -1);
  for (int i = 0; i < nc; ++i) {
    const auto& x = d.crossings[static_cast<std::size_t>(i)];
    if (succ(x[0]) != x[2]) throw InputError("crossing " + std::to_string(i) + ": under-strand arcs are not successive");
    if (head[static_cast<std::size_t>(x[0])] != -1) throw InputError("inconsistent arc succession");
    head[static_cast<std::size_t>(x[0])] = i;
  }
  o.over_enters_at_b.assign(static_cast<std::size_t>(nc), false);
  std::vector<int> pending;
  auto settle = [&](int i, bool at_b) {
    const auto& x = d.crossings[static_cast<std::size_t>(i)];
    const int in = at_b ? x[1] : x[3];
    if (head[static_cast<std::size_t>(in)] != -1) throw InputError("inconsistent arc succession");
    head[static_cast<std::size_t>(in)] = i;
    o.over_enters_at_b[static_cast<std::size_t>(i)] = at_b;
  };
  for (int i = 0; i < nc; ++i) {
    const auto& x = d.crossings[static_cast<std::size_t>(i)];
    const bool fwd = succ(x[1]) == x[3];
    const bool bwd = succ(x[3]) == x[1];
    if (!fwd && !bwd) throw InputError("crossing " + std::to_string(i) + ": over-strand arcs are not successive");
    if (fwd && !bwd) {
      settle(i, true);
    } else if (bwd && !fwd) {
      settle(i, false);
    } else {
      pending.push_back(i);
    }
  }
  // Two-arc components: the over-passage enters on the arc whose head is still free.
  while (!pending.empty()) {
    bool progressed = false;
    for (auto it = pending.begin(); it != pending.end();) {
      const auto& x = d.crossings[static_cast<std::size_t>(*it)];
      const bool hb = head[static_cast<std::size_t>(x[1])] != -1;
      const bool hd = head[static_cast<std::size_t>(x[3])] != -1;
      if (hb && hd) throw InputError("inconsistent arc succession");
      if (hb || hd) {
        settle(*it, !hb);
        it = pending.erase(it);
        progressed = true;
      } else {
        ++it;
      }
    }
    if (!progressed) {
      // Orientation genuinely ambiguous from labels; take the lower label as incoming.
      const int i = pending.front();
      const auto& x = d.crossings[static_cast<std::size_t>(i)];
      settle(i, x[1] < x[3]);
      pending.erase(pending.begin());
    }
  }
  o.sign.resize(static_cast<std::size_t>(nc));
  for (int i = 0; i < nc; ++i) o.sign[static_cast<std::size_t>(i)] = o.over_enters_at_b[static_cast<std::size_t>(i)] ? -1 : 1;
  return o;
}

inline DiagramStats stats(const PDDiagram& d) {
  const auto o = analyze(d);
  DiagramStats s;
  s.c = d.crossing_count();
  for (int sg : o.sign) (sg > 0 ? s.c_plus : s.c_minus)++;
  s.w = s.c_plus - s.c_minus;
  s.components = o.components;
  return s;
}

inline PDDiagram mirror(const PDDiagram& d) {
  const auto o = analyze(d);
  PDDiagram r = d;
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& x = d.crossings[i];
    r.crossings[i] = o.over_enters_at_b[i] ? Crossing{x[1], x[2], x[3], x[0]} : Crossing{x[3], x[0], x[1], x[2]};
  }
  if (!d.name.empty()) r.name = "mirror of " + d.name;
  return r;
}

namespace detail {

// Greedy planar sweep of a PD code: repeatedly attach the crossing whose
// already-reached legs form the longest contiguous block of the frontier,
// closing caps as soon as both ends of an arc are adjacent. The first crossing
// opens on legs start%4 and start%4+1, which fixes the outer face.
inline std::optional<MorsePresentation> sweep(const PDDiagram& d, const PDOrientation& o, int start) {
  const int nc = d.crossing_count();
  struct Entry {
    int arc;
    int placed_leg;  // 4*crossing + slot of the end already in the sweep
  };
  // leg -> the other end of its arc
  std::vector<int> other(static_cast<std::size_t>(4 * nc), -1);
  {
    std::vector<int> first(static_cast<std::size_t>(2 * nc + 1), -1);
    for (int i = 0; i < nc; ++i) {
      for (int s = 0; s < 4; ++s) {
        const int leg = 4 * i + s;
        const int a = d.crossings[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
        if (first[static_cast<std::size_t>(a)] == -1) {
          first[static_cast<std::size_t>(a)] = leg;
        } else {
          other[static_cast<std::size_t>(leg)] = first[static_cast<std::size_t>(a)];
          other[static_cast<std::size_t>(first[static_cast<std::size_t>(a)])] = leg;
        }
      }
    }
  }
  auto arc_of = [&](int leg) { return d.crossings[static_cast<std::size_t>(leg / 4)][static_cast<std::size_t>(leg % 4)]; };
  // Upward direction of the strand at a leg placed at the bottom / top of a crossing.
  auto up_bottom = [&](int leg) { return o.incoming(leg / 4, leg % 4); };

  MorsePresentation m;
  std::vector<Entry> frontier;
  std::vector<bool> placed(static_cast<std::size_t>(nc), false);

  auto close_caps = [&] {
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t p = 0; p + 1 < frontier.size(); ++p) {
        if (frontier[p].arc == frontier[p + 1].arc) {
          m.events.push_back({EventKind::Cap, static_cast<int>(p), true});
          frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(p), frontier.begin() + static_cast<std::ptrdiff_t>(p) + 2);
          again = true;
          break;
        }
      }
    }
  };
  auto cross_kind = [](int bl_slot) { return (bl_slot % 2 == 1) ? EventKind::CrossPos : EventKind::CrossNeg; };

  for (int remaining = nc; remaining > 0; --remaining) {
    // pending leg -> frontier position
    std::map<int, int> pos;
    for (std::size_t p = 0; p < frontier.size(); ++p) {
      const int pend = other[static_cast<std::size_t>(frontier[p].placed_leg)];
      if (!placed[static_cast<std::size_t>(pend / 4)]) pos[pend] = static_cast<int>(p);
    }
    int best = -1, best_k = 0, best_slot = 0, best_pos = 0;
    for (int i = 0; i < nc; ++i) {
      if (placed[static_cast<std::size_t>(i)]) continue;
      int k = 0;
      for (int s = 0; s < 4; ++s) k += pos.count(4 * i + s) ? 1 : 0;
      if (k == 0 || k <= best_k) continue;
      // Find the ccw-first attached slot s with slots s..s+k-1 at consecutive positions.
      for (int s = 0; s < 4; ++s) {
        bool ok = true;
        int p0 = -1;
        for (int j = 0; j < k && ok; ++j) {
          auto it = pos.find(4 * i + (s + j) % 4);
          if (it == pos.end()) {
            ok = false;
          } else if (j == 0) {
            p0 = it->second;
          } else if (it->second != p0 + j) {
            ok = false;
          }
        }
        if (ok) {
          best = i;
          best_k = k;
          best_slot = s;
          best_pos = p0;
          break;
        }
      }
    }
    if (best == -1) {
      // Nothing attaches contiguously: open a crossing on two cups, choosing the
      // crossing, rotation and frontier position that close the most arcs.
      int best_caps = -1, best_r = 0;
      if (m.events.empty()) {
        best = start / 4;
        best_r = start % 4;
        best_pos = 0;
        best_caps = 0;
      }
      for (int i = 0; i < nc && best_caps < 0; ++i) {
        if (placed[static_cast<std::size_t>(i)]) continue;
        for (int r = 0; r < 4; ++r) {
          for (int p = 0; p <= static_cast<int>(frontier.size()); ++p) {
            std::vector<int> arcs;
            for (const auto& f : frontier) arcs.push_back(f.arc);
            const int ins[] = {arc_of(4 * i + r), arc_of(4 * i + (r + 3) % 4), arc_of(4 * i + (r + 2) % 4),
                               arc_of(4 * i + (r + 1) % 4)};
            arcs.insert(arcs.begin() + p, std::begin(ins), std::end(ins));
            int caps = 0;
            for (std::size_t q = 0; q + 1 < arcs.size();) {
              if (arcs[q] == arcs[q + 1]) {
                arcs.erase(arcs.begin() + static_cast<std::ptrdiff_t>(q), arcs.begin() + static_cast<std::ptrdiff_t>(q) + 2);
                ++caps;
                q = q > 0 ? q - 1 : 0;
              } else {
                ++q;
              }
            }
            if (caps > best_caps) {
              best_caps = caps;
              best = i;
              best_r = r;
              best_pos = p;
            }
          }
        }
      }
      const int p = best_pos;
      const int bl = 4 * best + best_r, br = 4 * best + (best_r + 1) % 4;
      const int tr = 4 * best + (best_r + 2) % 4, tl = 4 * best + (best_r + 3) % 4;
      m.events.push_back({EventKind::Cup, p, !up_bottom(bl)});
      m.events.push_back({EventKind::Cup, p + 2, up_bottom(br)});
      m.events.push_back({cross_kind(best_r), p + 1, true});
      frontier.insert(frontier.begin() + p, {{arc_of(bl), bl}, {arc_of(tl), tl}, {arc_of(tr), tr}, {arc_of(br), br}});
    } else {
      const int s = best_slot;
      const int p = best_pos;
      const int br = 4 * best + (s + 1) % 4, tr = 4 * best + (s + 2) % 4, tl = 4 * best + (s + 3) % 4;
      if (best_k == 1) {
        m.events.push_back({EventKind::Cup, p + 1, up_bottom(br)});
        m.events.push_back({cross_kind(s), p, true});
        frontier[static_cast<std::size_t>(p)] = {arc_of(tl), tl};
        frontier.insert(frontier.begin() + p + 1, {{arc_of(tr), tr}, {arc_of(br), br}});
      } else {
        m.events.push_back({cross_kind(s), p, true});
        frontier[static_cast<std::size_t>(p)] = {arc_of(tl), tl};
        frontier[static_cast<std::size_t>(p + 1)] = {arc_of(tr), tr};
      }
    }
    placed[static_cast<std::size_t>(best)] = true;
    close_caps();
  }
  if (!frontier.empty()) return std::nullopt;
  return m;
}

}  // namespace detail

// Morse presentation of a PD code. Every choice of outer face is tried until
// the greedy sweep closes up.
inline MorsePresentation to_morse(const PDDiagram& d) {
  const auto o = analyze(d);
  std::optional<MorsePresentation> m;
  if (d.crossings.empty()) m = MorsePresentation{};
  for (int start = 0; !m && start < 4 * d.crossing_count(); ++start) m = detail::sweep(d, o, start);
  if (!m) throw InputError("PD code is not planar under the counterclockwise convention");
  for (int l = 0; l < d.free_loops; ++l) {
    m->events.push_back({EventKind::Cup, 0, true});
    m->events.push_back({EventKind::Cap, 0, true});
  }
  return *m;
}

// ---------------------------------------------------------------------------
// PD JSON

inline nlohmann::json to_json(const PDDiagram& d) {
  nlohmann::json j;
  if (!d.name.empty()) j["name"] = d.name;
  j["crossings"] = nlohmann::json::array();
  for (const auto& x : d.crossings) j["crossings"].push_back({x[0], x[1], x[2], x[3]});
  const int implied_loops = d.crossings.empty() ? 1 : 0;
  if (d.free_loops != implied_loops) j["loops"] = d.free_loops;
  return j;
}

inline PDDiagram pd_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("crossings") || !j["crossings"].is_array()) {
    throw InputError("PD JSON must be an object with a \"crossings\" array");
  }
  PDDiagram d;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("\"name\" must be a string");
    d.name = j["name"].get<std::string>();
  }
  for (const auto& x : j["crossings"]) {
    if (!x.is_array() || x.size() != 4) throw InputError("each crossing must be a 4-tuple of arc labels");
    Crossing c{};
    for (std::size_t k = 0; k < 4; ++k) {
      if (!x[k].is_number_integer()) throw InputError("arc labels must be integers");
      c[k] = x[k].get<int>();
    }
    d.crossings.push_back(c);
  }
  d.free_loops = d.crossings.empty() ? 1 : 0;
  if (j.contains("loops")) {
    if (!j["loops"].is_number_integer()) throw InputError("\"loops\" must be an integer");
    d.free_loops = j["loops"].get<int>();
  }
  analyze(d);
  return d;
}

inline PDDiagram parse_pd(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid PD JSON: ") + e.what());
  }
  return pd_from_json(j);
}

inline std::string serialize(const PDDiagram& d) { return to_json(d).dump(); }

}  // namespace knotslope
