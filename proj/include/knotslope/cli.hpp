#pragma once

// Command layer behind the knotslope executable. Every command produces a JSON
// record; the text format is a summary rendering of the same record.

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "knotslope/catalog.hpp"
#include "knotslope/jones.hpp"
#include "knotslope/report.hpp"

namespace knotslope::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kResourceBound = 3 };

struct InputSpec {
  std::optional<std::string> braid;
  std::optional<std::string> pd_file;
  std::optional<std::string> pretzel;
  std::optional<std::string> catalog;
  bool unknot = false;
};

struct Output {
  nlohmann::json report;
  std::string text;
  int exit_code = kOk;
};

inline PDDiagram load_input(const InputSpec& in) {
  const int given = (in.braid ? 1 : 0) + (in.pd_file ? 1 : 0) + (in.pretzel ? 1 : 0) + (in.catalog ? 1 : 0) +
                    (in.unknot ? 1 : 0);
  if (given != 1) throw InputError("exactly one of --braid, --pd, --pretzel, --catalog, --unknot is required");
  if (in.unknot) return unknot_pd();
  if (in.braid) {
    auto d = braid_to_pd(parse_braid(*in.braid));
    return d;
  }
  if (in.pretzel) return build({"pretzel(" + *in.pretzel + ")", SourceKind::Pretzel, *in.pretzel, {}});
  if (in.catalog) return build(find_catalog_entry(builtin_catalog(), *in.catalog));
  std::ifstream f(*in.pd_file);
  if (!f) throw InputError("cannot open PD file '" + *in.pd_file + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  auto d = parse_pd(ss.str());
  if (d.name.empty()) d.name = *in.pd_file;
  return d;
}

// --threads, else KNOTSLOPE_THREADS, else the hardware concurrency.
inline int resolve_threads(std::optional<int> flag) {
  if (flag) return std::max(1, *flag);
  if (const char* env = std::getenv("KNOTSLOPE_THREADS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw InputError("KNOTSLOPE_THREADS must be an integer");
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

inline Output cmd_adequacy(const PDDiagram& d) {
  const auto st = stats(d);
  const auto a = is_adequate(d);
  Output out;
  out.report = {{"command", "adequacy"},
                {"name", d.name},
                {"stats", stats_to_json(st)},
                {"A_adequate", a.a_adequate},
                {"B_adequate", a.b_adequate},
                {"v_A", a.v_a},
                {"v_B", a.v_b},
                {"loop_witnesses", {{"A", a.a_loops}, {"B", a.b_loops}}},
                {"state_graphs", {{"A", graph_to_json(state_graph(d, all_a(d)))}, {"B", graph_to_json(state_graph(d, all_b(d)))}}}};
  std::ostringstream os;
  os << d.name << ": c=" << st.c << " c+=" << st.c_plus << " c-=" << st.c_minus << " w=" << st.w
     << " components=" << st.components << "\n"
     << "A-adequate: " << (a.a_adequate ? "yes" : "no") << " (v_A=" << a.v_a << ")\n"
     << "B-adequate: " << (a.b_adequate ? "yes" : "no") << " (v_B=" << a.v_b << ")\n";
  out.text = os.str();
  return out;
}

inline Output cmd_slopes(const PDDiagram& d) {
  const auto s = boundary_slopes(d);
  const auto seifert = state_slope(d, seifert_state(d));
  const auto st = stats(d);
  Output out;
  out.report = {{"command", "slopes"},
                {"name", d.name},
                {"stats", stats_to_json(st)},
                {"slope_A", slope_to_json(s.a)},
                {"slope_B", slope_to_json(s.b)},
                {"seifert_slope", slope_to_json(seifert)}};
  out.text = d.name + ": all-A surface slope " + s.a.to_string() + ", all-B surface slope " + s.b.to_string() +
             ", Seifert state slope " + seifert.to_string() + "\n";
  return out;
}

inline Output cmd_jones(const PDDiagram& d, int max_n, const JonesOptions& opts) {
  const auto t = jones_table(d, max_n, opts);
  Output out;
  out.report = {{"command", "jones"}, {"name", d.name}, {"engine", to_string(opts.engine)}, {"max_n", max_n},
                {"stats", stats_to_json(stats(d))}, {"table", table_to_json(t)}};
  if (max_n >= 3) out.report["sequences"] = sequences_to_json(slope_sequences(t));
  std::ostringstream os;
  for (const auto& e : t.entries) {
    os << "J(" << e.n << ") = " << e.j.to_string("q") << "   [j*=" << e.jmin << ", j=" << e.jmax << "]\n";
  }
  out.text = os.str();
  return out;
}

inline Output cmd_verify(const PDDiagram& d, int max_n, const JonesOptions& opts) {
  const auto v = verify(d, max_n, opts);
  Output out;
  out.report = verdict_to_json(v);
  out.report["command"] = "verify";
  out.report["name"] = d.name;
  out.report["engine"] = to_string(opts.engine);
  out.report["max_n"] = max_n;
  std::ostringstream os;
  os << d.name << " (c=" << v.stats.c << ", c+=" << v.stats.c_plus << ", c-=" << v.stats.c_minus << ", n<=" << max_n << ")\n";
  for (const auto* s : {&v.a_side, &v.b_side}) {
    os << "  " << to_string(s->side) << " side: ";
    if (s->adequate) {
      os << (s->exact_match && s->degrees_match_prediction ? "PASS" : "FAIL") << "  predicted " << s->predicted.to_string()
         << ", estimated " << (s->estimated ? std::to_string(*s->estimated) : std::string("unstable"))
         << (s->degrees_match_prediction ? "" : " (degree prediction mismatch)") << "\n";
    } else {
      os << "not adequate - diagnostic only: 4j/n^2 = " << s->diagnostic << " at n=" << max_n << "\n";
    }
  }
  for (const auto& n : v.notes) os << "  note: " << n << "\n";
  os << (v.passed() ? "PASS" : "FAIL") << "\n";
  out.text = os.str();
  out.exit_code = v.passed() ? kOk : kVerificationFailed;
  return out;
}

inline Output cmd_cable(const PDDiagram& d, int m) {
  const auto cabled = morse_to_pd(cable(to_morse(d), m));
  const auto a = is_adequate(cabled);
  Output out;
  out.report = {{"command", "cable"},       {"name", d.name},        {"m", m},
                {"pd", to_json(cabled)},    {"stats", stats_to_json(stats(cabled))},
                {"v_A", a.v_a},             {"v_B", a.v_b},
                {"A_adequate", a.a_adequate}, {"B_adequate", a.b_adequate}};
  out.text = serialize(cabled) + "\n";
  return out;
}

inline Output cmd_bracket(const PDDiagram& d, const JonesOptions& opts) {
  const auto m = to_morse(d);
  const auto v = opts.engine == Engine::Naive ? bracket_naive(d, opts.oracle_bound) : bracket_dp(m);
  Output out;
  out.report = {{"command", "bracket"}, {"name", d.name}, {"engine", to_string(opts.engine)},
                {"poly_delta", poly_to_json(v.delta)}, {"telemetry", telemetry_to_json(v.telemetry)}};
  out.report["poly_circle"] = v.circle ? poly_to_json(*v.circle) : nlohmann::json(nullptr);
  out.text = "<D> = " + v.delta.to_string() + "   (delta normalization)\n";
  if (v.circle) out.text += "<D> = " + v.circle->to_string() + "   (circle normalization)\n";
  return out;
}

inline Output cmd_catalog() {
  Output out;
  out.report = {{"command", "catalog"}, {"entries", nlohmann::json::array()}};
  static const char* kinds[] = {"unknot", "braid", "pd", "pretzel"};
  for (const auto& e : builtin_catalog()) {
    out.report["entries"].push_back({{"name", e.name}, {"kind", kinds[static_cast<int>(e.kind)]}, {"source", e.source}});
    out.text += e.name + "  [" + kinds[static_cast<int>(e.kind)] + "] " + e.source + "\n";
  }
  return out;
}

// Checks every catalog entry against its expectations and runs verify on it.
inline Output cmd_selftest(const JonesOptions& opts, std::optional<int> max_n) {
  Output out;
  out.report = {{"command", "selftest"}, {"entries", nlohmann::json::array()}};
  bool all_ok = true;
  for (const auto& e : builtin_catalog()) {
    const auto d = build(e);
    std::vector<std::string> failures;
    const auto a = is_adequate(d);
    const auto s = boundary_slopes(d);
    if (e.expected.a_adequate && *e.expected.a_adequate != a.a_adequate) failures.push_back("A-adequacy");
    if (e.expected.b_adequate && *e.expected.b_adequate != a.b_adequate) failures.push_back("B-adequacy");
    if (e.expected.slope_a && Slope::integer(*e.expected.slope_a) != s.a) failures.push_back("slope_A");
    if (e.expected.slope_b && Slope::integer(*e.expected.slope_b) != s.b) failures.push_back("slope_B");
    if (e.expected.jones2 && colored_jones(d, 2, opts) != *e.expected.jones2) failures.push_back("J(2)");
    const int n = max_n.value_or(default_max_n(d.crossing_count()));
    const auto v = verify(d, n, opts);
    if (!v.passed()) failures.push_back("verify");
    all_ok = all_ok && failures.empty();
    out.report["entries"].push_back({{"name", e.name}, {"max_n", n}, {"failures", failures}, {"passed", failures.empty()}});
    out.text += (failures.empty() ? "PASS  " : "FAIL  ") + e.name;
    for (const auto& f : failures) out.text += " " + f;
    out.text += "\n";
  }
  out.report["passed"] = all_ok;
  out.exit_code = all_ok ? kOk : kVerificationFailed;
  return out;
}

}  // namespace knotslope::cli
