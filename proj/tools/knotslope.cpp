#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "knotslope/cli.hpp"

namespace {

using namespace knotslope;

struct Args {
  cli::InputSpec input;
  std::optional<int> max_n;
  std::string engine = "dp";
  std::string format = "text";
  std::optional<int> threads;
  int oracle_bound = kDefaultOracleBound;
  int m = 2;
};

void add_input_flags(CLI::App* cmd, Args& a) {
  cmd->add_option("--braid", a.input.braid, "braid word \"S: w1 w2 ...\" (negative letters are inverse generators)");
  cmd->add_option("--pd", a.input.pd_file, "PD code JSON file");
  cmd->add_option("--pretzel", a.input.pretzel, "pretzel parameters \"q1,q2,...\"");
  cmd->add_option("--catalog", a.input.catalog, "built-in catalog entry name");
  cmd->add_flag("--unknot", a.input.unknot, "the crossingless unknot");
}

void add_common_flags(CLI::App* cmd, Args& a) {
  cmd->add_option("--format", a.format, "output format")->check(CLI::IsMember({"json", "text"}));
}

void add_engine_flags(CLI::App* cmd, Args& a) {
  cmd->add_option("--engine", a.engine, "bracket engine")->check(CLI::IsMember({"naive", "dp"}));
  cmd->add_option("--threads", a.threads, "worker threads (default KNOTSLOPE_THREADS, else all cores)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--oracle-bound", a.oracle_bound, "largest crossing count accepted by the naive engine")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotslope: colored Jones degrees and boundary slopes of adequate knots"};
  app.require_subcommand(1);
  Args a;

  auto* adequacy = app.add_subcommand("adequacy", "adequacy flags, v_A, v_B and state graphs");
  auto* slopes = app.add_subcommand("slopes", "boundary slopes of the all-A and all-B state surfaces");
  auto* jones = app.add_subcommand("jones", "colored Jones table with extreme degrees");
  auto* verify = app.add_subcommand("verify", "check the slope of the degree growth against the state surfaces");
  auto* cable = app.add_subcommand("cable", "blackboard-framed m-cable as a PD code");
  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket of the diagram");
  auto* catalog = app.add_subcommand("catalog", "list the built-in knots");
  auto* selftest = app.add_subcommand("selftest", "check every catalog entry against its known values");

  for (auto* cmd : {adequacy, slopes, jones, verify, cable, bracket}) add_input_flags(cmd, a);
  for (auto* cmd : {adequacy, slopes, jones, verify, cable, bracket, catalog, selftest}) add_common_flags(cmd, a);
  for (auto* cmd : {jones, verify, bracket, selftest}) add_engine_flags(cmd, a);
  for (auto* cmd : {jones, verify, selftest}) cmd->add_option("--max-n", a.max_n, "largest color")->check(CLI::Range(1, 64));
  cable->add_option("--m", a.m, "number of parallel strands")->check(CLI::Range(1, 16));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kInputError;
  }

  try {
    JonesOptions opts;
    opts.engine = parse_engine(a.engine);
    opts.threads = cli::resolve_threads(a.threads);
    opts.oracle_bound = a.oracle_bound;

    cli::Output out;
    if (catalog->parsed()) {
      out = cli::cmd_catalog();
    } else if (selftest->parsed()) {
      out = cli::cmd_selftest(opts, a.max_n);
    } else {
      const auto d = cli::load_input(a.input);
      if (adequacy->parsed()) {
        out = cli::cmd_adequacy(d);
      } else if (slopes->parsed()) {
        out = cli::cmd_slopes(d);
      } else if (jones->parsed()) {
        out = cli::cmd_jones(d, a.max_n.value_or(default_max_n(d.crossing_count())), opts);
      } else if (verify->parsed()) {
        out = cli::cmd_verify(d, a.max_n.value_or(default_max_n(d.crossing_count())), opts);
      } else if (cable->parsed()) {
        out = cli::cmd_cable(d, a.m);
      } else {
        out = cli::cmd_bracket(d, opts);
      }
    }
    if (a.format == "json") {
      std::cout << out.report.dump(2) << "\n";
    } else {
      std::cout << out.text;
    }
    return out.exit_code;
  } catch (const ResourceError& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return cli::kResourceBound;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kInputError;
  }
}
