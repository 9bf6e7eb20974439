#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hedonica/errors.hpp"
#include "hedonica/fixtures.hpp"
#include "hedonica/generate.hpp"
#include "hedonica/json_io.hpp"
#include "hedonica/solve.hpp"
#include "hedonica/stability.hpp"
#include "hedonica/transform.hpp"

namespace hedonica::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 1;
constexpr int kExitUsage = 2;

struct Options
{
  std::string instance;
  std::string fixture;
  std::string partition;
  std::string start;
  std::vector<std::string> notions;
  std::string method = "local";
  std::string tie_break = "largest";
  std::string target;
  std::string out_path;
  std::string generator;
  std::string range = "-5:5";
  int n = 0;
  std::uint64_t seed = 0;
  bool trace = false;
  bool list = false;
};

class UsageError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

Game
load_input(const Options& opts)
{
  if (opts.instance.empty() == opts.fixture.empty()) {
    throw UsageError("exactly one of --instance or --fixture is required");
  }
  return opts.fixture.empty() ? load_game(opts.instance) : load_fixture(opts.fixture);
}

std::vector<Notion>
parse_notions(const std::vector<std::string>& names)
{
  std::vector<Notion> out;
  for (const std::string& arg : names) {
    std::stringstream ss(arg);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name == "all") {
        out.assign(std::begin(kAllNotions), std::end(kAllNotions));
      } else {
        out.push_back(parse_notion(name));
      }
    }
  }
  if (out.empty()) {
    throw UsageError("--notion requires at least one notion");
  }
  return out;
}

void
emit_json(const std::string& json, const Options& opts, std::ostream& out)
{
  if (opts.out_path.empty()) {
    out << json;
    return;
  }
  std::ofstream file(opts.out_path);
  if (!file) {
    throw std::runtime_error("cannot write " + opts.out_path);
  }
  file << json;
  out << "WROTE " << opts.out_path << "\n";
}

void
print_report(const StabilityReport& report, std::span<const Notion> notions, std::ostream& out)
{
  std::optional<Notion> first_failure;
  for (Notion notion : notions) {
    if (report.stable(notion)) {
      out << notion_name(notion) << " STABLE\n";
      continue;
    }
    out << notion_name(notion) << " UNSTABLE " << report.witness_text(notion) << "\n";
    if (notion == Notion::kIndividual && report.individual.witness->vetoer) {
      out << "# player " << *report.individual.witness->vetoer
          << " in the origin block would veto this move under cis\n";
    }
    if (!first_failure) {
      first_failure = notion;
    }
  }
  if (!first_failure) {
    out << "STABLE\n";
  } else if (notions.size() == 1) {
    out << "UNSTABLE " << report.witness_text(*first_failure) << "\n";
  } else {
    out << "UNSTABLE notion=" << notion_name(*first_failure) << " " << report.witness_text(*first_failure) << "\n";
  }
}

int
cmd_check(const Options& opts, const Limits& limits, std::ostream& out, bool all)
{
  const Game game = load_input(opts);
  const Partition partition = Partition::parse(opts.partition, game.num_players());
  const std::vector<Notion> notions =
    all ? std::vector<Notion>(std::begin(kAllNotions), std::end(kAllNotions)) : parse_notions(opts.notions);

  StabilityReport report;
  if (all) {
    report = classify(game, partition, limits);
  }
  for (Notion notion : all ? std::vector<Notion>{} : notions) {
    switch (notion) {
      case Notion::kNash: report.nash = is_nash_stable(game, partition); break;
      case Notion::kIndividual: report.individual = is_individually_stable(game, partition); break;
      case Notion::kContractual: report.contractual = is_contractually_individually_stable(game, partition); break;
      case Notion::kCore: report.core = is_core_stable(game, partition, limits); break;
      case Notion::kStrongCore: report.strong_core = is_strong_core_stable(game, partition, limits); break;
    }
  }
  if (notions.size() == 1) {
    // Only the verdict line; the witness explanation for IS still goes first.
    const Notion notion = notions.front();
    if (notion == Notion::kIndividual && report.individual.witness && report.individual.witness->vetoer) {
      out << "# player " << *report.individual.witness->vetoer
          << " in the origin block would veto this move under cis\n";
    }
    out << (report.stable(notion) ? "STABLE" : "UNSTABLE " + report.witness_text(notion)) << "\n";
    return kExitOk;
  }
  print_report(report, notions, out);
  return kExitOk;
}

int
cmd_solve(const Options& opts, const Limits& limits, std::ostream& out)
{
  const Game game = load_input(opts);
  std::optional<Partition> start;
  if (!opts.start.empty()) {
    start = Partition::parse(opts.start, game.num_players());
  }
  if (start && opts.method != "local") {
    throw UsageError("--start only applies to --method local");
  }
  if (opts.trace && opts.method != "local") {
    throw UsageError("--trace only applies to --method local");
  }

  Partition result = Partition::singletons(game.num_players());
  if (opts.method == "local") {
    const LocalSearchResult run = solve_nash_local_search(game, start);
    if (opts.trace) {
      out << "step\tplayer\tfrom\tto\tphi_before\tphi_after\n";
      for (std::size_t k = 0; k < run.trace.size(); ++k) {
        const DynamicsStep& s = run.trace[k];
        out << (k + 1) << '\t' << s.player << '\t' << s.from.to_string() << '\t' << s.to.to_string() << '\t'
            << s.phi_before << '\t' << s.phi_after << '\n';
      }
    }
    result = run.partition;
  } else if (opts.method == "global") {
    result = solve_nash_global(game, limits);
  } else if (opts.method == "greedy") {
    result = solve_common_ranking_greedy(game, limits);
  } else if (opts.method == "topcoalition") {
    const auto order = opts.tie_break == "smallest" ? TopCoalitionOrder::kSmallestFirst
                                                    : TopCoalitionOrder::kLargestFirst;
    result = solve_top_coalition_greedy(game, order, limits);
  }
  out << "PARTITION " << result.to_string() << "\n";
  return kExitOk;
}

int
cmd_enumerate(const Options& opts, const Limits& limits, std::ostream& out)
{
  const Game game = load_input(opts);
  const std::vector<Notion> notions = parse_notions(opts.notions);
  const std::vector<Partition> found = enumerate_stable(game, notions, limits);
  out << "count " << found.size() << "\n";
  for (const Partition& p : found) {
    out << "PARTITION " << p.to_string() << "\n";
  }
  if (found.empty()) {
    out << "EMPTY\n";
  }
  return kExitOk;
}

int
cmd_convert(const Options& opts, const Limits& limits, std::ostream& out)
{
  const Game game = load_input(opts);
  if (opts.target == "subset_additive") {
    emit_json(game_to_json(to_subset_additive(game, limits)), opts, out);
    return kExitOk;
  }
  auto sn = as_subset_neutral(game);
  if (!sn) {
    throw PreconditionError(std::string("no subset-neutral form is known for a ") +
                            std::string(kind_name(game.kind())) +
                            " game (need subset_neutral, neutrally_anonymous or symmetric additively_separable)");
  }
  emit_json(game_to_json(std::move(*sn)), opts, out);
  return kExitOk;
}

int
cmd_fixture(const Options& opts, std::ostream& out)
{
  if (opts.list) {
    for (std::string_view name : fixture_names()) {
      out << name << "\n";
    }
    return kExitOk;
  }
  if (opts.fixture.empty()) {
    throw UsageError("fixture name required (or --list)");
  }
  emit_json(game_to_json(load_fixture(opts.fixture)), opts, out);
  return kExitOk;
}

int
cmd_generate(const Options& opts, std::ostream& out)
{
  GeneratorSpec spec;
  spec.kind = parse_generator_name(opts.generator);
  spec.n = opts.n;
  spec.seed = opts.seed;
  const auto colon = opts.range.find(':', 1);
  if (colon == std::string::npos) {
    throw UsageError("--range must look like LOW:HIGH, got '" + opts.range + "'");
  }
  try {
    spec.low = std::stoll(opts.range.substr(0, colon));
    spec.high = std::stoll(opts.range.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("--range must look like LOW:HIGH, got '" + opts.range + "'");
  }
  emit_json(game_to_json(generate(spec)), opts, out);
  return kExitOk;
}

void
add_game_source(CLI::App* cmd, Options& opts)
{
  cmd->add_option("--instance", opts.instance, "Game instance JSON file");
  cmd->add_option("--fixture", opts.fixture, "Built-in fixture name (see `fixture --list`)");
}

}  // namespace

int
run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  Options opts;
  CLI::App app{"Hedonic coalition formation games: stability checks and solvers", "hedonica"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "Check a partition against stability notions");
  add_game_source(check, opts);
  check->add_option("--partition", opts.partition, "Partition literal, e.g. 1,2|3")->required();
  check->add_option("--notion", opts.notions, "nash|is|cis|core|strongcore|all (comma-separated)")
    ->default_val(std::vector<std::string>{"all"});

  auto* classify = app.add_subcommand("classify", "Report all five stability verdicts");
  add_game_source(classify, opts);
  classify->add_option("--partition", opts.partition, "Partition literal")->required();

  auto* solve = app.add_subcommand("solve", "Compute a stable partition");
  add_game_source(solve, opts);
  solve->add_option("--method", opts.method, "local|global|greedy|topcoalition")
    ->check(CLI::IsMember({"local", "global", "greedy", "topcoalition"}));
  solve->add_option("--start", opts.start, "Start partition for local search (default: singletons)");
  solve->add_flag("--trace", opts.trace, "Print the better-response trace as TSV");
  solve->add_option("--tie-break", opts.tie_break, "Top-coalition tie-break: largest|smallest")
    ->check(CLI::IsMember({"largest", "smallest"}));

  auto* enumerate = app.add_subcommand("enumerate", "List every partition satisfying the notions");
  add_game_source(enumerate, opts);
  enumerate->add_option("--notion", opts.notions, "Notions that must all hold (comma-separated)")->required();

  auto* convert = app.add_subcommand("convert", "Rewrite a game in another representation");
  add_game_source(convert, opts);
  convert->add_option("--to", opts.target, "subset_additive|subset_neutral")
    ->required()
    ->check(CLI::IsMember({"subset_additive", "subset_neutral"}));
  convert->add_option("--out", opts.out_path, "Write JSON here instead of stdout");

  auto* fixture = app.add_subcommand("fixture", "Print a built-in fixture as JSON");
  fixture->add_option("name", opts.fixture, "Fixture name");
  fixture->add_flag("--list", opts.list, "List fixture names");
  fixture->add_option("--out", opts.out_path, "Write JSON here instead of stdout");

  auto* gen = app.add_subcommand("generate", "Generate a random game");
  gen->add_option("--kind", opts.generator,
                  "random_subset_neutral|random_neutrally_anonymous|random_symmetric_as|"
                  "random_common_ranking|random_utility_table")
    ->required();
  gen->add_option("--n", opts.n, "Number of players")->required();
  gen->add_option("--seed", opts.seed, "Random seed");
  gen->add_option("--range", opts.range, "Integer value range LOW:HIGH (default -5:5)");
  gen->add_option("--out", opts.out_path, "Write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Limits limits = Limits::from_environment();
    if (check->parsed()) {
      return cmd_check(opts, limits, out, false);
    }
    if (classify->parsed()) {
      return cmd_check(opts, limits, out, true);
    }
    if (solve->parsed()) {
      return cmd_solve(opts, limits, out);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(opts, limits, out);
    }
    if (convert->parsed()) {
      return cmd_convert(opts, limits, out);
    }
    if (fixture->parsed()) {
      return cmd_fixture(opts, out);
    }
    return cmd_generate(opts, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
}

}  // namespace hedonica::cli
