#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tradenet/documents.hpp"
#include "tradenet/errors.hpp"
#include "tradenet/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitSolverError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tradenet::ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

tradenet::ReportFormat parse_format(const std::string& format) {
  if (format == "text") return tradenet::ReportFormat::text;
  if (format == "csv") return tradenet::ReportFormat::csv;
  return tradenet::ReportFormat::json;
}

tradenet::MatrixConvention parse_display(const std::string& display) {
  return display == "l-plus-d" ? tradenet::MatrixConvention::price_plus_distance
                               : tradenet::MatrixConvention::distance_only;
}

int cmd_validate(const std::string& path) {
  const std::string text = read_file(path);
  if (tradenet::detect_document_kind(text) == tradenet::DocumentKind::flow_problem) {
    tradenet::FlowProblemDocument doc = tradenet::parse_flow_problem(text);
    std::cout << "flow problem OK: " << doc.problem.edges.size() << " edges, "
              << doc.problem.paths.size() << " paths, demand " << doc.problem.demand.str()
              << "\n";
  } else {
    tradenet::InstanceDocument doc = tradenet::parse_instance(text);
    std::cout << "instance OK: " << doc.instance.network.node_count << " nodes, "
              << doc.instance.network.edges.size() << " edges, " << doc.instance.producers.size()
              << " producers, " << doc.instance.consumers.size() << " consumers, "
              << doc.instance.candidate_sites.size() << " candidate sites, "
              << doc.instance.retailer_count << " retailers\n";
  }
  return kExitOk;
}

int cmd_solve_compromise(const std::string& instance_path, const std::string& replay_path,
                         const std::string& display, const std::string& payoff,
                         const std::string& format) {
  tradenet::InstanceDocument doc = tradenet::parse_instance(read_file(instance_path));
  std::optional<tradenet::ReplayDocument> replay;
  if (!replay_path.empty()) {
    replay = tradenet::parse_replay(read_file(replay_path), doc.instance);
  }
  tradenet::ReportOptions options;
  options.display = parse_display(display);
  if (payoff == "revenue") options.payoff_override = tradenet::PayoffMode::revenue;
  if (payoff == "units") options.payoff_override = tradenet::PayoffMode::units;

  tradenet::CompromiseRun run = tradenet::run_compromise(doc, replay, options);
  std::cout << tradenet::render_report(tradenet::compromise_report(doc, run, options),
                                       parse_format(format));
  return kExitOk;
}

int cmd_solve_equilibrium(const std::string& path, const std::string& mode,
                          const std::string& format) {
  tradenet::FlowProblemDocument doc = tradenet::parse_flow_problem(read_file(path));
  tradenet::EquilibriumMode eq_mode = mode == "nonnegative"
                                          ? tradenet::EquilibriumMode::nonnegative
                                          : tradenet::EquilibriumMode::equal_cost;
  tradenet::EquilibriumRun run = tradenet::run_equilibrium(doc, eq_mode);
  std::cout << tradenet::render_report(tradenet::equilibrium_report(doc, run),
                                       parse_format(format));
  return kExitOk;
}

int cmd_distances(const std::string& path, const std::string& metric, const std::string& display,
                  const std::string& format) {
  tradenet::InstanceDocument doc = tradenet::parse_instance(read_file(path));
  tradenet::CostRole role =
      metric == "consumer" ? tradenet::CostRole::consumer : tradenet::CostRole::retailer;
  if (role == tradenet::CostRole::consumer && display == "l-plus-d") {
    throw tradenet::ParseError("--display l-plus-d only applies to --metric retailer");
  }
  tradenet::ReportOptions options;
  options.display = parse_display(display);
  tradenet::DistancesRun run = tradenet::run_distances(doc, role);
  std::cout << tradenet::render_report(tradenet::distances_report(doc, run, options),
                                       parse_format(format));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delivery-point placement and path-flow equilibria on dual-cost networks"};
  app.require_subcommand(1);

  std::string instance_path, replay_path, problem_path, file_path;
  std::string format = "text";
  std::string display = "d";
  std::string payoff;
  std::string metric;
  std::string mode = "equal-cost";

  CLI::App* validate = app.add_subcommand("validate", "Parse and validate a document");
  validate->add_option("file", file_path, "instance or flow-problem JSON")->required();

  CLI::App* compromise =
      app.add_subcommand("solve-compromise", "Place delivery points by minimax regret");
  compromise->add_option("instance", instance_path, "instance JSON")->required();
  compromise->add_option("--replay", replay_path, "replay distance tables JSON");
  compromise->add_option("--display", display, "producer cost display: d or l-plus-d")
      ->check(CLI::IsMember({"d", "l-plus-d"}));
  compromise->add_option("--payoff", payoff, "income model override: revenue or units")
      ->check(CLI::IsMember({"revenue", "units"}));
  compromise->add_option("--format", format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  CLI::App* equilibrium =
      app.add_subcommand("solve-equilibrium", "Solve a path-flow equilibrium");
  equilibrium->add_option("problem", problem_path, "flow problem JSON")->required();
  equilibrium->add_option("--mode", mode, "equal-cost or nonnegative")
      ->check(CLI::IsMember({"equal-cost", "nonnegative"}));
  equilibrium->add_option("--format", format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  CLI::App* distances = app.add_subcommand("distances", "Print a distance submatrix");
  distances->add_option("instance", instance_path, "instance JSON")->required();
  distances->add_option("--metric", metric, "retailer or consumer")
      ->required()
      ->check(CLI::IsMember({"retailer", "consumer"}));
  distances->add_option("--display", display, "d or l-plus-d")
      ->check(CLI::IsMember({"d", "l-plus-d"}));
  distances->add_option("--format", format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints the usage message; 0 for --help
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(file_path);
    if (compromise->parsed()) {
      return cmd_solve_compromise(instance_path, replay_path, display, payoff, format);
    }
    if (equilibrium->parsed()) return cmd_solve_equilibrium(problem_path, mode, format);
    if (distances->parsed()) return cmd_distances(instance_path, metric, display, format);
  } catch (const tradenet::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    for (const std::string& detail : e.details()) std::cerr << "  " << detail << "\n";
    return kExitInputError;
  } catch (const tradenet::SolveError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolverError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
