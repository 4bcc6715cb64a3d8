#include "cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/json_io.hpp"
#include "cli/schema.hpp"
#include "cli/svg.hpp"
#include "iet/criterion.hpp"
#include "iet/diagnostics.hpp"
#include "iet/exchange.hpp"
#include "iet/kernels.hpp"
#include "iet/permutation.hpp"
#include "iet/suspension.hpp"

namespace iet::cli {

using nlohmann::json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ReduciblePermutation: return kReducible;
    case ErrorKind::DomainViolation: return kDomainViolation;
    case ErrorKind::LemmaViolation: return kInternalError;
    default: return kValidationError;
  }
}

namespace {

void emit(std::ostream& out, const json& value, bool pretty) { out << value.dump(pretty ? 2 : -1) << '\n'; }

Permutation perm_of(const json& job) { return Permutation::from_images(job.at("perm").get<std::vector<int>>()); }

std::vector<Scalar> scalars_of(const json& job, const char* key) { return rationals_from_json(job.at(key)); }

int cmd_omega(const json& job, std::ostream& out, bool pretty) {
  emit(out, omega_json(omega(perm_of(job))), pretty);
  return kSuccess;
}

int cmd_suspend(const json& job, std::ostream& out, std::ostream& err, bool pretty) {
  const SuspensionDiagram diagram(perm_of(job), scalars_of(job, "lengths"), scalars_of(job, "heights"));
  const IntersectionReport report = self_intersects(diagram);
  if (job.contains("svg")) {
    const std::string path = job["svg"];
    std::ofstream file(path);
    if (!file) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
    file << render_svg(diagram, report);
  }
  emit(out, diagram_json(diagram, report), pretty);
  if (job.value("require_simple", false) && !report.simple) {
    err << "ietool: curve is not simple\n";
    return kNotSimple;
  }
  return kSuccess;
}

int cmd_check(const json& job, std::ostream& out, bool pretty) {
  const auto lengths = scalars_of(job, "lengths");
  const auto heights = scalars_of(job, "heights");
  emit(out, criterion_json(convexity_criterion(perm_of(job), lengths, heights)), pretty);
  return kSuccess;
}

int cmd_scan(const json& job, std::ostream& out, bool pretty) {
  const Permutation sigma = perm_of(job);
  const CurveSpec spec = job.contains("curve") ? curve_from_json(job["curve"]) : CurveSpec::mahler(job["mahler"]);
  const auto grid = uniform_grid(job.at("from").get<double>(), job.at("to").get<double>(),
                                 job.at("samples").get<std::size_t>());
  const ExecutionPolicy policy{Execution::Parallel, job.value("jobs", 0)};
  json result = scan_json(scan_curve(spec, sigma, grid, policy));
  result["perm"] = permutation_json(sigma);
  emit(out, result, pretty);
  return kSuccess;
}

int cmd_orbit(const json& job, std::ostream& out, bool pretty) {
  const IntervalExchange t(perm_of(job), scalars_of(job, "lengths"));
  const Scalar x0 = rational_from_json(job.at("x0"));
  const auto steps = job.at("steps").get<std::uint64_t>();
  json result = orbit_json(visit_frequencies(t, x0, steps, job.value("refine", kDefaultRefinementCells)), x0);
  if (job.contains("trend")) {
    const auto schedule = job["trend"].get<std::vector<std::uint64_t>>();
    result["trend"] = trend_json(discrepancy_trend(t, x0, schedule));
  }
  emit(out, result, pretty);
  return kSuccess;
}

int cmd_connections(const json& job, std::ostream& out, bool pretty) {
  const IntervalExchange t(perm_of(job), scalars_of(job, "lengths"));
  emit(out, connections_json(find_connections(t, job.at("max_m").get<int>())), pretty);
  return kSuccess;
}

std::vector<int> parse_perm(const std::string& text) {
  std::vector<int> images;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(ErrorKind::InvalidInput, "bad permutation entry '" + item + "'");
    images.push_back(v);
  }
  return images;
}

json rational_list(const std::string& text) {
  json out = json::array();
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

int execute_job(const json& job, std::ostream& out, std::ostream& err, bool pretty) {
  try {
    const std::string command = job.at("command");
    if (command == "omega") return cmd_omega(job, out, pretty);
    if (command == "suspend") return cmd_suspend(job, out, err, pretty);
    if (command == "check") return cmd_check(job, out, pretty);
    if (command == "scan") return cmd_scan(job, out, pretty);
    if (command == "orbit") return cmd_orbit(job, out, pretty);
    if (command == "connections") return cmd_connections(job, out, pretty);
    err << "ietool: unknown command '" << command << "'\n";
    return kValidationError;
  } catch (const Error& e) {
    err << "ietool: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const json::exception& e) {
    err << "ietool: malformed job: " << e.what() << '\n';
    return kValidationError;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interval exchanges, suspension polygons and the convexity criterion"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent JSON output");

  std::string perm, lengths, heights, svg, curve_file, x0, trend, job_file;
  bool require_simple = false;
  int mahler = 0, jobs = 0, refine = kDefaultRefinementCells, max_m = 0;
  double from = 0, to = 0;
  long long samples = 0, steps = 0;

  auto* omega_cmd = app.add_subcommand("omega", "Print the antisymmetric matrix of a permutation");
  omega_cmd->add_option("--perm", perm, "One-line images sigma(1),...,sigma(d)")->required();

  auto* suspend_cmd = app.add_subcommand("suspend", "Build the suspension diagram and test it for self-intersections");
  suspend_cmd->add_option("--perm", perm)->required();
  suspend_cmd->add_option("--lengths", lengths, "a_1,...,a_d")->required();
  suspend_cmd->add_option("--heights", heights, "b_1,...,b_d")->required();
  suspend_cmd->add_option("--svg", svg, "Write an SVG drawing to this path");
  suspend_cmd->add_flag("--require-simple", require_simple, "Exit 3 if the curve self-intersects");

  auto* check_cmd = app.add_subcommand("check", "Run the convexity criterion");
  check_cmd->add_option("--perm", perm)->required();
  check_cmd->add_option("--lengths", lengths)->required();
  check_cmd->add_option("--heights", heights)->required();

  auto* scan_cmd = app.add_subcommand("scan", "Run the criterion along a polynomial curve a(s), b = a'(s)");
  scan_cmd->add_option("--perm", perm)->required();
  auto* curve_opt = scan_cmd->add_option("--curve", curve_file, "JSON curve file {\"d\", \"coeffs\"}");
  auto* mahler_opt = scan_cmd->add_option("--mahler", mahler, "Use a(s) = (s, s^2, ..., s^d)");
  curve_opt->excludes(mahler_opt);
  scan_cmd->add_option("--from", from)->required();
  scan_cmd->add_option("--to", to)->required();
  scan_cmd->add_option("--samples", samples)->required();
  scan_cmd->add_option("--jobs", jobs, "Worker threads (0 = OpenMP default)");

  auto* orbit_cmd = app.add_subcommand("orbit", "Visit statistics of an exact orbit (empirical)");
  orbit_cmd->add_option("--perm", perm)->required();
  orbit_cmd->add_option("--lengths", lengths)->required();
  orbit_cmd->add_option("--x0", x0)->required();
  orbit_cmd->add_option("-N,--steps", steps)->required();
  orbit_cmd->add_option("--refine", refine, "Cells in the uniform refinement");
  orbit_cmd->add_option("--trend", trend, "Checkpoints n_1<n_2<... for the discrepancy trend");

  auto* conn_cmd = app.add_subcommand("connections", "List connections T^m(x_i) = x_j");
  conn_cmd->add_option("--perm", perm)->required();
  conn_cmd->add_option("--lengths", lengths)->required();
  conn_cmd->add_option("--max-m", max_m)->required();

  auto* run_cmd = app.add_subcommand("run", "Execute a JSON job file");
  run_cmd->add_option("job", job_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kValidationError;
  }

  json job;
  try {
    if (run_cmd->parsed()) {
      std::ifstream in(job_file);
      if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + job_file);
      job = json::parse(in);
    } else {
      CLI::App* sub = app.get_subcommands().front();
      job["command"] = sub->get_name();
      job["perm"] = parse_perm(perm);
      if (!lengths.empty()) job["lengths"] = rational_list(lengths);
      if (!heights.empty()) job["heights"] = rational_list(heights);
      if (sub == suspend_cmd) {
        if (!svg.empty()) job["svg"] = svg;
        if (require_simple) job["require_simple"] = true;
      }
      if (sub == scan_cmd) {
        if (*curve_opt) {
          std::ifstream in(curve_file);
          if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + curve_file);
          job["curve"] = json::parse(in);
        }
        if (*mahler_opt) job["mahler"] = mahler;
        job["from"] = from;
        job["to"] = to;
        job["samples"] = samples;
        if (sub->count("--jobs")) job["jobs"] = jobs;
      }
      if (sub == orbit_cmd) {
        job["x0"] = x0;
        job["steps"] = steps;
        job["refine"] = refine;
        if (!trend.empty()) {
          json schedule = json::array();
          for (const auto& item : split(trend)) schedule.push_back(std::stoll(item));
          job["trend"] = schedule;
        }
      }
      if (sub == conn_cmd) job["max_m"] = max_m;
    }
  } catch (const Error& e) {
    err << "ietool: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::exception& e) {
    err << "ietool: invalid input: " << e.what() << '\n';
    return kValidationError;
  }

  if (const auto problems = job_schema().validate(job); !problems.empty()) {
    for (const auto& p : problems) err << "ietool: job " << p << '\n';
    return kValidationError;
  }
  return execute_job(job, out, err, pretty);
}

}  // namespace iet::cli
