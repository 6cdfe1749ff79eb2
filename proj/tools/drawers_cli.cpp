// Command-line front end: solve, simulate, validate, auf, bench, oracle.

#include "drawers/analysis.hpp"
#include "drawers/benchmark.hpp"
#include "drawers/drawer_config.hpp"
#include "drawers/error.hpp"
#include "drawers/psplib_io.hpp"
#include "drawers/rng.hpp"
#include "drawers/scheduler.hpp"
#include "drawers/simulation.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace drawers;

namespace {

constexpr int kViolations = 1;
constexpr int kUsage = 2;
constexpr int kDataError = 3;

struct Common {
  std::string drawers_file;
  bool pool_sum = false;
};

DrawerConfig load_drawers(const Common& common) {
  if (common.drawers_file.empty()) return default_drawer_config();
  std::ifstream in(common.drawers_file);
  if (!in) throw Error(ErrorCode::MissingFile, common.drawers_file);
  return parse_drawer_config(in);
}

Portfolio load(const std::string& path, const Common& common) {
  auto portfolio = load_instance(path, {.pool_sum = common.pool_sum});
  const auto report = validate_portfolio(portfolio);
  if (!report.empty()) {
    std::ostringstream msg;
    msg << path << " is not a valid portfolio:";
    for (const auto& v : report) {
      msg << "\n  " << to_string(v.code);
      for (const auto& id : v.activities) msg << ' ' << to_label(id);
      if (v.resource) msg << " resource " << v.resource->value;
      if (!v.detail.empty()) msg << " (" << v.detail << ')';
    }
    throw Error(ErrorCode::ParseError, msg.str());
  }
  return portfolio;
}

Format output_format(const std::string& format, const std::string& output) {
  if (!format.empty()) return parse_format(format);
  if (!output.empty() && fs::path(output).has_extension()) return format_from_path(output);
  return Format::Csv;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::MissingFile, "cannot write " + path);
  out << text;
}

void emit_schedule(const Schedule& s, const Portfolio& p, const std::string& output,
                   const std::string& format) {
  const auto text = export_schedule(s, p, output_format(format, output));
  if (output.empty()) {
    std::cout << text;
  } else {
    write_file(output, text);
    std::cout << "TMS=" << s.tms() << '\n';
  }
}

std::size_t default_workers() {
  if (const char* env = std::getenv("DRAWERS_WORKERS")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "DRAWERS_WORKERS must be a non-negative integer");
    }
  }
  return 0;
}

std::string format_auf(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << v;
  return out.str();
}

// Lines of `<instance_id> <path>`, paths relative to the list file.
std::vector<std::pair<std::string, fs::path>> read_instance_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MissingFile, path);
  std::vector<std::pair<std::string, fs::path>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string id, file, extra;
    if (!(words >> id)) continue;
    if (!(words >> file) || (words >> extra))
      throw Error(ErrorCode::ParseError,
                  path + " line " + std::to_string(line_no) + ": expected '<instance_id> <path>'");
    const fs::path p = fs::path(file).is_absolute() ? fs::path(file) : fs::path(path).parent_path() / file;
    out.emplace_back(id, p);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drawer-priority parallel schedule generation for multi-project portfolios"};
  app.require_subcommand(1);
  Common common;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--drawers", common.drawers_file, "Drawer configuration file")
        ->check(CLI::ExistingFile);
    cmd->add_flag("--pool-sum", common.pool_sum,
                  "Pool global resources as the sum of project capacities");
  };

  std::string instance, output, format, samples, schedule_file, horizon = "portfolio";
  std::string best_known;
  std::uint64_t seed = 0;
  std::size_t runs = 100;
  std::size_t workers = 0;
  std::uint64_t budget = 10'000'000;
  bool quiet = false;
  bool workers_set = false;

  auto* solve = app.add_subcommand("solve", "One run; prints TMS and writes the schedule");
  solve->add_option("instance", instance, "Portfolio descriptor or .sm file")->required();
  solve->add_option("--seed", seed, "Random seed");
  solve->add_option("-o,--output", output, "Schedule file (stdout if omitted)");
  solve->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_common(solve);

  auto* sim = app.add_subcommand("simulate", "Best of N seeded runs");
  sim->add_option("instance", instance, "Portfolio descriptor or .sm file")->required();
  sim->add_option("--runs", runs, "Number of runs")->check(CLI::PositiveNumber);
  sim->add_option("--seed", seed, "Master seed");
  sim->add_option("--workers", workers, "Worker threads (0 = all cores)")
      ->each([&](const std::string&) { workers_set = true; });
  sim->add_option("-o,--output", output, "Best schedule file (stdout if omitted)");
  sim->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sim->add_option("--samples", samples, "Write per-run TMS as CSV run,seed,tms");
  sim->add_flag("-q,--quiet", quiet, "No progress on stderr");
  add_common(sim);

  auto* validate = app.add_subcommand("validate", "Feasibility report for a schedule file");
  validate->add_option("instance", instance, "Portfolio descriptor or .sm file")->required();
  validate->add_option("schedule", schedule_file, "Schedule (.csv or .json)")->required();
  validate->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_common(validate);

  auto* auf_cmd = app.add_subcommand("auf", "Average utilization factor per resource");
  auf_cmd->add_option("instance", instance, "Portfolio descriptor or .sm file")->required();
  auf_cmd->add_option("--horizon", horizon, "portfolio or project")
      ->check(CLI::IsMember({"portfolio", "project"}));
  add_common(auf_cmd);

  auto* bench = app.add_subcommand("bench", "Simulate a list of instances against best-known TMS");
  bench->add_option("list", instance, "File of '<instance_id> <path>' lines")->required();
  bench->add_option("--best-known", best_known, "CSV instance_id,method,tms")->required();
  bench->add_option("--runs", runs, "Runs per instance")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "Master seed");
  bench->add_option("--workers", workers, "Worker threads (0 = all cores)")
      ->each([&](const std::string&) { workers_set = true; });
  bench->add_option("-o,--output", output, "Report file (stdout if omitted)");
  bench->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_common(bench);

  auto* oracle = app.add_subcommand("oracle", "Exact minimum TMS by exhaustive search");
  oracle->add_option("instance", instance, "Portfolio descriptor or .sm file")->required();
  oracle->add_option("--budget", budget, "Search node limit");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (!workers_set) workers = default_workers();
    const auto drawers = load_drawers(common);

    if (solve->parsed()) {
      const auto p = load(instance, common);
      emit_schedule(run_psgs(p, drawers, seed), p, output, format);
      return 0;
    }

    if (sim->parsed()) {
      const auto p = load(instance, common);
      RunConfig cfg{runs, seed, drawers, workers, false};
      ProgressCallback progress;
      if (!quiet)
        progress = [&](const Progress& pr) {
          std::cerr << "run " << pr.run_index << " tms " << pr.tms << " best " << pr.running_best
                    << " (" << pr.completed << '/' << runs << ")\n";
        };
      const auto result = simulate(p, cfg, progress);
      if (!quiet)
        std::cerr << "best TMS " << result.best.tms() << " at run " << result.best_run_index
                  << ", " << std::fixed << std::setprecision(2) << result.wall_time << " s\n";
      if (!samples.empty()) {
        std::ostringstream out;
        out << "run,seed,tms\n";
        for (std::size_t i = 0; i < result.tms_samples.size(); ++i)
          out << i << ',' << run_seed(seed, i) << ',' << result.tms_samples[i] << '\n';
        write_file(samples, out.str());
      }
      emit_schedule(result.best, p, output, format);
      return 0;
    }

    if (validate->parsed()) {
      const auto p = load(instance, common);
      std::ifstream in(schedule_file);
      if (!in) throw Error(ErrorCode::MissingFile, schedule_file);
      const auto s = import_schedule(in, format.empty() ? format_from_path(schedule_file)
                                                        : parse_format(format));
      const auto report = check_feasibility(p, s);
      if (report.feasible()) {
        std::cout << "feasible TMS=" << s.tms() << '\n';
        return 0;
      }
      for (const auto& v : report.violations) {
        std::cout << to_string(v.kind);
        for (const auto& id : v.activities) std::cout << ' ' << to_label(id);
        if (v.resource) std::cout << " resource=" << v.resource->value;
        if (v.period) std::cout << " period=" << *v.period;
        if (v.kind != ViolationKind::Missing && v.kind != ViolationKind::Unknown)
          std::cout << " value=" << v.amount << " limit=" << v.limit;
        std::cout << '\n';
      }
      std::cout << report.violations.size() << " violation(s)\n";
      return kViolations;
    }

    if (auf_cmd->parsed()) {
      const auto p = load(instance, common);
      const auto report =
          auf(p, horizon == "project" ? AufHorizon::Project : AufHorizon::Portfolio);
      for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
      std::cout << "resource,scope,capacity,auf\n";
      for (const auto& [r, value] : report.values) {
        const auto& res = p.resource(r);
        std::cout << r.value << ','
                  << (res.is_global() ? std::string("global")
                                      : "local:" + std::to_string(*res.owner + 1))
                  << ',' << res.capacity << ',' << format_auf(value) << '\n';
      }
      return 0;
    }

    if (bench->parsed()) {
      std::ifstream table_in(best_known);
      if (!table_in) throw Error(ErrorCode::MissingFile, best_known);
      const auto table = parse_best_known(table_in);
      std::vector<std::pair<std::string, Time>> results;
      for (const auto& [id, path] : read_instance_list(instance)) {
        if (!table.count(id)) throw Error(ErrorCode::UnknownInstance, id);
        const auto p = load(path.string(), common);
        const auto r = simulate(p, RunConfig{runs, seed, drawers, workers, false});
        std::cerr << id << ": TMS " << r.best.tms() << ", " << std::fixed << std::setprecision(2)
                  << r.wall_time << " s\n";
        results.emplace_back(id, r.best.tms());
      }
      const auto text =
          format_benchmark_report(benchmark_report(results, table), output_format(format, output));
      if (output.empty())
        std::cout << text;
      else
        write_file(output, text);
      return 0;
    }

    if (oracle->parsed()) {
      const auto p = load(instance, common);
      const auto optimum = brute_force_optimal(p, budget);
      if (optimum)
        std::cout << *optimum << '\n';
      else
        std::cout << "unknown\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InvalidArgument ? kUsage : kDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}
