// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include "drawers/analysis.hpp"
#include "drawers/cpm.hpp"
#include "drawers/psplib_io.hpp"
#include "drawers/scheduler.hpp"
#include "drawers/simulation.hpp"
#include "fixtures.hpp"
#include "random_portfolio.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

using namespace drawers;

namespace {

enum class Outcome { Pass, Fail, Skip };

struct Criterion {
  int number;
  std::string name;
  std::function<Outcome(std::string&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

constexpr std::size_t kCorpusSize = 200;
constexpr std::uint64_t kSeedsPerInstance = 5;

std::vector<Portfolio> corpus() {
  std::vector<Portfolio> out;
  for (std::uint64_t i = 0; i < kCorpusSize; ++i) out.push_back(testing::random_portfolio(1000 + i));
  return out;
}

// Tiny instances whose precedence-only schedule overloads some resource.
std::vector<Portfolio> contended_tiny(std::size_t count) {
  std::vector<Portfolio> out;
  for (std::uint64_t seed = 0; out.size() < count; ++seed) {
    auto p = testing::random_tiny_portfolio(seed, 8);
    std::size_t real = 0;
    for (const auto& project : p.projects) real += project.activities.size() - 2;
    if (real > 8 || !validate_portfolio(p).empty()) continue;
    const auto ts = temporary_schedule(p, {}, 0);
    Schedule cpm;
    for (const auto& id : p.activity_ids()) cpm.assign(id, ts.at(id).es, p.activity(id).duration);
    if (check_feasibility(p, cpm).feasible()) continue;
    out.push_back(std::move(p));
  }
  return out;
}

Outcome feasibility_suite(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t schedules = 0, bad = 0, invalid = 0;
  for (const auto& p : corpus()) {
    if (!validate_portfolio(p).empty()) ++invalid;
    for (std::uint64_t s = 0; s < kSeedsPerInstance; ++s) {
      const auto schedule = run_psgs(p, default_drawer_config(), s);
      ++schedules;
      if (!check_feasibility(p, schedule).feasible()) ++bad;
    }
  }
  const double elapsed = seconds_since(start);
  detail = std::to_string(schedules) + " schedules, " + std::to_string(bad) + " infeasible, " +
           std::to_string(invalid) + " invalid instances, " + std::to_string(elapsed) + " s (limit 120 s)";
  return bad == 0 && invalid == 0 && schedules >= kCorpusSize * 5 && elapsed < 120.0 ? Outcome::Pass
                                                                                      : Outcome::Fail;
}

Outcome cpm_equivalence(std::string& detail) {
  std::size_t mismatched_starts = 0, mismatched_tms = 0, schedules = 0;
  for (const auto& original : corpus()) {
    const auto p = testing::with_ample_capacity(original);
    const auto ts = temporary_schedule(p, {}, 0);
    for (std::uint64_t s = 0; s < kSeedsPerInstance; ++s) {
      const auto schedule = run_psgs(p, default_drawer_config(), s);
      ++schedules;
      for (const auto& id : p.activity_ids())
        if (schedule.start(id) != ts.at(id).es) ++mismatched_starts;
      if (schedule.tms() != cpm_makespan(p)) ++mismatched_tms;
    }
  }
  detail = std::to_string(schedules) + " schedules, " + std::to_string(mismatched_starts) +
           " start mismatches, " + std::to_string(mismatched_tms) + " TMS mismatches";
  return mismatched_starts == 0 && mismatched_tms == 0 ? Outcome::Pass : Outcome::Fail;
}

Outcome oracle_equivalence(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  const auto instances = contended_tiny(60);
  std::size_t equal = 0, below_optimum = 0, unknown = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& p = instances[i];
    const auto optimum = brute_force_optimal(p);
    if (!optimum) {
      ++unknown;
      continue;
    }
    RunConfig cfg;
    cfg.n_runs = 100;
    cfg.master_seed = i;
    const Time best = simulate(p, cfg).best.tms();
    if (best < *optimum) ++below_optimum;
    if (best == *optimum) ++equal;
  }
  const double rate = static_cast<double>(equal) / static_cast<double>(instances.size());
  const double elapsed = seconds_since(start);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%zu instances, optimum reached on %zu (%.1f %%, target >= 80 %%), %zu below optimum, "
                "%zu oracle budget exhausted, %.2f s (limit 300 s)",
                instances.size(), equal, 100.0 * rate, below_optimum, unknown, elapsed);
  detail = buf;
  return below_optimum == 0 && unknown == 0 && rate >= 0.80 && elapsed < 300.0 ? Outcome::Pass
                                                                              : Outcome::Fail;
}

Outcome classification_golden(std::string& detail) {
  const auto f = testing::classification_fixture();
  const auto ts = temporary_schedule(f.portfolio, f.fixed, f.now);
  const auto candidates = candidate_activities(f.portfolio, ts, f.now, f.fixed);
  const auto drawers = classify(f.portfolio, candidates, ts, default_drawer_config());
  const std::vector<std::vector<std::string>> expected{
      {"1.1", "1.3"}, {"2.1", "3.1", "4.3"}, {"1.2", "1.4"}, {"2.2", "3.2", "4.1", "4.2"}};
  std::vector<std::vector<std::string>> got;
  for (const auto& d : drawers) {
    got.emplace_back();
    for (const auto& id : d) got.back().push_back(to_label(id));
  }
  detail = std::to_string(candidates.size()) + " candidates; drawers";
  for (const auto& d : got) {
    detail += " {";
    for (std::size_t i = 0; i < d.size(); ++i) detail += (i ? "," : "") + d[i];
    detail += "}";
  }
  return candidates.size() == 11 && got == expected ? Outcome::Pass : Outcome::Fail;
}

Outcome parallel_determinism(std::string& detail) {
  std::size_t differing = 0;
  const std::uint64_t instances[] = {7, 42, 1234};
  for (std::uint64_t seed : instances) {
    const auto p = testing::random_portfolio(seed);
    std::vector<Time> reference_samples;
    std::string reference_csv, reference_json;
    for (std::size_t workers : {1u, 4u, 8u}) {
      RunConfig cfg;
      cfg.n_runs = 100;
      cfg.master_seed = 2024;
      cfg.workers = workers;
      const auto r = simulate(p, cfg);
      const auto csv = export_schedule(r.best, p, Format::Csv);
      const auto json = export_schedule(r.best, p, Format::Json);
      if (workers == 1) {
        reference_samples = r.tms_samples;
        reference_csv = csv;
        reference_json = json;
      } else if (r.tms_samples != reference_samples || csv != reference_csv ||
                 json != reference_json) {
        ++differing;
      }
    }
  }
  detail = "3 instances x workers {1,4,8}, 100 runs each; " + std::to_string(differing) +
           " differing results";
  return differing == 0 ? Outcome::Pass : Outcome::Fail;
}

Outcome lower_bounds(std::string& detail) {
  std::size_t checked = 0, violated = 0;
  auto check = [&](const Portfolio& p, Time tms) {
    ++checked;
    if (tms < cpm_makespan(p) || tms < resource_lower_bound(p)) ++violated;
  };
  for (const auto& p : corpus())
    for (std::uint64_t s = 0; s < kSeedsPerInstance; ++s)
      check(p, run_psgs(p, default_drawer_config(), s).tms());
  for (const auto& p : contended_tiny(60)) {
    RunConfig cfg;
    cfg.n_runs = 20;
    const auto r = simulate(p, cfg);
    for (Time t : r.tms_samples) check(p, t);
  }
  detail = std::to_string(checked) + " TMS values, " + std::to_string(violated) + " below a bound";
  return violated == 0 ? Outcome::Pass : Outcome::Fail;
}

// Needs MPSPLIB_ID8 pointing at a descriptor (or .sm) for library instance 8.
Outcome external_benchmark(std::string& detail) {
  const char* path = std::getenv("MPSPLIB_ID8");
  if (!path || !std::filesystem::exists(path)) {
    detail = "MPSPLIB_ID8 not set or file missing; library instances are not bundled";
    return Outcome::Skip;
  }
  const auto p = load_instance(path);
  if (!validate_portfolio(p).empty()) {
    detail = std::string(path) + " is not a valid portfolio";
    return Outcome::Fail;
  }
  RunConfig cfg;
  cfg.n_runs = 100;
  cfg.workers = 1;
  const auto r = simulate(p, cfg);
  char buf[160];
  std::snprintf(buf, sizeof buf, "best TMS %d (limit 68, published 65), %.2f s for 100 runs (limit 100 s)",
                r.best.tms(), r.wall_time);
  detail = buf;
  return r.best.tms() <= 68 && r.wall_time < 100.0 ? Outcome::Pass : Outcome::Fail;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "feasibility over random portfolios", feasibility_suite},
      {2, "CPM equivalence with ample capacity", cpm_equivalence},
      {3, "oracle equivalence on tiny instances", oracle_equivalence},
      {4, "drawer classification golden example", classification_golden},
      {5, "determinism across worker counts", parallel_determinism},
      {6, "TMS lower bounds", lower_bounds},
      {7, "external benchmark instance 8", external_benchmark},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    Outcome outcome = Outcome::Fail;
    try {
      outcome = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const char* tag = outcome == Outcome::Pass ? "PASS" : outcome == Outcome::Skip ? "SKIP" : "FAIL";
    std::printf("[%s] criterion %d: %s -- %s\n", tag, c.number, c.name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (outcome == Outcome::Fail) ++failures;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
