#pragma once

#include "drawers/drawer_config.hpp"
#include "drawers/instance.hpp"
#include "drawers/schedule.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace drawers {

struct RunConfig {
  std::size_t n_runs = 100;
  std::uint64_t master_seed = 0;
  DrawerConfig drawer_config = default_drawer_config();
  /// Worker threads; 0 means std::thread::hardware_concurrency(). Never
  /// changes the result.
  std::size_t workers = 1;
  /// Keep every replication's schedule, not just the best one.
  bool keep_all = false;
};

struct SimulationResult {
  Schedule best;
  std::size_t best_run_index = 0;
  /// TMS of replication i at position i.
  std::vector<Time> tms_samples;
  /// Filled only when RunConfig::keep_all is set.
  std::vector<Schedule> schedules;
  double wall_time = 0.0;
};

struct Progress {
  std::size_t run_index = 0;
  Time tms = 0;
  /// Best TMS among replications finished so far (completion order).
  Time running_best = 0;
  std::size_t completed = 0;
};

/// Called once per finished replication, serialized but possibly from a
/// worker thread.
using ProgressCallback = std::function<void(const Progress&)>;

/// Replication i runs run_psgs with seed run_seed(master_seed, i). The best
/// schedule is the minimum TMS, lowest run index on ties. Errors from a
/// replication are rethrown with its run index.
SimulationResult simulate(const Portfolio& portfolio, const RunConfig& config,
                          const ProgressCallback& progress = {});

}  // namespace drawers
