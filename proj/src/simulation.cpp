#include "drawers/simulation.hpp"

#include "drawers/error.hpp"
#include "drawers/rng.hpp"
#include "drawers/scheduler.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>

namespace drawers {

namespace {

struct Incumbent {
  std::optional<std::size_t> run;
  Time tms = std::numeric_limits<Time>::max();
  Schedule schedule;

  void offer(std::size_t run_index, Schedule& s) {
    const Time t = s.tms();
    if (!run || t < tms || (t == tms && run_index < *run)) {
      run = run_index;
      tms = t;
      schedule = std::move(s);
    }
  }
};

}  // namespace

SimulationResult simulate(const Portfolio& portfolio, const RunConfig& config,
                          const ProgressCallback& progress) {
  if (config.n_runs == 0) throw Error(ErrorCode::InvalidArgument, "n_runs must be at least 1");
  const auto started = std::chrono::steady_clock::now();

  std::size_t workers = config.workers == 0 ? std::thread::hardware_concurrency() : config.workers;
  workers = std::max<std::size_t>(1, std::min(workers, config.n_runs));

  SimulationResult result;
  result.tms_samples.assign(config.n_runs, 0);
  if (config.keep_all) result.schedules.resize(config.n_runs);

  std::atomic<std::size_t> next_run{0};
  std::atomic<bool> failed{false};
  std::mutex report_mutex;
  std::size_t completed = 0;
  Time running_best = std::numeric_limits<Time>::max();
  std::exception_ptr error;
  std::vector<Incumbent> incumbents(workers);

  auto work = [&](std::size_t worker) {
    for (;;) {
      const std::size_t i = next_run.fetch_add(1);
      if (i >= config.n_runs || failed.load()) return;
      try {
        Schedule s = run_psgs(portfolio, config.drawer_config, run_seed(config.master_seed, i));
        const Time t = s.tms();
        result.tms_samples[i] = t;
        if (config.keep_all) result.schedules[i] = s;
        incumbents[worker].offer(i, s);
        if (progress) {
          std::lock_guard lock(report_mutex);
          running_best = std::min(running_best, t);
          progress({i, t, running_best, ++completed});
        }
      } catch (const Error& e) {
        std::lock_guard lock(report_mutex);
        if (!error)
          error = std::make_exception_ptr(
              Error(e.code(), "run " + std::to_string(i) + ": " + e.what()));
        failed = true;
        return;
      } catch (...) {
        std::lock_guard lock(report_mutex);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  if (error) std::rethrow_exception(error);

  Incumbent best;
  for (auto& inc : incumbents)
    if (inc.run) best.offer(*inc.run, inc.schedule);
  result.best = std::move(best.schedule);
  result.best_run_index = *best.run;
  result.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace drawers
