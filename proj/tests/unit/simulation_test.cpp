#include "drawers/simulation.hpp"

#include "drawers/analysis.hpp"
#include "drawers/error.hpp"
#include "drawers/psplib_io.hpp"
#include "drawers/scheduler.hpp"
#include "fixtures.hpp"
#include "random_portfolio.hpp"

#include <doctest.h>

#include <algorithm>

using namespace drawers;

TEST_CASE("single replication equals run_psgs with the derived seed") {
  const auto p = testing::random_portfolio(5);
  RunConfig cfg;
  cfg.n_runs = 1;
  cfg.master_seed = 77;
  const auto r = simulate(p, cfg);
  CHECK(r.best == run_psgs(p, cfg.drawer_config, run_seed(77, 0)));
  CHECK(r.best_run_index == 0);
  CHECK(r.tms_samples == std::vector<Time>{r.best.tms()});
}

TEST_CASE("best is the first minimum of the samples") {
  const auto p = testing::random_portfolio(21);
  RunConfig cfg;
  cfg.n_runs = 100;
  cfg.master_seed = 3;
  cfg.keep_all = true;
  const auto r = simulate(p, cfg);
  REQUIRE(r.tms_samples.size() == 100);
  const auto min_it = std::min_element(r.tms_samples.begin(), r.tms_samples.end());
  CHECK(r.best.tms() == *min_it);
  CHECK(r.best_run_index == static_cast<std::size_t>(min_it - r.tms_samples.begin()));
  REQUIRE(r.schedules.size() == 100);
  CHECK(r.schedules[r.best_run_index] == r.best);
  for (std::size_t i = 0; i < 100; ++i) {
    CHECK(r.schedules[i].tms() == r.tms_samples[i]);
    CHECK(check_feasibility(p, r.schedules[i]).feasible());
  }

  // Prefix minima never increase, and the first ten samples are the 10-run result.
  Time running = r.tms_samples[0];
  for (Time t : r.tms_samples) {
    CHECK(std::min(running, t) <= running);
    running = std::min(running, t);
  }
  cfg.n_runs = 10;
  cfg.keep_all = false;
  const auto ten = simulate(p, cfg);
  CHECK(std::equal(ten.tms_samples.begin(), ten.tms_samples.end(), r.tms_samples.begin()));
  CHECK(ten.best.tms() >= r.best.tms());
}

TEST_CASE("worker count does not change the result") {
  const auto p = testing::random_portfolio(8);
  RunConfig cfg;
  cfg.n_runs = 40;
  cfg.master_seed = 11;
  const auto base = simulate(p, cfg);
  for (std::size_t workers : {2u, 4u, 8u, 0u}) {
    cfg.workers = workers;
    const auto r = simulate(p, cfg);
    CHECK(r.tms_samples == base.tms_samples);
    CHECK(r.best == base.best);
    CHECK(r.best_run_index == base.best_run_index);
  }
}

TEST_CASE("progress is reported once per replication") {
  const auto p = testing::random_portfolio(2);
  RunConfig cfg;
  cfg.n_runs = 25;
  cfg.workers = 4;
  std::vector<std::size_t> seen;
  std::size_t last_completed = 0;
  Time best = std::numeric_limits<Time>::max();
  const auto r = simulate(p, cfg, [&](const Progress& progress) {
    seen.push_back(progress.run_index);
    CHECK(progress.completed == last_completed + 1);
    last_completed = progress.completed;
    best = std::min(best, progress.tms);
    CHECK(progress.running_best == best);
  });
  std::sort(seen.begin(), seen.end());
  REQUIRE(seen.size() == 25);
  for (std::size_t i = 0; i < 25; ++i) CHECK(seen[i] == i);
  CHECK(best == r.best.tms());
}

TEST_CASE("errors carry the run index") {
  const auto p = testing::independent_portfolio({2}, 1, 3);
  RunConfig cfg;
  cfg.n_runs = 3;
  try {
    simulate(p, cfg);
    FAIL("expected NONTERMINATION");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonTermination);
    CHECK(std::string(e.what()).find("run 0") != std::string::npos);
  }
  cfg.n_runs = 0;
  CHECK_THROWS_AS(simulate(p, cfg), Error);
}
