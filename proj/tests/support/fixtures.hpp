#pragma once

#include "drawers/cpm.hpp"
#include "drawers/instance.hpp"

namespace drawers::testing {

/// Four-project portfolio at a scheduling step with eleven candidates:
/// 1.1-1.4, 2.1-2.2, 3.1-3.2, 4.1-4.3. Project 1 finishes last; the
/// zero-slack candidates are 1.1, 1.3, 2.1, 3.1 and 4.3.
struct ClassificationFixture {
  Portfolio portfolio;
  FixedAssignments fixed;
  Time now = 0;
};

inline ClassificationFixture classification_fixture() {
  const ResourceId shared{0};
  auto act = [&](Time d, std::vector<std::size_t> preds = {}) {
    return ActivitySpec{d, {{shared, 1}}, std::move(preds)};
  };
  ClassificationFixture f;
  f.portfolio.resources.push_back({shared, std::nullopt, 20});
  // Project 1 finishes at 10: 1.1 critical, 1.2 -> 1.5 slack 4,
  // 1.3 -> 1.6 critical, 1.4 slack 7.
  f.portfolio.projects.push_back(
      build_project(0, "P1", {act(10), act(4), act(6), act(3), act(2, {1}), act(4, {2})}));
  // Project 2 finishes at 8: 2.1 critical, 2.2 slack 5.
  f.portfolio.projects.push_back(build_project(1, "P2", {act(8), act(3)}));
  // Project 3 finishes at 9: 3.1 -> 3.3 critical, 3.2 slack 7.
  f.portfolio.projects.push_back(build_project(2, "P3", {act(5), act(2), act(4, {0})}));
  // Project 4 finishes at 7: 4.3 critical, 4.1 and 4.2 with slack.
  f.portfolio.projects.push_back(build_project(3, "P4", {act(2), act(4), act(7)}));
  for (std::size_t p = 0; p < 4; ++p) f.fixed[{p, 0}] = 0;
  return f;
}

inline Portfolio chain_portfolio(std::vector<Time> durations, int capacity = 10, int demand = 1) {
  Portfolio p;
  p.resources.push_back({ResourceId{0}, std::nullopt, capacity});
  std::vector<ActivitySpec> specs;
  for (std::size_t i = 0; i < durations.size(); ++i) {
    ActivitySpec s{durations[i], {{ResourceId{0}, demand}}, {}};
    if (i > 0) s.predecessors.push_back(i - 1);
    specs.push_back(s);
  }
  p.projects.push_back(build_project(0, "chain", specs));
  return p;
}

inline Portfolio independent_portfolio(std::vector<Time> durations, int capacity, int demand = 1) {
  Portfolio p;
  p.resources.push_back({ResourceId{0}, std::nullopt, capacity});
  std::vector<ActivitySpec> specs;
  for (Time d : durations) specs.push_back({d, {{ResourceId{0}, demand}}, {}});
  p.projects.push_back(build_project(0, "independent", specs));
  return p;
}

}  // namespace drawers::testing
