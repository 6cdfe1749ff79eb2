#pragma once

#include "drawers/instance.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>

namespace drawers::testing {

struct GeneratorLimits {
  std::size_t min_projects = 1, max_projects = 5;
  std::size_t min_activities = 5, max_activities = 30;
  std::size_t min_resources = 1, max_resources = 4;
  int min_capacity = 2, max_capacity = 10;
  int max_duration = 10;
  Time max_release = 10;
  double demand_probability = 0.6;
  double zero_duration_probability = 0.05;
};

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

/// Random valid portfolio: every project sees the same K resource slots, each
/// slot either pooled globally or private to the project.
inline Portfolio random_portfolio(std::uint64_t seed, const GeneratorLimits& lim = {}) {
  std::mt19937_64 rng(seed);
  const auto n_projects = static_cast<std::size_t>(
      uniform(rng, static_cast<int>(lim.min_projects), static_cast<int>(lim.max_projects)));
  const auto n_slots = static_cast<std::size_t>(
      uniform(rng, static_cast<int>(lim.min_resources), static_cast<int>(lim.max_resources)));

  Portfolio portfolio;
  std::vector<bool> slot_global(n_slots);
  std::vector<ResourceId> global_id(n_slots);
  for (std::size_t k = 0; k < n_slots; ++k) {
    slot_global[k] = n_projects > 1 && chance(rng, 0.5);
    if (slot_global[k]) {
      global_id[k] = ResourceId{portfolio.resources.size()};
      portfolio.resources.push_back(
          {global_id[k], std::nullopt, uniform(rng, lim.min_capacity, lim.max_capacity)});
    }
  }

  for (std::size_t p = 0; p < n_projects; ++p) {
    std::vector<ResourceId> visible(n_slots);
    for (std::size_t k = 0; k < n_slots; ++k) {
      if (slot_global[k]) {
        visible[k] = global_id[k];
      } else {
        visible[k] = ResourceId{portfolio.resources.size()};
        portfolio.resources.push_back(
            {visible[k], p, uniform(rng, lim.min_capacity, lim.max_capacity)});
      }
    }
    const auto n = static_cast<std::size_t>(
        uniform(rng, static_cast<int>(lim.min_activities), static_cast<int>(lim.max_activities)));
    std::vector<ActivitySpec> specs(n);
    for (std::size_t a = 0; a < n; ++a) {
      auto& spec = specs[a];
      spec.duration = chance(rng, lim.zero_duration_probability) ? 0 : uniform(rng, 1, lim.max_duration);
      for (std::size_t k = 0; k < n_slots; ++k)
        if (chance(rng, lim.demand_probability)) {
          const int cap = portfolio.resources[visible[k].value].capacity;
          spec.demands[visible[k]] = uniform(rng, 1, cap);
        }
      const double edge_p = a == 0 ? 0.0 : std::min(1.0, 2.0 / static_cast<double>(a));
      for (std::size_t q = 0; q < a; ++q)
        if (chance(rng, edge_p)) spec.predecessors.push_back(q);
    }
    const Time release = chance(rng, 0.5) ? 0 : uniform(rng, 0, lim.max_release);
    portfolio.projects.push_back(build_project(p, "P" + std::to_string(p + 1), specs, release));
  }
  return portfolio;
}

/// Same portfolio with every capacity raised to the total demand on it, so no
/// set of simultaneous activities can exceed it.
inline Portfolio with_ample_capacity(Portfolio portfolio) {
  for (auto& r : portfolio.resources) r.capacity = 0;
  for (const auto& project : portfolio.projects)
    for (const auto& a : project.activities)
      for (const auto& [r, units] : a.demands) portfolio.resources[r.value].capacity += units;
  for (auto& r : portfolio.resources) r.capacity = std::max(r.capacity, 1);
  return portfolio;
}

/// Tiny contended instance: at most `max_total` real activities overall.
inline Portfolio random_tiny_portfolio(std::uint64_t seed, std::size_t max_total = 8) {
  std::mt19937_64 rng(seed ^ 0x5DEECE66DULL);
  const auto n_projects = static_cast<std::size_t>(uniform(rng, 1, 3));
  GeneratorLimits lim;
  lim.min_projects = lim.max_projects = n_projects;
  lim.min_activities = 1;
  lim.max_activities = std::max<std::size_t>(1, max_total / n_projects);
  lim.min_resources = 1;
  lim.max_resources = 2;
  lim.min_capacity = 2;
  lim.max_capacity = 4;
  lim.max_duration = 6;
  lim.max_release = 4;
  lim.demand_probability = 0.8;
  lim.zero_duration_probability = 0.0;
  return random_portfolio(rng(), lim);
}

}  // namespace drawers::testing
