#pragma once

#include "drawers/instance.hpp"
#include "drawers/schedule.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace drawers {

enum class ViolationKind {
  Precedence,
  Capacity,
  ReleaseDate,
  Missing,
  /// The schedule names an activity the portfolio does not have.
  Unknown,
  /// Recorded finish differs from start + duration.
  Duration,
};

std::string to_string(ViolationKind kind);

struct FeasibilityViolation {
  ViolationKind kind;
  std::vector<ActivityId> activities;
  std::optional<ResourceId> resource;
  std::optional<Time> period;
  /// Capacity: total demand in the period and the capacity. Precedence and
  /// release: actual start and the earliest allowed start.
  long long amount = 0;
  long long limit = 0;
};

struct FeasibilityReport {
  std::vector<FeasibilityViolation> violations;

  bool feasible() const noexcept { return violations.empty(); }
};

/// Checks a schedule against precedence, release dates and per-period
/// capacities using only the portfolio's data (finishes are recomputed from
/// durations).
FeasibilityReport check_feasibility(const Portfolio& portfolio, const Schedule& schedule);

/// Latest finish time; 0 for an empty schedule.
Time makespan(const Schedule& schedule);

/// max over resources of ceil(total work / capacity); resources with zero
/// capacity and no work are skipped.
Time resource_lower_bound(const Portfolio& portfolio);

/// max(CPM makespan, resource_lower_bound).
Time makespan_lower_bound(const Portfolio& portfolio);

enum class AufHorizon {
  /// Resource-free CPM makespan of the whole portfolio.
  Portfolio,
  /// Latest CPM finish among the projects that demand the resource.
  Project,
};

struct AufReport {
  std::map<ResourceId, double> values;
  std::vector<std::string> warnings;
};

/// Average utilization factor per resource: total work / (capacity * T).
/// A resource nobody demands scores 0; a degenerate denominator yields
/// +infinity and a warning.
AufReport auf(const Portfolio& portfolio, AufHorizon horizon = AufHorizon::Portfolio);

/// Exact minimum TMS by depth-first search over active schedules. Returns
/// nothing when more than `node_budget` search nodes would be needed.
std::optional<Time> brute_force_optimal(const Portfolio& portfolio,
                                        std::uint64_t node_budget = 10'000'000);

}  // namespace drawers
