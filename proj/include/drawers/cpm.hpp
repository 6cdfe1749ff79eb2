#pragma once

#include "drawers/instance.hpp"

#include <map>
#include <vector>

namespace drawers {

/// Definitively scheduled activities and their start periods.
using FixedAssignments = std::map<ActivityId, Time>;

struct ActivityTimes {
  Time es = 0;
  Time ef = 0;
  Time ls = 0;
  Time lf = 0;
  Time total_slack = 0;
  bool fixed = false;

  bool operator==(const ActivityTimes&) const = default;
};

/// Precedence-only schedule of the pending activities with the definitive ones
/// held in place. Slack is measured against each project's own finish.
struct TemporarySchedule {
  /// times[project][activity]
  std::vector<std::vector<ActivityTimes>> times;
  std::vector<Time> project_finish;
  std::size_t latest_project = 0;
  Time portfolio_finish = 0;

  const ActivityTimes& at(const ActivityId& id) const { return times.at(id.project).at(id.activity); }

  bool operator==(const TemporarySchedule&) const = default;
};

/// Forward pass clamps pending activities to start no earlier than `now` and
/// their project's release date. Throws Error(InconsistentFixed) when a fixed
/// start breaks precedence, the release date, or has an unfixed predecessor.
TemporarySchedule temporary_schedule(const Portfolio& portfolio, const FixedAssignments& fixed,
                                     Time now);

/// Project with the greatest temporary finish; ties go to the lowest index.
std::size_t latest_finishing_project(const TemporarySchedule& ts);

/// Resource-free CPM makespan (no fixes, t = 0).
Time cpm_makespan(const Portfolio& portfolio);

namespace detail {

/// Precomputed topology reused across iterations of a scheduling run.
struct Topology {
  std::vector<std::vector<std::size_t>> order;  // topological order per project
  std::vector<std::vector<std::vector<std::size_t>>> successors;
};

Topology make_topology(const Portfolio& portfolio);

/// `fixed_start[p][a]` holds the definitive start or -1 when pending.
void temporary_schedule(const Portfolio& portfolio, const Topology& topology,
                        const std::vector<std::vector<Time>>& fixed_start, Time now,
                        TemporarySchedule& out);

}  // namespace detail

}  // namespace drawers
