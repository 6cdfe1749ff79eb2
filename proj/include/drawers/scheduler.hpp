#pragma once

#include "drawers/cpm.hpp"
#include "drawers/drawer_config.hpp"
#include "drawers/instance.hpp"
#include "drawers/rng.hpp"
#include "drawers/schedule.hpp"

#include <cstdint>
#include <vector>

namespace drawers {

/// Per-period resource usage of the activities placed so far.
class ResourceLedger {
public:
  explicit ResourceLedger(const Portfolio& portfolio);

  int usage(ResourceId r, Time period) const;
  int capacity(ResourceId r) const { return capacity_.at(r.value); }

  /// True if `a` fits in every period of [start, start + duration).
  bool fits(const Activity& a, Time start) const;
  void commit(const Activity& a, Time start);

private:
  std::vector<int> capacity_;
  std::vector<std::vector<int>> usage_;
};

enum class Placement { Scheduled, Deferred };

/// Places `id` at `start` if every demanded resource has room over the whole
/// duration, updating the ledger; otherwise leaves the ledger untouched.
Placement try_schedule(const ActivityId& id, Time start, ResourceLedger& ledger,
                       const Portfolio& portfolio);

/// Pending activities whose predecessors are all fixed and whose temporary
/// earliest start equals `now`, in (project, activity) order.
std::vector<ActivityId> candidate_activities(const Portfolio& portfolio, const TemporarySchedule& ts,
                                             Time now, const FixedAssignments& fixed);

CandidateAttributes candidate_attributes(const Portfolio& portfolio, const TemporarySchedule& ts,
                                         const ActivityId& id);

/// Puts each candidate in the first drawer whose predicate it satisfies,
/// keeping input order inside each drawer. Throws Error(Unclassified) if a
/// candidate matches no drawer.
std::vector<std::vector<ActivityId>> classify(const Portfolio& portfolio,
                                              const std::vector<ActivityId>& candidates,
                                              const TemporarySchedule& ts,
                                              const DrawerConfig& config);

/// Fisher-Yates shuffle of each drawer, then concatenation in drawer order.
/// Drawers with fewer than two entries draw nothing from `rng`.
std::vector<ActivityId> prioritize(std::vector<std::vector<ActivityId>> drawers, Rng& rng);

struct PsgsOptions {
  /// Jump straight to the next period that can have candidates instead of
  /// stepping one period at a time. Output is identical either way.
  bool fast_forward = true;
};

/// One parallel schedule-generation run with drawer priorities. Deterministic
/// in (portfolio, config, seed). Throws Error(NonTermination) if the
/// scheduling time passes the sum of durations plus the latest release date.
Schedule run_psgs(const Portfolio& portfolio, const DrawerConfig& config, std::uint64_t seed,
                  const PsgsOptions& options = {});

}  // namespace drawers
