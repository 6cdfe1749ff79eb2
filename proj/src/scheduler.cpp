#include "drawers/scheduler.hpp"

#include "drawers/error.hpp"

#include <algorithm>
#include <limits>

namespace drawers {

ResourceLedger::ResourceLedger(const Portfolio& portfolio)
    : capacity_(portfolio.resources.size()), usage_(portfolio.resources.size()) {
  for (std::size_t r = 0; r < portfolio.resources.size(); ++r)
    capacity_[r] = portfolio.resources[r].capacity;
}

int ResourceLedger::usage(ResourceId r, Time period) const {
  const auto& profile = usage_.at(r.value);
  if (period < 0 || static_cast<std::size_t>(period) >= profile.size()) return 0;
  return profile[static_cast<std::size_t>(period)];
}

bool ResourceLedger::fits(const Activity& a, Time start) const {
  for (const auto& [r, units] : a.demands) {
    if (units == 0) continue;
    const int cap = capacity_.at(r.value);
    for (Time tau = start; tau < start + a.duration; ++tau)
      if (usage(r, tau) + units > cap) return false;
  }
  return true;
}

void ResourceLedger::commit(const Activity& a, Time start) {
  for (const auto& [r, units] : a.demands) {
    if (units == 0 || a.duration == 0) continue;
    auto& profile = usage_.at(r.value);
    const auto end = static_cast<std::size_t>(start + a.duration);
    if (profile.size() < end) profile.resize(end, 0);
    for (auto tau = static_cast<std::size_t>(start); tau < end; ++tau) profile[tau] += units;
  }
}

Placement try_schedule(const ActivityId& id, Time start, ResourceLedger& ledger,
                       const Portfolio& portfolio) {
  const Activity& a = portfolio.activity(id);
  if (!ledger.fits(a, start)) return Placement::Deferred;
  ledger.commit(a, start);
  return Placement::Scheduled;
}

std::vector<ActivityId> candidate_activities(const Portfolio& portfolio, const TemporarySchedule& ts,
                                             Time now, const FixedAssignments& fixed) {
  std::vector<ActivityId> out;
  for (const auto& project : portfolio.projects)
    for (const auto& a : project.activities) {
      if (fixed.count(a.id) || ts.at(a.id).es != now) continue;
      const bool ready = std::all_of(a.predecessors.begin(), a.predecessors.end(),
                                     [&](const ActivityId& q) { return fixed.count(q) != 0; });
      if (ready) out.push_back(a.id);
    }
  return out;
}

CandidateAttributes candidate_attributes(const Portfolio& portfolio, const TemporarySchedule& ts,
                                         const ActivityId& id) {
  const Activity& a = portfolio.activity(id);
  CandidateAttributes c;
  c.total_slack = ts.at(id).total_slack;
  c.in_latest_project = id.project == ts.latest_project;
  c.duration = a.duration;
  for (const auto& [r, units] : a.demands) c.total_demand += units;
  return c;
}

std::vector<std::vector<ActivityId>> classify(const Portfolio& portfolio,
                                              const std::vector<ActivityId>& candidates,
                                              const TemporarySchedule& ts,
                                              const DrawerConfig& config) {
  std::vector<std::vector<ActivityId>> drawers(config.drawers.size());
  for (const auto& id : candidates) {
    const auto attributes = candidate_attributes(portfolio, ts, id);
    const auto match = std::find_if(config.drawers.begin(), config.drawers.end(),
                                    [&](const DrawerPredicate& d) { return d.matches(attributes); });
    if (match == config.drawers.end())
      throw Error(ErrorCode::Unclassified, to_label(id) + " fits no drawer");
    drawers[static_cast<std::size_t>(match - config.drawers.begin())].push_back(id);
  }
  return drawers;
}

std::vector<ActivityId> prioritize(std::vector<std::vector<ActivityId>> drawers, Rng& rng) {
  std::vector<ActivityId> out;
  for (auto& drawer : drawers) {
    for (std::size_t i = drawer.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(rng.below(i));
      std::swap(drawer[i - 1], drawer[j]);
    }
    out.insert(out.end(), drawer.begin(), drawer.end());
  }
  return out;
}

namespace {

// Mutable state of one run; the public helpers above work on maps, this works
// on dense per-project vectors.
class PsgsRun {
public:
  PsgsRun(const Portfolio& portfolio, const DrawerConfig& config, std::uint64_t seed,
          const PsgsOptions& options)
      : portfolio_(portfolio),
        config_(config),
        options_(options),
        rng_(seed),
        ledger_(portfolio),
        topology_(detail::make_topology(portfolio)),
        fixed_start_(portfolio.projects.size()),
        attempted_at_(portfolio.projects.size()) {
    for (std::size_t p = 0; p < portfolio.projects.size(); ++p) {
      const auto& project = portfolio.projects[p];
      fixed_start_[p].assign(project.activities.size(), -1);
      attempted_at_[p].assign(project.activities.size(), -1);
      pending_ += project.activities.size();
      latest_release_ = std::max(latest_release_, project.release_date);
      for (const auto& a : project.activities) total_duration_ += a.duration;
    }
  }

  Schedule run() {
    const Time limit = total_duration_ + latest_release_;
    Time now = 0;
    while (pending_ > 0) {
      if (now > limit)
        throw Error(ErrorCode::NonTermination,
                    "scheduling time " + std::to_string(now) + " passed the bound " +
                        std::to_string(limit) + " with " + std::to_string(pending_) +
                        " activities pending");
      // Zero-duration placements can release successors at the same time, so
      // the period is revisited until it yields no fresh candidates.
      bool any_candidates = false;
      while (pass(now)) any_candidates = true;
      if (pending_ == 0) break;
      now = (options_.fast_forward && !any_candidates) ? next_ready_time(now) : now + 1;
    }
    return std::move(schedule_);
  }

private:
  bool all_predecessors_fixed(const Activity& a) const {
    return std::all_of(a.predecessors.begin(), a.predecessors.end(), [&](const ActivityId& q) {
      return fixed_start_[q.project][q.activity] >= 0;
    });
  }

  // Steps 1-4 at `now` over candidates not yet attempted at `now`. Returns
  // false when there were no such candidates.
  bool pass(Time now) {
    detail::temporary_schedule(portfolio_, topology_, fixed_start_, now, ts_);

    candidates_.clear();
    for (const auto& project : portfolio_.projects)
      for (const auto& a : project.activities) {
        const auto [p, i] = a.id;
        if (fixed_start_[p][i] >= 0 || attempted_at_[p][i] == now || ts_.times[p][i].es != now)
          continue;
        if (all_predecessors_fixed(a)) candidates_.push_back(a.id);
      }
    if (candidates_.empty()) return false;

    for (const auto& id : candidates_) attempted_at_[id.project][id.activity] = now;
    const auto order = prioritize(classify(portfolio_, candidates_, ts_, config_), rng_);
    for (const auto& id : order) {
      if (try_schedule(id, now, ledger_, portfolio_) == Placement::Deferred) continue;
      fixed_start_[id.project][id.activity] = now;
      schedule_.assign(id, now, portfolio_.activity(id).duration);
      --pending_;
    }
    return true;
  }

  // Earliest time a pending activity with all predecessors fixed may start.
  // Every iteration strictly before it has no candidates and draws nothing.
  Time next_ready_time(Time now) const {
    Time next = std::numeric_limits<Time>::max();
    for (const auto& project : portfolio_.projects)
      for (const auto& a : project.activities) {
        const auto [p, i] = a.id;
        if (fixed_start_[p][i] >= 0 || !all_predecessors_fixed(a)) continue;
        Time es = std::max(now + 1, project.release_date);
        for (const auto& q : a.predecessors)
          es = std::max(es, fixed_start_[q.project][q.activity] +
                                portfolio_.activity(q).duration);
        next = std::min(next, es);
      }
    return next == std::numeric_limits<Time>::max() ? now + 1 : next;
  }

  const Portfolio& portfolio_;
  const DrawerConfig& config_;
  PsgsOptions options_;
  Rng rng_;
  ResourceLedger ledger_;
  detail::Topology topology_;
  std::vector<std::vector<Time>> fixed_start_;
  std::vector<std::vector<Time>> attempted_at_;
  TemporarySchedule ts_;
  std::vector<ActivityId> candidates_;
  Schedule schedule_;
  std::size_t pending_ = 0;
  Time total_duration_ = 0;
  Time latest_release_ = 0;
};

}  // namespace

Schedule run_psgs(const Portfolio& portfolio, const DrawerConfig& config, std::uint64_t seed,
                  const PsgsOptions& options) {
  return PsgsRun(portfolio, config, seed, options).run();
}

}  // namespace drawers
