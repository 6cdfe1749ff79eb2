#include "drawers/analysis.hpp"

#include "drawers/cpm.hpp"

#include <algorithm>
#include <limits>

namespace drawers {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Precedence: return "precedence";
    case ViolationKind::Capacity: return "capacity";
    case ViolationKind::ReleaseDate: return "release_date";
    case ViolationKind::Missing: return "missing";
    case ViolationKind::Unknown: return "unknown";
    case ViolationKind::Duration: return "duration";
  }
  return "unknown";
}

namespace {

bool known(const Portfolio& portfolio, const ActivityId& id) {
  return id.project < portfolio.projects.size() &&
         id.activity < portfolio.projects[id.project].activities.size();
}

}  // namespace

FeasibilityReport check_feasibility(const Portfolio& portfolio, const Schedule& schedule) {
  FeasibilityReport report;
  auto& out = report.violations;

  for (const auto& [id, a] : schedule)
    if (!known(portfolio, id)) out.push_back({ViolationKind::Unknown, {id}, {}, a.start, 0, 0});

  for (const auto& project : portfolio.projects)
    for (const auto& act : project.activities) {
      if (!schedule.contains(act.id)) {
        out.push_back({ViolationKind::Missing, {act.id}, {}, {}, 0, 0});
        continue;
      }
      const Time start = schedule.start(act.id);
      if (schedule.finish(act.id) != start + act.duration)
        out.push_back({ViolationKind::Duration, {act.id}, {}, start, schedule.finish(act.id),
                       start + act.duration});
      const Time release = std::max(0, project.release_date);
      if (start < release)
        out.push_back({ViolationKind::ReleaseDate, {act.id}, {}, start, start, release});
      for (const auto& q : act.predecessors) {
        if (!known(portfolio, q) || !schedule.contains(q)) continue;
        const Time ready = schedule.start(q) + portfolio.activity(q).duration;
        if (start < ready)
          out.push_back({ViolationKind::Precedence, {q, act.id}, {}, start, start, ready});
      }
    }

  // Capacity by sweeping start/finish events per resource.
  struct Event {
    Time time;
    long long delta;
  };
  std::vector<std::vector<Event>> events(portfolio.resources.size());
  std::vector<std::vector<ActivityId>> users(portfolio.resources.size());
  for (const auto& [id, a] : schedule) {
    if (!known(portfolio, id)) continue;
    const Activity& act = portfolio.activity(id);
    if (act.duration <= 0) continue;
    for (const auto& [r, units] : act.demands) {
      if (units == 0 || r.value >= portfolio.resources.size()) continue;
      events[r.value].push_back({a.start, units});
      events[r.value].push_back({a.start + act.duration, -units});
      users[r.value].push_back(id);
    }
  }
  for (std::size_t r = 0; r < events.size(); ++r) {
    auto& ev = events[r];
    std::sort(ev.begin(), ev.end(), [](const Event& x, const Event& y) { return x.time < y.time; });
    const long long capacity = portfolio.resources[r].capacity;
    long long load = 0;
    for (std::size_t i = 0; i < ev.size();) {
      const Time t = ev[i].time;
      for (; i < ev.size() && ev[i].time == t; ++i) load += ev[i].delta;
      if (load <= capacity || i == ev.size()) continue;
      for (Time period = t; period < ev[i].time; ++period) {
        FeasibilityViolation v{ViolationKind::Capacity, {}, ResourceId{r}, period, load, capacity};
        for (const auto& id : users[r]) {
          const Time s = schedule.start(id);
          if (s <= period && period < s + portfolio.activity(id).duration) v.activities.push_back(id);
        }
        out.push_back(std::move(v));
      }
    }
  }
  return report;
}

Time makespan(const Schedule& schedule) { return schedule.tms(); }

namespace {

std::vector<long long> work_per_resource(const Portfolio& portfolio) {
  std::vector<long long> work(portfolio.resources.size(), 0);
  for (const auto& project : portfolio.projects)
    for (const auto& a : project.activities)
      for (const auto& [r, units] : a.demands)
        if (r.value < work.size()) work[r.value] += static_cast<long long>(a.duration) * units;
  return work;
}

}  // namespace

Time resource_lower_bound(const Portfolio& portfolio) {
  const auto work = work_per_resource(portfolio);
  long long bound = 0;
  for (std::size_t r = 0; r < work.size(); ++r) {
    const long long cap = portfolio.resources[r].capacity;
    if (work[r] == 0 || cap <= 0) continue;
    bound = std::max(bound, (work[r] + cap - 1) / cap);
  }
  return static_cast<Time>(bound);
}

Time makespan_lower_bound(const Portfolio& portfolio) {
  return std::max(cpm_makespan(portfolio), resource_lower_bound(portfolio));
}

AufReport auf(const Portfolio& portfolio, AufHorizon horizon) {
  AufReport report;
  const auto work = work_per_resource(portfolio);
  const auto ts = temporary_schedule(portfolio, {}, 0);

  std::vector<Time> horizon_of(portfolio.resources.size(), ts.portfolio_finish);
  if (horizon == AufHorizon::Project) {
    std::fill(horizon_of.begin(), horizon_of.end(), 0);
    for (const auto& project : portfolio.projects)
      for (const auto& a : project.activities)
        for (const auto& [r, units] : a.demands)
          if (units > 0 && r.value < horizon_of.size())
            horizon_of[r.value] = std::max(horizon_of[r.value], ts.project_finish[project.index]);
  }

  for (std::size_t r = 0; r < portfolio.resources.size(); ++r) {
    const ResourceId id{r};
    const double denominator =
        static_cast<double>(portfolio.resources[r].capacity) * static_cast<double>(horizon_of[r]);
    if (work[r] == 0) {
      report.values[id] = 0.0;
    } else if (denominator <= 0.0) {
      report.values[id] = std::numeric_limits<double>::infinity();
      report.warnings.push_back("resource " + std::to_string(r) +
                                ": zero capacity or zero horizon, AUF reported as infinity");
    } else {
      report.values[id] = static_cast<double>(work[r]) / denominator;
    }
  }
  return report;
}

namespace {

// Serial generation over every precedence-feasible order enumerates all
// active schedules, one of which is optimal.
class ExactSearch {
public:
  ExactSearch(const Portfolio& portfolio, std::uint64_t budget) : budget_(budget) {
    n_resources_ = portfolio.resources.size();
    for (const auto& r : portfolio.resources) capacity_.push_back(r.capacity);
    std::vector<std::size_t> offset;
    for (const auto& project : portfolio.projects) {
      offset.push_back(nodes_.size());
      for (const auto& a : project.activities) {
        Node node;
        node.duration = a.duration;
        node.release = std::max(0, project.release_date);
        node.demand.assign(n_resources_, 0);
        for (const auto& [r, units] : a.demands) node.demand[r.value] = units;
        nodes_.push_back(std::move(node));
      }
    }
    horizon_ = 0;
    Time latest_release = 0;
    for (std::size_t p = 0; p < portfolio.projects.size(); ++p)
      for (const auto& a : portfolio.projects[p].activities) {
        auto& node = nodes_[offset[p] + a.id.activity];
        for (const auto& q : a.predecessors) node.preds.push_back(offset[q.project] + q.activity);
        horizon_ += a.duration;
        latest_release = std::max(latest_release, nodes_[offset[p]].release);
      }
    horizon_ += latest_release;
    usage_.assign(n_resources_, std::vector<int>(2 * static_cast<std::size_t>(horizon_) + 2, 0));
    start_.assign(nodes_.size(), -1);
    best_ = horizon_ + 1;
    root_bound_ = bound();
  }

  std::optional<Time> solve() {
    search(0, 0);
    if (exhausted_ || best_ > horizon_) return std::nullopt;
    return best_;
  }

private:
  struct Node {
    Time duration = 0;
    Time release = 0;
    std::vector<int> demand;
    std::vector<std::size_t> preds;
  };

  Time ready_time(std::size_t i) const {
    Time t = nodes_[i].release;
    for (std::size_t q : nodes_[i].preds) t = std::max(t, start_[q] + nodes_[q].duration);
    return t;
  }

  bool fits(std::size_t i, Time s) const {
    for (std::size_t r = 0; r < n_resources_; ++r) {
      const int d = nodes_[i].demand[r];
      if (d == 0) continue;
      for (Time tau = s; tau < s + nodes_[i].duration; ++tau)
        if (usage_[r][static_cast<std::size_t>(tau)] + d > capacity_[r]) return false;
    }
    return true;
  }

  void place(std::size_t i, Time s, int sign) {
    start_[i] = sign > 0 ? s : -1;
    for (std::size_t r = 0; r < n_resources_; ++r) {
      const int d = nodes_[i].demand[r];
      if (d == 0) continue;
      for (Time tau = s; tau < s + nodes_[i].duration; ++tau)
        usage_[r][static_cast<std::size_t>(tau)] += sign * d;
    }
  }

  // Precedence-only finish of the remaining activities, and a work bound
  // starting from the earliest moment any of them can begin.
  Time bound() const {
    std::vector<Time> ef(nodes_.size(), -1);
    Time lb = 0;
    Time earliest_pending = std::numeric_limits<Time>::max();
    std::vector<long long> work(n_resources_, 0);
    // Node order is topological within projects only for sorted networks, so
    // relax until stable (networks here are tiny).
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < nodes_.size(); ++i) {
        Time es = start_[i] >= 0 ? start_[i] : nodes_[i].release;
        if (start_[i] < 0)
          for (std::size_t q : nodes_[i].preds) es = std::max(es, ef[q] < 0 ? 0 : ef[q]);
        const Time f = es + nodes_[i].duration;
        if (f != ef[i]) {
          ef[i] = f;
          changed = true;
        }
      }
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      lb = std::max(lb, ef[i]);
      if (start_[i] >= 0) continue;
      earliest_pending = std::min(earliest_pending, ef[i] - nodes_[i].duration);
      for (std::size_t r = 0; r < n_resources_; ++r)
        work[r] += static_cast<long long>(nodes_[i].duration) * nodes_[i].demand[r];
    }
    if (earliest_pending == std::numeric_limits<Time>::max()) return lb;
    for (std::size_t r = 0; r < n_resources_; ++r) {
      if (work[r] == 0 || capacity_[r] <= 0) continue;
      const long long span = (work[r] + capacity_[r] - 1) / capacity_[r];
      lb = std::max<long long>(lb, earliest_pending + span);
    }
    return lb;
  }

  void search(std::size_t placed, Time current) {
    if (exhausted_ || best_ == root_bound_) return;
    if (++visited_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (placed == nodes_.size()) {
      best_ = std::min(best_, current);
      return;
    }
    if (std::max(current, bound()) >= best_) return;

    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (start_[i] >= 0) continue;
      const bool ready = std::all_of(nodes_[i].preds.begin(), nodes_[i].preds.end(),
                                     [&](std::size_t q) { return start_[q] >= 0; });
      if (!ready) continue;
      // Zero-duration activities hold no resources; they go in without branching.
      if (nodes_[i].duration == 0) {
        eligible.assign(1, i);
        break;
      }
      eligible.push_back(i);
    }

    for (std::size_t i : eligible) {
      Time s = ready_time(i);
      while (s <= horizon_ && !fits(i, s)) ++s;
      if (s > horizon_) continue;  // demand above capacity: never fits
      place(i, s, +1);
      search(placed + 1, std::max(current, s + nodes_[i].duration));
      place(i, s, -1);
      if (exhausted_) return;
    }
  }

  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  bool exhausted_ = false;
  std::size_t n_resources_ = 0;
  std::vector<int> capacity_;
  std::vector<Node> nodes_;
  std::vector<std::vector<int>> usage_;
  std::vector<Time> start_;
  Time horizon_ = 0;
  Time best_ = 0;
  Time root_bound_ = 0;
};

}  // namespace

std::optional<Time> brute_force_optimal(const Portfolio& portfolio, std::uint64_t node_budget) {
  if (portfolio.activity_count() == 0) return Time{0};
  return ExactSearch(portfolio, node_budget).solve();
}

}  // namespace drawers
