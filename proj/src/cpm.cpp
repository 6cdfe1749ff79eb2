#include "drawers/cpm.hpp"

#include "drawers/error.hpp"

#include <algorithm>
#include <limits>

namespace drawers {
namespace detail {

Topology make_topology(const Portfolio& portfolio) {
  Topology topo;
  topo.successors = successor_lists(portfolio);
  topo.order.resize(portfolio.projects.size());
  for (std::size_t p = 0; p < portfolio.projects.size(); ++p) {
    const auto& acts = portfolio.projects[p].activities;
    std::vector<std::size_t> indegree(acts.size(), 0);
    for (std::size_t a = 0; a < acts.size(); ++a) indegree[a] = acts[a].predecessors.size();
    // Smallest index first keeps the order stable for already-sorted networks.
    std::vector<std::size_t> ready;
    for (std::size_t a = acts.size(); a-- > 0;)
      if (indegree[a] == 0) ready.push_back(a);
    auto& order = topo.order[p];
    order.reserve(acts.size());
    while (!ready.empty()) {
      const std::size_t a = ready.back();
      ready.pop_back();
      order.push_back(a);
      for (std::size_t s : topo.successors[p][a])
        if (--indegree[s] == 0) ready.push_back(s);
    }
    if (order.size() != acts.size())
      throw Error(ErrorCode::InvalidArgument,
                  "precedence network of project " + std::to_string(p + 1) + " is not acyclic");
  }
  return topo;
}

void temporary_schedule(const Portfolio& portfolio, const Topology& topology,
                        const std::vector<std::vector<Time>>& fixed_start, Time now,
                        TemporarySchedule& out) {
  const std::size_t n_projects = portfolio.projects.size();
  out.times.resize(n_projects);
  out.project_finish.assign(n_projects, 0);
  out.latest_project = 0;
  out.portfolio_finish = 0;

  for (std::size_t p = 0; p < n_projects; ++p) {
    const Project& project = portfolio.projects[p];
    const auto& acts = project.activities;
    auto& times = out.times[p];
    times.resize(acts.size());
    Time finish = 0;

    for (std::size_t a : topology.order[p]) {
      const Activity& act = acts[a];
      ActivityTimes& at = times[a];
      const Time fixed = fixed_start[p][a];
      at.fixed = fixed >= 0;
      if (at.fixed) {
        for (const auto& q : act.predecessors) {
          if (fixed_start[p][q.activity] < 0)
            throw Error(ErrorCode::InconsistentFixed,
                        to_label(act.id) + " is fixed but predecessor " + to_label(q) + " is not");
          if (fixed < times[q.activity].ef)
            throw Error(ErrorCode::InconsistentFixed,
                        to_label(act.id) + " starts at " + std::to_string(fixed) +
                            " before predecessor " + to_label(q) + " finishes at " +
                            std::to_string(times[q.activity].ef));
        }
        if (fixed < project.release_date)
          throw Error(ErrorCode::InconsistentFixed,
                      to_label(act.id) + " starts before its project's release date");
        at.es = fixed;
      } else {
        Time es = std::max(now, project.release_date);
        for (const auto& q : act.predecessors) es = std::max(es, times[q.activity].ef);
        at.es = es;
      }
      at.ef = at.es + act.duration;
      finish = std::max(finish, at.ef);
    }

    const auto& succ = topology.successors[p];
    for (auto it = topology.order[p].rbegin(); it != topology.order[p].rend(); ++it) {
      const std::size_t a = *it;
      ActivityTimes& at = times[a];
      if (at.fixed) {
        at.ls = at.es;
        at.lf = at.ef;
        at.total_slack = 0;
        continue;
      }
      Time lf = finish;
      for (std::size_t s : succ[a]) lf = std::min(lf, times[s].ls);
      at.lf = lf;
      at.ls = lf - acts[a].duration;
      at.total_slack = at.ls - at.es;
    }

    out.project_finish[p] = finish;
    if (finish > out.portfolio_finish) {
      out.portfolio_finish = finish;
      out.latest_project = p;
    }
  }
}

}  // namespace detail

TemporarySchedule temporary_schedule(const Portfolio& portfolio, const FixedAssignments& fixed,
                                     Time now) {
  if (now < 0) throw Error(ErrorCode::InvalidArgument, "scheduling time must be non-negative");
  const auto topology = detail::make_topology(portfolio);
  std::vector<std::vector<Time>> fixed_start(portfolio.projects.size());
  for (std::size_t p = 0; p < portfolio.projects.size(); ++p)
    fixed_start[p].assign(portfolio.projects[p].activities.size(), -1);
  for (const auto& [id, start] : fixed) {
    if (id.project >= fixed_start.size() || id.activity >= fixed_start[id.project].size())
      throw Error(ErrorCode::InconsistentFixed, "unknown activity " + to_label(id));
    if (start < 0) throw Error(ErrorCode::InconsistentFixed, to_label(id) + " has a negative start");
    fixed_start[id.project][id.activity] = start;
  }
  TemporarySchedule ts;
  detail::temporary_schedule(portfolio, topology, fixed_start, now, ts);
  return ts;
}

std::size_t latest_finishing_project(const TemporarySchedule& ts) {
  std::size_t best = 0;
  for (std::size_t p = 1; p < ts.project_finish.size(); ++p)
    if (ts.project_finish[p] > ts.project_finish[best]) best = p;
  return best;
}

Time cpm_makespan(const Portfolio& portfolio) {
  return temporary_schedule(portfolio, {}, 0).portfolio_finish;
}

}  // namespace drawers
