#include "drawers/instance.hpp"

#include "drawers/error.hpp"

#include <algorithm>
#include <set>

namespace drawers {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::InconsistentCounts: return "INCONSISTENT_COUNTS";
    case ErrorCode::CapacityMismatch: return "CAPACITY_MISMATCH";
    case ErrorCode::MissingFile: return "MISSING_FILE";
    case ErrorCode::InconsistentFixed: return "INCONSISTENT_FIXED";
    case ErrorCode::Unclassified: return "UNCLASSIFIED";
    case ErrorCode::NonTermination: return "NONTERMINATION";
    case ErrorCode::UnknownInstance: return "UNKNOWN_INSTANCE";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

std::string to_label(const ActivityId& id) {
  return std::to_string(id.project + 1) + "." + std::to_string(id.activity);
}

std::size_t Portfolio::activity_count() const noexcept {
  std::size_t n = 0;
  for (const auto& project : projects) n += project.activities.size();
  return n;
}

std::vector<ActivityId> Portfolio::activity_ids() const {
  std::vector<ActivityId> ids;
  ids.reserve(activity_count());
  for (const auto& project : projects)
    for (const auto& a : project.activities) ids.push_back(a.id);
  return ids;
}

Project build_project(std::size_t index, std::string name, const std::vector<ActivitySpec>& real,
                      Time release_date) {
  Project project;
  project.index = index;
  project.name = std::move(name);
  project.release_date = release_date;

  const std::size_t n = real.size();
  const std::size_t sink = n + 1;
  std::vector<bool> has_successor(n, false);
  for (const auto& spec : real)
    for (std::size_t p : spec.predecessors) {
      if (p >= n) throw Error(ErrorCode::InvalidArgument, "predecessor position out of range");
      has_successor[p] = true;
    }

  project.activities.reserve(n + 2);
  project.activities.push_back(Activity{{index, 0}, 0, {}, {}});
  for (std::size_t k = 0; k < n; ++k) {
    Activity a;
    a.id = {index, k + 1};
    a.duration = real[k].duration;
    for (const auto& [r, units] : real[k].demands)
      if (units != 0) a.demands[r] = units;
    if (real[k].predecessors.empty()) {
      a.predecessors.push_back({index, 0});
    } else {
      for (std::size_t p : real[k].predecessors) a.predecessors.push_back({index, p + 1});
    }
    project.activities.push_back(std::move(a));
  }
  Activity sink_activity{{index, sink}, 0, {}, {}};
  for (std::size_t k = 0; k < n; ++k)
    if (!has_successor[k]) sink_activity.predecessors.push_back({index, k + 1});
  if (n == 0) sink_activity.predecessors.push_back({index, 0});
  project.activities.push_back(std::move(sink_activity));
  return project;
}

std::string to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::EmptyProject: return "EMPTY_PROJECT";
    case ViolationCode::IndexMismatch: return "INDEX_MISMATCH";
    case ViolationCode::NegativeDuration: return "NEGATIVE_DURATION";
    case ViolationCode::NegativeDemand: return "NEGATIVE_DEMAND";
    case ViolationCode::NegativeCapacity: return "NEGATIVE_CAPACITY";
    case ViolationCode::NegativeRelease: return "NEGATIVE_RELEASE";
    case ViolationCode::UnknownResource: return "UNKNOWN_RESOURCE";
    case ViolationCode::ResourceNotVisible: return "RESOURCE_NOT_VISIBLE";
    case ViolationCode::ResourceIdMismatch: return "RESOURCE_ID_MISMATCH";
    case ViolationCode::InvalidOwner: return "INVALID_OWNER";
    case ViolationCode::DemandExceedsCapacity: return "DEMAND_EXCEEDS_CAPACITY";
    case ViolationCode::UnknownPredecessor: return "UNKNOWN_PREDECESSOR";
    case ViolationCode::CrossProjectPrecedence: return "CROSS_PROJECT_PRECEDENCE";
    case ViolationCode::DuplicatePredecessor: return "DUPLICATE_PREDECESSOR";
    case ViolationCode::Cycle: return "CYCLE";
    case ViolationCode::DummyNotEmpty: return "DUMMY_NOT_EMPTY";
    case ViolationCode::MultipleSources: return "MULTIPLE_SOURCES";
    case ViolationCode::MultipleSinks: return "MULTIPLE_SINKS";
  }
  return "UNKNOWN";
}

std::vector<std::vector<std::vector<std::size_t>>> successor_lists(const Portfolio& portfolio) {
  std::vector<std::vector<std::vector<std::size_t>>> out(portfolio.projects.size());
  for (std::size_t p = 0; p < portfolio.projects.size(); ++p) {
    const auto& acts = portfolio.projects[p].activities;
    out[p].resize(acts.size());
    for (std::size_t a = 0; a < acts.size(); ++a)
      for (const auto& q : acts[a].predecessors)
        if (q.project == p && q.activity < acts.size()) out[p][q.activity].push_back(a);
  }
  return out;
}

namespace {

void check_resources(const Portfolio& portfolio, ValidationReport& report) {
  for (std::size_t i = 0; i < portfolio.resources.size(); ++i) {
    const auto& r = portfolio.resources[i];
    if (r.id.value != i)
      report.push_back({ViolationCode::ResourceIdMismatch, {}, r.id, {},
                        "resource at position " + std::to_string(i)});
    if (r.capacity < 0)
      report.push_back({ViolationCode::NegativeCapacity, {}, r.id, {}, {}});
    if (r.owner && *r.owner >= portfolio.projects.size())
      report.push_back({ViolationCode::InvalidOwner, {}, r.id, r.owner, {}});
  }
}

void check_activity(const Portfolio& portfolio, const Project& project, std::size_t position,
                    ValidationReport& report) {
  const Activity& a = project.activities[position];
  const ActivityId expected{project.index, position};
  if (a.id != ActivityId{project.index, position})
    report.push_back({ViolationCode::IndexMismatch, {a.id}, {}, project.index,
                      "expected " + to_label(expected)});
  if (a.duration < 0) report.push_back({ViolationCode::NegativeDuration, {expected}, {}, {}, {}});

  for (const auto& [rid, units] : a.demands) {
    if (units < 0) {
      report.push_back({ViolationCode::NegativeDemand, {expected}, rid, {}, {}});
      continue;
    }
    if (rid.value >= portfolio.resources.size()) {
      report.push_back({ViolationCode::UnknownResource, {expected}, rid, {}, {}});
      continue;
    }
    const Resource& r = portfolio.resources[rid.value];
    if (r.owner && *r.owner != project.index)
      report.push_back({ViolationCode::ResourceNotVisible, {expected}, rid, r.owner, {}});
    if (units > r.capacity)
      report.push_back({ViolationCode::DemandExceedsCapacity, {expected}, rid, {},
                        std::to_string(units) + " > " + std::to_string(r.capacity)});
  }

  std::set<std::size_t> seen;
  for (const auto& q : a.predecessors) {
    if (q.project != project.index) {
      report.push_back({ViolationCode::CrossProjectPrecedence, {expected, q}, {}, {}, {}});
    } else if (q.activity >= project.activities.size()) {
      report.push_back({ViolationCode::UnknownPredecessor, {expected, q}, {}, {}, {}});
    } else if (!seen.insert(q.activity).second) {
      report.push_back({ViolationCode::DuplicatePredecessor, {expected, q}, {}, {}, {}});
    }
  }
}

// Reports one cycle per back edge found by a depth-first search.
void check_cycles(const Project& project, const std::vector<std::vector<std::size_t>>& succ,
                  ValidationReport& report) {
  enum class Color { White, Grey, Black };
  const std::size_t n = project.activities.size();
  std::vector<Color> color(n, Color::White);
  std::vector<std::size_t> path;
  std::vector<std::size_t> pos_in_path(n, 0);

  // Explicit stack of (node, next successor position).
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != Color::White) continue;
    stack.push_back({root, 0});
    color[root] = Color::Grey;
    pos_in_path[root] = path.size();
    path.push_back(root);
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < succ[node].size()) {
        const std::size_t s = succ[node][next++];
        if (color[s] == Color::White) {
          color[s] = Color::Grey;
          pos_in_path[s] = path.size();
          path.push_back(s);
          stack.push_back({s, 0});
        } else if (color[s] == Color::Grey) {
          Violation v{ViolationCode::Cycle, {}, {}, project.index, {}};
          for (std::size_t k = pos_in_path[s]; k < path.size(); ++k)
            v.activities.push_back({project.index, path[k]});
          report.push_back(std::move(v));
        }
      } else {
        color[node] = Color::Black;
        path.pop_back();
        stack.pop_back();
      }
    }
  }
}

void check_terminals(const Project& project, const std::vector<std::vector<std::size_t>>& succ,
                     ValidationReport& report) {
  const std::size_t n = project.activities.size();
  std::vector<ActivityId> sources;
  std::vector<ActivityId> sinks;
  for (std::size_t a = 0; a < n; ++a) {
    const bool has_pred =
        std::any_of(project.activities[a].predecessors.begin(),
                    project.activities[a].predecessors.end(),
                    [&](const ActivityId& q) { return q.project == project.index && q.activity < n; });
    if (!has_pred) sources.push_back({project.index, a});
    if (succ[a].empty()) sinks.push_back({project.index, a});
  }
  if (sources.size() != 1 || sources.front().activity != 0)
    report.push_back({ViolationCode::MultipleSources, sources, {}, project.index,
                      "the first activity must be the only one without predecessors"});
  if (sinks.size() != 1 || sinks.front().activity != n - 1)
    report.push_back({ViolationCode::MultipleSinks, sinks, {}, project.index,
                      "the last activity must be the only one without successors"});

  for (std::size_t a : {std::size_t{0}, n - 1}) {
    const Activity& dummy = project.activities[a];
    const bool uses_resources = std::any_of(dummy.demands.begin(), dummy.demands.end(),
                                            [](const auto& d) { return d.second != 0; });
    if (dummy.duration != 0 || uses_resources)
      report.push_back({ViolationCode::DummyNotEmpty, {{project.index, a}}, {}, project.index, {}});
    if (n == 1) break;
  }
}

}  // namespace

ValidationReport validate_portfolio(const Portfolio& portfolio) {
  ValidationReport report;
  check_resources(portfolio, report);
  const auto succ = successor_lists(portfolio);

  for (std::size_t p = 0; p < portfolio.projects.size(); ++p) {
    const Project& project = portfolio.projects[p];
    if (project.index != p)
      report.push_back({ViolationCode::IndexMismatch, {}, {}, project.index,
                        "project at position " + std::to_string(p)});
    if (project.release_date < 0)
      report.push_back({ViolationCode::NegativeRelease, {}, {}, p, {}});
    if (project.activities.empty()) {
      report.push_back({ViolationCode::EmptyProject, {}, {}, p, {}});
      continue;
    }
    // Checks below index by position, so use a copy with the expected index.
    Project normalized = project;
    normalized.index = p;
    for (std::size_t a = 0; a < project.activities.size(); ++a)
      check_activity(portfolio, normalized, a, report);
    check_cycles(normalized, succ[p], report);
    check_terminals(normalized, succ[p], report);
  }
  return report;
}

}  // namespace drawers
