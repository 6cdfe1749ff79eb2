#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace drawers {

/// Time is measured in whole periods from the portfolio origin 0.
using Time = int;

struct ActivityId {
  std::size_t project = 0;
  std::size_t activity = 0;

  auto operator<=>(const ActivityId&) const = default;
};

/// "p.a" with one-based numbers, the way activities are labelled in reports.
std::string to_label(const ActivityId& id);

struct ResourceId {
  std::size_t value = 0;

  auto operator<=>(const ResourceId&) const = default;
};

struct Activity {
  ActivityId id;
  Time duration = 0;
  std::map<ResourceId, int> demands;
  std::vector<ActivityId> predecessors;
};

struct Resource {
  ResourceId id;
  /// Owning project for local resources; empty for global resources.
  std::optional<std::size_t> owner;
  int capacity = 0;

  bool is_global() const noexcept { return !owner.has_value(); }
};

/// Activities are stored in node order: the first is the dummy source and the
/// last is the dummy sink.
struct Project {
  std::size_t index = 0;
  std::string name;
  std::vector<Activity> activities;
  Time release_date = 0;
};

struct Portfolio {
  std::vector<Project> projects;
  std::vector<Resource> resources;

  const Activity& activity(const ActivityId& id) const {
    return projects.at(id.project).activities.at(id.activity);
  }
  const Resource& resource(const ResourceId& id) const { return resources.at(id.value); }

  std::size_t activity_count() const noexcept;
  /// All activity ids in canonical (project, activity) order.
  std::vector<ActivityId> activity_ids() const;
};

/// Real (non-dummy) activity used by build_project.
struct ActivitySpec {
  Time duration = 0;
  std::map<ResourceId, int> demands;
  /// Positions in the real-activity list (0-based), not node numbers.
  std::vector<std::size_t> predecessors;
};

/// Wraps the given real activities between a dummy source and sink: activities
/// without predecessors follow the source, activities without successors
/// precede the sink. Real activity k becomes activity index k + 1.
Project build_project(std::size_t index, std::string name, const std::vector<ActivitySpec>& real,
                      Time release_date = 0);

enum class ViolationCode {
  EmptyProject,
  IndexMismatch,
  NegativeDuration,
  NegativeDemand,
  NegativeCapacity,
  NegativeRelease,
  UnknownResource,
  ResourceNotVisible,
  ResourceIdMismatch,
  InvalidOwner,
  DemandExceedsCapacity,
  UnknownPredecessor,
  CrossProjectPrecedence,
  DuplicatePredecessor,
  Cycle,
  DummyNotEmpty,
  MultipleSources,
  MultipleSinks,
};

std::string to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  /// Offending activities; for a cycle these are the cycle's members in order.
  std::vector<ActivityId> activities;
  std::optional<ResourceId> resource;
  std::optional<std::size_t> project;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

using ValidationReport = std::vector<Violation>;

ValidationReport validate_portfolio(const Portfolio& portfolio);

/// Successor lists per project, derived from predecessor lists.
std::vector<std::vector<std::vector<std::size_t>>> successor_lists(const Portfolio& portfolio);

}  // namespace drawers
