#pragma once

#include "drawers/instance.hpp"

#include <algorithm>
#include <map>

namespace drawers {

struct Assignment {
  Time start = 0;
  Time finish = 0;

  bool operator==(const Assignment&) const = default;
};

/// Definitive start (and derived finish) per activity.
class Schedule {
public:
  Schedule() = default;

  void assign(const ActivityId& id, Time start, Time duration) {
    assignments_[id] = {start, start + duration};
  }
  void set(const ActivityId& id, Assignment a) { assignments_[id] = a; }

  bool contains(const ActivityId& id) const { return assignments_.count(id) != 0; }
  Time start(const ActivityId& id) const { return assignments_.at(id).start; }
  Time finish(const ActivityId& id) const { return assignments_.at(id).finish; }
  std::size_t size() const noexcept { return assignments_.size(); }
  bool empty() const noexcept { return assignments_.empty(); }

  /// Total makespan: latest finish, 0 for an empty schedule.
  Time tms() const noexcept {
    Time t = 0;
    for (const auto& [id, a] : assignments_) t = std::max(t, a.finish);
    return t;
  }

  const std::map<ActivityId, Assignment>& assignments() const noexcept { return assignments_; }
  auto begin() const { return assignments_.begin(); }
  auto end() const { return assignments_.end(); }

  bool operator==(const Schedule&) const = default;

private:
  std::map<ActivityId, Assignment> assignments_;
};

}  // namespace drawers
