#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace drawers {

enum class Comparison { Less, LessEqual, Equal, GreaterEqual, Greater };

struct NumericAtom {
  Comparison op = Comparison::Equal;
  int value = 0;

  bool holds(int x) const noexcept;
  bool operator==(const NumericAtom&) const = default;
};

/// What a drawer predicate can see of a candidate.
struct CandidateAttributes {
  int total_slack = 0;
  bool in_latest_project = false;
  int duration = 0;
  /// Sum of per-period demands over all resources.
  int total_demand = 0;
};

/// Conjunction of optional atoms; the all-absent predicate accepts everything.
struct DrawerPredicate {
  std::optional<bool> slack_is_zero;
  std::optional<bool> in_latest_project;
  std::optional<NumericAtom> duration;
  std::optional<NumericAtom> total_demand;

  bool is_catch_all() const noexcept;
  bool matches(const CandidateAttributes& c) const noexcept;
  bool operator==(const DrawerPredicate&) const = default;
};

/// Drawers in descending priority. A usable configuration ends in a catch-all.
struct DrawerConfig {
  std::vector<DrawerPredicate> drawers;

  bool ends_with_catch_all() const noexcept {
    return !drawers.empty() && drawers.back().is_catch_all();
  }
  bool operator==(const DrawerConfig&) const = default;
};

/// Four drawers: critical and in the latest-finishing project; critical
/// elsewhere; non-critical in the latest-finishing project; everything else.
DrawerConfig default_drawer_config();

/// Reads the drawer file format:
///
///     # comment
///     drawer slack=zero project=latest
///     drawer slack=nonzero duration>=3 demand<10
///     drawer *
///
/// Atoms: slack=zero|nonzero, project=latest|other, duration<op><int>,
/// demand<op><int> with <op> one of < <= = >= >. A line with no atoms (or
/// just `*`) is a catch-all. Throws Error(ParseError) on malformed input or
/// when the last drawer is not a catch-all.
DrawerConfig parse_drawer_config(std::istream& in);

/// Renders a configuration in the format accepted by parse_drawer_config.
std::string format_drawer_config(const DrawerConfig& config);

}  // namespace drawers
