#pragma once

#include "drawers/psplib_io.hpp"
#include "drawers/simulation.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace drawers {

struct BestKnown {
  std::string method;
  Time tms = 0;
};

using BestKnownTable = std::map<std::string, BestKnown>;

/// CSV `instance_id,method,tms`, with an optional header row and `#` comments.
BestKnownTable parse_best_known(std::istream& in);

struct BenchmarkRow {
  std::string instance_id;
  Time best_known_tms = 0;
  std::string best_known_method;
  Time our_tms = 0;
  /// (ours - best) / best * 100; absent when best_known_tms is 0.
  std::optional<double> gap_percent;
};

struct BenchmarkSummary {
  std::size_t instances = 0;
  std::size_t strictly_best = 0;
  std::size_t at_least_tied = 0;
  /// Gap strictly below 5 %.
  std::size_t within_5_percent = 0;
};

struct BenchmarkReport {
  std::vector<BenchmarkRow> rows;
  BenchmarkSummary summary;
};

/// Throws Error(UnknownInstance) for ids missing from `best_known`.
BenchmarkReport benchmark_report(const std::vector<std::pair<std::string, Time>>& results,
                                 const BestKnownTable& best_known);
BenchmarkReport benchmark_report(const std::vector<std::pair<std::string, SimulationResult>>& results,
                                 const BestKnownTable& best_known);

std::string format_benchmark_report(const BenchmarkReport& report, Format format);

}  // namespace drawers
