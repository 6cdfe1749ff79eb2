#pragma once

#include "drawers/instance.hpp"
#include "drawers/schedule.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <set>
#include <string>
#include <vector>

namespace drawers {

/// A single PSPLIB project. Demands reference ResourceId{k} for the k-th
/// renewable resource of the file (0-based); `capacities[k]` is its
/// availability.
struct SmProject {
  Project project;
  std::vector<int> capacities;
  Time horizon = 0;

  bool operator==(const SmProject&) const;
};

/// Parses a single-mode, renewable-resource PSPLIB `.sm` file. Node k of the
/// file becomes activity index k - 1. The project's release date is taken
/// from the PROJECT INFORMATION rel.date column when present.
/// Throws Error(ParseError) or Error(InconsistentCounts).
SmProject parse_sm(std::istream& in, std::size_t project_index = 0, std::string name = {});
SmProject read_sm(const std::filesystem::path& path, std::size_t project_index = 0);

/// Writes the subset of the `.sm` format parse_sm understands.
std::string write_sm(const SmProject& sm);

/// Single-project portfolio with every resource local to that project.
Portfolio single_project_portfolio(SmProject sm);

struct PortfolioDescriptor {
  struct Entry {
    std::filesystem::path sm_file;
    /// Empty when the descriptor leaves the release date to the `.sm` file.
    std::optional<Time> release_date;
  };
  std::vector<Entry> entries;
  std::set<std::size_t> global_resource_indices;
};

/// Reads the descriptor format:
///
///     # comment
///     global 0 2
///     project j30/j301_1.sm release 0
///     project j30/j302_1.sm release 5
///
/// The `global` line may appear at most once; relative paths stay relative.
PortfolioDescriptor parse_descriptor(std::istream& in);

struct PortfolioOptions {
  /// Pool a global resource as the sum of the projects' capacities instead
  /// of their common value.
  bool pool_sum = false;
};

/// Builds a portfolio: each global index becomes one shared resource (ids
/// 0..G-1 in index order), every other index becomes a local resource of its
/// project (ids follow, project by project). Throws Error(ParseError),
/// Error(CapacityMismatch) or Error(MissingFile).
Portfolio build_portfolio(const PortfolioDescriptor& descriptor,
                          const std::filesystem::path& base_dir,
                          const PortfolioOptions& options = {});
Portfolio parse_portfolio(std::istream& descriptor, const std::filesystem::path& base_dir,
                          const PortfolioOptions& options = {});

/// Loads a `.sm` file as a single-project portfolio, anything else as a
/// descriptor resolved against its own directory.
Portfolio load_instance(const std::filesystem::path& path, const PortfolioOptions& options = {});

enum class Format { Csv, Json };

/// Csv for `.csv`, Json for `.json`; throws Error(InvalidArgument) otherwise.
Format format_from_path(const std::filesystem::path& path);
Format parse_format(std::string_view name);

/// One record per activity in (project, activity) order with 0-based indices:
/// CSV `project,activity,start,finish` rows followed by `# TMS=<n>`, or JSON
/// `{"tms": n, "assignments": [...]}`.
std::string export_schedule(const Schedule& schedule, const Portfolio& portfolio, Format format);

/// Reads what export_schedule writes. Throws Error(ParseError) on malformed
/// rows, duplicate activities, or a TMS line that disagrees with the rows.
Schedule import_schedule(std::istream& in, Format format);

}  // namespace drawers
