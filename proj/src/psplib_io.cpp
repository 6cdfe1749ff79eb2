#include "drawers/psplib_io.hpp"

#include "drawers/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace drawers {

bool SmProject::operator==(const SmProject& other) const {
  auto same_activity = [](const Activity& a, const Activity& b) {
    return a.id == b.id && a.duration == b.duration && a.demands == b.demands &&
           a.predecessors == b.predecessors;
  };
  return project.index == other.project.index && project.name == other.project.name &&
         project.release_date == other.project.release_date &&
         std::equal(project.activities.begin(), project.activities.end(),
                    other.project.activities.begin(), other.project.activities.end(),
                    same_activity) &&
         capacities == other.capacities && horizon == other.horizon;
}

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

int to_int(const std::string& word, std::size_t line, const char* expected) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size())
    parse_error(line, std::string("expected ") + expected + ", found '" + word + "'");
  return value;
}

std::vector<int> to_ints(const std::vector<std::string>& words, std::size_t line,
                         const char* expected) {
  std::vector<int> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(to_int(w, line, expected));
  return out;
}

bool is_separator(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '*';
}

struct SmReader {
  std::vector<std::string> lines;

  // Index of the first line at or after `from` containing `token`.
  std::optional<std::size_t> find(std::string_view token, std::size_t from = 0) const {
    for (std::size_t i = from; i < lines.size(); ++i)
      if (lines[i].find(token) != std::string::npos) return i;
    return {};
  }

  std::size_t require(std::string_view token) const {
    const auto at = find(token);
    if (!at) parse_error(lines.size(), "expected '" + std::string(token) + "'");
    return *at;
  }

  // Integer after the ':' of a "key : value" header line.
  int header_value(std::size_t at, const char* expected) const {
    const auto colon = lines[at].find(':');
    if (colon == std::string::npos) parse_error(at + 1, "expected ':'");
    const auto words = split(lines[at].substr(colon + 1));
    if (words.empty()) parse_error(at + 1, std::string("expected ") + expected);
    return to_int(words.front(), at + 1, expected);
  }

  // Data rows after a section title: skips the column header and any dashed
  // rule, stops at the next '*' separator or blank line.
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows_after(std::size_t title) const {
    std::size_t i = title + 1;
    if (i < lines.size() && !is_separator(lines[i])) ++i;  // column header
    if (i < lines.size() && lines[i].find("---") != std::string::npos) ++i;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
    for (; i < lines.size() && !is_separator(lines[i]); ++i) rows.push_back({i + 1, split(lines[i])});
    return rows;
  }
};

}  // namespace

SmProject parse_sm(std::istream& in, std::size_t project_index, std::string name) {
  SmReader reader;
  for (std::string line; std::getline(in, line);) reader.lines.push_back(line);

  SmProject sm;
  sm.project.index = project_index;
  sm.project.name = std::move(name);

  const std::size_t jobs_line = reader.require("jobs (incl. supersource/sink");
  const int jobs = reader.header_value(jobs_line, "job count");
  if (jobs < 1) parse_error(jobs_line + 1, "job count must be positive");
  if (const auto at = reader.find("horizon")) sm.horizon = reader.header_value(*at, "horizon");
  const std::size_t renewable_line = reader.require("- renewable");
  const int renewable = reader.header_value(renewable_line, "renewable resource count");
  if (renewable < 0) parse_error(renewable_line + 1, "negative resource count");
  const auto n_res = static_cast<std::size_t>(renewable);

  if (const auto at = reader.find("PROJECT INFORMATION:")) {
    const auto rows = reader.rows_after(*at);
    if (!rows.empty() && rows.front().second.size() >= 3)
      sm.project.release_date = to_int(rows.front().second[2], rows.front().first, "rel.date");
  }

  const auto n_jobs = static_cast<std::size_t>(jobs);
  auto& acts = sm.project.activities;
  acts.resize(n_jobs);
  for (std::size_t k = 0; k < n_jobs; ++k) acts[k].id = {project_index, k};

  const auto precedence = reader.rows_after(reader.require("PRECEDENCE RELATIONS:"));
  if (precedence.size() != n_jobs)
    throw Error(ErrorCode::InconsistentCounts,
                "declared " + std::to_string(jobs) + " jobs, precedence section has " +
                    std::to_string(precedence.size()) + " rows");
  for (std::size_t k = 0; k < n_jobs; ++k) {
    const auto& [line, words] = precedence[k];
    if (words.size() < 3) parse_error(line, "expected jobnr, #modes and #successors");
    const auto fields = to_ints(words, line, "integer");
    if (fields[0] != static_cast<int>(k + 1))
      parse_error(line, "expected job number " + std::to_string(k + 1));
    if (fields[1] != 1) parse_error(line, "expected a single mode");
    if (fields[2] < 0 || static_cast<std::size_t>(fields[2]) != fields.size() - 3)
      parse_error(line, "expected " + std::to_string(fields[2]) + " successors");
    for (std::size_t s = 3; s < fields.size(); ++s) {
      if (fields[s] < 1 || fields[s] > jobs)
        parse_error(line, "successor " + std::to_string(fields[s]) + " outside 1.." +
                              std::to_string(jobs));
      acts[static_cast<std::size_t>(fields[s] - 1)].predecessors.push_back({project_index, k});
    }
  }

  const auto requests = reader.rows_after(reader.require("REQUESTS/DURATIONS:"));
  if (requests.size() != n_jobs)
    throw Error(ErrorCode::InconsistentCounts,
                "declared " + std::to_string(jobs) + " jobs, requests section has " +
                    std::to_string(requests.size()) + " rows");
  for (std::size_t k = 0; k < n_jobs; ++k) {
    const auto& [line, words] = requests[k];
    if (words.size() < 3 + n_res)
      parse_error(line, "expected jobnr, mode, duration and " + std::to_string(n_res) + " requests");
    const auto fields = to_ints(words, line, "integer");
    if (fields[0] != static_cast<int>(k + 1))
      parse_error(line, "expected job number " + std::to_string(k + 1));
    if (fields[1] != 1) parse_error(line, "expected mode 1");
    acts[k].duration = fields[2];
    for (std::size_t r = 0; r < n_res; ++r)
      if (fields[3 + r] != 0) acts[k].demands[ResourceId{r}] = fields[3 + r];
  }

  const auto availability = reader.rows_after(reader.require("RESOURCEAVAILABILITIES:"));
  if (availability.empty() || availability.front().second.size() < n_res)
    parse_error(availability.empty() ? reader.lines.size() : availability.front().first,
                "expected " + std::to_string(n_res) + " resource availabilities");
  const auto caps = to_ints(availability.front().second, availability.front().first, "capacity");
  sm.capacities.assign(caps.begin(), caps.begin() + static_cast<std::ptrdiff_t>(n_res));

  for (auto& a : acts) std::sort(a.predecessors.begin(), a.predecessors.end());
  return sm;
}

SmProject read_sm(const std::filesystem::path& path, std::size_t project_index) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MissingFile, path.string());
  try {
    return parse_sm(in, project_index, path.stem().string());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string write_sm(const SmProject& sm) {
  const auto& acts = sm.project.activities;
  const auto n_res = sm.capacities.size();
  const std::string rule(72, '*');
  std::ostringstream out;
  out << rule << '\n'
      << "file with basedata            : " << sm.project.name << ".bas\n"
      << rule << '\n'
      << "projects                      :  1\n"
      << "jobs (incl. supersource/sink ):  " << acts.size() << '\n'
      << "horizon                       :  " << sm.horizon << '\n'
      << "RESOURCES\n"
      << "  - renewable                 :  " << n_res << "   R\n"
      << "  - nonrenewable              :  0   N\n"
      << "  - doubly constrained        :  0   D\n"
      << rule << '\n'
      << "PROJECT INFORMATION:\n"
      << "pronr.  #jobs rel.date duedate tardcost  MPM-Time\n"
      << "    1 " << std::setw(6) << (acts.size() >= 2 ? acts.size() - 2 : 0) << std::setw(7)
      << sm.project.release_date << "       0        0        0\n"
      << rule << '\n'
      << "PRECEDENCE RELATIONS:\n"
      << "jobnr.    #modes  #successors   successors\n";

  std::vector<std::vector<std::size_t>> succ(acts.size());
  for (std::size_t a = 0; a < acts.size(); ++a)
    for (const auto& q : acts[a].predecessors) succ[q.activity].push_back(a);
  for (std::size_t a = 0; a < acts.size(); ++a) {
    out << std::setw(4) << a + 1 << "        1" << std::setw(11) << succ[a].size() << "       ";
    for (std::size_t s : succ[a]) out << std::setw(4) << s + 1;
    out << '\n';
  }
  out << rule << '\n' << "REQUESTS/DURATIONS:\n" << "jobnr. mode duration";
  for (std::size_t r = 0; r < n_res; ++r) out << "  R " << r + 1;
  out << '\n' << std::string(72, '-') << '\n';
  for (std::size_t a = 0; a < acts.size(); ++a) {
    out << std::setw(3) << a + 1 << "      1" << std::setw(6) << acts[a].duration << "    ";
    for (std::size_t r = 0; r < n_res; ++r) {
      const auto it = acts[a].demands.find(ResourceId{r});
      out << std::setw(5) << (it == acts[a].demands.end() ? 0 : it->second);
    }
    out << '\n';
  }
  out << rule << '\n' << "RESOURCEAVAILABILITIES:\n";
  for (std::size_t r = 0; r < n_res; ++r) out << "  R " << r + 1;
  out << '\n';
  for (int c : sm.capacities) out << std::setw(5) << c;
  out << '\n' << rule << '\n';
  return out.str();
}

Portfolio single_project_portfolio(SmProject sm) {
  Portfolio portfolio;
  sm.project.index = 0;
  for (auto& a : sm.project.activities) {
    a.id.project = 0;
    for (auto& q : a.predecessors) q.project = 0;
  }
  for (std::size_t r = 0; r < sm.capacities.size(); ++r)
    portfolio.resources.push_back({ResourceId{r}, std::size_t{0}, sm.capacities[r]});
  portfolio.projects.push_back(std::move(sm.project));
  return portfolio;
}

PortfolioDescriptor parse_descriptor(std::istream& in) {
  PortfolioDescriptor descriptor;
  bool seen_global = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto words = split(line);
    if (words.empty()) continue;
    if (words[0] == "global") {
      if (seen_global) parse_error(line_no, "'global' may appear only once");
      seen_global = true;
      for (std::size_t i = 1; i < words.size(); ++i) {
        const int idx = to_int(words[i], line_no, "resource index");
        if (idx < 0) parse_error(line_no, "resource index must be non-negative");
        descriptor.global_resource_indices.insert(static_cast<std::size_t>(idx));
      }
    } else if (words[0] == "project") {
      if (words.size() != 2 && words.size() != 4)
        parse_error(line_no, "expected 'project <path> release <int>'");
      PortfolioDescriptor::Entry entry{words[1], {}};
      if (words.size() == 4) {
        if (words[2] != "release") parse_error(line_no, "expected 'release', found '" + words[2] + "'");
        entry.release_date = to_int(words[3], line_no, "release date");
        if (*entry.release_date < 0) parse_error(line_no, "release date must be non-negative");
      }
      descriptor.entries.push_back(std::move(entry));
    } else {
      parse_error(line_no, "expected 'global' or 'project', found '" + words[0] + "'");
    }
  }
  return descriptor;
}

Portfolio build_portfolio(const PortfolioDescriptor& descriptor,
                          const std::filesystem::path& base_dir, const PortfolioOptions& options) {
  std::vector<SmProject> parsed;
  parsed.reserve(descriptor.entries.size());
  for (std::size_t p = 0; p < descriptor.entries.size(); ++p) {
    const auto& entry = descriptor.entries[p];
    const auto path = entry.sm_file.is_absolute() ? entry.sm_file : base_dir / entry.sm_file;
    if (!std::filesystem::exists(path)) throw Error(ErrorCode::MissingFile, path.string());
    parsed.push_back(read_sm(path, p));
    if (entry.release_date) parsed.back().project.release_date = *entry.release_date;
  }

  Portfolio portfolio;
  // Global resources first: id g for the g-th global index.
  std::vector<std::size_t> globals(descriptor.global_resource_indices.begin(),
                                   descriptor.global_resource_indices.end());
  for (std::size_t g = 0; g < globals.size(); ++g) {
    std::optional<int> capacity;
    for (const auto& sm : parsed) {
      if (globals[g] >= sm.capacities.size())
        throw Error(ErrorCode::ParseError, "global resource index " + std::to_string(globals[g]) +
                                               " not declared by project " + sm.project.name);
      const int c = sm.capacities[globals[g]];
      if (!capacity) {
        capacity = c;
      } else if (options.pool_sum) {
        *capacity += c;
      } else if (*capacity != c) {
        throw Error(ErrorCode::CapacityMismatch,
                    "global resource index " + std::to_string(globals[g]) + ": capacities " +
                        std::to_string(*capacity) + " and " + std::to_string(c));
      }
    }
    portfolio.resources.push_back({ResourceId{g}, std::nullopt, capacity.value_or(0)});
  }

  for (auto& sm : parsed) {
    const std::size_t p = sm.project.index;
    std::vector<ResourceId> remap(sm.capacities.size());
    for (std::size_t k = 0; k < sm.capacities.size(); ++k) {
      const auto global = std::find(globals.begin(), globals.end(), k);
      if (global != globals.end()) {
        remap[k] = ResourceId{static_cast<std::size_t>(global - globals.begin())};
      } else {
        remap[k] = ResourceId{portfolio.resources.size()};
        portfolio.resources.push_back({remap[k], p, sm.capacities[k]});
      }
    }
    for (auto& a : sm.project.activities) {
      std::map<ResourceId, int> demands;
      for (const auto& [r, units] : a.demands) demands[remap.at(r.value)] = units;
      a.demands = std::move(demands);
    }
    portfolio.projects.push_back(std::move(sm.project));
  }
  return portfolio;
}

Portfolio parse_portfolio(std::istream& descriptor, const std::filesystem::path& base_dir,
                          const PortfolioOptions& options) {
  return build_portfolio(parse_descriptor(descriptor), base_dir, options);
}

Portfolio load_instance(const std::filesystem::path& path, const PortfolioOptions& options) {
  if (path.extension() == ".sm") return single_project_portfolio(read_sm(path));
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MissingFile, path.string());
  return parse_portfolio(in, path.parent_path(), options);
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

Format format_from_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext.size() > 1) return parse_format(std::string_view(ext).substr(1));
  throw Error(ErrorCode::InvalidArgument, "cannot infer format of " + path.string());
}

std::string export_schedule(const Schedule& schedule, const Portfolio& /*portfolio*/,
                            Format format) {
  if (format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["tms"] = schedule.tms();
    doc["assignments"] = nlohmann::ordered_json::array();
    for (const auto& [id, a] : schedule)
      doc["assignments"].push_back(
          {{"project", id.project}, {"activity", id.activity}, {"start", a.start}, {"finish", a.finish}});
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "project,activity,start,finish\n";
  for (const auto& [id, a] : schedule)
    out << id.project << ',' << id.activity << ',' << a.start << ',' << a.finish << '\n';
  out << "# TMS=" << schedule.tms() << '\n';
  return out.str();
}

namespace {

void add_assignment(Schedule& schedule, const ActivityId& id, Assignment a, std::size_t line) {
  if (schedule.contains(id)) parse_error(line, "activity " + to_label(id) + " listed twice");
  if (a.finish < a.start) parse_error(line, "finish before start");
  schedule.set(id, a);
}

Schedule import_csv(std::istream& in) {
  Schedule schedule;
  std::optional<Time> declared_tms;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto eq = line.find("TMS=");
      if (eq != std::string::npos) declared_tms = to_int(line.substr(eq + 4), line_no, "TMS");
      continue;
    }
    if (!header) {
      if (line != "project,activity,start,finish")
        parse_error(line_no, "expected header 'project,activity,start,finish'");
      header = true;
      continue;
    }
    std::vector<std::string> fields;
    std::istringstream cells(line);
    for (std::string cell; std::getline(cells, cell, ',');) fields.push_back(cell);
    if (fields.size() != 4) parse_error(line_no, "expected 4 fields");
    const auto v = to_ints(fields, line_no, "integer");
    if (v[0] < 0 || v[1] < 0) parse_error(line_no, "negative index");
    add_assignment(schedule, {static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1])},
                   {v[2], v[3]}, line_no);
  }
  if (!header) parse_error(line_no, "expected header 'project,activity,start,finish'");
  if (declared_tms && *declared_tms != schedule.tms())
    parse_error(line_no, "TMS comment " + std::to_string(*declared_tms) +
                             " disagrees with the rows (" + std::to_string(schedule.tms()) + ")");
  return schedule;
}

Schedule import_json(std::istream& in) {
  Schedule schedule;
  try {
    const auto doc = nlohmann::json::parse(in);
    std::size_t row = 0;
    for (const auto& a : doc.at("assignments")) {
      ++row;
      add_assignment(schedule,
                     {a.at("project").get<std::size_t>(), a.at("activity").get<std::size_t>()},
                     {a.at("start").get<Time>(), a.at("finish").get<Time>()}, row);
    }
    if (doc.contains("tms") && doc.at("tms").get<Time>() != schedule.tms())
      parse_error(0, "tms disagrees with the assignments");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return schedule;
}

}  // namespace

Schedule import_schedule(std::istream& in, Format format) {
  return format == Format::Json ? import_json(in) : import_csv(in);
}

}  // namespace drawers
