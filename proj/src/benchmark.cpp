#include "drawers/benchmark.hpp"

#include "drawers/error.hpp"

#include <json.hpp>

#include <charconv>
#include <iomanip>
#include <istream>
#include <sstream>

namespace drawers {

BestKnownTable parse_best_known(std::istream& in) {
  BestKnownTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::istringstream cells(line);
    for (std::string cell; std::getline(cells, cell, ',');) fields.push_back(cell);
    if (fields.size() != 3)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 3 fields");
    if (fields[0] == "instance_id") continue;
    int tms = 0;
    const auto& f = fields[2];
    const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), tms);
    if (ec != std::errc{} || ptr != f.data() + f.size() || tms < 0)
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": bad tms '" + f + "'");
    if (!table.emplace(fields[0], BestKnown{fields[1], tms}).second)
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": duplicate instance '" + fields[0] + "'");
  }
  return table;
}

BenchmarkReport benchmark_report(const std::vector<std::pair<std::string, Time>>& results,
                                 const BestKnownTable& best_known) {
  BenchmarkReport report;
  for (const auto& [id, ours] : results) {
    const auto it = best_known.find(id);
    if (it == best_known.end()) throw Error(ErrorCode::UnknownInstance, id);
    BenchmarkRow row{id, it->second.tms, it->second.method, ours, std::nullopt};
    if (row.best_known_tms > 0)
      row.gap_percent = 100.0 * static_cast<double>(ours - row.best_known_tms) /
                        static_cast<double>(row.best_known_tms);

    auto& s = report.summary;
    ++s.instances;
    if (ours < row.best_known_tms) ++s.strictly_best;
    if (ours <= row.best_known_tms) ++s.at_least_tied;
    if (row.gap_percent ? *row.gap_percent < 5.0 : ours <= row.best_known_tms) ++s.within_5_percent;
    report.rows.push_back(std::move(row));
  }
  return report;
}

BenchmarkReport benchmark_report(const std::vector<std::pair<std::string, SimulationResult>>& results,
                                 const BestKnownTable& best_known) {
  std::vector<std::pair<std::string, Time>> tms;
  tms.reserve(results.size());
  for (const auto& [id, r] : results) tms.emplace_back(id, r.best.tms());
  return benchmark_report(tms, best_known);
}

std::string format_benchmark_report(const BenchmarkReport& report, Format format) {
  const auto& s = report.summary;
  if (format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
      nlohmann::ordered_json r{{"instance_id", row.instance_id},
                               {"best_known_method", row.best_known_method},
                               {"best_known_tms", row.best_known_tms},
                               {"our_tms", row.our_tms}};
      r["gap_percent"] = row.gap_percent ? nlohmann::ordered_json(*row.gap_percent) : nullptr;
      doc["rows"].push_back(std::move(r));
    }
    doc["summary"] = {{"instances", s.instances},
                      {"strictly_best", s.strictly_best},
                      {"at_least_tied", s.at_least_tied},
                      {"within_5_percent", s.within_5_percent}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "instance_id,best_known_method,best_known_tms,our_tms,gap_percent\n";
  for (const auto& row : report.rows) {
    out << row.instance_id << ',' << row.best_known_method << ',' << row.best_known_tms << ','
        << row.our_tms << ',';
    if (row.gap_percent) out << std::fixed << std::setprecision(2) << *row.gap_percent;
    out << '\n';
  }
  out << "# instances=" << s.instances << " strictly_best=" << s.strictly_best
      << " at_least_tied=" << s.at_least_tied << " within_5_percent=" << s.within_5_percent
      << '\n';
  return out.str();
}

}  // namespace drawers
