#include "drawers/drawer_config.hpp"

#include "drawers/error.hpp"

#include <charconv>
#include <istream>
#include <sstream>

namespace drawers {

bool NumericAtom::holds(int x) const noexcept {
  switch (op) {
    case Comparison::Less: return x < value;
    case Comparison::LessEqual: return x <= value;
    case Comparison::Equal: return x == value;
    case Comparison::GreaterEqual: return x >= value;
    case Comparison::Greater: return x > value;
  }
  return false;
}

bool DrawerPredicate::is_catch_all() const noexcept {
  return !slack_is_zero && !in_latest_project && !duration && !total_demand;
}

bool DrawerPredicate::matches(const CandidateAttributes& c) const noexcept {
  if (slack_is_zero && *slack_is_zero != (c.total_slack == 0)) return false;
  if (in_latest_project && *in_latest_project != c.in_latest_project) return false;
  if (duration && !duration->holds(c.duration)) return false;
  if (total_demand && !total_demand->holds(c.total_demand)) return false;
  return true;
}

DrawerConfig default_drawer_config() {
  DrawerConfig config;
  config.drawers.push_back({true, true, {}, {}});
  config.drawers.push_back({true, false, {}, {}});
  config.drawers.push_back({false, true, {}, {}});
  config.drawers.push_back({});
  return config;
}

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "drawer config line " + std::to_string(line) + ": " + what);
}

std::optional<NumericAtom> parse_numeric(std::string_view text) {
  static constexpr std::pair<std::string_view, Comparison> ops[] = {
      {"<=", Comparison::LessEqual}, {">=", Comparison::GreaterEqual}, {"<", Comparison::Less},
      {">", Comparison::Greater},    {"=", Comparison::Equal},
  };
  for (const auto& [symbol, op] : ops) {
    if (text.substr(0, symbol.size()) != symbol) continue;
    const auto digits = text.substr(symbol.size());
    NumericAtom atom{op, 0};
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), atom.value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) return {};
    return atom;
  }
  return {};
}

std::string_view symbol(Comparison op) {
  switch (op) {
    case Comparison::Less: return "<";
    case Comparison::LessEqual: return "<=";
    case Comparison::Equal: return "=";
    case Comparison::GreaterEqual: return ">=";
    case Comparison::Greater: return ">";
  }
  return "=";
}

}  // namespace

DrawerConfig parse_drawer_config(std::istream& in) {
  DrawerConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword)) continue;
    if (keyword != "drawer") fail(line_no, "expected 'drawer', found '" + keyword + "'");

    DrawerPredicate predicate;
    std::string atom;
    while (words >> atom) {
      std::string_view a = atom;
      if (a == "*") continue;
      if (a == "slack=zero") {
        predicate.slack_is_zero = true;
      } else if (a == "slack=nonzero") {
        predicate.slack_is_zero = false;
      } else if (a == "project=latest") {
        predicate.in_latest_project = true;
      } else if (a == "project=other") {
        predicate.in_latest_project = false;
      } else if (a.starts_with("duration")) {
        predicate.duration = parse_numeric(a.substr(8));
        if (!predicate.duration) fail(line_no, "bad duration atom '" + atom + "'");
      } else if (a.starts_with("demand")) {
        predicate.total_demand = parse_numeric(a.substr(6));
        if (!predicate.total_demand) fail(line_no, "bad demand atom '" + atom + "'");
      } else {
        fail(line_no, "unknown atom '" + atom + "'");
      }
    }
    config.drawers.push_back(predicate);
  }
  if (!config.ends_with_catch_all())
    throw Error(ErrorCode::ParseError, "drawer config must end with a catch-all drawer");
  return config;
}

std::string format_drawer_config(const DrawerConfig& config) {
  std::ostringstream out;
  for (const auto& d : config.drawers) {
    out << "drawer";
    if (d.is_catch_all()) out << " *";
    if (d.slack_is_zero) out << (*d.slack_is_zero ? " slack=zero" : " slack=nonzero");
    if (d.in_latest_project) out << (*d.in_latest_project ? " project=latest" : " project=other");
    if (d.duration) out << " duration" << symbol(d.duration->op) << d.duration->value;
    if (d.total_demand) out << " demand" << symbol(d.total_demand->op) << d.total_demand->value;
    out << '\n';
  }
  return out.str();
}

}  // namespace drawers
