#include "holdup/app/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "holdup/error.hpp"

namespace holdup::app {

namespace {

using Table = std::vector<std::vector<std::string>>;

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::optional<double> parse_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double x = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
  return x;
}

Table read_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("report: cannot read '" + file.string() + "'");
  Table rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(split_csv_line(line));
    if (rows.back().size() != rows.front().size()) {
      throw ConfigError("report: ragged row " + std::to_string(rows.size()) + " in '" +
                        file.string() + "'");
    }
  }
  if (rows.empty()) throw ConfigError("report: '" + file.string() + "' is empty");
  return rows;
}

int sign(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

void write_report(const std::vector<std::filesystem::path>& files, RecordWriter& writer) {
  for (const auto& file : files) {
    const Table table = read_csv(file);
    const auto& header = table.front();
    auto column = [&](std::string_view name) -> std::optional<std::size_t> {
      const auto it = std::find(header.begin(), header.end(), name);
      if (it == header.end()) return std::nullopt;
      return static_cast<std::size_t>(it - header.begin());
    };
    const auto param_col = column("parameter");
    const auto cap_col = column("cap");
    const auto value_col = column("value");

    // Groups keep first-appearance order.
    std::vector<std::pair<std::string, std::string>> keys;
    std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> groups;
    for (std::size_t r = 1; r < table.size(); ++r) {
      std::pair<std::string, std::string> key{param_col ? table[r][*param_col] : "",
                                              cap_col ? table[r][*cap_col] : ""};
      auto [it, fresh] = groups.try_emplace(key);
      if (fresh) keys.push_back(key);
      it->second.push_back(r);
    }

    for (const auto& key : keys) {
      const auto& members = groups[key];
      for (std::size_t c = 0; c < header.size(); ++c) {
        if (c == param_col || c == cap_col || c == value_col) continue;
        std::size_t count = 0;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        double sum = 0.0;
        std::string changes;
        std::optional<std::pair<double, double>> prev;  // (value, cell)
        for (std::size_t r : members) {
          const auto x = parse_number(table[r][c]);
          if (!x) continue;
          ++count;
          lo = std::min(lo, *x);
          hi = std::max(hi, *x);
          sum += *x;
          const auto at = value_col ? parse_number(table[r][*value_col]) : std::nullopt;
          const double where = at.value_or(static_cast<double>(r));
          if (prev && sign(prev->second) * sign(*x) < 0) {
            if (!changes.empty()) changes += ';';
            changes += format_number(prev->first) + ":" + format_number(where);
          }
          if (sign(*x) != 0) prev = std::pair{where, *x};
        }
        if (count == 0) continue;
        writer.write({{"file", file.filename().string()},
                      {"parameter", key.first},
                      {"cap", key.second},
                      {"column", header[c]},
                      {"count", static_cast<std::uint64_t>(count)},
                      {"min", lo},
                      {"max", hi},
                      {"mean", sum / static_cast<double>(count)},
                      {"sign_changes", changes}});
      }
    }
  }
}

}  // namespace holdup::app
