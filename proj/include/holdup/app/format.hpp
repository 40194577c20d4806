#pragma once

// Row-oriented output shared by every subcommand: CSV with a header row,
// json-lines with one self-describing object per row, or line-oriented
// `kind key=value ...` text.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace holdup::app {

enum class OutputFormat { Csv, JsonLines, Text };

OutputFormat parse_format(std::string_view name);
std::string_view to_string(OutputFormat f);

/// Shortest decimal that reads back to the same double; "0" for both zeros.
std::string format_number(double x);

/// An empty cell is std::monostate (blank in CSV, null in JSON).
using Value = std::variant<std::monostate, double, std::int64_t, std::uint64_t, bool, std::string>;
using Record = std::vector<std::pair<std::string, Value>>;

std::string format_value(const Value& v);

class RecordWriter {
 public:
  /// `kind` tags json-lines objects ({"record": kind, ...}) and leads each
  /// text line; CSV ignores it.
  RecordWriter(std::ostream& out, OutputFormat format, std::string kind);

  /// CSV rows must all carry the header of the first row.
  void write(const Record& row);

 private:
  std::ostream& out_;
  OutputFormat format_;
  std::string kind_;
  std::vector<std::string> header_;
};

}  // namespace holdup::app
