#include "holdup/app/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "holdup/error.hpp"

namespace holdup::app {

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json-lines") return OutputFormat::JsonLines;
  if (name == "text") return OutputFormat::Text;
  throw ConfigError("unknown output format '" + std::string(name) + "'");
}

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Csv: return "csv";
    case OutputFormat::JsonLines: return "json-lines";
    case OutputFormat::Text: return "text";
  }
  return "?";
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return {buf.data(), end};
}

std::string format_value(const Value& v) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double x) const { return format_number(x); }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(std::uint64_t x) const { return std::to_string(x); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

namespace {

nlohmann::ordered_json to_json(const Value& v) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double x) const {
      // JSON has no infinities; keep them readable rather than null.
      if (!std::isfinite(x)) return format_number(x);
      return x;
    }
    nlohmann::ordered_json operator()(std::int64_t x) const { return x; }
    nlohmann::ordered_json operator()(std::uint64_t x) const { return x; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace

RecordWriter::RecordWriter(std::ostream& out, OutputFormat format, std::string kind)
    : out_(out), format_(format), kind_(std::move(kind)) {}

void RecordWriter::write(const Record& row) {
  if (format_ == OutputFormat::JsonLines) {
    nlohmann::ordered_json obj;
    obj["record"] = kind_;
    for (const auto& [key, value] : row) obj[key] = to_json(value);
    out_ << obj.dump() << '\n';
    return;
  }
  if (format_ == OutputFormat::Text) {
    out_ << kind_;
    for (const auto& [key, value] : row) out_ << ' ' << key << '=' << format_value(value);
    out_ << '\n';
    return;
  }
  if (header_.empty()) {
    for (const auto& field : row) header_.push_back(field.first);
    for (std::size_t i = 0; i < header_.size(); ++i) out_ << (i ? "," : "") << header_[i];
    out_ << '\n';
  } else {
    bool same = row.size() == header_.size();
    for (std::size_t i = 0; same && i < row.size(); ++i) same = row[i].first == header_[i];
    if (!same) throw std::logic_error("CSV row does not match the header");
  }
  for (std::size_t i = 0; i < row.size(); ++i) out_ << (i ? "," : "") << format_value(row[i].second);
  out_ << '\n';
}

}  // namespace holdup::app
