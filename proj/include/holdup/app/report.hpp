#pragma once

#include <filesystem>
#include <vector>

#include "holdup/app/format.hpp"

namespace holdup::app {

/// Summarizes sweep CSV files: per file, per (parameter, cap) group and per
/// numeric column, the count, min, max, mean and every sign change, given as
/// lo:hi brackets on the value column. Throws ConfigError on unreadable or
/// ragged input.
void write_report(const std::vector<std::filesystem::path>& files, RecordWriter& writer);

}  // namespace holdup::app
