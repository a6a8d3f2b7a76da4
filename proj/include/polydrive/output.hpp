// Copyright 2026 The polydrive Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// CSV and JSON serialization of run results.
//
// CSV layout: `# key: value` metadata lines, one header row (time column
// first), then one row per sample. Numbers use 17 significant digits, so
// parsing a written file gives back the same doubles bit for bit.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "polydrive/scenarios.hpp"

namespace polydrive {

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_output_format(std::string_view name);

/// Shortest-safe decimal form: printf "%.17g".
std::string format_double(double v);

void write_csv(std::ostream& os, const RunResult& r);
void write_json(std::ostream& os, const RunResult& r);

/// Writes to `path`; throws kIo when the file cannot be written.
void write_file(const std::string& path, const RunResult& r, OutputFormat format);

/// Inverse of write_csv. The first header column becomes the time axis.
RunResult read_csv(std::istream& is);

void write_scan_csv(std::ostream& os, std::string_view axis, const std::vector<ScanRow>& rows);

}  // namespace polydrive
