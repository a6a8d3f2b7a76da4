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

#include "polydrive/output.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "polydrive/error.hpp"

namespace polydrive {
namespace {

void check_shape(const RunResult& r) {
  std::set<std::string> names = {r.time_label};
  for (const Column& c : r.columns) {
    if (c.values.size() != r.times.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "column '" + c.name + "' length differs from time axis");
    }
    if (!names.insert(c.name).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate column name '" + c.name + "'");
    }
  }
  for (const std::string& n : names) {
    if (n.empty() || n.find_first_of(",\"\r\n") != std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "column name '" + n + "' is not CSV-safe");
    }
  }
}

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_double(const std::string& text, std::size_t line_no) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kInvalidArgument,
                "csv line " + std::to_string(line_no) + ": bad number '" + text + "'");
  }
  return v;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw Error(ErrorCode::kInvalidArgument, "unknown format '" + std::string(name) + "' (csv or json)");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const RunResult& r) {
  check_shape(r);
  for (const auto& [key, value] : r.metadata) os << "# " << key << ": " << one_line(value) << '\n';
  os << r.time_label;
  for (const Column& c : r.columns) os << ',' << c.name;
  os << '\n';
  for (std::size_t i = 0; i < r.times.size(); ++i) {
    os << format_double(r.times[i]);
    for (const Column& c : r.columns) os << ',' << format_double(c.values[i]);
    os << '\n';
  }
}

void write_json(std::ostream& os, const RunResult& r) {
  check_shape(r);
  nlohmann::ordered_json j;
  j["scenario"] = r.scenario_id;
  auto& md = j["metadata"] = nlohmann::ordered_json::array();
  for (const auto& [key, value] : r.metadata) md.push_back({{"key", key}, {"value", value}});
  auto& cols = j["columns"] = nlohmann::ordered_json::array();
  cols.push_back({{"name", r.time_label}, {"values", r.times}});
  for (const Column& c : r.columns) cols.push_back({{"name", c.name}, {"values", c.values}});
  os << j.dump(1) << '\n';
}

void write_file(const std::string& path, const RunResult& r, OutputFormat format) {
  std::ostringstream buffer;
  if (format == OutputFormat::kCsv) {
    write_csv(buffer, r);
  } else {
    write_json(buffer, r);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  out << buffer.str();
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write to '" + path + "' failed");
}

RunResult read_csv(std::istream& is) {
  RunResult r;
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header.empty() && line.rfind("# ", 0) == 0) {
      const std::size_t sep = line.find(": ", 2);
      if (sep == std::string::npos) {
        r.metadata.emplace_back(line.substr(2), "");
      } else {
        r.metadata.emplace_back(line.substr(2, sep - 2), line.substr(sep + 2));
      }
      if (r.metadata.back().first == "scenario") r.scenario_id = r.metadata.back().second;
      continue;
    }
    if (header.empty()) {
      header = split(line);
      r.time_label = header.front();
      for (std::size_t c = 1; c < header.size(); ++c) r.columns.push_back({header[c], {}});
      continue;
    }
    const std::vector<std::string> fields = split(line);
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "csv line " + std::to_string(line_no) + ": expected " +
                      std::to_string(header.size()) + " fields");
    }
    r.times.push_back(parse_double(fields[0], line_no));
    for (std::size_t c = 1; c < fields.size(); ++c) {
      r.columns[c - 1].values.push_back(parse_double(fields[c], line_no));
    }
  }
  if (header.empty()) throw Error(ErrorCode::kInvalidArgument, "csv: no header row");
  return r;
}

void write_scan_csv(std::ostream& os, std::string_view axis, const std::vector<ScanRow>& rows) {
  os << axis << ",metric,ok,error\n";
  for (const ScanRow& row : rows) {
    std::string err = one_line(row.error);
    for (char& c : err) {
      if (c == ',') c = ';';
    }
    os << format_double(row.value) << ',' << (row.ok ? format_double(row.metric) : "nan") << ','
       << (row.ok ? 1 : 0) << ',' << err << '\n';
  }
}

}  // namespace polydrive
