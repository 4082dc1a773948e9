// Copyright 2026 The xyphase Authors
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

#include "xyphase/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "xyphase/errors.hpp"
#include "xyphase/trace.hpp"

namespace xyphase {

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 12);
  if (ec != std::errc{}) throw ComputationError("number formatting failed");
  return std::string(buf, ptr);
}

std::string csv_row(const std::vector<double>& values) {
  std::string row;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) row += ',';
    row += format_number(values[i]);
  }
  row += '\n';
  return row;
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ComputationError("cannot open " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw ComputationError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::vector<double> MagnetizationTrace::fields() const {
  std::vector<double> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.bz);
  return out;
}

std::vector<double> MagnetizationTrace::magnetizations() const {
  std::vector<double> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.m);
  return out;
}

std::string trace_to_csv(const MagnetizationTrace& trace) {
  std::string out = "step,t,Bz,m,shots,seed\n";
  for (const auto& e : trace.entries) {
    out += std::to_string(e.step);
    out += ',' + format_number(e.t);
    out += ',' + format_number(e.bz);
    out += ',' + format_number(e.m);
    out += ',' + std::to_string(trace.meta.shots);
    out += ',' + std::to_string(trace.meta.seed);
    out += '\n';
  }
  return out;
}

namespace {

template <class T>
T parse_cell(const std::string& cell, std::size_t row) {
  T value{};
  const char* first = cell.data();
  const char* last = first + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ValidationError("trace CSV row " + std::to_string(row) +
                          ": cannot parse '" + cell + "'");
  }
  return value;
}

}  // namespace

MagnetizationTrace trace_from_csv(const std::string& text) {
  const auto rows = parse_csv(text);
  if (rows.empty()) throw ValidationError("trace CSV is empty");
  const std::vector<std::string> header{"step", "t", "Bz", "m", "shots", "seed"};
  if (rows.front() != header) {
    throw ValidationError("trace CSV header must be step,t,Bz,m,shots,seed");
  }
  MagnetizationTrace trace;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    if (cells.size() != header.size()) {
      throw ValidationError("trace CSV row " + std::to_string(r + 1) +
                            " has " + std::to_string(cells.size()) +
                            " cells, expected 6");
    }
    TraceEntry e;
    e.step = parse_cell<int>(cells[0], r + 1);
    e.t = parse_cell<double>(cells[1], r + 1);
    e.bz = parse_cell<double>(cells[2], r + 1);
    e.m = parse_cell<double>(cells[3], r + 1);
    trace.meta.shots = parse_cell<int>(cells[4], r + 1);
    trace.meta.seed = parse_cell<std::uint64_t>(cells[5], r + 1);
    trace.entries.push_back(e);
  }
  trace.meta.n_steps =
      trace.entries.empty() ? 0 : static_cast<int>(trace.entries.size()) - 1;
  return trace;
}

}  // namespace xyphase
