// Copyright 2026 The strathyp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "strathyp/sweep_table.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "strathyp/errors.hpp"

namespace strathyp {
namespace {

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream stream(line);
  while (std::getline(stream, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

SweepTable::SweepTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void SweepTable::add_row(std::vector<double> row) {
  if (row.size() != columns_.size()) {
    throw ValidationError("sweep table: row has " + std::to_string(row.size()) +
                          " cells, header has " + std::to_string(columns_.size()));
  }
  rows_.push_back(std::move(row));
}

std::size_t SweepTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] == name) return i;
  }
  throw ValidationError("sweep table: no column named '" + name + "'");
}

std::vector<double> SweepTable::column(const std::string& name) const {
  const std::size_t index = column_index(name);
  std::vector<double> values;
  values.reserve(rows_.size());
  for (const auto& row : rows_) values.push_back(row[index]);
  return values;
}

SweepTable SweepTable::select(std::span<const std::string> names) const {
  std::vector<std::size_t> indices;
  for (const auto& name : names) indices.push_back(column_index(name));
  SweepTable out(std::vector<std::string>(names.begin(), names.end()));
  for (const auto& row : rows_) {
    std::vector<double> picked;
    picked.reserve(indices.size());
    for (std::size_t i : indices) picked.push_back(row[i]);
    out.rows_.push_back(std::move(picked));
  }
  return out;
}

void SweepTable::write_csv(std::ostream& out) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out << ',';
    out << columns_[i];
  }
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_number(row[i]);
    }
    out << '\n';
  }
}

SweepTable SweepTable::read_csv(std::istream& in,
                                std::span<const std::string> expected_columns) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("sweep table: empty CSV");
  SweepTable table(SplitCsvLine(line));
  if (!expected_columns.empty() &&
      !std::equal(table.columns_.begin(), table.columns_.end(),
                  expected_columns.begin(), expected_columns.end())) {
    throw ValidationError("sweep table: header '" + line +
                          "' does not match the expected schema");
  }
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const auto cells = SplitCsvLine(line);
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& cell : cells) {
      char* end = nullptr;
      const double value = std::strtod(cell.c_str(), &end);
      if (cell.empty() || end != cell.c_str() + cell.size()) {
        throw ValidationError("sweep table: line " + std::to_string(line_number) +
                              ": cannot parse '" + cell + "'");
      }
      row.push_back(value);
    }
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace strathyp
