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

#ifndef STRATHYP_SWEEP_TABLE_HPP_
#define STRATHYP_SWEEP_TABLE_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace strathyp {

// Rows of named real-valued columns. The exchange format between the solvers
// and the CLI; serialised as CSV with a header line, LF endings and every
// value printed with 10 significant digits.
class SweepTable {
 public:
  SweepTable() = default;
  explicit SweepTable(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  // Throws ValidationError if the row width differs from the header.
  void add_row(std::vector<double> row);

  // Throws ValidationError for an unknown column name.
  std::size_t column_index(const std::string& name) const;
  std::vector<double> column(const std::string& name) const;

  // A table holding only the named columns, in the given order.
  SweepTable select(std::span<const std::string> names) const;

  void write_csv(std::ostream& out) const;

  // Parses a table written by write_csv. When expected_columns is non-empty
  // the header must match it exactly.
  static SweepTable read_csv(std::istream& in,
                             std::span<const std::string> expected_columns = {});

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

// "%.10g" formatting used for every CSV cell.
std::string format_number(double value);

}  // namespace strathyp

#endif  // STRATHYP_SWEEP_TABLE_HPP_
