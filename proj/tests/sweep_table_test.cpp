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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "strathyp/errors.hpp"
#include "strathyp/sweep_table.hpp"

using namespace strathyp;

TEST_CASE("rows must match the header width") {
  SweepTable t({"a", "b"});
  CHECK_NOTHROW(t.add_row({1.0, 2.0}));
  CHECK_THROWS_AS(t.add_row({1.0}), ValidationError);
  CHECK_THROWS_AS(t.add_row({1.0, 2.0, 3.0}), ValidationError);
  CHECK(t.size() == 1);
}

TEST_CASE("column lookup and selection") {
  SweepTable t({"x", "y", "z"});
  t.add_row({1, 2, 3});
  t.add_row({4, 5, 6});
  CHECK(t.column_index("z") == 2);
  CHECK(t.column("y") == std::vector<double>{2, 5});
  CHECK_THROWS_AS(t.column("w"), ValidationError);
  const std::vector<std::string> names = {"z", "x"};
  const SweepTable s = t.select(names);
  CHECK(s.columns() == names);
  CHECK(s.rows() == std::vector<std::vector<double>>{{3, 1}, {6, 4}});
}

TEST_CASE("csv output uses ten significant digits and LF line endings") {
  SweepTable t({"alpha", "value"});
  t.add_row({0.1, 1.0 / 3.0});
  t.add_row({1e-12, 12345678901234.0});
  std::ostringstream out;
  t.write_csv(out);
  CHECK(out.str() == "alpha,value\n0.1,0.3333333333\n1e-12,1.23456789e+13\n");
  CHECK(out.str().find('\r') == std::string::npos);
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-2.5) == "-2.5");
}

TEST_CASE("csv roundtrip loses nothing beyond the ten-digit formatting") {
  auto rng = oracle::Rng(17);
  SweepTable t({"a", "b", "c"});
  for (int i = 0; i < 200; ++i) {
    t.add_row({oracle::Uniform(rng, -1.0, 1.0), std::pow(10.0, oracle::Uniform(rng, -12, 12)),
               std::floor(oracle::Uniform(rng, 0.0, 1000.0))});
  }
  std::stringstream buffer;
  t.write_csv(buffer);
  const SweepTable back = SweepTable::read_csv(buffer, t.columns());
  REQUIRE(back.size() == t.size());
  for (std::size_t r = 0; r < t.size(); ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      const double x = t.rows()[r][c];
      CHECK(std::abs(back.rows()[r][c] - x) <= 5e-10 * std::abs(x));
    }
  }
  std::stringstream again;
  back.write_csv(again);
  std::stringstream first;
  t.write_csv(first);
  CHECK(again.str() == first.str());
}

TEST_CASE("csv reader enforces the schema") {
  std::istringstream wrong_header("a,b\n1,2\n");
  const std::vector<std::string> expected = {"a", "c"};
  CHECK_THROWS_AS(SweepTable::read_csv(wrong_header, expected), ValidationError);

  std::istringstream bad_cell("a,b\n1,x\n");
  CHECK_THROWS_AS(SweepTable::read_csv(bad_cell), ValidationError);

  std::istringstream short_row("a,b\n1\n");
  CHECK_THROWS_AS(SweepTable::read_csv(short_row), ValidationError);

  std::istringstream empty_cell("a,b\n1,\n");
  CHECK_THROWS_AS(SweepTable::read_csv(empty_cell), ValidationError);

  std::istringstream empty("");
  CHECK_THROWS_AS(SweepTable::read_csv(empty), ValidationError);

  std::istringstream ok("a,b\n1,2\n\n3,4\n");
  const SweepTable t = SweepTable::read_csv(ok);
  CHECK(t.size() == 2);
}
