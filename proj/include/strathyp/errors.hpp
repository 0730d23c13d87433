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

#ifndef STRATHYP_ERRORS_HPP_
#define STRATHYP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace strathyp {

// An argument lies outside the mathematical domain of an operation
// (alpha at 0 or 1, a belief outside the clamp range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A value object or configuration violates one of its invariants.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation refused to run because the request is too large.
class RefusalError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace strathyp

#endif  // STRATHYP_ERRORS_HPP_
