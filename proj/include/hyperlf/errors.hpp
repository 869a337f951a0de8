// Copyright 2026 The hyperlf Authors
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperlf {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The curve data violates the model's hypotheses (degree, monicity, discriminant).
class CurveInvalid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The naive model is not semistable at `prime`; `criterion` names the failed test.
class NotSemistable : public std::runtime_error {
 public:
  NotSemistable(std::string prime, std::string criterion)
      : std::runtime_error("p=" + prime + " not semistable (failed: " + criterion +
                           "); supply a local-data override for this prime"),
        prime_(std::move(prime)),
        criterion_(std::move(criterion)) {}

  const std::string& prime() const noexcept { return prime_; }
  const std::string& criterion() const noexcept { return criterion_; }

 private:
  std::string prime_;
  std::string criterion_;
};

// A mathematical guarantee was violated; always an implementation bug.
class InternalConsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DataIntegrity : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InsufficientData : public std::runtime_error {
 public:
  InsufficientData(std::uint64_t p, int needed_degree, int available_degree)
      : std::runtime_error("local factor at p=" + std::to_string(p) + " is valid to degree " +
                           std::to_string(available_degree) + " but degree " +
                           std::to_string(needed_degree) + " is needed"),
        p_(p),
        needed_degree_(needed_degree) {}

  std::uint64_t prime() const noexcept { return p_; }
  int needed_degree() const noexcept { return needed_degree_; }

 private:
  std::uint64_t p_;
  int needed_degree_;
};

class InsufficientM : public std::runtime_error {
 public:
  InsufficientM(std::uint64_t have, std::uint64_t required)
      : std::runtime_error("coefficient cutoff M=" + std::to_string(have) +
                           " is too small for the requested tolerance; need M >= " +
                           std::to_string(required)),
        required_(required) {}

  std::uint64_t required_M() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string path, std::size_t byte_offset = 0)
      : std::runtime_error(what), path_(std::move(path)), byte_offset_(byte_offset) {}

  const std::string& path() const noexcept { return path_; }
  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::string path_;
  std::size_t byte_offset_;
};

}  // namespace hyperlf
