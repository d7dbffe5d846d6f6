// Copyright 2026 The Authors.
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

#ifndef MATROIDH_ERRORS_HPP
#define MATROIDH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matroidh {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyGeneratorSet : Error {
  EmptyGeneratorSet() : Error("generator set is empty") {}
};

struct VertexOutOfRange : Error {
  explicit VertexOutOfRange(const std::string& msg) : Error(msg) {}
};

struct UncoveredVertex : Error {
  explicit UncoveredVertex(int v)
      : Error("vertex " + std::to_string(v) + " belongs to no generator") {}
};

struct FaceNotInComplex : Error {
  FaceNotInComplex() : Error("face is not a member of the complex") {}
};

struct DegenerateDual : Error {
  DegenerateDual() : Error("dual undefined: a facet covers the whole vertex set") {}
};

struct NotAMatroid : Error {
  explicit NotAMatroid(const std::string& msg) : Error(msg) {}
};

struct InvalidSpec : Error {
  explicit InvalidSpec(const std::string& msg) : Error(msg) {}
};

struct NegativeHEntry : Error {
  explicit NegativeHEntry(const std::string& msg) : Error(msg) {}
};

struct WrongShape : Error {
  explicit WrongShape(const std::string& msg) : Error(msg) {}
};

struct BoundExceeded : Error {
  explicit BoundExceeded(const std::string& msg) : Error(msg) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct RestrictionCheckBudgetExceeded : Error {
  explicit RestrictionCheckBudgetExceeded(const std::string& msg) : Error(msg) {}
};

struct Overflow : Error {
  explicit Overflow(const std::string& msg) : Error(msg) {}
};

}  // namespace matroidh

#endif  // MATROIDH_ERRORS_HPP
