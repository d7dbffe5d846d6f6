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

#ifndef MATROIDH_JSON_IO_HPP
#define MATROIDH_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "matroidh/complex.hpp"
#include "matroidh/enumerate.hpp"
#include "matroidh/hvector.hpp"
#include "matroidh/matroid.hpp"

namespace matroidh {

inline constexpr int kSchemaVersion = 1;

/// Interchange format: {"n": <int>, "facets": [[1-based ints]...]}.
/// Input facets need not be maximal; output is always canonical.
nlohmann::json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const nlohmann::json& j);

/// Matroid JSON adds "classes": [[1-based ints]...] to the complex format.
nlohmann::json matroid_to_json(const Matroid& m);

nlohmann::json hvector_to_json(const HVector& h);
HVector hvector_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ClassReport& report);
nlohmann::json reports_to_json(const std::string& suite,
                               const std::vector<ClassReport>& reports);

/// CSV rows (family, d, p, a, t, h-vector, type), one per matroid, with a
/// header line. Multi-valued fields are quoted.
std::string reports_to_csv(const std::vector<ClassReport>& reports);

}  // namespace matroidh

#endif  // MATROIDH_JSON_IO_HPP
