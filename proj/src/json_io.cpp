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

#include "matroidh/json_io.hpp"

#include <sstream>

#include "matroidh/errors.hpp"

namespace matroidh {

namespace {

nlohmann::json faces_to_json(const std::vector<Face>& faces) {
  nlohmann::json out = nlohmann::json::array();
  for (Face f : faces) out.push_back(f.vertices());
  return out;
}

}  // namespace

nlohmann::json complex_to_json(const SimplicialComplex& c) {
  return {{"n", c.ambient()}, {"facets", faces_to_json(c.facets())}};
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
    throw WrongShape("complex JSON needs \"n\" and \"facets\"");
  const int n = j.at("n").get<int>();
  std::vector<Face> faces;
  for (const nlohmann::json& jf : j.at("facets")) {
    Face f;
    for (const nlohmann::json& jv : jf) {
      const int v = jv.get<int>();
      if (v < 1 || v > kMaxVertices)
        throw VertexOutOfRange("vertex " + std::to_string(v) + " outside 1.." +
                               std::to_string(kMaxVertices));
      f.insert(v);
    }
    faces.push_back(f);
  }
  return SimplicialComplex::generate(n, faces);
}

nlohmann::json matroid_to_json(const Matroid& m) {
  nlohmann::json out = complex_to_json(m.complex());
  out["classes"] = faces_to_json(m.classes());
  return out;
}

nlohmann::json hvector_to_json(const HVector& h) {
  return nlohmann::json(h.entries);
}

HVector hvector_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw WrongShape("h-vector JSON must be a nonempty array");
  return HVector(j.get<std::vector<std::int64_t>>());
}

namespace {

std::string join_ints(const std::vector<int>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  return os.str();
}

std::string join_ints64(const std::vector<std::int64_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  return os.str();
}

nlohmann::json form_to_json(const ClassForm& form) {
  nlohmann::json sets = nlohmann::json::array();
  for (std::uint32_t s : form.sets) {
    std::vector<int> classes;
    for (int i = 0; i < static_cast<int>(form.sizes.size()); ++i)
      if ((s >> i) & 1) classes.push_back(i + 1);
    sets.push_back(classes);
  }
  return {{"sizes", form.sizes}, {"sets", sets}};
}

}  // namespace

nlohmann::json report_to_json(const ClassReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const MatroidRow& row : report.rows) {
    nlohmann::json jr = {{"form", form_to_json(row.form)},
                         {"h", row.h.entries},
                         {"type", row.type},
                         {"is_min", row.is_min},
                         {"is_max", row.is_max},
                         {"family_t", row.family_t}};
    if (!row.oseq_verdict.empty()) jr["oseq"] = row.oseq_verdict;
    rows.push_back(std::move(jr));
  }
  return {{"suite", report.suite},
          {"spec", {{"d", report.spec.d}, {"p", report.spec.p}, {"a", report.spec.a}}},
          {"count_iso", report.count_iso},
          {"count_labeled", report.count_labeled},
          {"rows", std::move(rows)},
          {"violations", report.violations},
          {"budget_exhaustions", report.budget_exhaustions}};
}

nlohmann::json reports_to_json(const std::string& suite,
                               const std::vector<ClassReport>& reports) {
  nlohmann::json out = {{"schema_version", kSchemaVersion}, {"suite", suite}};
  std::int64_t violations = 0, exhaustions = 0;
  nlohmann::json items = nlohmann::json::array();
  for (const ClassReport& r : reports) {
    violations += static_cast<std::int64_t>(r.violations.size());
    exhaustions += r.budget_exhaustions;
    items.push_back(report_to_json(r));
  }
  out["total_violations"] = violations;
  out["total_budget_exhaustions"] = exhaustions;
  out["reports"] = std::move(items);
  return out;
}

std::string reports_to_csv(const std::vector<ClassReport>& reports) {
  std::ostringstream os;
  os << "family,d,p,a,t,h-vector,type\n";
  for (const ClassReport& report : reports) {
    for (const MatroidRow& row : report.rows) {
      const bool family = row.family_t >= 0;
      os << (family ? "delta_t" : "member") << ',' << report.spec.d << ','
         << report.spec.p << ',' << '"' << join_ints(report.spec.a) << '"' << ',';
      if (family) os << row.family_t;
      os << ',' << '"' << join_ints64(row.h.entries) << '"' << ',' << row.type
         << '\n';
    }
  }
  return os.str();
}

}  // namespace matroidh
