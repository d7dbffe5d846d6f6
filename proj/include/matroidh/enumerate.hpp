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

#ifndef MATROIDH_ENUMERATE_HPP
#define MATROIDH_ENUMERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "matroidh/hvector.hpp"
#include "matroidh/matroid.hpp"
#include "matroidh/oseq.hpp"

namespace matroidh {

struct MatroidRow {
  ClassForm form;            // canonical class-level form
  HVector h;
  std::int64_t type = 0;
  bool is_min = false;
  bool is_max = false;
  int family_t = -1;         // t when the matroid is a Delta_t member
  std::string oseq_verdict;  // empty when the suite did not evaluate it
};

struct ClassReport {
  ClassSpec spec;
  std::string suite;
  std::int64_t count_iso = 0;
  std::int64_t count_labeled = 0;
  std::vector<MatroidRow> rows;
  std::vector<std::string> violations;
  std::int64_t budget_exhaustions = 0;

  bool clean() const { return violations.empty() && budget_exhaustions == 0; }
};

/// Simple rank-d matroids on the ground set [p], canonical and deduplicated:
/// basis families where every element is used, every pair lies in a basis,
/// and the exchange property holds. Throws BoundExceeded for p > 6.
std::vector<ClassForm> enumerate_simple(int d, int p,
                                        std::int64_t* labeled_count = nullptr);

/// The class M(d,p,a) up to isomorphism, as canonical sized class forms
/// (sizes assigned over each simple matroid's classes in all inequivalent
/// ways). The spec's t is ignored.
std::vector<ClassForm> enumerate_class_forms(const ClassSpec& spec,
                                             std::int64_t* labeled_count = nullptr);

/// Same class, lifted onto consecutive vertex blocks.
std::vector<Matroid> enumerate_class(const ClassSpec& spec);

/// Class-level facet family of Delta_t(d,p,a) without building the lift.
ClassForm delta_t_form(int d, int p, const std::vector<int>& a, int t);

/// Detects Delta_t family membership: returns t in 0..d-2 when the facet
/// family is {cone classes} x {(d-t)-subsets of the rest}, 0 for the unique
/// p = d matroid, -1 otherwise.
int delta_t_index(const ClassForm& form);

ClassReport verify_minmax(const ClassSpec& spec);
ClassReport verify_recursion(const ClassSpec& spec);
ClassReport verify_switch(const ClassSpec& spec);
ClassReport verify_stanley(const ClassSpec& spec, const SearchBudget& budget = {});
ClassReport verify_type_bounds(const ClassSpec& spec);

struct GridOptions {
  int max_d = 3;
  int max_p = 5;
  int max_a = 3;
  bool include_rank4_unit = true;  // adds d=4, p=5, a=(1,1,1,1,1)
  SearchBudget budget;
  int threads = 1;
};

/// Size multisets are enumerated in ascending order; one spec per multiset.
std::vector<ClassSpec> grid_specs(const GridOptions& options);

/// suite in {minmax, recursion, switch, stanley, typebounds, all}.
std::vector<ClassReport> run_suite(const std::string& suite,
                                   const GridOptions& options);

}  // namespace matroidh

#endif  // MATROIDH_ENUMERATE_HPP
