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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "matroidh/complex.hpp"
#include "matroidh/enumerate.hpp"
#include "matroidh/errors.hpp"
#include "matroidh/matroid.hpp"

using namespace matroidh;

namespace {

// Vertex-level brute force: every complex on [n] whose facets are d-subsets,
// restricted to matroids with full support and the given class-size multiset.
std::set<std::string> brute_force_class(int d, int n, std::vector<int> sizes) {
  std::sort(sizes.begin(), sizes.end());
  std::vector<Face> dsets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    if (std::popcount(mask) == d) dsets.push_back(Face(mask));
  std::set<std::string> keys;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << dsets.size()); ++pick) {
    std::vector<Face> facets;
    Face support;
    for (std::size_t i = 0; i < dsets.size(); ++i)
      if ((pick >> i) & 1) {
        facets.push_back(dsets[i]);
        support = support.unite(dsets[i]);
      }
    if (support != full_face(n)) continue;
    SimplicialComplex c = SimplicialComplex::derived(n, facets);
    if (c.facets().size() != facets.size()) continue;  // defensive: antichain
    if (!is_matroid(c)) continue;
    Matroid m = Matroid::from_complex(c);
    if (m.sizes() != sizes) continue;  // stored sizes are ascending
    keys.insert(class_form_key(canonical_class_form(m.form())));
  }
  return keys;
}

int vertex_total(const std::vector<int>& a) {
  int n = 0;
  for (int x : a) n += x;
  return n;
}

}  // namespace

TEST_CASE("simple-matroid enumeration counts") {
  std::int64_t labeled = 0;
  auto u23 = enumerate_simple(2, 3, &labeled);
  CHECK(u23.size() == 1);
  CHECK(labeled == 1);

  auto r34 = enumerate_simple(3, 4, &labeled);
  CHECK(r34.size() == 2);
  CHECK(labeled == 5);
  std::set<std::size_t> facet_counts;
  for (const ClassForm& f : r34) facet_counts.insert(f.sets.size());
  CHECK(facet_counts == std::set<std::size_t>{3, 4});

  CHECK(enumerate_simple(1, 1).size() == 1);
  CHECK(enumerate_simple(4, 4).size() == 1);
  CHECK_THROWS_AS(enumerate_simple(3, 7), BoundExceeded);
}

TEST_CASE("sized enumeration matches vertex-level brute force") {
  struct Case {
    int d;
    std::vector<int> a;
  };
  for (const Case& cs :
       {Case{2, {1, 1, 1}}, Case{2, {1, 2, 2}}, Case{2, {1, 1, 1, 1}},
        Case{3, {1, 1, 1, 1}}, Case{3, {1, 1, 1, 2}}}) {
    ClassSpec spec{cs.d, static_cast<int>(cs.a.size()), cs.a, 0};
    auto forms = enumerate_class_forms(spec);
    std::set<std::string> got;
    for (const ClassForm& f : forms)
      got.insert(class_form_key(canonical_class_form(f)));
    CHECK(got.size() == forms.size());  // no duplicates emitted
    CHECK(got == brute_force_class(cs.d, vertex_total(cs.a), cs.a));
  }
}

TEST_CASE("every enumerated matroid validates and carries the right sizes") {
  ClassSpec spec{3, 5, {1, 1, 1, 2, 2}, 0};
  std::vector<int> want = spec.a;
  std::sort(want.begin(), want.end());
  auto lifted = enumerate_class(spec);
  CHECK(!lifted.empty());
  for (const Matroid& m : lifted) {
    CHECK(is_matroid(m.complex()));
    std::vector<int> sizes = m.sizes();
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == want);
    CHECK(m.rank() == spec.d);
  }
}

TEST_CASE("family membership detection") {
  for (int t = 0; t <= 2; ++t)
    CHECK(delta_t_index(delta_t_form(4, 6, {1, 2, 1, 2, 1, 2}, t)) == t);
  // p = d: the unique matroid counts as the t = 0 member.
  CHECK(delta_t_index(delta_t_form(3, 3, {1, 2, 3}, 0)) == 0);
  CHECK(delta_t_index(build_uniform(3, 5).form()) == 0);
  // Rank 3 on 5 elements includes matroids outside the family.
  bool found_outside = false;
  for (const ClassForm& f : enumerate_simple(3, 5))
    found_outside = found_outside || delta_t_index(f) == -1;
  CHECK(found_outside);
}

TEST_CASE("extremal suite: family members bound every class member") {
  for (const ClassSpec& spec :
       {ClassSpec{3, 4, {1, 1, 1, 2}, 0}, ClassSpec{3, 5, {1, 1, 2, 2, 3}, 0},
        ClassSpec{2, 4, {1, 2, 2, 3}, 0}}) {
    ClassReport r = verify_minmax(spec);
    CHECK(r.clean());
    CHECK(r.count_iso == static_cast<std::int64_t>(r.rows.size()));
    bool any_min = false, any_max = false;
    for (const MatroidRow& row : r.rows) {
      any_min = any_min || row.is_min;
      any_max = any_max || row.is_max;
      CHECK(row.h.last_index() ==
            vertex_total(spec.a) - spec.d);  // length law on every member
    }
    CHECK(any_min);
    CHECK(any_max);
  }
}

TEST_CASE("recursion, switch, type-bound, and purity suites are clean") {
  for (const ClassSpec& spec :
       {ClassSpec{3, 4, {1, 1, 1, 2}, 0}, ClassSpec{3, 5, {1, 1, 1, 1, 2}, 0},
        ClassSpec{2, 4, {1, 1, 2, 2}, 0}}) {
    CHECK(verify_recursion(spec).clean());
    CHECK(verify_switch(spec).clean());
    CHECK(verify_type_bounds(spec).clean());
    ClassReport st = verify_stanley(spec);
    CHECK(st.clean());
    for (const MatroidRow& row : st.rows) CHECK(row.oseq_verdict == "pure");
  }
}

TEST_CASE("type bounds hold on every enumerated class member") {
  ClassSpec spec{3, 5, {1, 1, 1, 2, 2}, 0};
  ClassReport r = verify_type_bounds(spec);
  CHECK(r.clean());
  for (const MatroidRow& row : r.rows)
    CHECK(row.type >= spec.p - spec.d + 1);
}

TEST_CASE("grid construction and full runs") {
  GridOptions small;
  small.max_d = 3;
  small.max_p = 4;
  small.max_a = 2;
  small.include_rank4_unit = false;
  auto specs = grid_specs(small);
  CHECK(!specs.empty());
  for (const ClassSpec& s : specs) {
    CHECK(s.d >= 2);
    CHECK(s.d <= 3);
    CHECK(s.p <= 4);
    CHECK(std::is_sorted(s.a.begin(), s.a.end()));
  }
  auto reports = run_suite("all", small);
  CHECK(reports.size() == 5 * specs.size());
  for (const ClassReport& r : reports) CHECK(r.clean());

  // Threaded run produces the same reports in the same order.
  GridOptions threaded = small;
  threaded.threads = 4;
  auto reports4 = run_suite("minmax", threaded);
  auto reports1 = run_suite("minmax", small);
  CHECK(reports4.size() == reports1.size());
  for (std::size_t i = 0; i < reports1.size(); ++i) {
    CHECK(reports4[i].count_iso == reports1[i].count_iso);
    CHECK(reports4[i].violations == reports1[i].violations);
  }

  CHECK_THROWS_AS(run_suite("unknown", small), InvalidSpec);
}

TEST_CASE("default grid includes the rank-4 unit class") {
  auto specs = grid_specs(GridOptions{});
  bool has_rank4 = false;
  for (const ClassSpec& s : specs)
    has_rank4 = has_rank4 || (s.d == 4 && s.p == 5);
  CHECK(has_rank4);
}
