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
#include <random>
#include <vector>

#include "matroidh/complex.hpp"
#include "matroidh/errors.hpp"
#include "matroidh/matroid.hpp"
#include "oracles.hpp"

using namespace matroidh;

namespace {

const SimplicialComplex kTriangle =
    SimplicialComplex::generate(3, {{1, 2}, {2, 3}, {1, 3}});
const SimplicialComplex kPath = SimplicialComplex::generate(3, {{1, 2}, {2, 3}});
const SimplicialComplex kThreeFacets =
    SimplicialComplex::generate(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
const SimplicialComplex kK23 = SimplicialComplex::generate(
    5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
const SimplicialComplex kTwoEdges =
    SimplicialComplex::generate(4, {{1, 2}, {3, 4}});

// Cardinality-preserving exchange holds on every facet pair, yet the
// deletion of vertex 1 is impure; the weaker reading of the exchange
// condition (replacement vertex allowed back inside F \ {i}) accepts it.
const SimplicialComplex kFalsePositive = SimplicialComplex::generate(
    5, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {1, 3, 5},
        {2, 3, 5}, {1, 4, 5}});

}  // namespace

TEST_CASE("is_matroid on fixed examples") {
  CHECK(is_matroid(kTriangle));
  // The path is rank 2 with 1 and 3 parallel, hence a matroid.
  CHECK(is_matroid(kPath));
  CHECK(is_matroid(kThreeFacets));
  CHECK(is_matroid(kK23));
  CHECK_FALSE(is_matroid(kTwoEdges));
  CHECK_FALSE(is_matroid(SimplicialComplex::generate(4, {{1, 2, 3}, {3, 4}})));
  CHECK_FALSE(is_matroid(kFalsePositive));
  // ... because its vertex-1 deletion is impure:
  CHECK_FALSE(is_pure(compress_to_support(delete_vertex(kFalsePositive, 1)).complex));
}

TEST_CASE("matroid_oracles evaluates the three criteria independently") {
  MatroidOracles good = matroid_oracles(kTriangle);
  CHECK(good.exchange);
  CHECK(good.augmentation);
  CHECK(good.restrictions_pure);

  MatroidOracles bad = matroid_oracles(kTwoEdges);
  CHECK_FALSE(bad.exchange);
  CHECK_FALSE(bad.augmentation);
  CHECK_FALSE(bad.restrictions_pure);
}

TEST_CASE("matroid_oracles budget: big support with sampling disabled throws") {
  std::vector<Face> singles;
  for (int v = 1; v <= 17; ++v) singles.push_back(Face::single(v));
  SimplicialComplex big = SimplicialComplex::generate(17, singles);
  CHECK_THROWS_AS(matroid_oracles(big, 16, 0), RestrictionCheckBudgetExceeded);
  // With sampling enabled the same complex is accepted.
  MatroidOracles sampled = matroid_oracles(big, 16, 8);
  CHECK(sampled.exchange);
  CHECK(sampled.augmentation);
  CHECK(sampled.restrictions_pure);
}

TEST_CASE("the three criteria agree with is_matroid on random complexes") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 400; ++trial) {
    SimplicialComplex c = oracles::random_complex(rng);
    MatroidOracles o = matroid_oracles(c);
    const bool m = is_matroid(c);
    CHECK(o.exchange == m);
    CHECK(o.augmentation == m);
    CHECK(o.restrictions_pure == m);
  }
}

TEST_CASE("matroid duality and skeleta on random pure complexes") {
  std::mt19937_64 rng(31337);
  int pure_checked = 0;
  for (int trial = 0; trial < 2000 && pure_checked < 300; ++trial) {
    SimplicialComplex c = oracles::random_complex(rng);
    if (!is_pure(c)) continue;
    ++pure_checked;
    if (c.support().cardinality() < c.ambient()) {
      // Complement duality preserves the matroid property.
      CHECK(is_matroid(dual(c)) == is_matroid(c));
    }
    if (is_matroid(c)) {
      for (int k = 0; k <= dimension(c); ++k)
        CHECK(is_matroid(skeleton(c, k)));
    }
  }
  CHECK(pure_checked == 300);
}

TEST_CASE("parallel_classes derives the partition") {
  Matroid m = parallel_classes(kK23);
  CHECK(m.classes() == std::vector<Face>{{1, 2}, {3, 4, 5}});
  CHECK(m.sizes() == std::vector<int>{2, 3});
  CHECK(m.rank() == 2);

  Matroid t = parallel_classes(kTriangle);
  CHECK(t.classes() == std::vector<Face>{{1}, {2}, {3}});

  CHECK(parallel_classes(kPath).classes() == std::vector<Face>{{2}, {1, 3}});
  CHECK_THROWS_AS(parallel_classes(kTwoEdges), NotAMatroid);
  CHECK_THROWS_AS(parallel_classes(kFalsePositive), NotAMatroid);
}

TEST_CASE("faces are exactly the sub-transversals of the facet class sets") {
  for (const Matroid& m : {parallel_classes(kK23), build_complete(2, {2, 3}),
                           build_delta_t({3, 4, {1, 1, 2, 2}, 1})}) {
    const SimplicialComplex& c = m.complex();
    auto class_mask = [&](Face f) -> std::uint32_t {
      std::uint32_t mask = 0;
      bool twice = false;
      for (int i = 0; i < m.class_count(); ++i) {
        const int hits = f.intersect(m.classes()[static_cast<std::size_t>(i)])
                             .cardinality();
        if (hits > 1) twice = true;
        if (hits >= 1) mask |= std::uint32_t{1} << i;
      }
      return twice ? ~std::uint32_t{0} : mask;
    };
    for (std::uint64_t bits : oracles::all_faces(
             SimplicialComplex::derived(c.ambient(), {c.support()}))) {
      const std::uint32_t mask = class_mask(Face(bits));
      bool transversal = false;
      if (mask != ~std::uint32_t{0})
        for (std::uint32_t s : m.form().sets)
          if ((mask & ~s) == 0) transversal = true;
      CHECK(c.is_face(Face(bits)) == transversal);
    }
  }
}

TEST_CASE("simplify keeps one vertex per class") {
  auto [sk23, sizes23] = simplify(parallel_classes(kK23));
  CHECK(sizes23 == std::vector<int>{2, 3});
  CHECK(sk23.complex().facets() == std::vector<Face>{{1, 2}});

  auto [st, sizest] = simplify(parallel_classes(kTriangle));
  CHECK(sizest == std::vector<int>{1, 1, 1});
  CHECK(st.complex() == SimplicialComplex::derived(3, kTriangle.facets()));

  // Already-simple matroids map to themselves.
  auto [s4, sizes4] = simplify(parallel_classes(kThreeFacets));
  CHECK(sizes4 == std::vector<int>{1, 1, 1, 1});
  CHECK(s4.complex().facets() == kThreeFacets.facets());
}

TEST_CASE("family builders: fixed facet lists") {
  CHECK(build_delta_t({3, 4, {1, 1, 1, 1}, 1}).complex().facets() ==
        std::vector<Face>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
  CHECK(build_delta_t({2, 3, {1, 1, 1}, 0}).complex() ==
        SimplicialComplex::derived(3, kTriangle.facets()));
  CHECK(build_complete(3, {2, 1, 1}).complex().facets() ==
        std::vector<Face>{{1, 3, 4}, {2, 3, 4}});
  CHECK(build_uniform(3, 4).complex().facets() ==
        std::vector<Face>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  CHECK(build_complete(2, {3, 3, 4, 5}).complex().ambient() == 15);
  CHECK(build_complete(2, {3, 3, 4, 5}).complex().facets().size() == 83);
}

TEST_CASE("family builders: facet counts are binomial") {
  for (int d = 2; d <= 4; ++d)
    for (int p = d; p <= 6; ++p)
      for (int t = 0; t <= d - 2; ++t) {
        if (t > 0 && p == d) continue;  // same matroid as t = 0
        std::vector<int> a(static_cast<std::size_t>(p), 1);
        Matroid m = build_delta_t({d, p, a, t});
        std::int64_t expect = 1;
        for (int i = 0; i < d - t; ++i)
          expect = expect * (p - t - i) / (i + 1);
        CHECK(static_cast<std::int64_t>(m.complex().facets().size()) == expect);
      }
}

TEST_CASE("delta_min sorts sizes ascending and takes t = d-2") {
  Matroid mn = build_delta_min(3, 4, {2, 1, 1, 1});
  CHECK(mn.complex() == build_delta_t({3, 4, {1, 1, 1, 2}, 1}).complex());
  Matroid mx = build_delta_max(3, 4, {2, 1, 1, 1});
  CHECK(mx.complex() == build_complete(3, {2, 1, 1, 1}).complex());
  // p = d: a single matroid, so the two extremes coincide.
  Matroid lo = build_delta_min(3, 3, {1, 2, 3});
  Matroid hi = build_delta_max(3, 3, {1, 2, 3});
  CHECK(canonical_class_form(lo.form()) == canonical_class_form(hi.form()));
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(build_delta_t({1, 3, {1, 1, 1}, 0}), InvalidSpec);
  CHECK_THROWS_AS(build_delta_t({3, 2, {1, 1}, 0}), InvalidSpec);
  CHECK_THROWS_AS(build_delta_t({3, 4, {1, 1, 1, 1}, 2}), InvalidSpec);
  CHECK_THROWS_AS(build_delta_t({3, 4, {1, 1, 1}, 1}), InvalidSpec);
  CHECK_THROWS_AS(build_delta_t({3, 4, {1, 0, 1, 1}, 1}), InvalidSpec);
  CHECK_THROWS_AS(Matroid::lift(ClassForm{{1, 1}, {}}), InvalidSpec);
}

TEST_CASE("cone classes") {
  Matroid m = build_delta_t({3, 4, {1, 1, 1, 2}, 1});
  CHECK(m.is_cone_class(1));
  CHECK_FALSE(m.is_cone_class(2));
  CHECK_FALSE(m.is_cone_class(4));
  // Complete family has no cone class when p > d.
  CHECK_FALSE(build_uniform(2, 3).is_cone_class(1));
}

TEST_CASE("switch_classes exchanges roles and validates the result") {
  Matroid m = build_delta_t({3, 4, {1, 1, 1, 2}, 1});
  Matroid sw = switch_classes(m, 1, 4);
  CHECK(is_matroid(sw.complex()));
  CHECK(sw.complex().ambient() == m.complex().ambient());
  // Switching back restores the original facet family exactly.
  CHECK(switch_classes(sw, 1, 4).complex() == m.complex());
  // Switching two same-size classes of a symmetric family is a relabeling.
  Matroid sym = build_complete(2, {2, 2, 3});
  CHECK(canonical_class_form(switch_classes(sym, 1, 2).form()) ==
        canonical_class_form(sym.form()));
  CHECK_THROWS_AS(switch_classes(m, 2, 2), InvalidSpec);
  CHECK_THROWS_AS(switch_classes(m, 0, 3), InvalidSpec);
}

TEST_CASE("canonical_class_form is invariant under size-preserving relabeling") {
  std::mt19937_64 rng(555);
  Matroid m = build_delta_t({3, 5, {1, 1, 2, 2, 2}, 1});
  const ClassForm base = canonical_class_form(m.form());
  std::vector<int> perm(m.form().sizes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  for (int trial = 0; trial < 50; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    ClassForm shuffled;
    shuffled.sizes.resize(perm.size());
    std::vector<int> newpos(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      shuffled.sizes[static_cast<std::size_t>(perm[i])] = m.form().sizes[i];
      newpos[i] = perm[i];
    }
    for (std::uint32_t s : m.form().sets) {
      std::uint32_t out = 0;
      for (std::uint32_t b = s; b != 0; b &= b - 1)
        out |= std::uint32_t{1} << newpos[static_cast<std::size_t>(
            std::countr_zero(b))];
      shuffled.sets.push_back(out);
    }
    std::sort(shuffled.sets.begin(), shuffled.sets.end());
    CHECK(canonical_class_form(shuffled) == base);
    CHECK(class_form_key(canonical_class_form(shuffled)) ==
          class_form_key(base));
    shuffled.sets.clear();
  }
}

TEST_CASE("lift then from_complex round-trips the canonical form") {
  for (const ClassForm& form :
       {build_delta_t({3, 4, {1, 2, 2, 3}, 1}).form(),
        build_complete(2, {1, 2, 3}).form(), build_uniform(4, 5).form()}) {
    Matroid lifted = Matroid::lift(form);
    Matroid back = Matroid::from_complex(lifted.complex());
    CHECK(canonical_class_form(back.form()) == canonical_class_form(form));
  }
}
