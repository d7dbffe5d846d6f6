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
#include "oracles.hpp"

using namespace matroidh;

namespace {

std::vector<std::uint64_t> masks(const std::vector<Face>& faces) {
  std::vector<std::uint64_t> out;
  for (Face f : faces) out.push_back(f.bits);
  std::sort(out.begin(), out.end());
  return out;
}

const SimplicialComplex kTriangle =
    SimplicialComplex::generate(3, {{1, 2}, {2, 3}, {1, 3}});
const SimplicialComplex kThreeFacets =
    SimplicialComplex::generate(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
const SimplicialComplex kK23 = SimplicialComplex::generate(
    5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});

}  // namespace

TEST_CASE("generation canonicalizes: duplicates and dominated sets dropped") {
  SimplicialComplex c =
      SimplicialComplex::generate(3, {{1}, {1, 2}, {1, 2}, {2, 3}});
  CHECK(c.facets() == std::vector<Face>{{1, 2}, {2, 3}});
  CHECK(c.ambient() == 3);
  CHECK(c.support() == full_face(3));
}

TEST_CASE("generation errors") {
  CHECK_THROWS_AS(SimplicialComplex::generate(2, {}), EmptyGeneratorSet);
  CHECK_THROWS_AS(SimplicialComplex::generate(2, {{1, 3}}), VertexOutOfRange);
  CHECK_THROWS_AS(SimplicialComplex::generate(3, {{1, 2}}), UncoveredVertex);
  CHECK_THROWS_AS(SimplicialComplex::generate(70, {{1}}), VertexOutOfRange);
  // derived complexes may leave vertices uncovered
  SimplicialComplex d = SimplicialComplex::derived(3, {{1, 2}});
  CHECK(d.support() == Face{1, 2});
}

TEST_CASE("facet order is canonical: cardinality then mask") {
  SimplicialComplex c =
      SimplicialComplex::generate(4, {{3, 4}, {1, 2}, {4}, {1, 3}});
  // {4} is dominated by {3,4}; the 2-sets sort by mask
  CHECK(c.facets() == std::vector<Face>{{1, 2}, {1, 3}, {3, 4}});
}

TEST_CASE("dimension and purity") {
  CHECK(dimension(kTriangle) == 1);
  CHECK(is_pure(kTriangle));
  CHECK(dimension(kThreeFacets) == 2);
  CHECK(is_pure(kThreeFacets));
  SimplicialComplex mixed = SimplicialComplex::generate(4, {{1, 2, 3}, {3, 4}});
  CHECK(dimension(mixed) == 2);
  CHECK_FALSE(is_pure(mixed));
}

TEST_CASE("f-vector on fixed examples") {
  CHECK(f_vector(kTriangle).counts == std::vector<std::int64_t>{1, 3, 3});
  SimplicialComplex full2 = SimplicialComplex::generate(2, {{1, 2}});
  CHECK(f_vector(full2).counts == std::vector<std::int64_t>{1, 2, 1});
  CHECK(f_vector(kThreeFacets).counts == std::vector<std::int64_t>{1, 4, 6, 3});
}

TEST_CASE("f-vector agrees with subset-enumeration oracle on random complexes") {
  std::mt19937_64 rng(20260823);
  for (int trial = 0; trial < 300; ++trial) {
    SimplicialComplex c = oracles::random_complex(rng);
    CHECK(f_vector(c).counts == oracles::f_vector(c));
  }
}

TEST_CASE("link, deletion, restriction, skeleton") {
  SimplicialComplex lk = link(kThreeFacets, Face{1});
  CHECK(lk.facets() == std::vector<Face>{{2, 3}, {2, 4}, {3, 4}});
  CHECK(link(kThreeFacets, Face{}) == kThreeFacets);
  CHECK_THROWS_AS(link(kThreeFacets, Face{2, 3, 4}), FaceNotInComplex);

  SimplicialComplex del = delete_vertex(kThreeFacets, 4);
  CHECK(del.facets() == std::vector<Face>{{1, 2, 3}});

  SimplicialComplex res = restriction(kThreeFacets, Face{2, 3, 4});
  CHECK(res.facets() == std::vector<Face>{{2, 3}, {2, 4}, {3, 4}});

  SimplicialComplex sk = skeleton(kThreeFacets, 1);
  CHECK(sk.facets().size() == 6);  // all pairs within some facet
  CHECK(dimension(sk) == 1);
  CHECK(skeleton(kThreeFacets, 2) == kThreeFacets);
  CHECK(dimension(skeleton(kThreeFacets, 0)) == 0);
  CHECK_THROWS_AS(skeleton(kThreeFacets, 3), VertexOutOfRange);
}

TEST_CASE("restriction composes and deletion is restriction to the complement") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    SimplicialComplex c = oracles::random_complex(rng);
    const int n = c.ambient();
    Face w(rng() & full_face(n).bits);
    if (w.empty()) w = Face::single(1);
    Face w2(rng() & w.bits);
    if (w2.empty()) w2 = Face::single(w.min_vertex());
    CHECK(restriction(restriction(c, w), w2) == restriction(c, w2));
    const int v = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    Face rest = full_face(n).minus(Face::single(v));
    CHECK(delete_vertex(c, v) == restriction(c, rest));
  }
}

TEST_CASE("dual on examples") {
  SimplicialComplex d = dual(kThreeFacets);
  CHECK(d.facets() == std::vector<Face>{{2}, {3}, {4}});
  CHECK_THROWS_AS(dual(SimplicialComplex::generate(2, {{1, 2}})), DegenerateDual);
}

TEST_CASE("dual is an involution") {
  std::mt19937_64 rng(99);
  int checked = 0;
  while (checked < 200) {
    SimplicialComplex c = oracles::random_complex(rng);
    if (c.support() == full_face(c.ambient())) continue;  // dual degenerate
    // restrict to complexes where no facet misses only covered vertices:
    // dual(dual) always returns the original facet antichain
    CHECK(dual(dual(c)) == SimplicialComplex::derived(c.ambient(), c.facets()));
    ++checked;
  }
}

TEST_CASE("minimal nonfaces on examples and against the oracle") {
  CHECK(minimal_nonfaces(kTriangle) == std::vector<Face>{{1, 2, 3}});
  CHECK(minimal_nonfaces(kThreeFacets) == std::vector<Face>{{2, 3, 4}});
  CHECK(masks(minimal_nonfaces(kK23)) ==
        std::vector<std::uint64_t>{Face{1, 2}.bits, Face{3, 4}.bits,
                                   Face{3, 5}.bits, Face{4, 5}.bits});
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    SimplicialComplex c = oracles::random_complex(rng);
    CHECK(masks(minimal_nonfaces(c)) == oracles::minimal_nonfaces(c));
  }
}

TEST_CASE("minimal vertex covers on examples and against the oracle") {
  CHECK(masks(minimal_vertex_covers(kK23)) ==
        std::vector<std::uint64_t>{Face{1, 2}.bits, Face{3, 4, 5}.bits});
  CHECK(minimal_vertex_covers(kTriangle) ==
        std::vector<Face>{{1, 2}, {1, 3}, {2, 3}});
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    SimplicialComplex c = oracles::random_complex(rng);
    CHECK(masks(minimal_vertex_covers(c)) == oracles::minimal_covers(c));
  }
}

TEST_CASE("covers of the complex are the minimal nonfaces of its dual") {
  std::mt19937_64 rng(23);
  int checked = 0;
  while (checked < 200) {
    SimplicialComplex c = oracles::random_complex(rng);
    if (c.support() == full_face(c.ambient())) continue;
    CHECK(masks(minimal_vertex_covers(c)) == masks(minimal_nonfaces(dual(c))));
    ++checked;
  }
}

TEST_CASE("cone points") {
  CHECK(cone_points(kThreeFacets) == Face{1});
  CHECK(cone_points(kTriangle) == Face{});
  SimplicialComplex full3 = SimplicialComplex::generate(3, {{1, 2, 3}});
  CHECK(cone_points(full3) == Face{1, 2, 3});
}

TEST_CASE("compress_to_support relabels order-preservingly") {
  SimplicialComplex c = SimplicialComplex::derived(6, {{2, 5}, {5, 6}});
  CompressedComplex cc = compress_to_support(c);
  CHECK(cc.labels == std::vector<int>{2, 5, 6});
  CHECK(cc.complex.ambient() == 3);
  CHECK(cc.complex.facets() == std::vector<Face>{{1, 2}, {2, 3}});
}

TEST_CASE("f_vector bound: support above 28 vertices is rejected") {
  std::vector<Face> singles;
  for (int v = 1; v <= 29; ++v) singles.push_back(Face::single(v));
  SimplicialComplex big = SimplicialComplex::generate(29, singles);
  CHECK_THROWS_AS(f_vector(big), BoundExceeded);
}
