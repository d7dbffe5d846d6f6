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

#ifndef MATROIDH_COMPLEX_HPP
#define MATROIDH_COMPLEX_HPP

#include <cstdint>
#include <vector>

#include "matroidh/face.hpp"

namespace matroidh {

/// Simplicial complex on {1,...,n}, stored by its facet antichain.
/// Facets are kept in the canonical order (cardinality, then mask), so
/// structural equality is plain list equality.
///
/// Complexes built by `generate` cover every ambient vertex; derived
/// complexes (links, deletions, restrictions) may omit vertices and carry
/// their support implicitly.
class SimplicialComplex {
 public:
  /// The complex generated by the given sets: duplicates and non-maximal
  /// generators dropped. Requires every vertex 1..n to appear in some
  /// generator.
  static SimplicialComplex generate(int n, const std::vector<Face>& generators);

  /// Same canonicalization, but without the vertex-coverage requirement.
  /// Used for complexes derived from existing ones.
  static SimplicialComplex derived(int n, std::vector<Face> faces);

  int ambient() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }

  /// Union of all facets.
  Face support() const;

  bool is_face(Face f) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  SimplicialComplex(int n, std::vector<Face> facets)
      : n_(n), facets_(std::move(facets)) {}

  int n_ = 0;
  std::vector<Face> facets_;
};

/// Face counts by cardinality: counts[k] = f_{k-1} = number of faces with k
/// vertices. counts[0] = 1 for the empty face.
struct FVector {
  std::vector<std::int64_t> counts;
  bool operator==(const FVector&) const = default;
};

int dimension(const SimplicialComplex& c);
bool is_pure(const SimplicialComplex& c);

/// Counts all faces. Works on the support of the complex; throws
/// BoundExceeded when the support exceeds 28 vertices (the computation
/// sweeps a 2^|support| bitmap).
FVector f_vector(const SimplicialComplex& c);

SimplicialComplex link(const SimplicialComplex& c, Face f);
SimplicialComplex delete_vertex(const SimplicialComplex& c, int v);
SimplicialComplex restriction(const SimplicialComplex& c, Face w);
SimplicialComplex skeleton(const SimplicialComplex& c, int k);

/// Complex generated by the set complements of the facets in {1,...,n}.
SimplicialComplex dual(const SimplicialComplex& c);

/// Inclusion-minimal subsets of {1,...,n} that are not faces, in canonical
/// order. These generate the Stanley-Reisner ideal.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& c);

/// Inclusion-minimal transversals of the facet family, in canonical order.
/// These generate the cover ideal.
std::vector<Face> minimal_vertex_covers(const SimplicialComplex& c);

/// Vertices lying in every facet.
Face cone_points(const SimplicialComplex& c);

/// Relabels the support to 1..m (order preserving) and returns the compact
/// complex together with the original labels: labels[i] is the old name of
/// new vertex i+1.
struct CompressedComplex {
  SimplicialComplex complex;
  std::vector<int> labels;
};
CompressedComplex compress_to_support(const SimplicialComplex& c);

}  // namespace matroidh

#endif  // MATROIDH_COMPLEX_HPP
