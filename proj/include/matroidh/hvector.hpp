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

#ifndef MATROIDH_HVECTOR_HPP
#define MATROIDH_HVECTOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "matroidh/complex.hpp"

namespace matroidh {

class Matroid;
struct ClassForm;

/// h-vector: h_0..h_s with h_s != 0 (or the single entry 1). Trailing zeros
/// are stripped on construction.
struct HVector {
  std::vector<std::int64_t> entries;

  HVector() : entries{1} {}
  explicit HVector(std::vector<std::int64_t> e);

  std::int64_t at(std::int64_t k) const {
    return (k >= 0 && k < static_cast<std::int64_t>(entries.size()))
               ? entries[static_cast<std::size_t>(k)]
               : 0;
  }
  int last_index() const { return static_cast<int>(entries.size()) - 1; }
  std::int64_t sum() const;
  std::string to_string() const;

  bool operator==(const HVector&) const = default;
};

/// Componentwise a <= b on zero-padded alignment.
bool componentwise_leq(const HVector& a, const HVector& b);

/// Exact binomial coefficient; throws Overflow past 64 bits.
std::int64_t binomial(int n, int k);

/// Numerator coefficients of sum_i f_{i-1} t^i / (1-t)^i over (1-t)^d:
/// h_j = sum_i (-1)^{j-i} C(d-i, j-i) f_{i-1}. Throws NegativeHEntry when
/// the result has a negative coefficient (non-Cohen-Macaulay input).
HVector f_to_h(const FVector& f, int d);

/// h-vector of the cover-ideal quotient, computed from the dual complex's
/// f-vector. Cone points are peeled off first (they do not change the
/// result and keep the dual nondegenerate).
HVector h_cover(const Matroid& m);
HVector h_cover(const SimplicialComplex& c);

/// Same quantity through the deletion/link recursion
/// h(k) = h_del(k-1) + h_link(k), memoized on canonical class-level forms.
HVector h_cover_recursive(const Matroid& m);
HVector h_cover_recursive(const ClassForm& form);

/// Closed form for 1-dimensional matroids (complete multipartite graphs)
/// with class sizes a: h(k) = sum_{i=1}^{n-k-1} c_i, c_k = |{i: a_i>=k}|-1.
HVector h_onedim_formula(const std::vector<int>& a);

/// Last nonzero entry of h_cover (Cohen-Macaulay type via levelness).
std::int64_t type_of(const Matroid& m);

/// h-vector of the Stanley-Reisner ring of the complex itself.
HVector h_stanley_reisner(const SimplicialComplex& c);

}  // namespace matroidh

#endif  // MATROIDH_HVECTOR_HPP
