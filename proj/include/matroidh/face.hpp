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

#ifndef MATROIDH_FACE_HPP
#define MATROIDH_FACE_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "matroidh/errors.hpp"

namespace matroidh {

/// Hard cap on ambient vertex counts; faces are 64-bit masks.
inline constexpr int kMaxVertices = 64;

/// A subset of the vertex set {1,...,n}, stored as a bitset.
/// Vertex v occupies bit v-1.
struct Face {
  std::uint64_t bits = 0;

  constexpr Face() = default;
  constexpr explicit Face(std::uint64_t b) : bits(b) {}

  Face(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  static Face single(int v) {
    Face f;
    f.insert(v);
    return f;
  }

  void insert(int v) {
    if (v < 1 || v > kMaxVertices)
      throw VertexOutOfRange("vertex " + std::to_string(v) + " outside 1.." +
                             std::to_string(kMaxVertices));
    bits |= std::uint64_t{1} << (v - 1);
  }

  void erase(int v) { bits &= ~(std::uint64_t{1} << (v - 1)); }

  bool contains(int v) const {
    return v >= 1 && v <= kMaxVertices && (bits >> (v - 1)) & 1;
  }

  int cardinality() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }

  bool subset_of(Face other) const { return (bits & ~other.bits) == 0; }

  Face unite(Face other) const { return Face(bits | other.bits); }
  Face intersect(Face other) const { return Face(bits & other.bits); }
  Face minus(Face other) const { return Face(bits & ~other.bits); }

  /// Vertices in ascending order, 1-based.
  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(cardinality());
    for (std::uint64_t b = bits; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  /// Smallest vertex, or 0 when empty.
  int min_vertex() const { return bits ? std::countr_zero(bits) + 1 : 0; }

  bool operator==(const Face&) const = default;
};

/// Canonical face order: cardinality first, then mask value.
inline bool canonical_less(Face a, Face b) {
  int ca = a.cardinality(), cb = b.cardinality();
  if (ca != cb) return ca < cb;
  return a.bits < b.bits;
}

/// Mask covering {1,...,n}.
inline Face full_face(int n) {
  if (n < 0 || n > kMaxVertices)
    throw VertexOutOfRange("ambient size " + std::to_string(n) + " outside 0.." +
                           std::to_string(kMaxVertices));
  return n == 0 ? Face(0) : Face(~std::uint64_t{0} >> (kMaxVertices - n));
}

}  // namespace matroidh

#endif  // MATROIDH_FACE_HPP
