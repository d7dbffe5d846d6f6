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

#ifndef MATROIDH_MATROID_HPP
#define MATROIDH_MATROID_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "matroidh/complex.hpp"

namespace matroidh {

/// Parameters naming a member of the families built here: rank d, class
/// count p, class sizes a, and the family index t (0 <= t <= d-2).
struct ClassSpec {
  int d = 0;
  int p = 0;
  std::vector<int> a;
  int t = 0;
};

/// Class-level view of a matroid: parallel class sizes a_1..a_p plus the
/// family of d-subsets of class indices whose transversals are the facets
/// (class index i occupies bit i-1). Faces of a matroid are determined by
/// the multiset of classes they meet, so this is a complete description.
struct ClassForm {
  std::vector<int> sizes;
  std::vector<std::uint32_t> sets;  // sorted, deduplicated

  int rank() const;
  int vertex_count() const;
  bool operator==(const ClassForm&) const = default;
};

/// Canonical representative of the class form under permutations of class
/// indices that preserve the size vector. Exact search over the stabilizer;
/// intended for p <= 7.
ClassForm canonical_class_form(const ClassForm& form);

/// Encodes a class form as a comparable/hashable string key.
std::string class_form_key(const ClassForm& form);

/// A validated matroid complex together with its parallel-class partition.
/// Classes are stored by the (size ascending, least vertex) convention.
class Matroid {
 public:
  /// Validates the complex (complete multipartite 1-skeleton,
  /// class-determined faces, exchange property at class level) and derives
  /// the partition. Throws NotAMatroid.
  static Matroid from_complex(const SimplicialComplex& c);

  /// Lifts a class-level form onto consecutive vertex blocks
  /// A_1 = {1..a_1}, A_2 = {a_1+1..a_1+a_2}, ...
  static Matroid lift(const ClassForm& form);

  const SimplicialComplex& complex() const { return complex_; }
  const std::vector<Face>& classes() const { return classes_; }
  const std::vector<int>& sizes() const { return form_.sizes; }
  /// Class form indexed consistently with classes().
  const ClassForm& form() const { return form_; }
  int rank() const { return form_.rank(); }
  int class_count() const { return static_cast<int>(classes_.size()); }

  /// Class i (1-based) lies in every facet.
  bool is_cone_class(int i) const;

  bool operator==(const Matroid&) const = default;

 private:
  Matroid(SimplicialComplex c, std::vector<Face> classes, ClassForm form)
      : complex_(std::move(c)), classes_(std::move(classes)), form_(std::move(form)) {}

  SimplicialComplex complex_;
  std::vector<Face> classes_;
  ClassForm form_;
};

/// Exchange-property matroid test, straight from the definition. Quadratic
/// in the facet count; fine at desk scale.
bool is_matroid(const SimplicialComplex& c);

struct MatroidOracles {
  bool exchange = false;
  bool augmentation = false;
  bool restrictions_pure = false;
};

/// Evaluates the three definitional criteria independently. The
/// restriction-purity check enumerates every vertex subset; above
/// max_exhaustive_n support vertices it samples `samples` random subsets
/// instead, or throws RestrictionCheckBudgetExceeded when samples == 0.
MatroidOracles matroid_oracles(const SimplicialComplex& c,
                               int max_exhaustive_n = 16,
                               int samples = 0,
                               std::uint64_t seed = 1);

/// Groups vertices into parallel classes and validates; alias for
/// Matroid::from_complex per the class-structure results.
Matroid parallel_classes(const SimplicialComplex& c);

/// Restriction to the least-labeled vertex of each class, relabeled to
/// 1..p. Returns the simplified matroid plus the original size vector.
std::pair<Matroid, std::vector<int>> simplify(const Matroid& m);

/// Family builders. Classes occupy consecutive label blocks in the order
/// the size vector is given.
Matroid build_delta_t(const ClassSpec& spec);
Matroid build_complete(int d, const std::vector<int>& a);
Matroid build_uniform(int d, int p);
Matroid build_delta_min(int d, int p, std::vector<int> a);
Matroid build_delta_max(int d, int p, const std::vector<int>& a);

/// Facet family with the roles of classes r and s exchanged (1-based,
/// in the stored class order); vertex labels are preserved. The result is
/// re-validated.
Matroid switch_classes(const Matroid& m, int r, int s);

}  // namespace matroidh

#endif  // MATROIDH_MATROID_HPP
