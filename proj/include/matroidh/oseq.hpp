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

#ifndef MATROIDH_OSEQ_HPP
#define MATROIDH_OSEQ_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matroidh/hvector.hpp"
#include "matroidh/matroid.hpp"

namespace matroidh {

/// Monomial in variables y_1..y_m as an exponent vector.
struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  bool divides(const Monomial& other) const;
  std::string to_string() const;  // e.g. "y1^4*y2^9", unit monomial -> "1"

  bool operator==(const Monomial&) const = default;
};

/// Downward-closed monomial set given by its maximal elements.
struct OrderIdeal {
  std::vector<Monomial> generators;        // maximal elements, canonical order
  std::vector<Monomial> closure;           // all divisors, by (degree, order)
  std::vector<std::int64_t> fvec;          // counts by degree, fvec[0] = 1
};

/// Divisor closure of the given monomials: deduplicates, drops non-maximal
/// generators, counts by degree.
OrderIdeal close_and_count(const std::vector<Monomial>& generators);

/// Witness order ideal for the complete p-partite matroid of rank d with
/// class sizes a: one generator per chain 1 = l_0 < l_1 < ... < l_{d-1} <= p,
/// with y_j exponent (sum of a_i over the j-th block) - 1. C(p-1, d-1)
/// generators, all of degree n-d.
OrderIdeal gamma_complete(int d, const std::vector<int>& a);

/// Witness order ideal for the Delta_t family: the first t variables carry
/// fixed exponents a_i - 1 and the rest follow the complete-matroid pattern
/// on the remaining classes. C(p-t-1, d-t-1) generators.
OrderIdeal gamma_t(const ClassSpec& spec);

struct SearchBudget {
  std::int64_t node_budget = 50'000'000;
  double time_budget_secs = 300.0;
  int threads = 1;
};

enum class Verdict { pure, not_pure, budget_exhausted };

std::string verdict_name(Verdict v);

struct SearchStats {
  std::int64_t nodes = 0;
  double seconds = 0.0;
};

struct OSeqDecision {
  Verdict verdict = Verdict::not_pure;
  std::optional<std::vector<Monomial>> witness;
  SearchStats stats;
};

/// Decides whether h is the f-vector of a pure order ideal by exhaustive
/// search over generator sets: h_1 variables, h_s generators of degree s
/// (both forced by downward closure and purity). Symmetry-reduced by
/// requiring the first generator's exponents non-increasing; pruned by
/// partial-closure excess and Macaulay-style bounds. Budget exhaustion is a
/// verdict, never a false not_pure.
OSeqDecision is_pure_o_sequence(const HVector& h, const SearchBudget& budget = {});

/// All f-vectors of pure order ideals with exactly g distinct degree-s
/// generators in m ambient variables, deduplicated and sorted. Generator
/// sets are visited once per variable-permutation orbit. Throws
/// BudgetExceeded.
std::vector<std::vector<std::int64_t>> enumerate_pure_oseq(
    int m, int s, int g, const SearchBudget& budget = {});

/// The height-two inequality h_{i+1} <= 2 h_i + h_{i-1} for i = 1..s (with
/// h_{s+1} = 0). A predicate only; exhaustive search stays the ground truth.
bool height2_criterion(const HVector& h);

}  // namespace matroidh

#endif  // MATROIDH_OSEQ_HPP
