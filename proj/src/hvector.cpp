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

#include "matroidh/hvector.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "matroidh/errors.hpp"
#include "matroidh/matroid.hpp"

namespace matroidh {

HVector::HVector(std::vector<std::int64_t> e) : entries(std::move(e)) {
  if (entries.empty()) throw WrongShape("empty h-vector");
  while (entries.size() > 1 && entries.back() == 0) entries.pop_back();
}

std::int64_t HVector::sum() const {
  std::int64_t s = 0;
  for (std::int64_t x : entries) s += x;
  return s;
}

std::string HVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ", ";
    os << entries[i];
  }
  os << ')';
  return os.str();
}

bool componentwise_leq(const HVector& a, const HVector& b) {
  const int top = std::max(a.last_index(), b.last_index());
  for (int k = 0; k <= top; ++k)
    if (a.at(k) > b.at(k)) return false;
  return true;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::int64_t>::max())
      throw Overflow("binomial(" + std::to_string(n) + ", " +
                     std::to_string(k) + ") exceeds 64 bits");
  }
  return static_cast<std::int64_t>(r);
}

HVector f_to_h(const FVector& f, int d) {
  if (static_cast<int>(f.counts.size()) > d + 1)
    throw WrongShape("f-vector has faces of dimension >= d");
  std::vector<std::int64_t> h(static_cast<std::size_t>(d) + 1, 0);
  for (int j = 0; j <= d; ++j) {
    std::int64_t hj = 0;
    for (int i = 0; i <= j && i < static_cast<int>(f.counts.size()); ++i) {
      const std::int64_t term =
          binomial(d - i, j - i) * f.counts[static_cast<std::size_t>(i)];
      hj += ((j - i) % 2 == 0) ? term : -term;
    }
    if (hj < 0)
      throw NegativeHEntry("h_" + std::to_string(j) + " = " +
                           std::to_string(hj));
    h[static_cast<std::size_t>(j)] = hj;
  }
  return HVector(std::move(h));
}

HVector h_cover(const SimplicialComplex& c) {
  // Cone points contribute a linear non-zerodivisor to the quotient; peel
  // them so the dual stays nondegenerate.
  SimplicialComplex base = c;
  const Face cones = cone_points(c);
  if (!cones.empty()) {
    std::vector<Face> faces;
    faces.reserve(base.facets().size());
    for (Face f : base.facets()) faces.push_back(f.minus(cones));
    base = SimplicialComplex::derived(base.ambient(), std::move(faces));
  }
  if (base.support().empty()) return HVector();  // simplex: h = (1)
  const SimplicialComplex compact = compress_to_support(base).complex;
  const SimplicialComplex dc = dual(compact);
  return f_to_h(f_vector(dc), dimension(dc) + 1);
}

HVector h_cover(const Matroid& m) { return h_cover(m.complex()); }

namespace {

// Class-level deletion/link recursion on the quotient h-vector:
// h(k) = h_deletion(k-1) + h_link(k) at a non-cone vertex.
HVector h_rec(const ClassForm& form) {
  const ClassForm canon = canonical_class_form(form);
  const std::string key = class_form_key(canon);
  static std::map<std::string, HVector> memo;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  const int p = static_cast<int>(canon.sizes.size());
  HVector result;
  if (canon.rank() == 0) {
    result = HVector();  // the void-facet complex: h = (1)
  } else {
    std::uint32_t cone_mask = ~std::uint32_t{0};
    for (std::uint32_t s : canon.sets) cone_mask &= s;
    int pick = -1;  // class holding a non-cone vertex
    for (int i = 0; i < p && pick < 0; ++i)
      if (canon.sizes[static_cast<std::size_t>(i)] >= 2 ||
          (cone_mask & (std::uint32_t{1} << i)) == 0)
        pick = i;
    if (pick < 0) {
      result = HVector();  // every vertex is a cone point: a simplex
    } else {
      const std::uint32_t bit = std::uint32_t{1} << pick;

      // Deletion: one fewer vertex in the class, or (for a singleton
      // non-cone class) the facets avoiding it, which stay maximal.
      ClassForm del;
      if (canon.sizes[static_cast<std::size_t>(pick)] >= 2) {
        del = canon;
        --del.sizes[static_cast<std::size_t>(pick)];
      } else {
        std::vector<std::uint32_t> keep;
        for (std::uint32_t s : canon.sets)
          if ((s & bit) == 0) keep.push_back(s);
        del.sets = std::move(keep);
        for (int i = 0; i < p; ++i)
          if (i != pick) del.sizes.push_back(canon.sizes[static_cast<std::size_t>(i)]);
        // Reindex class bits above `pick` down by one.
        for (std::uint32_t& s : del.sets) {
          const std::uint32_t low = s & (bit - 1);
          s = low | ((s & ~(bit | (bit - 1))) >> 1);
        }
        // Drop classes missing from every remaining facet.
        std::uint32_t used = 0;
        for (std::uint32_t s : del.sets) used |= s;
        ClassForm pruned;
        std::vector<int> newbit(static_cast<std::size_t>(p), -1);
        int next = 0;
        for (int i = 0; i < static_cast<int>(del.sizes.size()); ++i)
          if (used & (std::uint32_t{1} << i)) {
            newbit[static_cast<std::size_t>(i)] = next++;
            pruned.sizes.push_back(del.sizes[static_cast<std::size_t>(i)]);
          }
        for (std::uint32_t s : del.sets) {
          std::uint32_t t = 0;
          for (std::uint32_t b = s; b != 0; b &= b - 1)
            t |= std::uint32_t{1} << newbit[static_cast<std::size_t>(
                     std::countr_zero(b))];
          pruned.sets.push_back(t);
        }
        del = std::move(pruned);
      }

      // Link: facets through the vertex lose the whole class.
      ClassForm lk;
      {
        std::vector<std::uint32_t> sets;
        for (std::uint32_t s : canon.sets)
          if (s & bit) sets.push_back(s & ~bit);
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        std::uint32_t used = 0;
        for (std::uint32_t s : sets) used |= s;
        std::vector<int> newbit(static_cast<std::size_t>(p), -1);
        int next = 0;
        for (int i = 0; i < p; ++i)
          if (used & (std::uint32_t{1} << i)) {
            newbit[static_cast<std::size_t>(i)] = next++;
            lk.sizes.push_back(canon.sizes[static_cast<std::size_t>(i)]);
          }
        for (std::uint32_t s : sets) {
          std::uint32_t t = 0;
          for (std::uint32_t b = s; b != 0; b &= b - 1)
            t |= std::uint32_t{1} << newbit[static_cast<std::size_t>(
                     std::countr_zero(b))];
          lk.sets.push_back(t);
        }
        std::sort(lk.sets.begin(), lk.sets.end());
        lk.sets.erase(std::unique(lk.sets.begin(), lk.sets.end()),
                      lk.sets.end());
        if (lk.sets.empty()) lk.sets.push_back(0);
        if (lk.sizes.empty()) lk.sizes.push_back(1);
      }

      const HVector hd = h_rec(del);
      const HVector hl = h_rec(lk);
      const int top = std::max(hd.last_index() + 1, hl.last_index());
      std::vector<std::int64_t> h(static_cast<std::size_t>(top) + 1, 0);
      for (int k = 0; k <= top; ++k)
        h[static_cast<std::size_t>(k)] = hd.at(k - 1) + hl.at(k);
      result = HVector(std::move(h));
    }
  }

  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, result);
  return result;
}

}  // namespace

HVector h_cover_recursive(const Matroid& m) { return h_rec(m.form()); }

HVector h_cover_recursive(const ClassForm& form) { return h_rec(form); }

HVector h_onedim_formula(const std::vector<int>& a) {
  if (a.size() < 2) throw InvalidSpec("need at least two classes");
  int n = 0;
  for (int ai : a) {
    if (ai < 1) throw InvalidSpec("class sizes must be positive");
    n += ai;
  }
  auto c = [&](int k) {
    std::int64_t count = 0;
    for (int ai : a)
      if (ai >= k) ++count;
    return count - 1;
  };
  std::vector<std::int64_t> h(static_cast<std::size_t>(n) - 1, 0);
  h[0] = 1;
  for (int k = 1; k <= n - 2; ++k) {
    std::int64_t hk = 0;
    for (int i = 1; i <= n - k - 1; ++i) hk += c(i);
    h[static_cast<std::size_t>(k)] = hk;
  }
  return HVector(std::move(h));
}

std::int64_t type_of(const Matroid& m) { return h_cover(m).entries.back(); }

HVector h_stanley_reisner(const SimplicialComplex& c) {
  return f_to_h(f_vector(c), dimension(c) + 1);
}

}  // namespace matroidh
