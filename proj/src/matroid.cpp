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

#include "matroidh/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <sstream>

#include "matroidh/errors.hpp"

namespace matroidh {

int ClassForm::rank() const {
  return sets.empty() ? 0 : std::popcount(sets.front());
}

int ClassForm::vertex_count() const {
  int n = 0;
  for (int s : sizes) n += s;
  return n;
}

namespace {

std::uint32_t remap_set(std::uint32_t set, const std::vector<int>& newpos) {
  std::uint32_t out = 0;
  for (std::uint32_t b = set; b != 0; b &= b - 1)
    out |= std::uint32_t{1} << newpos[std::countr_zero(b)];
  return out;
}

}  // namespace

ClassForm canonical_class_form(const ClassForm& form) {
  const int p = static_cast<int>(form.sizes.size());
  // Order classes by size ascending; permute within equal-size groups.
  std::vector<int> order(p);
  for (int i = 0; i < p; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return form.sizes[x] < form.sizes[y]; });

  std::vector<int> sorted_sizes(p);
  for (int j = 0; j < p; ++j) sorted_sizes[j] = form.sizes[order[j]];

  std::vector<std::pair<int, int>> groups;  // [begin, end) with equal size
  for (int j = 0; j < p;) {
    int k = j;
    while (k < p && sorted_sizes[k] == sorted_sizes[j]) ++k;
    groups.emplace_back(j, k);
    j = k;
  }

  std::vector<std::uint32_t> best;
  std::vector<int> perm = order;
  // Iterate products of within-group permutations of `perm`.
  for (auto& [b, e] : groups) std::sort(perm.begin() + b, perm.begin() + e);
  while (true) {
    std::vector<int> newpos(p);  // old class index -> new bit position
    for (int j = 0; j < p; ++j) newpos[perm[j]] = j;
    std::vector<std::uint32_t> sets;
    sets.reserve(form.sets.size());
    for (std::uint32_t s : form.sets) sets.push_back(remap_set(s, newpos));
    std::sort(sets.begin(), sets.end());
    if (best.empty() || sets < best) best = std::move(sets);
    // Advance the nested permutations, rightmost group fastest.
    int gi = static_cast<int>(groups.size()) - 1;
    while (gi >= 0 &&
           !std::next_permutation(perm.begin() + groups[gi].first,
                                  perm.begin() + groups[gi].second))
      --gi;
    if (gi < 0) break;
  }
  return ClassForm{sorted_sizes, std::move(best)};
}

std::string class_form_key(const ClassForm& form) {
  std::ostringstream os;
  for (int s : form.sizes) os << s << ',';
  os << ';';
  for (std::uint32_t s : form.sets) os << s << ',';
  return os.str();
}

namespace {

// All transversals of the classes selected by `mask`.
void expand_transversals(const std::vector<Face>& classes, std::uint32_t mask,
                         Face acc, std::vector<Face>& out) {
  if (mask == 0) {
    out.push_back(acc);
    return;
  }
  const int i = std::countr_zero(mask);
  for (int v : classes[static_cast<std::size_t>(i)].vertices())
    expand_transversals(classes, mask & (mask - 1), acc.unite(Face::single(v)),
                        out);
}

bool class_level_exchange(const std::vector<std::uint32_t>& sets) {
  auto is_basis = [&](std::uint32_t f) {
    for (std::uint32_t s : sets)
      if (f == s) return true;
    return false;
  };
  // Basis exchange: j must come from T outside S\{i}, so the exchanged set
  // keeps full cardinality (j inside S\{i} would only reproduce a sub-face).
  for (std::uint32_t s : sets)
    for (std::uint32_t t : sets)
      for (std::uint32_t b = s; b != 0; b &= b - 1) {
        const std::uint32_t rest = s & ~(b & -b);
        bool ok = false;
        for (std::uint32_t c = t & ~rest; c != 0 && !ok; c &= c - 1)
          ok = is_basis(rest | (c & -c));
        if (!ok) return false;
      }
  return true;
}

}  // namespace

Matroid Matroid::from_complex(const SimplicialComplex& c) {
  if (dimension(c) < 0) throw NotAMatroid("complex has no vertices");
  if (!is_pure(c)) throw NotAMatroid("complex is not pure");
  const Face supp = c.support();

  // Co-occurrence masks: adj[v] = vertices sharing a facet with v.
  std::vector<std::uint64_t> adj(kMaxVertices + 1, 0);
  for (Face f : c.facets())
    for (int v : f.vertices()) adj[v] |= f.bits;
  std::vector<int> cls(kMaxVertices + 1, 0);  // vertex -> 1-based class id
  std::vector<Face> classes;
  for (int v : supp.vertices()) {
    if (cls[v] != 0) continue;
    const Face klass(supp.bits & ~(adj[v] & ~(std::uint64_t{1} << (v - 1))));
    for (int w : klass.vertices()) {
      const Face other(supp.bits & ~(adj[w] & ~(std::uint64_t{1} << (w - 1))));
      if (other != klass)
        throw NotAMatroid("1-skeleton is not complete multipartite");
      cls[w] = static_cast<int>(classes.size()) + 1;
    }
    classes.push_back(klass);
  }
  // Convention: size ascending, then least vertex.
  std::sort(classes.begin(), classes.end(), [](Face a, Face b) {
    if (a.cardinality() != b.cardinality())
      return a.cardinality() < b.cardinality();
    return a.min_vertex() < b.min_vertex();
  });
  const int p = static_cast<int>(classes.size());
  if (p > 32) throw NotAMatroid("more than 32 parallel classes");
  std::vector<int> sizes(p);
  for (int i = 0; i < p; ++i) {
    sizes[i] = classes[i].cardinality();
    for (int w : classes[i].vertices()) cls[w] = i + 1;
  }

  // Faces of a matroid are determined by the classes they meet (so each
  // class set must carry its full complement of transversals).
  std::map<std::uint32_t, std::int64_t> by_set;
  for (Face f : c.facets()) {
    std::uint32_t mask = 0;
    for (int v : f.vertices()) mask |= std::uint32_t{1} << (cls[v] - 1);
    if (std::popcount(mask) != f.cardinality())
      throw NotAMatroid("facet meets a class twice");
    ++by_set[mask];
  }
  std::vector<std::uint32_t> sets;
  for (auto& [mask, count] : by_set) {
    std::int64_t expected = 1;
    for (std::uint32_t b = mask; b != 0; b &= b - 1)
      expected *= sizes[std::countr_zero(b)];
    if (count != expected) throw NotAMatroid("faces are not class-determined");
    sets.push_back(mask);
  }
  if (!class_level_exchange(sets))
    throw NotAMatroid("exchange property fails");
  return Matroid(c, std::move(classes), ClassForm{std::move(sizes), std::move(sets)});
}

Matroid Matroid::lift(const ClassForm& form) {
  const int p = static_cast<int>(form.sizes.size());
  if (p < 1 || p > 32) throw InvalidSpec("class count outside 1..32");
  if (form.sets.empty()) throw InvalidSpec("empty facet family");
  int n = 0;
  std::vector<Face> classes;
  for (int i = 0; i < p; ++i) {
    if (form.sizes[i] < 1) throw InvalidSpec("class sizes must be positive");
    Face klass;
    for (int j = 0; j < form.sizes[i]; ++j) klass.insert(n + j + 1);
    classes.push_back(klass);
    n += form.sizes[i];
    if (n > kMaxVertices) throw InvalidSpec("lifted matroid exceeds 64 vertices");
  }
  std::vector<Face> facets;
  for (std::uint32_t s : form.sets) expand_transversals(classes, s, Face(), facets);
  return from_complex(SimplicialComplex::generate(n, facets));
}

bool Matroid::is_cone_class(int i) const {
  const std::uint32_t bit = std::uint32_t{1} << (i - 1);
  for (std::uint32_t s : form_.sets)
    if ((s & bit) == 0) return false;
  return true;
}

bool is_matroid(const SimplicialComplex& c) {
  if (dimension(c) < 0) return false;
  if (!is_pure(c)) return false;
  // Basis exchange: j is drawn from G outside F\{i}, so the exchanged set
  // keeps the facet cardinality (j inside F\{i} would only reproduce a
  // sub-face and lets non-matroids slip through).
  for (Face f : c.facets())
    for (Face g : c.facets())
      for (int i : f.vertices()) {
        Face rest = f;
        rest.erase(i);
        bool ok = false;
        for (int j : g.minus(rest).vertices())
          if (c.is_face(rest.unite(Face::single(j)))) {
            ok = true;
            break;
          }
        if (!ok) return false;
      }
  return true;
}

namespace {

bool restriction_is_pure(const SimplicialComplex& c, Face w) {
  int card = -1;
  bool any = false;
  // Facets of the restriction are the maximal F∩W.
  std::vector<Face> cut;
  cut.reserve(c.facets().size());
  for (Face f : c.facets()) cut.push_back(f.intersect(w));
  for (std::size_t i = 0; i < cut.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cut.size() && maximal; ++j)
      maximal = j == i || !(cut[i].subset_of(cut[j]) && cut[i] != cut[j]);
    if (!maximal) continue;
    if (!any) {
      card = cut[i].cardinality();
      any = true;
    } else if (cut[i].cardinality() != card) {
      return false;
    }
  }
  return true;
}

}  // namespace

MatroidOracles matroid_oracles(const SimplicialComplex& c, int max_exhaustive_n,
                               int samples, std::uint64_t seed) {
  MatroidOracles out;
  out.exchange = is_matroid(c);

  const std::vector<int> supp = c.support().vertices();
  const int m = static_cast<int>(supp.size());
  if (m > max_exhaustive_n && samples == 0)
    throw RestrictionCheckBudgetExceeded(
        "support " + std::to_string(m) + " exceeds the exhaustive bound " +
        std::to_string(max_exhaustive_n) + " and sampling is disabled");

  // Augmentation over all faces, grouped by cardinality.
  {
    std::vector<Face> faces;
    if (m <= max_exhaustive_n) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Face f;
        for (int i = 0; i < m; ++i)
          if ((mask >> i) & 1) f.insert(supp[static_cast<std::size_t>(i)]);
        if (c.is_face(f)) faces.push_back(f);
      }
    } else {
      // Sampled fallback: facets and their random subsets.
      std::mt19937_64 rng(seed);
      for (Face f : c.facets()) {
        faces.push_back(f);
        for (int k = 0; k < samples; ++k)
          faces.push_back(Face(f.bits & rng()));
      }
    }
    out.augmentation = true;
    for (Face f : faces) {
      for (Face g : faces) {
        if (f.cardinality() >= g.cardinality()) continue;
        bool ok = false;
        for (int i : g.minus(f).vertices())
          if (c.is_face(f.unite(Face::single(i)))) {
            ok = true;
            break;
          }
        if (!ok) {
          out.augmentation = false;
          break;
        }
      }
      if (!out.augmentation) break;
    }
  }

  // Restriction purity over vertex subsets.
  out.restrictions_pure = true;
  if (m <= max_exhaustive_n) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      Face w;
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1) w.insert(supp[static_cast<std::size_t>(i)]);
      if (!restriction_is_pure(c, w)) {
        out.restrictions_pure = false;
        break;
      }
    }
  } else {
    std::mt19937_64 rng(seed + 1);
    for (int k = 0; k < samples; ++k) {
      Face w;
      for (int v : supp)
        if (rng() & 1) w.insert(v);
      if (w.empty()) continue;
      if (!restriction_is_pure(c, w)) {
        out.restrictions_pure = false;
        break;
      }
    }
  }
  return out;
}

Matroid parallel_classes(const SimplicialComplex& c) {
  return Matroid::from_complex(c);
}

std::pair<Matroid, std::vector<int>> simplify(const Matroid& m) {
  const int p = m.class_count();
  std::vector<Face> faces;
  faces.reserve(m.form().sets.size());
  for (std::uint32_t s : m.form().sets) faces.emplace_back(s);
  auto simplified =
      Matroid::from_complex(SimplicialComplex::derived(p, std::move(faces)));
  return {std::move(simplified), m.sizes()};
}

namespace {

Matroid build_delta_t_impl(int d, int p, const std::vector<int>& a, int t) {
  if (d < 1 || p < d || static_cast<int>(a.size()) != p)
    throw InvalidSpec("need p = len(a) >= d >= 1");
  if (t < 0 || (t > 0 && t > d - 2))
    throw InvalidSpec("need 0 <= t <= d-2");
  for (int ai : a)
    if (ai < 1) throw InvalidSpec("class sizes must be positive");
  // Facets take one vertex from each of the first t classes plus one from
  // each of d-t classes chosen among the remaining p-t.
  std::uint32_t base = (t == 0) ? 0 : ((std::uint32_t{1} << t) - 1);
  std::vector<std::uint32_t> sets;
  const int rest = p - t;
  const int pick = d - t;
  std::vector<int> idx(pick);
  for (int i = 0; i < pick; ++i) idx[i] = i;
  while (true) {
    std::uint32_t s = base;
    for (int i : idx) s |= std::uint32_t{1} << (t + i);
    sets.push_back(s);
    int i = pick - 1;
    while (i >= 0 && idx[i] == rest - pick + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  return Matroid::lift(ClassForm{a, std::move(sets)});
}

}  // namespace

Matroid build_delta_t(const ClassSpec& spec) {
  if (spec.d < 2) throw InvalidSpec("delta_t needs d >= 2");
  return build_delta_t_impl(spec.d, spec.p, spec.a, spec.t);
}

Matroid build_complete(int d, const std::vector<int>& a) {
  return build_delta_t_impl(d, static_cast<int>(a.size()), a, 0);
}

Matroid build_uniform(int d, int p) {
  return build_complete(d, std::vector<int>(static_cast<std::size_t>(p), 1));
}

Matroid build_delta_max(int d, int p, const std::vector<int>& a) {
  if (d < 2 || static_cast<int>(a.size()) != p)
    throw InvalidSpec("need p = len(a) and d >= 2");
  return build_delta_t_impl(d, p, a, 0);
}

Matroid build_delta_min(int d, int p, std::vector<int> a) {
  if (d < 2 || static_cast<int>(a.size()) != p)
    throw InvalidSpec("need p = len(a) and d >= 2");
  std::stable_sort(a.begin(), a.end());
  return build_delta_t_impl(d, p, a, d - 2);
}

Matroid switch_classes(const Matroid& m, int r, int s) {
  const int p = m.class_count();
  if (r < 1 || s < 1 || r >= s || s > p)
    throw InvalidSpec("need 1 <= r < s <= p");
  const std::uint32_t rb = std::uint32_t{1} << (r - 1);
  const std::uint32_t sb = std::uint32_t{1} << (s - 1);
  std::vector<std::uint32_t> swapped;
  swapped.reserve(m.form().sets.size());
  for (std::uint32_t set : m.form().sets) {
    std::uint32_t out = set & ~(rb | sb);
    if (set & rb) out |= sb;
    if (set & sb) out |= rb;
    swapped.push_back(out);
  }
  std::sort(swapped.begin(), swapped.end());
  std::vector<Face> facets;
  for (std::uint32_t set : swapped)
    expand_transversals(m.classes(), set, Face(), facets);
  return Matroid::from_complex(
      SimplicialComplex::derived(m.complex().ambient(), std::move(facets)));
}

}  // namespace matroidh
