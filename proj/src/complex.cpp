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

#include "matroidh/complex.hpp"

#include <algorithm>
#include <set>

#include "matroidh/errors.hpp"

namespace matroidh {

namespace {

// Dedupe, drop non-maximal sets, sort canonically.
std::vector<Face> canonicalize(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), canonical_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> maximal;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool dominated = false;
    // Only larger-cardinality faces can dominate; they come later.
    for (std::size_t j = i + 1; j < faces.size() && !dominated; ++j)
      dominated = faces[i].subset_of(faces[j]) && faces[i] != faces[j];
    if (!dominated) maximal.push_back(faces[i]);
  }
  return maximal;
}

}  // namespace

SimplicialComplex SimplicialComplex::generate(int n,
                                              const std::vector<Face>& generators) {
  if (n < 1 || n > kMaxVertices)
    throw VertexOutOfRange("ambient size " + std::to_string(n) + " outside 1.." +
                           std::to_string(kMaxVertices));
  if (generators.empty()) throw EmptyGeneratorSet();
  const Face full = full_face(n);
  Face covered;
  for (Face g : generators) {
    if (!g.subset_of(full))
      throw VertexOutOfRange("generator contains a vertex above n=" +
                             std::to_string(n));
    covered = covered.unite(g);
  }
  if (covered != full) {
    for (int v = 1; v <= n; ++v)
      if (!covered.contains(v)) throw UncoveredVertex(v);
  }
  return SimplicialComplex(n, canonicalize(generators));
}

SimplicialComplex SimplicialComplex::derived(int n, std::vector<Face> faces) {
  if (faces.empty()) faces.push_back(Face(0));
  return SimplicialComplex(n, canonicalize(std::move(faces)));
}

Face SimplicialComplex::support() const {
  Face s;
  for (Face f : facets_) s = s.unite(f);
  return s;
}

bool SimplicialComplex::is_face(Face f) const {
  for (Face g : facets_)
    if (f.subset_of(g)) return true;
  return false;
}

int dimension(const SimplicialComplex& c) {
  int d = -1;
  for (Face f : c.facets()) d = std::max(d, f.cardinality() - 1);
  return d;
}

bool is_pure(const SimplicialComplex& c) {
  const int card = c.facets().front().cardinality();
  for (Face f : c.facets())
    if (f.cardinality() != card) return false;
  return true;
}

FVector f_vector(const SimplicialComplex& c) {
  const auto [compact, labels] = compress_to_support(c);
  const int m = static_cast<int>(labels.size());
  if (m > 28)
    throw BoundExceeded("f_vector support " + std::to_string(m) +
                        " exceeds the 28-vertex sweep bound");
  const std::uint64_t size = std::uint64_t{1} << m;
  std::vector<std::uint64_t> present((size + 63) / 64, 0);
  auto mark = [&](std::uint64_t mask) {
    present[mask >> 6] |= std::uint64_t{1} << (mask & 63);
  };
  auto marked = [&](std::uint64_t mask) {
    return (present[mask >> 6] >> (mask & 63)) & 1;
  };
  for (Face f : compact.facets()) mark(f.bits);
  FVector fv;
  fv.counts.assign(dimension(compact) + 2, 0);
  // Downward closure: every marked mask marks its one-smaller submasks,
  // which have strictly smaller value.
  for (std::uint64_t mask = size; mask-- > 0;) {
    if (!marked(mask)) continue;
    ++fv.counts[std::popcount(mask)];
    for (std::uint64_t b = mask; b != 0; b &= b - 1)
      mark(mask & ~(b & -b));
  }
  return fv;
}

SimplicialComplex link(const SimplicialComplex& c, Face f) {
  if (!c.is_face(f)) throw FaceNotInComplex();
  std::vector<Face> faces;
  for (Face g : c.facets())
    if (f.subset_of(g)) faces.push_back(g.minus(f));
  return SimplicialComplex::derived(c.ambient(), std::move(faces));
}

SimplicialComplex delete_vertex(const SimplicialComplex& c, int v) {
  if (v < 1 || v > c.ambient())
    throw VertexOutOfRange("vertex " + std::to_string(v) + " outside 1.." +
                           std::to_string(c.ambient()));
  std::vector<Face> faces;
  for (Face g : c.facets()) {
    Face h = g;
    h.erase(v);
    faces.push_back(h);
  }
  return SimplicialComplex::derived(c.ambient(), std::move(faces));
}

SimplicialComplex restriction(const SimplicialComplex& c, Face w) {
  if (w.empty()) throw VertexOutOfRange("restriction to the empty vertex set");
  std::vector<Face> faces;
  for (Face g : c.facets()) faces.push_back(g.intersect(w));
  return SimplicialComplex::derived(c.ambient(), std::move(faces));
}

namespace {

void subsets_of_size(const std::vector<int>& verts, int k, std::size_t from,
                     Face acc, std::set<std::uint64_t>& out) {
  if (k == 0) {
    out.insert(acc.bits);
    return;
  }
  for (std::size_t i = from; i + k <= verts.size() + 0u; ++i) {
    Face next = acc;
    next.insert(verts[i]);
    subsets_of_size(verts, k - 1, i + 1, next, out);
  }
}

}  // namespace

SimplicialComplex skeleton(const SimplicialComplex& c, int k) {
  if (k < 0 || k > dimension(c))
    throw VertexOutOfRange("skeleton index " + std::to_string(k) +
                           " outside 0..dim");
  std::set<std::uint64_t> masks;
  for (Face g : c.facets()) {
    if (g.cardinality() == k + 1) {
      masks.insert(g.bits);
    } else if (g.cardinality() > k + 1) {
      subsets_of_size(g.vertices(), k + 1, 0, Face(), masks);
    }
  }
  std::vector<Face> faces;
  faces.reserve(masks.size());
  for (std::uint64_t m : masks) faces.emplace_back(m);
  return SimplicialComplex::derived(c.ambient(), std::move(faces));
}

SimplicialComplex dual(const SimplicialComplex& c) {
  const Face full = full_face(c.ambient());
  std::vector<Face> faces;
  for (Face g : c.facets()) {
    Face comp = full.minus(g);
    if (comp.empty()) throw DegenerateDual();
    faces.push_back(comp);
  }
  return SimplicialComplex::derived(c.ambient(), std::move(faces));
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& c) {
  // A minimal nonface has every one-smaller subset a face, so its
  // cardinality is at most dim+2.
  const int n = c.ambient();
  const int maxk = std::min(n, dimension(c) + 2);
  std::vector<int> all(n);
  for (int v = 1; v <= n; ++v) all[v - 1] = v;
  std::vector<Face> result;
  for (int k = 1; k <= maxk; ++k) {
    std::set<std::uint64_t> cands;
    subsets_of_size(all, k, 0, Face(), cands);
    for (std::uint64_t mask : cands) {
      Face f(mask);
      if (c.is_face(f)) continue;
      bool minimal = true;
      for (std::uint64_t b = mask; b != 0 && minimal; b &= b - 1)
        minimal = c.is_face(Face(mask & ~(b & -b)));
      if (minimal) result.push_back(f);
    }
  }
  std::sort(result.begin(), result.end(), canonical_less);
  return result;
}

namespace {

void enumerate_covers(const std::vector<Face>& facets, Face cover,
                      std::set<std::uint64_t>& out) {
  const Face* uncovered = nullptr;
  for (const Face& f : facets) {
    if (f.intersect(cover).empty()) {
      uncovered = &f;
      break;
    }
  }
  if (uncovered == nullptr) {
    // Minimality: every chosen vertex must be the unique hitter of some facet.
    for (int v : cover.vertices()) {
      bool witnessed = false;
      for (const Face& f : facets)
        if (f.intersect(cover) == Face::single(v)) {
          witnessed = true;
          break;
        }
      if (!witnessed) return;
    }
    out.insert(cover.bits);
    return;
  }
  for (int v : uncovered->vertices()) {
    Face next = cover;
    next.insert(v);
    enumerate_covers(facets, next, out);
  }
}

}  // namespace

std::vector<Face> minimal_vertex_covers(const SimplicialComplex& c) {
  std::set<std::uint64_t> masks;
  enumerate_covers(c.facets(), Face(), masks);
  std::vector<Face> result;
  result.reserve(masks.size());
  for (std::uint64_t m : masks) result.emplace_back(m);
  std::sort(result.begin(), result.end(), canonical_less);
  return result;
}

Face cone_points(const SimplicialComplex& c) {
  Face acc = c.facets().front();
  for (Face f : c.facets()) acc = acc.intersect(f);
  return acc;
}

CompressedComplex compress_to_support(const SimplicialComplex& c) {
  const std::vector<int> labels = c.support().vertices();
  std::vector<int> newname(c.ambient() + 1, 0);
  for (std::size_t i = 0; i < labels.size(); ++i)
    newname[labels[i]] = static_cast<int>(i) + 1;
  std::vector<Face> faces;
  faces.reserve(c.facets().size());
  for (Face g : c.facets()) {
    Face h;
    for (int v : g.vertices()) h.insert(newname[v]);
    faces.push_back(h);
  }
  const int m = std::max<int>(1, static_cast<int>(labels.size()));
  return {SimplicialComplex::derived(m, std::move(faces)), labels};
}

}  // namespace matroidh
