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

#include "matroidh/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "matroidh/complex.hpp"
#include "matroidh/errors.hpp"

namespace matroidh {

namespace {

std::vector<std::uint32_t> d_subsets(int d, int p) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << p); ++mask)
    if (std::popcount(mask) == d) out.push_back(mask);
  return out;
}

// Face bitmap over subsets of [p]: bit f set iff f is contained in a basis.
std::uint64_t face_bitmap(const std::vector<std::uint32_t>& sets) {
  std::uint64_t bm = 0;
  for (std::uint32_t b : sets) {
    std::uint32_t sub = b;
    while (true) {
      bm |= std::uint64_t{1} << sub;
      if (sub == 0) break;
      sub = (sub - 1) & b;
    }
  }
  return bm;
}

bool exchange_holds(const std::vector<std::uint32_t>& sets, std::uint64_t bm) {
  for (std::uint32_t s : sets)
    for (std::uint32_t t : sets)
      for (std::uint32_t b = s; b != 0; b &= b - 1) {
        const std::uint32_t rest = s & ~(b & -b);
        bool ok = false;
        // j outside S\{i} keeps the exchanged set at full cardinality, so
        // the face-bitmap hit means it is itself a basis.
        for (std::uint32_t c = t & ~rest; c != 0 && !ok; c &= c - 1)
          ok = (bm >> (rest | (c & -c))) & 1;
        if (!ok) return false;
      }
  return true;
}

std::string spec_a_string(const std::vector<int>& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  return os.str();
}

}  // namespace

std::vector<ClassForm> enumerate_simple(int d, int p, std::int64_t* labeled_count) {
  if (d < 1 || d > p) throw InvalidSpec("need 1 <= d <= p");
  if (p > 6)
    throw BoundExceeded("simple enumeration is bounded at p <= 6, got p = " +
                        std::to_string(p));

  static std::map<std::pair<int, int>, std::pair<std::vector<ClassForm>, std::int64_t>>
      cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({d, p});
    if (it != cache.end()) {
      if (labeled_count) *labeled_count = it->second.second;
      return it->second.first;
    }
  }

  const std::vector<std::uint32_t> bases = d_subsets(d, p);
  const std::uint32_t full = (std::uint32_t{1} << p) - 1;
  std::vector<std::uint32_t> pairs = (d >= 2) ? d_subsets(2, p)
                                              : std::vector<std::uint32_t>{};
  std::map<std::string, ClassForm> found;
  std::int64_t labeled = 0;
  const std::vector<int> unit_sizes(static_cast<std::size_t>(p), 1);

  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << bases.size()); ++pick) {
    std::uint32_t used = 0;
    std::vector<std::uint32_t> sets;
    for (std::uint64_t b = pick; b != 0; b &= b - 1) {
      const std::uint32_t basis = bases[static_cast<std::size_t>(std::countr_zero(b))];
      sets.push_back(basis);
      used |= basis;
    }
    if (used != full) continue;
    if (d == 1 && p != 1) continue;  // distinct rank-1 elements are parallel
    const std::uint64_t bm = face_bitmap(sets);
    bool covered = true;
    for (std::uint32_t pr : pairs)
      if (!((bm >> pr) & 1)) {
        covered = false;
        break;
      }
    if (!covered) continue;
    if (!exchange_holds(sets, bm)) continue;
    ++labeled;
    ClassForm canon = canonical_class_form(ClassForm{unit_sizes, sets});
    found.emplace(class_form_key(canon), std::move(canon));
  }

  std::vector<ClassForm> result;
  result.reserve(found.size());
  for (auto& [key, form] : found) result.push_back(std::move(form));
  std::lock_guard<std::mutex> lock(mu);
  cache[{d, p}] = {result, labeled};
  if (labeled_count) *labeled_count = labeled;
  return result;
}

std::vector<ClassForm> enumerate_class_forms(const ClassSpec& spec,
                                             std::int64_t* labeled_count) {
  if (static_cast<int>(spec.a.size()) != spec.p)
    throw InvalidSpec("size vector length must equal p");
  for (int ai : spec.a)
    if (ai < 1) throw InvalidSpec("class sizes must be positive");
  const std::vector<ClassForm> simple =
      enumerate_simple(spec.d, spec.p, labeled_count);
  std::vector<int> sizes = spec.a;
  std::sort(sizes.begin(), sizes.end());
  std::map<std::string, ClassForm> found;
  do {
    for (const ClassForm& s : simple) {
      ClassForm canon = canonical_class_form(ClassForm{sizes, s.sets});
      found.emplace(class_form_key(canon), std::move(canon));
    }
  } while (std::next_permutation(sizes.begin(), sizes.end()));
  std::vector<ClassForm> result;
  result.reserve(found.size());
  for (auto& [key, form] : found) result.push_back(std::move(form));
  return result;
}

std::vector<Matroid> enumerate_class(const ClassSpec& spec) {
  std::vector<Matroid> out;
  for (const ClassForm& form : enumerate_class_forms(spec))
    out.push_back(Matroid::lift(form));
  return out;
}

ClassForm delta_t_form(int d, int p, const std::vector<int>& a, int t) {
  if (d < 2 || p < d || static_cast<int>(a.size()) != p)
    throw InvalidSpec("need p = len(a) >= d >= 2");
  if (t < 0 || t > d - 2) throw InvalidSpec("need 0 <= t <= d-2");
  const std::uint32_t base = (t == 0) ? 0 : ((std::uint32_t{1} << t) - 1);
  std::vector<std::uint32_t> sets;
  for (std::uint32_t rest :
       d_subsets(d - t, p - t))
    sets.push_back(base | (rest << t));
  std::sort(sets.begin(), sets.end());
  return ClassForm{a, std::move(sets)};
}

int delta_t_index(const ClassForm& form) {
  const int p = static_cast<int>(form.sizes.size());
  const int d = form.rank();
  if (p == d) return 0;  // the unique matroid of M(d,d,a)
  std::uint32_t cone = ~std::uint32_t{0};
  for (std::uint32_t s : form.sets) cone &= s;
  const int t = std::popcount(cone);
  if (t > d - 2) return -1;
  // All sets contain the cone classes and differ on (d-t)-subsets of the
  // rest; hitting the full count means every such subset occurs.
  if (static_cast<std::int64_t>(form.sets.size()) == binomial(p - t, d - t))
    return t;
  return -1;
}

namespace {

// Rows shared by every suite: h-vector, type, Delta_t membership, extremal
// flags, and the length law s = n - d.
ClassReport base_report(const ClassSpec& spec, const std::string& suite) {
  ClassReport report;
  report.spec = spec;
  report.suite = suite;
  std::vector<ClassForm> forms = enumerate_class_forms(spec, &report.count_labeled);
  report.count_iso = static_cast<std::int64_t>(forms.size());

  HVector hmin, hmax;
  const bool extremal_defined = spec.d >= 2;
  if (extremal_defined) {
    std::vector<int> asc = spec.a;
    std::stable_sort(asc.begin(), asc.end());
    hmin = h_cover_recursive(delta_t_form(spec.d, spec.p, asc, spec.d - 2));
    hmax = h_cover_recursive(delta_t_form(spec.d, spec.p, spec.a, 0));
  }

  int n = 0;
  for (int ai : spec.a) n += ai;
  for (ClassForm& form : forms) {
    MatroidRow row;
    row.h = h_cover_recursive(form);
    row.type = row.h.entries.back();
    row.family_t = delta_t_index(form);
    if (extremal_defined) {
      row.is_min = row.h == hmin;
      row.is_max = row.h == hmax;
    }
    if (row.h.last_index() != n - spec.d)
      report.violations.push_back("h-vector length " +
                                  std::to_string(row.h.last_index() + 1) +
                                  " != n-d+1 for " + class_form_key(form));
    row.form = std::move(form);
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string row_label(const ClassSpec& spec, const MatroidRow& row) {
  return "M(" + std::to_string(spec.d) + "," + std::to_string(spec.p) + ",(" +
         spec_a_string(spec.a) + ")) form " + class_form_key(row.form);
}

}  // namespace

ClassReport verify_minmax(const ClassSpec& spec) {
  ClassReport report = base_report(spec, "minmax");
  if (spec.d < 2) return report;
  std::vector<int> asc = spec.a;
  std::stable_sort(asc.begin(), asc.end());
  const HVector hmin = h_cover_recursive(delta_t_form(spec.d, spec.p, asc, spec.d - 2));
  const HVector hmax = h_cover_recursive(delta_t_form(spec.d, spec.p, spec.a, 0));
  for (const MatroidRow& row : report.rows) {
    if (!componentwise_leq(hmin, row.h))
      report.violations.push_back("h_min " + hmin.to_string() + " !<= " +
                                  row.h.to_string() + " at " + row_label(spec, row));
    if (!componentwise_leq(row.h, hmax))
      report.violations.push_back(row.h.to_string() + " !<= h_max " +
                                  hmax.to_string() + " at " + row_label(spec, row));
  }
  return report;
}

ClassReport verify_recursion(const ClassSpec& spec) {
  ClassReport report = base_report(spec, "recursion");
  for (const MatroidRow& row : report.rows) {
    const Matroid m = Matroid::lift(row.form);
    const HVector hm = h_cover(m);
    if (!(hm == row.h))
      report.violations.push_back("engine mismatch " + hm.to_string() + " vs " +
                                  row.h.to_string() + " at " + row_label(spec, row));
    const Face cones = cone_points(m.complex());
    for (int v : m.complex().support().vertices()) {
      if (cones.contains(v)) continue;
      const HVector hdel = h_cover(delete_vertex(m.complex(), v));
      const HVector hlink = h_cover(link(m.complex(), Face::single(v)));
      const int top = std::max(hm.last_index(),
                               std::max(hdel.last_index() + 1, hlink.last_index()));
      for (int k = 0; k <= top; ++k)
        if (hm.at(k) != hdel.at(k - 1) + hlink.at(k)) {
          report.violations.push_back(
              "deletion/link identity fails at vertex " + std::to_string(v) +
              ", degree " + std::to_string(k) + ", " + row_label(spec, row));
          break;
        }
    }
  }
  return report;
}

ClassReport verify_switch(const ClassSpec& spec) {
  ClassReport report = base_report(spec, "switch");
  for (const MatroidRow& row : report.rows) {
    const int p = static_cast<int>(row.form.sizes.size());
    std::uint32_t cone = ~std::uint32_t{0};
    for (std::uint32_t s : row.form.sets) cone &= s;
    // Canonical sizes ascend, so the last class has the maximal size; any
    // cone class of that size can play the top role.
    int top = -1;
    for (int i = p - 1; i >= 0; --i)
      if ((cone >> i) & 1 && row.form.sizes[static_cast<std::size_t>(i)] ==
                                 row.form.sizes[static_cast<std::size_t>(p - 1)]) {
        top = i;
        break;
      }
    if (top < 0) continue;
    for (int l = 0; l < p; ++l) {
      if (l == top || ((cone >> l) & 1)) continue;
      std::vector<std::uint32_t> swapped;
      const std::uint32_t lb = std::uint32_t{1} << l;
      const std::uint32_t tb = std::uint32_t{1} << top;
      for (std::uint32_t s : row.form.sets) {
        std::uint32_t x = s & ~(lb | tb);
        if (s & lb) x |= tb;
        if (s & tb) x |= lb;
        swapped.push_back(x);
      }
      std::sort(swapped.begin(), swapped.end());
      swapped.erase(std::unique(swapped.begin(), swapped.end()), swapped.end());
      const HVector hsw = h_cover_recursive(ClassForm{row.form.sizes, swapped});
      if (!componentwise_leq(hsw, row.h))
        report.violations.push_back("switch inequality fails for classes " +
                                    std::to_string(l + 1) + "<->" +
                                    std::to_string(top + 1) + " at " +
                                    row_label(spec, row));
    }
  }
  return report;
}

ClassReport verify_stanley(const ClassSpec& spec, const SearchBudget& budget) {
  ClassReport report = base_report(spec, "stanley");
  static std::map<std::string, Verdict> verdict_cache;
  static std::mutex mu;
  for (MatroidRow& row : report.rows) {
    if (row.family_t >= 0 && spec.d >= 2) {
      // Family members: the explicit order ideal must witness the h-vector
      // directly, no search.
      std::uint32_t cone = ~std::uint32_t{0};
      for (std::uint32_t s : row.form.sets) cone &= s;
      std::vector<int> arranged;
      for (int i = 0; i < spec.p; ++i)
        if ((cone >> i) & 1) arranged.push_back(row.form.sizes[static_cast<std::size_t>(i)]);
      const int t = (spec.p == spec.d) ? 0 : static_cast<int>(arranged.size());
      if (spec.p == spec.d) arranged.clear();
      for (int i = 0; i < spec.p; ++i)
        if (spec.p == spec.d || !((cone >> i) & 1))
          arranged.push_back(row.form.sizes[static_cast<std::size_t>(i)]);
      const OrderIdeal gamma = gamma_t(ClassSpec{spec.d, spec.p, arranged, t});
      if (gamma.fvec == row.h.entries) {
        row.oseq_verdict = verdict_name(Verdict::pure);
      } else {
        row.oseq_verdict = "witness_mismatch";
        report.violations.push_back("gamma witness f-vector disagrees with " +
                                    row.h.to_string() + " at " +
                                    row_label(spec, row));
      }
      continue;
    }
    Verdict verdict;
    bool cached = false;
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = verdict_cache.find(row.h.to_string());
      if (it != verdict_cache.end()) {
        verdict = it->second;
        cached = true;
      }
    }
    if (!cached) {
      verdict = is_pure_o_sequence(row.h, budget).verdict;
      if (verdict != Verdict::budget_exhausted) {
        std::lock_guard<std::mutex> lock(mu);
        verdict_cache.emplace(row.h.to_string(), verdict);
      }
    }
    row.oseq_verdict = verdict_name(verdict);
    if (verdict == Verdict::budget_exhausted) ++report.budget_exhaustions;
    if (verdict == Verdict::not_pure)
      report.violations.push_back(row.h.to_string() +
                                  " is not a pure O-sequence at " +
                                  row_label(spec, row));
  }
  return report;
}

ClassReport verify_type_bounds(const ClassSpec& spec) {
  ClassReport report = base_report(spec, "typebounds");
  for (const MatroidRow& row : report.rows) {
    if (row.type < spec.p - spec.d + 1)
      report.violations.push_back("type " + std::to_string(row.type) +
                                  " < p-d+1 at " + row_label(spec, row));
    if ((row.type == 1) != (spec.p == spec.d))
      report.violations.push_back("Gorenstein iff p=d fails at " +
                                  row_label(spec, row));
    if (spec.d == 2 && row.type != spec.p - 1)
      report.violations.push_back("rank-2 type != p-1 at " + row_label(spec, row));
    if (row.family_t >= 0 &&
        row.type != binomial(spec.p - row.family_t - 1, spec.d - row.family_t - 1))
      report.violations.push_back("family type formula fails at " +
                                  row_label(spec, row));
  }
  return report;
}

namespace {

void size_multisets(int p, int max_a, int from, std::vector<int>& acc,
                    std::vector<std::vector<int>>& out) {
  if (static_cast<int>(acc.size()) == p) {
    out.push_back(acc);
    return;
  }
  for (int v = from; v <= max_a; ++v) {
    acc.push_back(v);
    size_multisets(p, max_a, v, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<ClassSpec> grid_specs(const GridOptions& options) {
  std::vector<ClassSpec> specs;
  for (int d = 2; d <= options.max_d; ++d)
    for (int p = d; p <= options.max_p; ++p) {
      std::vector<std::vector<int>> sizes;
      std::vector<int> acc;
      size_multisets(p, options.max_a, 1, acc, sizes);
      for (std::vector<int>& a : sizes)
        specs.push_back(ClassSpec{d, p, std::move(a), 0});
    }
  if (options.include_rank4_unit && options.max_d < 4)
    specs.push_back(ClassSpec{4, 5, std::vector<int>(5, 1), 0});
  return specs;
}

std::vector<ClassReport> run_suite(const std::string& suite,
                                   const GridOptions& options) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = {"minmax", "recursion", "switch", "stanley", "typebounds"};
  } else if (suite == "minmax" || suite == "recursion" || suite == "switch" ||
             suite == "stanley" || suite == "typebounds") {
    suites = {suite};
  } else {
    throw InvalidSpec("unknown suite: " + suite);
  }
  const std::vector<ClassSpec> specs = grid_specs(options);
  std::vector<ClassReport> reports(specs.size() * suites.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= reports.size()) return;
      const ClassSpec& spec = specs[i / suites.size()];
      const std::string& s = suites[i % suites.size()];
      if (s == "minmax") reports[i] = verify_minmax(spec);
      else if (s == "recursion") reports[i] = verify_recursion(spec);
      else if (s == "switch") reports[i] = verify_switch(spec);
      else if (s == "stanley") reports[i] = verify_stanley(spec, options.budget);
      else reports[i] = verify_type_bounds(spec);
    }
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return reports;
}

}  // namespace matroidh
