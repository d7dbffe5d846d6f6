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

#include "matroidh/oseq.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "matroidh/errors.hpp"

namespace matroidh {

int Monomial::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

bool Monomial::divides(const Monomial& other) const {
  const std::size_t n = std::max(exponents.size(), other.exponents.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int a = i < exponents.size() ? exponents[i] : 0;
    const int b = i < other.exponents.size() ? other.exponents[i] : 0;
    if (a > b) return false;
  }
  return true;
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (any) os << '*';
    os << 'y' << (i + 1);
    if (exponents[i] > 1) os << '^' << exponents[i];
    any = true;
  }
  return any ? os.str() : "1";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pure: return "pure";
    case Verdict::not_pure: return "not_pure";
    case Verdict::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

OrderIdeal close_and_count(const std::vector<Monomial>& generators) {
  if (generators.empty()) throw EmptyGeneratorSet();
  std::size_t m = 0;
  for (const Monomial& g : generators) m = std::max(m, g.exponents.size());
  std::vector<std::vector<int>> gens;
  for (const Monomial& g : generators) {
    std::vector<int> e = g.exponents;
    e.resize(m, 0);
    gens.push_back(std::move(e));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  OrderIdeal ideal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < gens.size() && maximal; ++j) {
      if (i == j) continue;
      bool divides = true;
      for (std::size_t k = 0; k < m && divides; ++k)
        divides = gens[i][k] <= gens[j][k];
      maximal = !divides;
    }
    if (maximal) ideal.generators.push_back(Monomial{gens[i]});
  }
  std::sort(ideal.generators.begin(), ideal.generators.end(),
            [](const Monomial& x, const Monomial& y) {
              if (x.degree() != y.degree()) return x.degree() < y.degree();
              return x.exponents < y.exponents;
            });

  std::set<std::vector<int>> closed;
  std::vector<std::vector<int>> work;
  for (const Monomial& g : ideal.generators)
    if (closed.insert(g.exponents).second) work.push_back(g.exponents);
  while (!work.empty()) {
    std::vector<int> cur = std::move(work.back());
    work.pop_back();
    for (std::size_t k = 0; k < m; ++k) {
      if (cur[k] == 0) continue;
      --cur[k];
      if (closed.insert(cur).second) work.push_back(cur);
      ++cur[k];
    }
  }
  int maxdeg = 0;
  for (const Monomial& g : ideal.generators) maxdeg = std::max(maxdeg, g.degree());
  ideal.fvec.assign(static_cast<std::size_t>(maxdeg) + 1, 0);
  for (const std::vector<int>& e : closed) {
    Monomial mon{e};
    ideal.closure.push_back(mon);
    ++ideal.fvec[static_cast<std::size_t>(mon.degree())];
  }
  std::sort(ideal.closure.begin(), ideal.closure.end(),
            [](const Monomial& x, const Monomial& y) {
              if (x.degree() != y.degree()) return x.degree() < y.degree();
              return x.exponents < y.exponents;
            });
  return ideal;
}

namespace {

// One generator per increasing chain 1 = b_0 < b_1 < ... < b_{d-1} <= p:
// variable j takes the j-th block sum of a, minus one.
std::vector<Monomial> complete_generators(int d, const std::vector<int>& a) {
  const int p = static_cast<int>(a.size());
  if (d < 1 || p < d) throw InvalidSpec("need len(a) >= d >= 1");
  for (int ai : a)
    if (ai < 1) throw InvalidSpec("class sizes must be positive");
  std::vector<Monomial> gens;
  std::vector<int> b(static_cast<std::size_t>(d));
  b[0] = 1;
  for (int j = 1; j < d; ++j) b[static_cast<std::size_t>(j)] = j + 1;
  while (true) {
    std::vector<int> e(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      const int lo = b[static_cast<std::size_t>(j)];
      const int hi = (j + 1 < d) ? b[static_cast<std::size_t>(j + 1)] - 1 : p;
      int sum = 0;
      for (int i = lo; i <= hi; ++i) sum += a[static_cast<std::size_t>(i - 1)];
      e[static_cast<std::size_t>(j)] = sum - 1;
    }
    gens.push_back(Monomial{std::move(e)});
    // Next chain: b_1..b_{d-1} ranges over (d-1)-subsets of {2..p}.
    int j = d - 1;
    while (j >= 1 && b[static_cast<std::size_t>(j)] == p - (d - 1 - j)) --j;
    if (j < 1) break;
    ++b[static_cast<std::size_t>(j)];
    for (int k = j + 1; k < d; ++k)
      b[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(k - 1)] + 1;
  }
  return gens;
}

}  // namespace

OrderIdeal gamma_complete(int d, const std::vector<int>& a) {
  return close_and_count(complete_generators(d, a));
}

OrderIdeal gamma_t(const ClassSpec& spec) {
  const int d = spec.d, p = spec.p, t = spec.t;
  if (static_cast<int>(spec.a.size()) != p || p < d || d < 2)
    throw InvalidSpec("need p = len(a) >= d >= 2");
  if (t < 0 || t > d - 2) throw InvalidSpec("need 0 <= t <= d-2");
  std::vector<int> suffix(spec.a.begin() + t, spec.a.end());
  std::vector<Monomial> gens;
  for (const Monomial& tail : complete_generators(d - t, suffix)) {
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < t; ++i) e.push_back(spec.a[static_cast<std::size_t>(i)] - 1);
    e.insert(e.end(), tail.exponents.begin(), tail.exponents.end());
    gens.push_back(Monomial{std::move(e)});
  }
  return close_and_count(gens);
}

namespace {

// All monomials of degree <= s in m variables, grouped by degree and stored
// in descending lexicographic order within each degree, plus per-candidate
// divisor bitsets for the degree-s monomials.
struct Universe {
  int m = 0, s = 0;
  std::vector<std::vector<int>> monos;
  std::vector<std::size_t> offset;  // offset[k]..offset[k+1]: degree-k range
  std::vector<std::vector<std::uint64_t>> divmask;  // per degree-s candidate
  std::size_t words = 0;

  std::size_t total() const { return monos.size(); }
  std::size_t cand_begin() const { return offset[static_cast<std::size_t>(s)]; }
  std::size_t cand_count() const { return total() - cand_begin(); }
};

void emit_degree(int m, int k, std::vector<int>& acc,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(acc.size()) == m - 1) {
    acc.push_back(k);
    out.push_back(acc);
    acc.pop_back();
    return;
  }
  for (int e = k; e >= 0; --e) {
    acc.push_back(e);
    emit_degree(m, k - e, acc, out);
    acc.pop_back();
  }
}

void mark_divisors(const std::map<std::vector<int>, std::size_t>& index,
                   std::vector<int>& cur, std::size_t var,
                   std::vector<std::uint64_t>& mask) {
  if (var == cur.size()) {
    const std::size_t i = index.at(cur);
    mask[i >> 6] |= std::uint64_t{1} << (i & 63);
    return;
  }
  const int e = cur[var];
  for (int x = e; x >= 0; --x) {
    cur[var] = x;
    mark_divisors(index, cur, var + 1, mask);
  }
  cur[var] = e;
}

Universe build_universe(int m, int s) {
  Universe u;
  u.m = m;
  u.s = s;
  u.offset.push_back(0);
  for (int k = 0; k <= s; ++k) {
    std::vector<int> acc;
    emit_degree(m, k, acc, u.monos);
    u.offset.push_back(u.monos.size());
  }
  u.words = (u.total() + 63) / 64;
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < u.monos.size(); ++i) index[u.monos[i]] = i;
  u.divmask.resize(u.cand_count());
  for (std::size_t c = 0; c < u.cand_count(); ++c) {
    u.divmask[c].assign(u.words, 0);
    std::vector<int> cur = u.monos[u.cand_begin() + c];
    mark_divisors(index, cur, 0, u.divmask[c]);
  }
  return u;
}

std::int64_t popcount_range(const std::vector<std::uint64_t>& bits,
                            std::size_t lo, std::size_t hi) {
  std::int64_t count = 0;
  for (std::size_t w = lo >> 6; w <= (hi - 1) >> 6 && hi > lo; ++w) {
    std::uint64_t word = bits[w];
    const std::size_t base = w << 6;
    if (lo > base) word &= ~std::uint64_t{0} << (lo - base);
    if (hi < base + 64) word &= (~std::uint64_t{0}) >> (base + 64 - hi);
    count += std::popcount(word);
  }
  return count;
}

bool nonincreasing(const std::vector<int>& e) {
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i - 1] < e[i]) return false;
  return true;
}

// Per-degree cap on how many monomials one degree-s generator can add: its
// degree-k divisors biject with its degree-(s-k) divisors.
std::vector<std::int64_t> per_generator_bounds(int m, int s) {
  std::vector<std::int64_t> bound(static_cast<std::size_t>(s) + 1);
  for (int k = 0; k <= s; ++k)
    bound[static_cast<std::size_t>(k)] =
        std::min(binomial(k + m - 1, m - 1), binomial(s - k + m - 1, m - 1));
  return bound;
}

struct Shared {
  const Universe* u = nullptr;
  std::vector<std::int64_t> h;  // target, indices 0..s
  int g = 0;
  std::vector<std::int64_t> bound;
  std::int64_t node_budget = 0;
  double time_budget = 0;
  std::chrono::steady_clock::time_point start;
  std::vector<std::size_t> roots;  // candidate indices usable as generator 1

  std::atomic<std::int64_t> nodes{0};
  std::atomic<std::size_t> next_root{0};
  std::atomic<std::size_t> best_root{SIZE_MAX};
  std::atomic<bool> exhausted{false};
  std::mutex mu;
  std::map<std::size_t, std::vector<std::size_t>> witnesses;  // root -> set
};

class Worker {
 public:
  explicit Worker(Shared* sh) : sh_(*sh), u_(*sh->u) {}

  void run() {
    while (true) {
      const std::size_t r = sh_.next_root.fetch_add(1);
      if (r >= sh_.roots.size()) return;
      if (sh_.exhausted.load(std::memory_order_relaxed)) return;
      if (sh_.roots[r] >= sh_.best_root.load(std::memory_order_relaxed)) return;
      std::vector<std::uint64_t> closure(u_.words, 0);
      std::vector<std::int64_t> f(sh_.h.size(), 0);
      chosen_.clear();
      if (try_candidate(sh_.roots[r], 0, closure, f)) {
        std::lock_guard<std::mutex> lock(sh_.mu);
        std::size_t prev = sh_.best_root.load();
        if (sh_.roots[r] < prev) sh_.best_root.store(sh_.roots[r]);
        sh_.witnesses[sh_.roots[r]] = chosen_;
      }
      flush_nodes();
    }
  }

 private:
  bool tick() {
    if (++local_nodes_ % 8192 == 0) {
      flush_nodes();
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                        sh_.start)
              .count();
      if (sh_.nodes.load() > sh_.node_budget || secs > sh_.time_budget) {
        sh_.exhausted.store(true);
        return false;
      }
    }
    return !sh_.exhausted.load(std::memory_order_relaxed);
  }

  void flush_nodes() {
    sh_.nodes.fetch_add(local_nodes_ - flushed_);
    flushed_ = local_nodes_;
  }

  // Adds candidate c (index within the degree-s range) as generator number
  // count+1; on success continues the DFS. Returns true once a witness for
  // this subtree is complete.
  bool try_candidate(std::size_t c, int count,
                     const std::vector<std::uint64_t>& closure,
                     const std::vector<std::int64_t>& f) {
    if (!tick()) return false;
    const int s = u_.s;
    std::vector<std::uint64_t> nc(u_.words);
    const std::vector<std::uint64_t>& dm = u_.divmask[c];
    for (std::size_t w = 0; w < u_.words; ++w) nc[w] = closure[w] | dm[w];
    std::vector<std::int64_t> nf(f.size());
    const int remaining = sh_.g - count - 1;
    for (int k = 0; k <= s; ++k) {
      nf[static_cast<std::size_t>(k)] = popcount_range(
          nc, u_.offset[static_cast<std::size_t>(k)],
          u_.offset[static_cast<std::size_t>(k) + 1]);
      const std::int64_t hk = sh_.h[static_cast<std::size_t>(k)];
      if (nf[static_cast<std::size_t>(k)] > hk) return false;
      if (nf[static_cast<std::size_t>(k)] +
              remaining * sh_.bound[static_cast<std::size_t>(k)] <
          hk)
        return false;
    }
    chosen_.push_back(c);
    if (count + 1 == sh_.g) {
      if (nf == sh_.h) return true;
      chosen_.pop_back();
      return false;
    }
    for (std::size_t next = c + 1;
         next + static_cast<std::size_t>(remaining) <= u_.cand_count();
         ++next) {
      if (try_candidate(next, count + 1, nc, nf)) return true;
      if (sh_.exhausted.load(std::memory_order_relaxed)) break;
    }
    chosen_.pop_back();
    return false;
  }

  Shared& sh_;
  const Universe& u_;
  std::vector<std::size_t> chosen_;
  std::int64_t local_nodes_ = 0;
  std::int64_t flushed_ = 0;
};

}  // namespace

OSeqDecision is_pure_o_sequence(const HVector& h, const SearchBudget& budget) {
  OSeqDecision out;
  const auto start = std::chrono::steady_clock::now();
  auto finish = [&](Verdict v) {
    out.verdict = v;
    out.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return out;
  };

  for (std::int64_t x : h.entries)
    if (x < 0) return finish(Verdict::not_pure);
  if (h.at(0) != 1) return finish(Verdict::not_pure);
  const int s = h.last_index();
  if (s == 0) {
    out.witness = std::vector<Monomial>{Monomial{{}}};
    return finish(Verdict::pure);
  }
  const int m = static_cast<int>(h.at(1));
  const std::int64_t g = h.at(s);
  if (m < 1) return finish(Verdict::not_pure);
  const std::vector<std::int64_t> bound = per_generator_bounds(m, s);
  for (int k = 1; k <= s; ++k) {
    if (h.at(k) < 1) return finish(Verdict::not_pure);
    if (h.at(k) > binomial(m + k - 1, k)) return finish(Verdict::not_pure);
    if (h.at(k) > g * bound[static_cast<std::size_t>(k)])
      return finish(Verdict::not_pure);
  }
  if (binomial(m + s, m) > 2'000'000 || binomial(m + s - 1, s) > 200'000)
    return finish(Verdict::budget_exhausted);

  Shared sh;
  const Universe u = build_universe(m, s);
  sh.u = &u;
  sh.h.assign(static_cast<std::size_t>(s) + 1, 0);
  for (int k = 0; k <= s; ++k) sh.h[static_cast<std::size_t>(k)] = h.at(k);
  sh.g = static_cast<int>(g);
  sh.bound = bound;
  sh.node_budget = budget.node_budget;
  sh.time_budget = budget.time_budget_secs;
  sh.start = start;
  // Symmetry reduction: some variable permutation makes the lex-greatest
  // generator's exponent vector non-increasing.
  for (std::size_t c = 0; c < u.cand_count(); ++c)
    if (nonincreasing(u.monos[u.cand_begin() + c])) sh.roots.push_back(c);

  const int threads = std::max(1, budget.threads);
  if (threads == 1) {
    Worker(&sh).run();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i)
      pool.emplace_back([&sh] { Worker(&sh).run(); });
    for (std::thread& t : pool) t.join();
  }
  out.stats.nodes = sh.nodes.load();

  const std::size_t best = sh.best_root.load();
  if (best != SIZE_MAX) {
    std::vector<Monomial> witness;
    for (std::size_t c : sh.witnesses.at(best))
      witness.push_back(Monomial{u.monos[u.cand_begin() + c]});
    out.witness = std::move(witness);
    return finish(Verdict::pure);
  }
  if (sh.exhausted.load()) return finish(Verdict::budget_exhausted);
  return finish(Verdict::not_pure);
}

namespace {

bool is_canonical_set(const std::vector<std::vector<int>>& set, int m) {
  // `set` is sorted descending. Canonical = lexicographically greatest
  // sorted representative over all variable permutations.
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<std::vector<int>> image;
    image.reserve(set.size());
    for (const std::vector<int>& e : set) {
      std::vector<int> pe(e.size());
      for (int i = 0; i < m; ++i)
        pe[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
            e[static_cast<std::size_t>(i)];
      image.push_back(std::move(pe));
    }
    std::sort(image.begin(), image.end(), std::greater<>());
    if (image > set) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::int64_t>> enumerate_pure_oseq(
    int m, int s, int g, const SearchBudget& budget) {
  if (m < 1 || s < 0 || g < 1) throw InvalidSpec("need m >= 1, s >= 0, g >= 1");
  if (s == 0) return {std::vector<std::int64_t>{1}};
  if (binomial(m + s, m) > 2'000'000 || binomial(m + s - 1, s) > 100'000)
    throw BudgetExceeded("universe too large for exhaustive enumeration");
  const Universe u = build_universe(m, s);
  const auto start = std::chrono::steady_clock::now();
  std::int64_t nodes = 0;
  std::set<std::vector<std::int64_t>> results;

  std::vector<std::size_t> chosen;
  auto closure_f = [&](const std::vector<std::size_t>& set) {
    std::vector<std::uint64_t> bits(u.words, 0);
    for (std::size_t c : set)
      for (std::size_t w = 0; w < u.words; ++w) bits[w] |= u.divmask[c][w];
    std::vector<std::int64_t> f(static_cast<std::size_t>(s) + 1);
    for (int k = 0; k <= s; ++k)
      f[static_cast<std::size_t>(k)] =
          popcount_range(bits, u.offset[static_cast<std::size_t>(k)],
                         u.offset[static_cast<std::size_t>(k) + 1]);
    return f;
  };
  // Plain subset recursion; the first pick is restricted to non-increasing
  // exponents and full sets pass an exact canonical-form check, so each
  // variable-permutation orbit is visited exactly once.
  auto rec = [&](auto&& self, std::size_t from, int count) -> void {
    if (count == g) {
      std::vector<std::vector<int>> set;
      for (std::size_t c : chosen) set.push_back(u.monos[u.cand_begin() + c]);
      if (is_canonical_set(set, m)) results.insert(closure_f(chosen));
      return;
    }
    for (std::size_t c = from;
         c + static_cast<std::size_t>(g - count) <= u.cand_count(); ++c) {
      if (count == 0 && !nonincreasing(u.monos[u.cand_begin() + c])) continue;
      if (++nodes % 8192 == 0) {
        const double secs = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        if (nodes > budget.node_budget || secs > budget.time_budget_secs)
          throw BudgetExceeded("enumeration budget exhausted after " +
                               std::to_string(nodes) + " nodes");
      }
      chosen.push_back(c);
      self(self, c + 1, count + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);
  return {results.begin(), results.end()};
}

bool height2_criterion(const HVector& h) {
  if (h.at(0) != 1 || h.at(1) != 2)
    throw WrongShape("height-two criterion needs h = (1, 2, ...)");
  const int s = h.last_index();
  for (int i = 1; i <= s; ++i)
    if (h.at(i + 1) > 2 * h.at(i) + h.at(i - 1)) return false;
  return true;
}

}  // namespace matroidh
