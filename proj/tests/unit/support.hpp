#pragma once

// Test-only oracles and generators. Nothing here calls into the library
// routines it is used to check.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ordalg/order/poset.hpp"

namespace testsupport {

using Pairs = std::set<std::pair<std::size_t, std::size_t>>;

/// Random partial order: a random linear extension, random forward edges,
/// then Warshall closure.
inline std::vector<std::vector<bool>> random_order_table(std::size_t n, double density,
                                                         std::mt19937& rng) {
  std::vector<std::size_t> ext(n);
  std::iota(ext.begin(), ext.end(), 0);
  std::shuffle(ext.begin(), ext.end(), rng);
  std::bernoulli_distribution edge(density);
  std::vector<std::vector<bool>> t(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) t[i][i] = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (edge(rng)) t[ext[a]][ext[b]] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (t[i][k] && t[k][j]) t[i][j] = true;
      }
    }
  }
  return t;
}

inline ordalg::order::FinPoset random_poset(std::size_t n, double density, std::mt19937& rng) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  return ordalg::order::FinPoset::validate(std::move(labels), random_order_table(n, density, rng));
}

/// Every equivalence relation on n points as a set of pairs: the kernels of
/// all maps n -> n, deduplicated.
inline std::vector<Pairs> brute_force_equivalences(std::size_t n) {
  std::set<Pairs> seen;
  std::vector<std::size_t> f(n, 0);
  while (true) {
    Pairs rel;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (f[x] == f[y]) rel.emplace(x, y);
      }
    }
    seen.insert(std::move(rel));
    std::size_t i = 0;
    while (i < n && ++f[i] == n) f[i++] = 0;
    if (i == n) break;
  }
  return {seen.begin(), seen.end()};
}

inline bool subset_of(const Pairs& a, const Pairs& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Smallest equivalence relation containing a set of pairs on n points,
/// by iterating composition until nothing changes.
inline Pairs equivalence_closure(std::size_t n, Pairs rel) {
  for (std::size_t x = 0; x < n; ++x) rel.emplace(x, x);
  bool grew = true;
  while (grew) {
    grew = false;
    Pairs next = rel;
    for (auto [a, b] : rel) {
      next.emplace(b, a);
      for (auto [c, d] : rel) {
        if (b == c) next.emplace(a, d);
      }
    }
    if (next.size() != rel.size()) {
      rel = std::move(next);
      grew = true;
    }
  }
  return rel;
}

inline std::uint64_t brute_force_bell(std::size_t n) { return brute_force_equivalences(n).size(); }

/// Pairs (i, j), i < j, with no k strictly between, from the raw table.
inline std::size_t brute_force_cover_count(const ordalg::order::FinPoset& p) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (i == j || !p.leq(i, j)) continue;
      bool between = false;
      for (std::size_t k = 0; k < p.size() && !between; ++k) {
        between = k != i && k != j && p.leq(i, k) && p.leq(k, j);
      }
      if (!between) ++count;
    }
  }
  return count;
}

}  // namespace testsupport

namespace testsupport {

/// Way-below straight from the definition on a raw order table: for every
/// subset D that is directed and has a least upper bound s with c <= s, some
/// d in D sits above b.
inline bool brute_force_way_below(const std::vector<std::vector<bool>>& leq, std::size_t b,
                                  std::size_t c) {
  const std::size_t n = leq.size();
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    auto in = [&](std::size_t i) { return (mask >> i) & 1UL; };
    bool directed = true;
    for (std::size_t i = 0; i < n && directed; ++i) {
      for (std::size_t j = 0; j < n && directed; ++j) {
        if (!in(i) || !in(j)) continue;
        bool ub = false;
        for (std::size_t k = 0; k < n && !ub; ++k) ub = in(k) && leq[i][k] && leq[j][k];
        directed = ub;
      }
    }
    if (!directed) continue;
    std::vector<std::size_t> ubs;
    for (std::size_t u = 0; u < n; ++u) {
      bool above = true;
      for (std::size_t i = 0; i < n && above; ++i) above = !in(i) || leq[i][u];
      if (above) ubs.push_back(u);
    }
    std::size_t sup = n;
    for (std::size_t u : ubs) {
      if (std::all_of(ubs.begin(), ubs.end(), [&](std::size_t v) { return leq[u][v]; })) sup = u;
    }
    if (sup == n || !leq[c][sup]) continue;
    bool hit = false;
    for (std::size_t d = 0; d < n && !hit; ++d) hit = in(d) && leq[b][d];
    if (!hit) return false;
  }
  return true;
}

inline std::vector<std::vector<bool>> table_of(const ordalg::order::FinPoset& p) {
  std::vector<std::vector<bool>> t(p.size(), std::vector<bool>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) t[i][j] = p.leq(i, j);
  }
  return t;
}

}  // namespace testsupport

#include "ordalg/partitions/eqrel.hpp"

namespace testsupport {

inline Pairs pairs_of(const ordalg::partitions::EqRel& r) {
  Pairs out;
  for (std::size_t x = 0; x < r.ground_size(); ++x)
    for (std::size_t y = 0; y < r.ground_size(); ++y)
      if (r.related(x, y)) out.emplace(x, y);
  return out;
}

inline Pairs intersect(const Pairs& a, const Pairs& b) {
  Pairs out;
  for (const auto& e : a)
    if (b.count(e)) out.insert(e);
  return out;
}

}  // namespace testsupport
