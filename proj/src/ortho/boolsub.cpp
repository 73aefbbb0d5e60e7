#include "ordalg/ortho/boolsub.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <optional>
#include <unordered_set>

namespace ordalg::ortho {

const char* to_string(PartialPolicy p) noexcept { return p == PartialPolicy::Strict ? "strict" : "lenient"; }

std::vector<std::size_t> members(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1)
    if (m & 1U) out.push_back(i);
  return out;
}

namespace {

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

/// Smallest superset closed under ' and existing meets and joins; empty under
/// Strict when two members lack a meet or join.
std::optional<Mask> closure(const Omp& p, Mask x, PartialPolicy policy) {
  for (;;) {
    Mask grown = x;
    const auto xs = members(x);
    for (std::size_t a : xs) grown |= bit(p.ortho(a));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        const auto m = p.meet(xs[i], xs[j]);
        const auto s = p.join(xs[i], xs[j]);
        if ((!m || !s) && policy == PartialPolicy::Strict) return std::nullopt;
        if (m) grown |= bit(*m);
        if (s) grown |= bit(*s);
      }
    }
    if (grown == x) return x;
    x = grown;
  }
}

/// glb or lub among the members of b.
std::optional<std::size_t> bound_in(const Omp& p, const std::vector<std::size_t>& b, std::size_t x,
                                    std::size_t y, bool lower) {
  std::optional<std::size_t> best;
  for (std::size_t z : b) {
    const bool is_bound = lower ? (p.leq(z, x) && p.leq(z, y)) : (p.leq(x, z) && p.leq(y, z));
    if (!is_bound) continue;
    if (!best || (lower ? p.leq(*best, z) : p.leq(z, *best))) best = z;
  }
  if (!best) return best;
  for (std::size_t z : b) {
    const bool is_bound = lower ? (p.leq(z, x) && p.leq(z, y)) : (p.leq(x, z) && p.leq(y, z));
    if (is_bound && !(lower ? p.leq(z, *best) : p.leq(*best, z))) return std::nullopt;
  }
  return best;
}

}  // namespace

bool is_boolean_subalgebra(const Omp& p, Mask b, PartialPolicy policy) {
  if (!(b & bit(p.zero())) || !(b & bit(p.one()))) return false;
  const auto c = closure(p, b, policy);
  if (!c || *c != b) return false;
  const auto xs = members(b);
  const std::size_t m = xs.size();
  std::vector<std::size_t> meet(m * m), join(m * m);
  std::vector<std::size_t> index(p.size(), m);
  for (std::size_t i = 0; i < m; ++i) index[xs[i]] = i;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto lo = bound_in(p, xs, xs[i], xs[j], true);
      const auto hi = bound_in(p, xs, xs[i], xs[j], false);
      if (!lo || !hi) return false;
      meet[i * m + j] = index[*lo];
      join[i * m + j] = index[*hi];
    }
  }
  const std::size_t zero = index[p.zero()];
  const std::size_t one = index[p.one()];
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t c_i = index[p.ortho(xs[i])];
    if (meet[i * m + c_i] != zero || join[i * m + c_i] != one) return false;
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        if (meet[a * m + join[x * m + y]] != join[meet[a * m + x] * m + meet[a * m + y]]) return false;
  return true;
}

BoolSubLattice boolean_subalgebras(const Omp& p, const BoolSubOptions& options) {
  const std::size_t n = p.size();
  if (n > options.max_size || n > kMaxOmpSize) {
    throw OrthoError(OrthoErrc::SizeLimit,
                     "Boolean subalgebra search is limited to " + std::to_string(options.max_size) + " elements",
                     {n});
  }
  const Mask start = bit(p.zero()) | bit(p.one());
  std::unordered_set<Mask> seen{start};
  std::deque<Mask> queue{start};
  std::vector<Mask> found;
  while (!queue.empty()) {
    const Mask x = queue.front();
    queue.pop_front();
    const bool boolean = is_boolean_subalgebra(p, x, options.policy);
    if (boolean) found.push_back(x);
    // under Strict every Boolean subalgebra is reached through Boolean ones
    if (!boolean && options.policy == PartialPolicy::Strict) continue;
    for (std::size_t e = 0; e < n; ++e) {
      if (x & bit(e)) continue;
      const auto y = closure(p, x | bit(e), options.policy);
      if (y && seen.insert(*y).second) queue.push_back(*y);
    }
  }
  std::sort(found.begin(), found.end(), [](Mask a, Mask b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
  });
  std::vector<std::string> labels;
  for (Mask b : found) labels.push_back(describe(p, b));
  auto poset = order::FinPoset::from_relation(
      labels, [&](std::size_t i, std::size_t j) { return (found[i] & found[j]) == found[i]; });
  return {std::move(found), std::move(poset)};
}

std::vector<Mask> blocks(const Omp& p, const BoolSubOptions& options) {
  const auto lat = boolean_subalgebras(p, options);
  std::vector<Mask> out;
  for (std::size_t i : order::FinPoset::to_subset(lat.poset.maximal(lat.poset.full_set()))) {
    out.push_back(lat.subalgebras[i]);
  }
  return out;
}

std::string describe(const Omp& p, Mask b) {
  std::string out = "{";
  for (std::size_t i : members(b)) out += (out.size() > 1 ? "," : "") + p.label(i);
  return out + "}";
}

}  // namespace ordalg::ortho
