#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordalg/cantor/rational.hpp"
#include "ordalg/partitions/eqrel.hpp"
#include "ordalg/scatter/fintop.hpp"

namespace ordalg::scatter {

/// Chain of closed sets K_q = Z u {x_r : r <= q} in a truncated convergent
/// sequence: isolated points x_0..x_{m-1} labelled i/m (1-based) and a limit
/// point Z at index m whose neighbourhoods contain x_{m-1}.
struct KqChain {
  FinTop space;
  std::vector<cantor::Rational> labels;    // q_1 < ... < q_m
  std::vector<cantor::Rational> chosen;    // the first n labels
  std::vector<Mask> chain;                 // K_q for each chosen q
  std::vector<partitions::EqRel> duals;    // K collapsed to a point
  bool strictly_increasing = false;
  bool all_closed = false;
  /// K < K' iff collapse(K) strictly refines collapse(K').
  bool dual_reverses = false;

  bool passed() const noexcept { return strictly_increasing && all_closed && dual_reverses; }
};

/// Requires 2 <= n <= m <= 10 (the open family has 3 * 2^(m-1) members).
KqChain kq_chain_witness(std::size_t m, std::size_t n);

nlohmann::json kq_chain_to_json(const KqChain& c);

}  // namespace ordalg::scatter
