#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordalg/cantor/trirel.hpp"
#include "ordalg/partitions/eqrel.hpp"

namespace ordalg::cantor {

inline constexpr unsigned kDefaultMaxDepth = 10;
inline constexpr unsigned kMaxGridExponent = 8;

/// Endpoints a < b < c < d of the stage indexed by a binary word.
struct Stage {
  Rational a, b, c, d;
};

/// Throws std::invalid_argument on characters other than '0' and '1'.
Stage stage_intervals(const std::string& sigma);

/// Middle-third blocks [b_s, c_s] for every word s of length <= d.
TriRel relation_R(unsigned d, unsigned max_depth = kDefaultMaxDepth);
/// Outer blocks [a_s, d_s] for every word s of length exactly n.
TriRel relation_S(unsigned n, unsigned max_depth = kDefaultMaxDepth);

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct CounterexampleReport {
  unsigned depth = 0;
  std::size_t r_blocks = 0;
  std::vector<Check> checks;

  bool passed() const;
};

/// Runs every check against R_d and S_0..S_d built here; throws
/// AssertionFailed naming the word or stage at the first failure.
CounterexampleReport verify_counterexample(unsigned d, unsigned max_depth = kDefaultMaxDepth);

/// Same checks over caller-supplied relations; `s[n]` plays S_n for n <= d.
CounterexampleReport verify_counterexample(unsigned d, const TriRel& r, const std::vector<TriRel>& s);

nlohmann::json report_to_json(const CounterexampleReport& report);

/// Restriction to the grid k/3^m, 0 <= k <= 3^m. Throws GridTooCoarse when a
/// block endpoint is off the grid and OutOfRange for m > kMaxGridExponent.
partitions::EqRel sample_to_grid(const TriRel& x, unsigned m);

/// collapse([i/(n+1), 1]) for i = 1..n, strictly decreasing as relations.
std::vector<TriRel> dense_chain_witness(unsigned n);

/// A relation strictly between two single-block witnesses [x,1] and [y,1].
TriRel midpoint_witness(const TriRel& larger, const TriRel& smaller);

}  // namespace ordalg::cantor
