#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ordalg/order/poset.hpp"
#include "ordalg/ortho/omp.hpp"

namespace ordalg::ortho {

/// How a pair of members without a meet or join in P is treated.
/// Strict: such a subset is not a Boolean subalgebra (meets and joins of
/// members must exist in P). Lenient: the pair is skipped by the closure
/// requirement and only the induced order has to be Boolean.
enum class PartialPolicy { Strict, Lenient };

const char* to_string(PartialPolicy p) noexcept;

inline constexpr std::size_t kDefaultBoolsubLimit = 32;

struct BoolSubOptions {
  PartialPolicy policy = PartialPolicy::Strict;
  std::size_t max_size = kDefaultBoolsubLimit;
};

std::vector<std::size_t> members(Mask m);

/// Contains 0 and 1, is closed under ' and under the meets and joins P has,
/// and is a distributive lattice in the induced order with ' as complement.
bool is_boolean_subalgebra(const Omp& p, Mask b, PartialPolicy policy = PartialPolicy::Strict);

/// Boolean subalgebras ordered by inclusion, sorted by size then mask, so
/// node 0 is {0, 1}.
struct BoolSubLattice {
  std::vector<Mask> subalgebras;
  order::FinPoset poset;
};

/// Grows subalgebras from {0,1} by closing X u {p}, memoizing masks already
/// seen. Throws SizeLimit when |P| > options.max_size.
BoolSubLattice boolean_subalgebras(const Omp& p, const BoolSubOptions& options = {});

/// Maximal Boolean subalgebras.
std::vector<Mask> blocks(const Omp& p, const BoolSubOptions& options = {});

/// "{0,a1,a1',1}" in element order.
std::string describe(const Omp& p, Mask b);

}  // namespace ordalg::ortho
