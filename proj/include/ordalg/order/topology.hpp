#pragma once

#include <cstddef>
#include <vector>

#include "ordalg/order/poset.hpp"

namespace ordalg::order {

/// Largest poset for which open families are enumerated (2^n candidates).
inline constexpr std::size_t kTopologyLimit = 15;

using OpenFamily = std::vector<ElementSet>;

/// Up-closed sets that every directed set with supremum inside must meet.
OpenFamily scott_opens(const FinPoset& p);

/// Topology generated by the sets U \ up(F), U Scott open and F finite.
OpenFamily lawson_opens(const FinPoset& p);

/// Contains the empty and full sets and is closed under pairwise union and
/// intersection (enough for finite families).
bool is_topology(std::size_t points, const OpenFamily& opens);

/// Every subset is open.
bool is_discrete(std::size_t points, const OpenFamily& opens);

}  // namespace ordalg::order
