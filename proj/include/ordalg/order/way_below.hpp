#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ordalg/order/poset.hpp"

namespace ordalg::order {

/// Which route decides the way-below relation.
///
/// Definitional enumerates every directed subset (exponential, capped at
/// kDefinitionalLimit elements). FiniteFastPath uses the fact that a finite
/// directed set contains its own supremum, so B << C iff B <= C.
enum class WayBelowPath { Definitional, FiniteFastPath };

inline constexpr std::size_t kDefinitionalLimit = 15;

const char* to_string(WayBelowPath path) noexcept;

WayBelowPath default_path(const FinPoset& p) noexcept;

struct DirectedSubset {
  ElementSet members;
  std::size_t sup;
};

/// Every directed subset of `p`, found by testing all 2^n candidates for
/// pairwise upper bounds. Throws SizeLimit above kDefinitionalLimit elements.
std::vector<DirectedSubset> directed_subsets(const FinPoset& p);

/// The way-below relation of a finite poset, extended to nonempty subsets:
/// G << H when every directed D with sup(D) in up(H) meets up(G).
class WayBelow {
 public:
  explicit WayBelow(const FinPoset& p, std::optional<WayBelowPath> path = std::nullopt);

  WayBelowPath path() const noexcept { return path_; }
  const FinPoset& poset() const noexcept { return *poset_; }

  bool operator()(std::size_t b, std::size_t c) const;
  /// Takes the up-closures of the two subsets.
  bool sets(const ElementSet& up_g, const ElementSet& up_h) const;

  /// {B | B << C}.
  ElementSet way_below_set(std::size_t c) const;
  /// {C | C << C}.
  ElementSet compact() const;

 private:
  const FinPoset* poset_;
  WayBelowPath path_;
  std::vector<DirectedSubset> directed_;
};

bool way_below(const FinPoset& p, std::size_t b, std::size_t c,
               std::optional<WayBelowPath> path = std::nullopt);

Subset compact_elements(const FinPoset& p, std::optional<WayBelowPath> path = std::nullopt);

}  // namespace ordalg::order
