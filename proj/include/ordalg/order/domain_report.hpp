#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ordalg/order/poset.hpp"
#include "ordalg/order/way_below.hpp"

namespace ordalg::order {

enum class Property {
  Algebraic,
  Continuous,
  MeetContinuous,
  Atomistic,
  QuasiContinuous,
  QuasiAlgebraic,
  OrderScattered,
};

inline constexpr std::array<Property, 7> kAllProperties = {
    Property::Algebraic,       Property::Continuous,     Property::MeetContinuous,
    Property::Atomistic,       Property::QuasiContinuous, Property::QuasiAlgebraic,
    Property::OrderScattered,
};

/// JSON key of a property, e.g. "meet_continuous".
const char* to_string(Property p) noexcept;

/// Counterexample attached to a property that came out false.
///
/// `element` is the offending C; `sets` holds the approximating set, the
/// directed set, the two non-joinable members of fin(C), or the dense chain,
/// depending on the property; `other` is the D of a failed separation.
struct Witness {
  Property property;
  std::optional<std::size_t> element;
  std::optional<std::size_t> other;
  std::vector<Subset> sets;
  std::string detail;
};

struct ReportOptions {
  std::optional<WayBelowPath> path;
  /// Largest |F| enumerated for fin(C)/compfin(C). Defaults to |P| (complete)
  /// for posets of at most kCompleteFinLimit elements and to 2 otherwise.
  std::optional<std::size_t> fin_size_bound;
  /// Enumerate chains and test density instead of the covering-pair shortcut.
  bool generic_chain_search = false;
  /// Throw MeetNotDefined instead of reporting not-applicable.
  bool require_meet_continuity = false;
};

inline constexpr std::size_t kCompleteFinLimit = 12;
inline constexpr std::size_t kDefaultFinBound = 2;

struct DomainReport {
  bool algebraic = false;
  bool continuous = false;
  /// Empty when the poset lacks some binary meet (not applicable).
  std::optional<bool> meet_continuous;
  bool atomistic = false;
  bool quasi_continuous = false;
  bool quasi_algebraic = false;
  bool order_scattered = false;

  std::vector<Witness> witnesses;

  WayBelowPath path = WayBelowPath::Definitional;
  bool meet_semilattice = false;
  std::size_t fin_size_bound = 0;
  /// True when fin(C) enumeration skipped subsets larger than the bound.
  bool fin_bounded = false;
  bool generic_chain_search = false;

  std::optional<bool> flag(Property p) const;
  /// Every applicable flag is true.
  bool all_true() const;
};

DomainReport domain_report(const FinPoset& p, const ReportOptions& options = {});

/// Re-derives the violation a witness claims, independently of the report
/// that produced it. False means the witness does not demonstrate a failure.
bool witness_is_violation(const FinPoset& p, const Witness& w, const ReportOptions& options = {});

/// A chain of at least two elements in which every comparable pair has a
/// chain element strictly between.
bool is_order_dense_chain(const FinPoset& p, const ElementSet& chain);

/// Minimal elements above the bottom, or minimal elements when there is no bottom.
ElementSet atoms(const FinPoset& p);

}  // namespace ordalg::order
