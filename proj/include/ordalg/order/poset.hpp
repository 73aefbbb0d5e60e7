#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ordalg/error.hpp"

namespace ordalg::order {

/// Subset of a poset's elements, one bit per element index.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;
/// Subset as a sorted list of element indices.
using Subset = std::vector<std::size_t>;

enum class PosetErrc {
  Empty,
  Malformed,
  NotReflexive,
  NotAntisymmetric,
  NotTransitive,
  ElementNotInPoset,
  MeetNotDefined,
  SizeLimit,
};

using PosetError = KindedError<PosetErrc>;

const char* to_string(PosetErrc kind) noexcept;

/// A finite partially ordered set stored as up-set and down-set bit rows.
///
/// Instances only come out of `validate`, so every FinPoset in the program is
/// nonempty, reflexive, antisymmetric and transitive.
class FinPoset {
 public:
  /// Checks reflexivity, then antisymmetry, then transitivity, and reports the
  /// first violation in lexicographic index order.
  static FinPoset validate(std::vector<std::string> labels,
                           const std::vector<std::vector<bool>>& leq);

  /// Same, with `up[i]` holding the set {j | i <= j}.
  static FinPoset validate(std::vector<std::string> labels, std::vector<ElementSet> up);

  /// Builds the table by evaluating `leq(i, j)` for every pair, then validates.
  template <typename Leq>
  static FinPoset from_relation(std::vector<std::string> labels, Leq&& leq) {
    const std::size_t n = labels.size();
    std::vector<ElementSet> up(n, ElementSet(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (leq(i, j)) up[i].set(j);
      }
    }
    return validate(std::move(labels), std::move(up));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  bool less(std::size_t i, std::size_t j) const { return i != j && up_[i].test(j); }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

  const ElementSet& up(std::size_t i) const { return up_[i]; }
  const ElementSet& down(std::size_t i) const { return down_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Throws ElementNotInPoset when `i` is out of range.
  void check_element(std::size_t i) const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ElementSet(size()).set(); }
  ElementSet to_set(std::span<const std::size_t> elements) const;
  static Subset to_subset(const ElementSet& set);

  ElementSet upper_bounds(const ElementSet& s) const;
  ElementSet lower_bounds(const ElementSet& s) const;
  ElementSet up_closure(const ElementSet& s) const;
  ElementSet down_closure(const ElementSet& s) const;

  /// Least upper bound; the empty set has the bottom element as its lub.
  std::optional<std::size_t> lub(const ElementSet& s) const;
  std::optional<std::size_t> glb(const ElementSet& s) const;
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;

  std::optional<std::size_t> bottom() const { return lub(empty_set()); }
  std::optional<std::size_t> top() const { return glb(empty_set()); }

  /// Nonempty, and every pair has an upper bound inside the set.
  bool is_directed(const ElementSet& s) const;
  bool is_chain(const ElementSet& s) const;
  bool is_meet_semilattice() const;

  /// Maximal / minimal elements of a subset.
  ElementSet maximal(const ElementSet& s) const;
  ElementSet minimal(const ElementSet& s) const;

  FinPoset dual() const;

  friend bool operator==(const FinPoset& a, const FinPoset& b) { return a.up_ == b.up_; }

 private:
  FinPoset(std::vector<std::string> labels, std::vector<ElementSet> up,
           std::vector<ElementSet> down)
      : labels_(std::move(labels)), up_(std::move(up)), down_(std::move(down)) {}

  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

/// Free-function form of FinPoset::validate for table input.
inline FinPoset validate_poset(std::vector<std::string> labels,
                               const std::vector<std::vector<bool>>& leq) {
  return FinPoset::validate(std::move(labels), leq);
}

std::optional<std::size_t> lub(const FinPoset& p, std::span<const std::size_t> s);

/// Cover pairs (i, j): i < j with nothing strictly between.
std::vector<std::pair<std::size_t, std::size_t>> hasse(const FinPoset& p);

/// A bijection between element indices that preserves and reflects order.
bool is_order_isomorphism(const FinPoset& a, const FinPoset& b,
                          std::span<const std::size_t> mapping);

/// Backtracking search for an order isomorphism; empty when none exists.
std::optional<std::vector<std::size_t>> find_order_isomorphism(const FinPoset& a,
                                                               const FinPoset& b);

/// Fixtures.
FinPoset chain(std::size_t n);
FinPoset antichain(std::size_t n);
/// n pairwise incomparable atoms above a common bottom (bottom is index 0).
FinPoset antichain_with_bottom(std::size_t n);

}  // namespace ordalg::order
