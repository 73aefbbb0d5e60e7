#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordalg/error.hpp"
#include "ordalg/order/poset.hpp"

namespace ordalg::partitions {

enum class PartitionErrc { GroundMismatch, SizeLimit, OutOfRange, InvalidClasses };

using PartitionError = KindedError<PartitionErrc>;

const char* to_string(PartitionErrc kind) noexcept;

/// An equivalence relation on {0, ..., n-1}, stored as its classes.
///
/// Canonical form: each class sorted ascending, classes sorted by least
/// member. Two relations are equal iff their class lists are equal.
class EqRel {
 public:
  EqRel() = default;

  /// Validates that the classes are nonempty, disjoint and cover the ground set.
  static EqRel from_classes(std::size_t n, std::vector<std::vector<std::size_t>> classes);
  /// `labels[x]` is any block identifier for x; equal identifiers share a class.
  static EqRel from_block_labels(std::span<const std::size_t> labels);

  /// The diagonal: every point alone.
  static EqRel discrete(std::size_t n);
  /// One class holding everything.
  static EqRel full(std::size_t n);

  std::size_t ground_size() const noexcept { return block_.size(); }
  std::size_t num_classes() const noexcept { return classes_.size(); }
  const std::vector<std::vector<std::size_t>>& classes() const noexcept { return classes_; }
  std::size_t block_of(std::size_t x) const { return block_.at(x); }
  bool related(std::size_t x, std::size_t y) const { return block_.at(x) == block_.at(y); }

  /// This relation is contained in `coarser` (as a set of pairs).
  bool refines(const EqRel& coarser) const;

  /// "{0,1}{2}".
  std::string to_string() const;

  friend bool operator==(const EqRel&, const EqRel&) = default;
  friend auto operator<=>(const EqRel& a, const EqRel& b) { return a.classes_ <=> b.classes_; }

 private:
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> block_;
};

/// Smallest equivalence relation containing both.
EqRel join(const EqRel& r, const EqRel& s);
/// Intersection.
EqRel meet(const EqRel& r, const EqRel& s);

/// K collapsed to one class, singletons elsewhere (the diagonal when |K| <= 1).
EqRel collapse(std::size_t n, std::span<const std::size_t> k);

struct Quotient {
  std::size_t points = 0;
  /// x maps to the index of its class.
  std::vector<std::size_t> projection;
};

Quotient quotient(const EqRel& r);

/// All partitions of an n-set in restricted-growth-string order.
std::vector<EqRel> enumerate_partitions(std::size_t n);

/// Ordering convention of a partition lattice.
///
/// Refinement: R <= S iff R is contained in S; bottom is the diagonal.
/// Subalgebra: R <= S iff S is contained in R, matching the inclusion of the
/// function algebras constant on classes; bottom is the one-class partition.
enum class Orientation { Refinement, Subalgebra };

const char* to_string(Orientation o) noexcept;
Orientation orientation_from_string(const std::string& s);

inline constexpr std::size_t kDefaultMaxGround = 8;

struct PartitionLattice {
  Orientation orientation;
  std::vector<EqRel> partitions;
  order::FinPoset poset;

  std::size_t index_of(const EqRel& r) const;
};

/// Bell(n) elements, labelled by class lists. Throws SizeLimit above max_n.
PartitionLattice partition_lattice(std::size_t n, Orientation orientation,
                                   std::size_t max_n = kDefaultMaxGround);

/// {"n": int, "classes": [[ints]]}
EqRel eqrel_from_json(const nlohmann::json& j);
nlohmann::json eqrel_to_json(const EqRel& r);

}  // namespace ordalg::partitions
