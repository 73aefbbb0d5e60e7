#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordalg/cantor/rational.hpp"
#include "ordalg/error.hpp"

namespace ordalg::cantor {

enum class CantorErrc { InvalidRelation, DepthLimit, AssertionFailed, GridTooCoarse, OutOfRange };

using CantorError = KindedError<CantorErrc>;

const char* to_string(CantorErrc kind) noexcept;

struct Block {
  Rational lo;
  Rational hi;

  friend bool operator==(const Block&, const Block&) = default;
};

/// A closed equivalence relation on [0,1] of the form diagonal plus finitely
/// many squares block x block. Blocks are sorted and pairwise separated by a
/// gap; two blocks sharing an endpoint would be the same class and must be
/// merged first.
class TriRel {
 public:
  /// The diagonal.
  TriRel() = default;

  /// Validates: 0 <= lo < hi <= 1, sorted, separated.
  static TriRel from_blocks(std::vector<Block> blocks);
  /// Merges overlapping and touching intervals into a valid relation.
  static TriRel normalized(std::vector<Block> blocks);

  static TriRel diagonal() { return {}; }
  static TriRel full();
  /// Identifies the points of [lo, hi] with each other.
  static TriRel collapse(const Rational& lo, const Rational& hi);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }

  /// Index of the block containing x, or size() when x is only related to itself.
  std::size_t block_of(const Rational& x) const;
  bool contains(const Rational& x, const Rational& y) const;

  /// Containment as relations.
  bool subset_of(const TriRel& other) const;

  friend bool operator==(const TriRel&, const TriRel&) = default;

 private:
  std::vector<Block> blocks_;
};

TriRel tri_join(const TriRel& x, const TriRel& y);
TriRel tri_meet(const TriRel& x, const TriRel& y);
Rational max_offdiag_width(const TriRel& x);
bool is_full(const TriRel& x);

/// [["lo", "hi"], ...] with exact fraction strings.
nlohmann::json trirel_to_json(const TriRel& x);
TriRel trirel_from_json(const nlohmann::json& j);

std::string to_string(const TriRel& x);

}  // namespace ordalg::cantor
