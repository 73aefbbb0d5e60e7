#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordalg/error.hpp"

namespace ordalg::scatter {

enum class TopoErrc { InvalidTopology, BadParameters, ParseError, SizeLimit };

const char* to_string(TopoErrc kind) noexcept;

using TopoError = KindedError<TopoErrc>;

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxPoints = 63;

/// A finite topological space given by its full family of open sets.
class FinTop {
 public:
  /// Checks that the family contains the empty set and the whole space and is
  /// closed under pairwise union and intersection. Duplicates are dropped.
  static FinTop validate(std::vector<std::string> labels, std::vector<Mask> opens);

  static FinTop discrete(std::size_t n);
  static FinTop indiscrete(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  Mask points() const noexcept { return size() == 0 ? 0 : (Mask{1} << size()) - 1; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Mask>& opens() const noexcept { return opens_; }

  bool is_open(Mask s) const;
  bool is_closed(Mask s) const { return is_open(points() & ~s); }
  bool is_clopen(Mask s) const { return is_open(s) && is_closed(s); }
  /// Complement of the union of the opens missing s.
  Mask closure(Mask s) const;
  bool is_isolated(std::size_t x) const { return is_open(Mask{1} << x); }

  /// The subspace on s, points renumbered in increasing order.
  FinTop subspace(Mask s) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Mask> opens_;  // sorted
};

/// The non-isolated points with the induced topology.
FinTop cb_derivative_fin(const FinTop& t);

struct CbRank {
  /// Least n with D^n empty; when never reached, the number of steps until
  /// the derivative stabilized.
  std::size_t rank = 0;
  bool scattered = false;
  /// Stable nonempty residue labels (empty when scattered).
  std::vector<std::string> residue;
  /// Stage at which each original point is isolated; empty for residue points.
  std::vector<std::optional<std::size_t>> stage;
};

CbRank cb_rank_fin(const FinTop& t);
bool is_scattered_fin(const FinTop& t);

/// The closure of every open set is open.
bool is_stonean_fin(const FinTop& t);
/// Quasi-components (intersections of clopens containing a point) are
/// singletons; for finite spaces these are the components.
bool is_totally_disconnected_fin(const FinTop& t);
bool is_hausdorff_fin(const FinTop& t);

struct StoneScatteredReport {
  bool holds = false;
  bool stonean = false;
  bool scattered = false;
  bool hausdorff = false;
  std::vector<std::optional<std::size_t>> stage;
  /// {x} is clopen in the stage-th derivative.
  std::vector<bool> clopen_at_stage;
};

/// holds = stonean and scattered, and in a Hausdorff space additionally every
/// point is a clopen singleton at the stage where it becomes isolated.
StoneScatteredReport stone_scattered_check(const FinTop& t);

/// {"points": [labels], "opens": [[indices], ...]}.
FinTop fintop_from_json(const nlohmann::json& j);
nlohmann::json fintop_to_json(const FinTop& t);

}  // namespace ordalg::scatter
