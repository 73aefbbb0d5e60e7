#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordalg/partitions/eqrel.hpp"

namespace ordalg::staralg {

/// A map h: Y -> X between finite spectra, h[y] = image of y. A missing entry
/// makes the map partial.
using SpectrumMap = std::vector<std::optional<std::size_t>>;

/// The unital *-homomorphism C(X) -> C(Y) is precomposition with h, and it
/// sends the subalgebra of a partition C of X to the subalgebra of the
/// pulled-back partition: y ~ y' iff h(y) ~_C h(y').
/// Throws NotTotal for a partial map and DimMismatch for images outside X or
/// a partition of the wrong ground set.
partitions::EqRel pushforward_hom(const SpectrumMap& h, std::size_t x_size, const partitions::EqRel& c);

/// Left adjoint of pushforward_hom in the refinement order: the finest
/// partition of X identifying h(y) and h(y') whenever y ~_D y'.
partitions::EqRel pullback_adjoint(const SpectrumMap& h, std::size_t x_size, const partitions::EqRel& d);

/// [0, 2, null] style arrays.
SpectrumMap spectrum_map_from_json(const nlohmann::json& j);

}  // namespace ordalg::staralg
