#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordalg/ortho/boolsub.hpp"
#include "ordalg/ortho/omp.hpp"
#include "ordalg/staralg/algebra.hpp"

namespace ordalg::ortho {

inline constexpr std::size_t kMaxCafSpectrum = 6;

/// Proj(A) for a commutative projection-generated A, built from the
/// matrices: p <= q iff p = pq, p' = 1 - p. `projections` receives element i.
Omp projection_omp(const staralg::StarAlgebra& a, std::vector<staralg::Matrix>* projections = nullptr);

struct CafIsoReport {
  std::size_t spectrum = 0;
  std::size_t c_nodes = 0;
  std::size_t b_nodes = 0;
  /// (c_lattice node, Boolean subalgebra) pairs of C -> Proj(C).
  std::vector<std::pair<std::size_t, std::size_t>> correspondence;
  std::vector<std::string> c_labels;
  std::vector<std::string> b_labels;
};

/// Builds c_lattice(A) and B(Proj(A)) independently and checks that
/// C -> Proj(C) is a bijection, monotone both ways, inverted by B -> C*(B).
/// Throws NotCommutative, SizeLimit (spectrum > kMaxCafSpectrum) and IsoFailure.
CafIsoReport verify_caf_iso(const staralg::StarAlgebra& a);

nlohmann::json caf_report_to_json(const CafIsoReport& r);

/// Points are the atoms of a finite Boolean algebra; every subset is clopen.
/// clopen[e] is the set of atoms below element e (bit i = points[i]).
struct StoneSpace {
  std::vector<std::size_t> points;
  std::vector<Mask> clopen;
};

/// Throws NotBoolean unless e -> clopen[e] is an isomorphism onto the
/// power set of the atoms.
StoneSpace stone_space(const Omp& b);

}  // namespace ordalg::ortho
