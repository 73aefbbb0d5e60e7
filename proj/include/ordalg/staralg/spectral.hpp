#pragma once

#include <cstddef>
#include <vector>

#include "ordalg/order/poset.hpp"
#include "ordalg/partitions/eqrel.hpp"
#include "ordalg/staralg/algebra.hpp"

namespace ordalg::staralg {

inline constexpr std::size_t kMaxSpectrum = 8;
/// Up to this spectrum size every inclusion of c_lattice is checked on spans.
inline constexpr std::size_t kVerifiedLatticeLimit = 5;

/// Pairwise orthogonal nonzero projections summing to I, minimal in A, by
/// refining {I} along each generator p into {qp, q(1-p)}. Sorted so that
/// diagonal ones come out as E_11, E_22, ...
/// Throws NotCommutative and GeneratorNotProjection.
std::vector<Matrix> minimal_projections(const StarAlgebra& a);

/// Characters of a commutative projection-generated algebra. Point i is the
/// minimal projection p_i; table[i][b] = chi_i(basis_b) = tr(p_i b) / tr(p_i).
struct Spectrum {
  std::vector<Matrix> points;
  std::vector<Vector> table;
};

/// tr(p a) / tr(p), the coefficient of a on the minimal projection p.
GaussianRational evaluate(const Matrix& p, const Matrix& a);

/// Also checks a = sum_i chi_i(a) p_i for every basis element.
Spectrum spectrum(const StarAlgebra& a);

/// C*(q) = span{q, 1-q} for each nontrivial projection q of A, one per
/// unordered pair {q, 1-q}: 2^(k-1) - 1 algebras.
std::vector<StarAlgebra> atoms(const StarAlgebra& a);

/// The poset of commutative subalgebras of a commutative projection-generated
/// A with spectrum of size k. Node i is the span of the block sums of
/// minimal projections over partitions[i].
struct CLattice {
  std::vector<Matrix> minimal;
  std::vector<partitions::EqRel> partitions;
  std::vector<StarAlgebra> nodes;
  order::FinPoset poset;
  /// Every pair was compared by span containment (k <= kVerifiedLatticeLimit);
  /// otherwise the order was read off the partitions.
  bool containment_verified = false;
};

/// Throws SizeLimit for k > kMaxSpectrum.
CLattice c_lattice(const StarAlgebra& a);

/// C*(C u D) inside a commutative E. Throws AmbientNotCommutative and NotSubalgebra.
StarAlgebra csa_join(const StarAlgebra& c, const StarAlgebra& d, const StarAlgebra& e);

struct ProjectionGenerators {
  bool generated = false;
  std::vector<Matrix> generators;
};

/// Confirms C = C*(Proj(C)). Uses the stored generators when they are
/// projections; otherwise splits along the eigenprojections of the Hermitian
/// parts of the basis, which needs every such element to have a rational
/// spectrum (GeneratorNotProjection if not). Throws NotCommutative.
ProjectionGenerators generated_by_projections(const StarAlgebra& c);

/// Eigenvalues of a Hermitian matrix when they are all rational, ascending;
/// throws GeneratorNotProjection otherwise.
std::vector<Rational> rational_spectrum(const Matrix& h);

}  // namespace ordalg::staralg
