#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordalg/staralg/matrix.hpp"
#include "ordalg/staralg/span.hpp"

namespace ordalg::staralg {

inline constexpr std::size_t kMaxAlgebraDim = 64;

/// Unital *-subalgebra of M_n over the Gaussian rationals (complex span of a
/// rational basis). The basis is the reduced echelon form of the algebra's
/// vectorized elements, so equal algebras have equal bases. The generators
/// the algebra was built from are kept for the spectral operations.
class StarAlgebra {
 public:
  /// Checks that the span of `basis` contains I and is closed under product
  /// and adjoint; throws InvalidAlgebra otherwise. The basis itself is
  /// remembered as the generating set.
  static StarAlgebra from_basis(std::size_t n, const std::vector<Matrix>& basis);

  /// span{p_1, ..., p_m} for pairwise orthogonal projections summing to I.
  /// Not re-validated: the caller guarantees the hypothesis.
  static StarAlgebra from_partition_of_unity(std::size_t n, const std::vector<Matrix>& projections);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return span_.rank(); }
  const std::vector<Matrix>& basis() const noexcept { return basis_; }
  const std::vector<Matrix>& generators() const noexcept { return generators_; }
  const Span& span() const noexcept { return span_; }

  bool contains(const Matrix& m) const;
  /// this is a subalgebra of `other`.
  bool subalgebra_of(const StarAlgebra& other) const;

  /// Same algebra, remembering `generators`; throws InvalidAlgebra unless
  /// they generate it.
  StarAlgebra with_generators(std::vector<Matrix> generators) const;

  friend bool operator==(const StarAlgebra& a, const StarAlgebra& b) {
    return a.n_ == b.n_ && a.span_ == b.span_;
  }

 private:
  StarAlgebra(std::size_t n, Span span, std::vector<Matrix> generators);

  std::size_t n_;
  Span span_;
  std::vector<Matrix> basis_;
  std::vector<Matrix> generators_;

  friend StarAlgebra generated_algebra(const std::vector<Matrix>&, std::optional<std::size_t>);
};

Vector vectorize(const Matrix& m);
Matrix unvectorize(std::size_t n, const Vector& v);

/// Smallest unital *-subalgebra containing the generators: span growth under
/// adjoints and products until stable. `dim` is needed only when the
/// generator list is empty. Throws DimMismatch and, past kMaxAlgebraDim,
/// SizeLimit.
StarAlgebra generated_algebra(const std::vector<Matrix>& generators,
                              std::optional<std::size_t> dim = std::nullopt);

/// span{I} in M_n.
StarAlgebra scalars(std::size_t n);
/// Diagonal matrices in M_k, generated by E_11..E_kk.
StarAlgebra diagonal_algebra(std::size_t k);

bool is_commutative(const StarAlgebra& a);

/// Validation of the closure invariants: I in span, products and adjoints of
/// basis elements in span.
bool is_closed(const StarAlgebra& a);

nlohmann::json algebra_to_json(const StarAlgebra& a);
/// {"dim": n, "generators": [matrix, ...]}; generates the algebra.
StarAlgebra algebra_from_json(const nlohmann::json& j);

}  // namespace ordalg::staralg
