#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ordalg/staralg/gaussian.hpp"

namespace ordalg::staralg {

using Vector = std::vector<GaussianRational>;

/// Subspace of Q(i)^m kept in reduced row echelon form, so two spans over
/// the same m are equal exactly when their rows are.
///
/// Each row also remembers its combination of the vectors passed to insert(),
/// which lets coordinates() express a member in terms of the inserted vectors.
class Span {
 public:
  explicit Span(std::size_t length) : length_(length) {}

  std::size_t length() const noexcept { return length_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<Vector>& rows() const noexcept { return rows_; }

  /// Adds v; returns false when v was already in the span.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;

  /// Coefficients c with v = sum c_k * inserted_k over the independent
  /// inserted vectors (those for which insert() returned true), or nothing
  /// when v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const Span& a, const Span& b) {
    return a.length_ == b.length_ && a.rows_ == b.rows_;
  }

 private:
  /// v minus its projection along the pivots; the combination used is
  /// accumulated into `combo` when given.
  Vector reduce(Vector v, Vector* combo) const;

  std::size_t length_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> combos_;
  std::size_t inserted_ = 0;
};

}  // namespace ordalg::staralg
