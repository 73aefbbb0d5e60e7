#include "ordalg/staralg/span.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordalg::staralg {

Vector Span::reduce(Vector v, Vector* combo) const {
  if (v.size() != length_) throw std::invalid_argument("vector length does not match span");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const GaussianRational f = v[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t k = pivots_[r]; k < length_; ++k) {
      if (!rows_[r][k].is_zero()) v[k] -= f * rows_[r][k];
    }
    if (combo) {
      for (std::size_t k = 0; k < combos_[r].size(); ++k) {
        if (!combos_[r][k].is_zero()) (*combo)[k] -= f * combos_[r][k];
      }
    }
  }
  return v;
}

bool Span::insert(const Vector& v) {
  Vector combo(inserted_ + 1);
  combo[inserted_] = 1;
  Vector w = reduce(v, &combo);
  auto lead = std::find_if(w.begin(), w.end(), [](const GaussianRational& z) { return !z.is_zero(); });
  if (lead == w.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(lead - w.begin());
  const GaussianRational inv = GaussianRational(1) / w[pivot];
  for (auto& z : w) if (!z.is_zero()) z *= inv;
  for (auto& z : combo) if (!z.is_zero()) z *= inv;
  for (auto& c : combos_) c.resize(inserted_ + 1);
  ++inserted_;

  // clear the new pivot column from the existing rows
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const GaussianRational f = rows_[r][pivot];
    if (f.is_zero()) continue;
    for (std::size_t k = pivot; k < length_; ++k) {
      if (!w[k].is_zero()) rows_[r][k] -= f * w[k];
    }
    for (std::size_t k = 0; k < combo.size(); ++k) {
      if (!combo[k].is_zero()) combos_[r][k] -= f * combo[k];
    }
  }
  const auto pos = static_cast<std::size_t>(
      std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(w));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
  combos_.insert(combos_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(combo));
  return true;
}

bool Span::contains(const Vector& v) const {
  const Vector w = reduce(v, nullptr);
  return std::all_of(w.begin(), w.end(), [](const GaussianRational& z) { return z.is_zero(); });
}

std::optional<Vector> Span::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  // v = sum_r v[pivot_r] * row_r and row_r = sum_k combos_[r][k] * inserted_k
  Vector out(inserted_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const GaussianRational& f = v[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t k = 0; k < combos_[r].size(); ++k) out[k] += f * combos_[r][k];
  }
  return out;
}

}  // namespace ordalg::staralg
