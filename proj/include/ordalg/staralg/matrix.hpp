#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordalg/error.hpp"
#include "ordalg/staralg/gaussian.hpp"

namespace ordalg::staralg {

enum class StarErrc {
  DimMismatch,
  NotCommutative,
  GeneratorNotProjection,
  SizeLimit,
  NotSubalgebra,
  AmbientNotCommutative,
  NotTotal,
  InvalidAlgebra,
  Malformed,
};

using StarError = KindedError<StarErrc>;

const char* to_string(StarErrc kind) noexcept;

inline constexpr std::size_t kMaxAmbientDim = 16;

/// Square matrix with Gaussian-rational entries, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n);
  Matrix(std::size_t n, std::vector<GaussianRational> entries);

  static Matrix identity(std::size_t n);
  /// E_ij.
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j);
  static Matrix diag(const std::vector<GaussianRational>& d);

  std::size_t dim() const noexcept { return n_; }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  GaussianRational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const std::vector<GaussianRational>& entries() const noexcept { return a_; }

  Matrix adjoint() const;
  GaussianRational trace() const;
  bool is_zero() const;
  bool is_hermitian() const { return *this == adjoint(); }
  /// p^2 = p = p*.
  bool is_projection() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const GaussianRational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const GaussianRational& s) { return a *= s; }
  friend Matrix operator*(const GaussianRational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

 private:
  void same_dim(const Matrix& o) const;

  std::size_t n_ = 0;
  std::vector<GaussianRational> a_;
};

bool commute(const Matrix& a, const Matrix& b);

/// Diagonal entries as "diag(1,0,1)" when the matrix is diagonal, otherwise
/// the row list.
std::string to_string(const Matrix& m);

/// Rows of entry strings; numbers are accepted on input.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace ordalg::staralg
