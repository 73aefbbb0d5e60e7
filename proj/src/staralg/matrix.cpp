#include "ordalg/staralg/matrix.hpp"

#include <stdexcept>

namespace ordalg::staralg {

const char* to_string(StarErrc kind) noexcept {
  switch (kind) {
    case StarErrc::DimMismatch: return "DimMismatch";
    case StarErrc::NotCommutative: return "NotCommutative";
    case StarErrc::GeneratorNotProjection: return "GeneratorNotProjection";
    case StarErrc::SizeLimit: return "SizeLimit";
    case StarErrc::NotSubalgebra: return "NotSubalgebra";
    case StarErrc::AmbientNotCommutative: return "AmbientNotCommutative";
    case StarErrc::NotTotal: return "NotTotal";
    case StarErrc::InvalidAlgebra: return "InvalidAlgebra";
    case StarErrc::Malformed: return "Malformed";
  }
  return "Unknown";
}

Matrix::Matrix(std::size_t n) : n_(n), a_(n * n) {
  if (n == 0) throw StarError(StarErrc::Malformed, "matrix dimension must be positive");
  if (n > kMaxAmbientDim) {
    throw StarError(StarErrc::SizeLimit,
                    "ambient dimension " + std::to_string(n) + " exceeds " + std::to_string(kMaxAmbientDim),
                    {n});
  }
}

Matrix::Matrix(std::size_t n, std::vector<GaussianRational> entries) : Matrix(n) {
  if (entries.size() != n * n) throw StarError(StarErrc::Malformed, "matrix is not square");
  a_ = std::move(entries);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n);
  m(i, j) = 1;
  return m;
}

Matrix Matrix::diag(const std::vector<GaussianRational>& d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j).conj();
  return out;
}

GaussianRational Matrix::trace() const {
  GaussianRational t;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& z : a_)
    if (!z.is_zero()) return false;
  return true;
}

bool Matrix::is_projection() const { return is_hermitian() && *this * *this == *this; }

void Matrix::same_dim(const Matrix& o) const {
  if (n_ != o.n_) {
    throw StarError(StarErrc::DimMismatch,
                    "dimensions " + std::to_string(n_) + " and " + std::to_string(o.n_) + " differ",
                    {n_, o.n_});
  }
}

Matrix& Matrix::operator+=(const Matrix& o) {
  same_dim(o);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  same_dim(o);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(const GaussianRational& s) {
  for (auto& z : a_) z *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.same_dim(b);
  const std::size_t n = a.n_;
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

bool commute(const Matrix& a, const Matrix& b) { return a * b == b * a; }

std::string to_string(const Matrix& m) {
  bool diagonal = true;
  for (std::size_t i = 0; i < m.dim() && diagonal; ++i)
    for (std::size_t j = 0; j < m.dim() && diagonal; ++j) diagonal = i == j || m(i, j).is_zero();
  std::string out;
  if (diagonal) {
    out = "diag(";
    for (std::size_t i = 0; i < m.dim(); ++i) out += (i ? "," : "") + to_string(m(i, i));
    return out + ")";
  }
  out = "[";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out += i ? ";" : "";
    for (std::size_t j = 0; j < m.dim(); ++j) out += (j ? "," : "") + to_string(m(i, j));
  }
  return out + "]";
}

nlohmann::json matrix_to_json(const Matrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw StarError(StarErrc::Malformed, "matrix must be a nonempty array of rows");
  const std::size_t n = j.size();
  std::vector<GaussianRational> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n) throw StarError(StarErrc::Malformed, "matrix is not square");
    for (const auto& cell : row) {
      try {
        if (cell.is_number_integer()) {
          entries.emplace_back(Rational(cell.get<long>()));
        } else if (cell.is_string()) {
          entries.push_back(parse_gaussian(cell.get<std::string>()));
        } else {
          throw std::invalid_argument("entry must be a string or an integer");
        }
      } catch (const std::invalid_argument& e) {
        throw StarError(StarErrc::Malformed, e.what());
      }
    }
  }
  return Matrix(n, std::move(entries));
}

}  // namespace ordalg::staralg
