#include "ordalg/staralg/algebra.hpp"

#include <deque>

namespace ordalg::staralg {

Vector vectorize(const Matrix& m) { return m.entries(); }

Matrix unvectorize(std::size_t n, const Vector& v) { return Matrix(n, v); }

StarAlgebra::StarAlgebra(std::size_t n, Span span, std::vector<Matrix> generators)
    : n_(n), span_(std::move(span)), generators_(std::move(generators)) {
  for (const auto& row : span_.rows()) basis_.push_back(unvectorize(n_, row));
}

StarAlgebra StarAlgebra::from_basis(std::size_t n, const std::vector<Matrix>& basis) {
  Span span(n * n);
  for (const auto& m : basis) {
    if (m.dim() != n) throw StarError(StarErrc::DimMismatch, "basis element of wrong dimension");
    span.insert(vectorize(m));
  }
  StarAlgebra a(n, std::move(span), {});
  if (!is_closed(a)) throw StarError(StarErrc::InvalidAlgebra, "span is not a unital *-algebra");
  a.generators_ = a.basis_;
  return a;
}

StarAlgebra StarAlgebra::from_partition_of_unity(std::size_t n, const std::vector<Matrix>& projections) {
  Span span(n * n);
  for (const auto& p : projections) span.insert(vectorize(p));
  return StarAlgebra(n, std::move(span), projections);
}

bool StarAlgebra::contains(const Matrix& m) const {
  return m.dim() == n_ && span_.contains(vectorize(m));
}

bool StarAlgebra::subalgebra_of(const StarAlgebra& other) const {
  if (n_ != other.n_ || dim() > other.dim()) return false;
  for (const auto& b : basis_)
    if (!other.contains(b)) return false;
  return true;
}

StarAlgebra StarAlgebra::with_generators(std::vector<Matrix> generators) const {
  if (!(generated_algebra(generators, n_) == *this)) {
    throw StarError(StarErrc::InvalidAlgebra, "generators do not generate the algebra");
  }
  StarAlgebra out = *this;
  out.generators_ = std::move(generators);
  return out;
}

StarAlgebra generated_algebra(const std::vector<Matrix>& generators, std::optional<std::size_t> dim) {
  if (generators.empty() && !dim) {
    throw StarError(StarErrc::DimMismatch, "dimension required for an empty generator list");
  }
  const std::size_t n = dim ? *dim : generators.front().dim();
  for (const auto& g : generators) {
    if (g.dim() != n) {
      throw StarError(StarErrc::DimMismatch, "generators of different dimensions", {n, g.dim()});
    }
  }
  Span span(n * n);
  std::vector<Matrix> members;
  std::deque<std::size_t> fresh;
  auto add = [&](const Matrix& m) {
    if (!span.insert(vectorize(m))) return;
    if (span.rank() > kMaxAlgebraDim) {
      throw StarError(StarErrc::SizeLimit,
                      "generated algebra exceeds dimension " + std::to_string(kMaxAlgebraDim));
    }
    members.push_back(m);
    fresh.push_back(members.size() - 1);
  };
  add(Matrix::identity(n));
  for (const auto& g : generators) {
    add(g);
    add(g.adjoint());
  }
  // every product of two members ends up tested once one of them is fresh
  while (!fresh.empty()) {
    const std::size_t i = fresh.front();
    fresh.pop_front();
    add(members[i].adjoint());
    for (std::size_t j = 0; j <= i; ++j) {
      add(members[i] * members[j]);
      add(members[j] * members[i]);
    }
  }
  return StarAlgebra(n, std::move(span), generators);
}

StarAlgebra scalars(std::size_t n) { return generated_algebra({}, n); }

StarAlgebra diagonal_algebra(std::size_t k) {
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(Matrix::unit(k, i, i));
  return generated_algebra(gens);
}

bool is_commutative(const StarAlgebra& a) {
  const auto& b = a.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!commute(b[i], b[j])) return false;
  return true;
}

bool is_closed(const StarAlgebra& a) {
  const auto& b = a.basis();
  if (!a.contains(Matrix::identity(a.ambient_dim()))) return false;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!a.contains(b[i].adjoint())) return false;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!a.contains(b[i] * b[j])) return false;
  }
  return true;
}

nlohmann::json algebra_to_json(const StarAlgebra& a) {
  auto basis = nlohmann::json::array();
  for (const auto& m : a.basis()) basis.push_back(matrix_to_json(m));
  auto gens = nlohmann::json::array();
  for (const auto& m : a.generators()) gens.push_back(matrix_to_json(m));
  return {{"dim", a.ambient_dim()}, {"algebra_dim", a.dim()}, {"generators", gens}, {"basis", basis}};
}

StarAlgebra algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.at("generators").is_array()) {
    throw StarError(StarErrc::Malformed, R"(expected {"dim": n, "generators": [...]})");
  }
  std::vector<Matrix> gens;
  for (const auto& g : j.at("generators")) gens.push_back(matrix_from_json(g));
  std::optional<std::size_t> dim;
  if (j.contains("dim")) {
    if (!j.at("dim").is_number_unsigned()) throw StarError(StarErrc::Malformed, "dim must be a positive integer");
    dim = j.at("dim").get<std::size_t>();
  }
  if (dim && !gens.empty() && gens.front().dim() != *dim) {
    throw StarError(StarErrc::DimMismatch, "dim does not match the generators");
  }
  return generated_algebra(gens, dim);
}

}  // namespace ordalg::staralg
