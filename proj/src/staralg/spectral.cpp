#include "ordalg/staralg/spectral.hpp"

#include <algorithm>

namespace ordalg::staralg {

namespace {

void require_commutative(const StarAlgebra& a) {
  if (!is_commutative(a)) throw StarError(StarErrc::NotCommutative, "algebra is not commutative");
}

void sort_projections(std::vector<Matrix>& ps) {
  std::sort(ps.begin(), ps.end(), [](const Matrix& x, const Matrix& y) {
    return std::lexicographical_compare(y.entries().begin(), y.entries().end(), x.entries().begin(),
                                        x.entries().end());
  });
}

/// Splits every piece along each projection in `splitters`.
std::vector<Matrix> refine(std::size_t n, const std::vector<std::vector<Matrix>>& splitters) {
  std::vector<Matrix> pieces{Matrix::identity(n)};
  for (const auto& family : splitters) {
    std::vector<Matrix> next;
    for (const auto& q : pieces) {
      for (const auto& p : family) {
        Matrix part = q * p;
        if (!part.is_zero()) next.push_back(std::move(part));
      }
    }
    pieces = std::move(next);
  }
  sort_projections(pieces);
  return pieces;
}

Matrix block_sum(const std::vector<Matrix>& ps, const std::vector<std::size_t>& block) {
  Matrix q(ps.front().dim());
  for (std::size_t i : block) q += ps[i];
  return q;
}

/// Coefficients c_0..c_{j-1} with h^j = sum c_i h^i, for the least such j.
std::vector<Rational> minimal_polynomial(const Matrix& h) {
  const std::size_t n = h.dim();
  Span span(n * n);
  Matrix power = Matrix::identity(n);
  span.insert(vectorize(power));
  for (;;) {
    power = power * h;
    if (auto c = span.coordinates(vectorize(power))) {
      std::vector<Rational> out;
      for (const auto& z : *c) {
        if (!z.is_real()) throw StarError(StarErrc::GeneratorNotProjection, "element is not Hermitian");
        out.push_back(z.re());
      }
      return out;
    }
    span.insert(vectorize(power));
  }
}

}  // namespace

std::vector<Rational> rational_spectrum(const Matrix& h) {
  if (!h.is_hermitian()) throw StarError(StarErrc::GeneratorNotProjection, "element is not Hermitian");
  const auto c = minimal_polynomial(h);
  const std::size_t deg = c.size();
  auto value = [&](const Rational& x) {
    Rational v = 1;  // leading coefficient
    for (std::size_t i = deg; i-- > 0;) v = v * x - c[i];
    return v;
  };

  // A rational eigenvalue times the lcm L of the entry denominators is an
  // integer (the eigenvalue of an integral matrix), and every eigenvalue is
  // bounded by the largest absolute row sum.
  mpz_class lcm = 1;
  Rational bound = 0;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < h.dim(); ++j) {
      const auto& z = h(i, j);
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), z.re().get_den_mpz_t());
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), z.im().get_den_mpz_t());
      row += abs(z.re()) + abs(z.im());
    }
    bound = std::max(bound, row);
  }
  const Rational scaled = bound * Rational(lcm);
  const mpz_class limit = scaled.get_num() / scaled.get_den();
  constexpr long kSearchLimit = 10'000'000;
  if (limit > kSearchLimit) {
    throw StarError(StarErrc::SizeLimit, "eigenvalue search range too large");
  }
  std::vector<Rational> roots;
  for (long y = -limit.get_si(); y <= limit.get_si() && roots.size() < deg; ++y) {
    Rational x(mpz_class(y), lcm);
    x.canonicalize();
    if (value(x) == 0) roots.push_back(x);
  }
  if (roots.size() < deg) {
    throw StarError(StarErrc::GeneratorNotProjection, "element has irrational eigenvalues");
  }
  return roots;
}

std::vector<Matrix> minimal_projections(const StarAlgebra& a) {
  require_commutative(a);
  std::vector<std::vector<Matrix>> splitters;
  const Matrix one = Matrix::identity(a.ambient_dim());
  for (std::size_t i = 0; i < a.generators().size(); ++i) {
    const auto& p = a.generators()[i];
    if (!p.is_projection()) {
      throw StarError(StarErrc::GeneratorNotProjection,
                      "generator " + std::to_string(i) + " is not a projection", {i});
    }
    splitters.push_back({p, one - p});
  }
  auto pieces = refine(a.ambient_dim(), splitters);
  if (pieces.size() != a.dim()) {
    throw StarError(StarErrc::InvalidAlgebra, "generators do not span the algebra");
  }
  return pieces;
}

GaussianRational evaluate(const Matrix& p, const Matrix& a) { return (p * a).trace() / p.trace(); }

Spectrum spectrum(const StarAlgebra& a) {
  Spectrum s;
  s.points = minimal_projections(a);
  for (const auto& p : s.points) {
    Vector row;
    for (const auto& b : a.basis()) row.push_back(evaluate(p, b));
    s.table.push_back(std::move(row));
  }
  for (std::size_t b = 0; b < a.basis().size(); ++b) {
    Matrix rebuilt(a.ambient_dim());
    for (std::size_t i = 0; i < s.points.size(); ++i) rebuilt += s.table[i][b] * s.points[i];
    if (!(rebuilt == a.basis()[b])) {
      throw StarError(StarErrc::InvalidAlgebra, "basis element not reconstructed from its characters", {b});
    }
  }
  return s;
}

std::vector<StarAlgebra> atoms(const StarAlgebra& a) {
  const auto ps = minimal_projections(a);
  const std::size_t k = ps.size();
  if (k > kMaxSpectrum) throw StarError(StarErrc::SizeLimit, "spectrum too large", {k});
  const std::size_t n = a.ambient_dim();
  const Matrix one = Matrix::identity(n);
  std::vector<StarAlgebra> out;
  // subsets containing point 0, excluding everything: one per pair {q, 1-q}
  for (unsigned long mask = 1; mask + 1 < (1UL << k); mask += 2) {
    std::vector<std::size_t> block;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1UL) block.push_back(i);
    const Matrix q = block_sum(ps, block);
    out.push_back(StarAlgebra::from_partition_of_unity(n, {q, one - q}).with_generators({q}));
  }
  return out;
}

CLattice c_lattice(const StarAlgebra& a) {
  auto minimal = minimal_projections(a);
  const std::size_t k = minimal.size();
  if (k > kMaxSpectrum) {
    throw StarError(StarErrc::SizeLimit,
                    "spectrum of size " + std::to_string(k) + " exceeds " + std::to_string(kMaxSpectrum),
                    {k});
  }
  const std::size_t n = a.ambient_dim();
  auto parts = partitions::enumerate_partitions(k);
  std::vector<StarAlgebra> nodes;
  std::vector<std::string> labels;
  for (const auto& part : parts) {
    std::vector<Matrix> sums;
    for (const auto& block : part.classes()) sums.push_back(block_sum(minimal, block));
    nodes.push_back(StarAlgebra::from_partition_of_unity(n, sums));
    labels.push_back(part.to_string());
  }
  const std::size_t m = nodes.size();
  const bool verified = k <= kVerifiedLatticeLimit;
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      leq[i][j] = verified ? nodes[i].subalgebra_of(nodes[j]) : parts[j].refines(parts[i]);
    }
  }
  auto poset = order::FinPoset::validate(labels, leq);
  return {std::move(minimal), std::move(parts), std::move(nodes), std::move(poset), verified};
}

StarAlgebra csa_join(const StarAlgebra& c, const StarAlgebra& d, const StarAlgebra& e) {
  if (!is_commutative(e)) throw StarError(StarErrc::AmbientNotCommutative, "ambient algebra is not commutative");
  if (!c.subalgebra_of(e)) throw StarError(StarErrc::NotSubalgebra, "first argument is not inside the ambient algebra");
  if (!d.subalgebra_of(e)) throw StarError(StarErrc::NotSubalgebra, "second argument is not inside the ambient algebra");
  std::vector<Matrix> gens(c.generators());
  gens.insert(gens.end(), d.generators().begin(), d.generators().end());
  return generated_algebra(gens, e.ambient_dim());
}

ProjectionGenerators generated_by_projections(const StarAlgebra& c) {
  require_commutative(c);
  const std::size_t n = c.ambient_dim();
  const auto& stored = c.generators();
  std::vector<Matrix> gens;
  if (!stored.empty() &&
      std::all_of(stored.begin(), stored.end(), [](const Matrix& p) { return p.is_projection(); })) {
    gens = stored;
  } else {
    const Matrix one = Matrix::identity(n);
    const GaussianRational half(Rational(1, 2));
    std::vector<std::vector<Matrix>> splitters;
    for (const auto& b : c.basis()) {
      const Matrix adj = b.adjoint();
      for (const Matrix& h : {half * (b + adj), (half / kI) * (b - adj)}) {
        if (h.is_zero()) continue;
        const auto roots = rational_spectrum(h);
        std::vector<Matrix> eigen;
        for (std::size_t r = 0; r < roots.size(); ++r) {
          Matrix p = one;
          for (std::size_t s = 0; s < roots.size(); ++s) {
            if (s != r) p = p * ((h - one * GaussianRational(roots[s])) * GaussianRational(1 / Rational(roots[r] - roots[s])));
          }
          eigen.push_back(std::move(p));
        }
        splitters.push_back(std::move(eigen));
      }
    }
    gens = refine(n, splitters);
  }
  if (gens.empty()) gens.push_back(Matrix::identity(n));
  ProjectionGenerators out;
  out.generated = generated_algebra(gens, n) == c;
  out.generators = std::move(gens);
  return out;
}

}  // namespace ordalg::staralg
