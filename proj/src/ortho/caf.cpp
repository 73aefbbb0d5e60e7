#include "ordalg/ortho/caf.hpp"

#include <map>

#include "ordalg/staralg/spectral.hpp"

namespace ordalg::ortho {

using staralg::Matrix;
using staralg::StarAlgebra;

namespace {

std::vector<Matrix> minimal_or_throw(const StarAlgebra& a) {
  try {
    return staralg::minimal_projections(a);
  } catch (const staralg::StarError& e) {
    if (e.kind() == staralg::StarErrc::NotCommutative) throw OrthoError(OrthoErrc::NotCommutative, e.what());
    throw;
  }
}

[[noreturn]] void iso_failure(const std::string& what, std::vector<std::size_t> witness) {
  throw OrthoError(OrthoErrc::IsoFailure, what, std::move(witness));
}

}  // namespace

Omp projection_omp(const StarAlgebra& a, std::vector<Matrix>* projections) {
  const auto ps = minimal_or_throw(a);
  const std::size_t k = ps.size();
  if (k > kMaxCafSpectrum) throw OrthoError(OrthoErrc::SizeLimit, "spectrum too large", {k});
  const std::size_t n = std::size_t{1} << k;
  std::vector<Matrix> qs;
  for (std::size_t s = 0; s < n; ++s) {
    Matrix q(a.ambient_dim());
    for (std::size_t i = 0; i < k; ++i)
      if ((s >> i) & 1U) q += ps[i];
    qs.push_back(std::move(q));
  }
  OmpTables t;
  t.leq.assign(n, std::vector<bool>(n));
  const Matrix one = Matrix::identity(a.ambient_dim());
  for (std::size_t i = 0; i < n; ++i) {
    t.labels.push_back(staralg::to_string(qs[i]));
    for (std::size_t j = 0; j < n; ++j) t.leq[i][j] = qs[i] == qs[i] * qs[j];
    const Matrix c = one - qs[i];
    std::size_t j = 0;
    while (j < n && !(qs[j] == c)) ++j;
    t.ortho.push_back(j);
  }
  if (projections) *projections = qs;
  return validate_omp(t);
}

CafIsoReport verify_caf_iso(const StarAlgebra& a) {
  std::vector<Matrix> proj;
  const Omp omp = projection_omp(a, &proj);
  const auto b = boolean_subalgebras(omp, {PartialPolicy::Strict, kMaxOmpSize});
  const auto c = staralg::c_lattice(a);

  CafIsoReport r;
  r.spectrum = c.minimal.size();
  r.c_nodes = c.nodes.size();
  r.b_nodes = b.subalgebras.size();
  if (r.c_nodes != r.b_nodes) iso_failure("lattice sizes differ", {r.c_nodes, r.b_nodes});

  std::map<Mask, std::size_t> b_index;
  for (std::size_t i = 0; i < b.subalgebras.size(); ++i) b_index[b.subalgebras[i]] = i;

  std::vector<std::size_t> f(c.nodes.size());
  std::vector<bool> hit(b.subalgebras.size());
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    Mask m = 0;
    for (std::size_t e = 0; e < proj.size(); ++e)
      if (c.nodes[i].contains(proj[e])) m |= Mask{1} << e;
    const auto it = b_index.find(m);
    if (it == b_index.end()) iso_failure("Proj(C) is not a Boolean subalgebra for node " + c.poset.label(i), {i});
    if (hit[it->second]) iso_failure("two nodes share Proj(C)", {i, it->second});
    hit[it->second] = true;
    f[i] = it->second;

    // the inverse B -> C*(B)
    std::vector<Matrix> gens;
    for (std::size_t e : members(m)) gens.push_back(proj[e]);
    if (!(staralg::generated_algebra(gens, a.ambient_dim()) == c.nodes[i])) {
      iso_failure("C*(Proj(C)) != C for node " + c.poset.label(i), {i});
    }
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (c.poset.leq(i, j) != b.poset.leq(f[i], f[j])) iso_failure("order not preserved", {i, j});
    }
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    r.correspondence.emplace_back(i, f[i]);
    r.c_labels.push_back(c.poset.label(i));
    r.b_labels.push_back(b.poset.label(f[i]));
  }
  return r;
}

nlohmann::json caf_report_to_json(const CafIsoReport& r) {
  auto pairs = nlohmann::json::array();
  for (std::size_t i = 0; i < r.correspondence.size(); ++i) {
    pairs.push_back({{"c_node", r.correspondence[i].first},
                     {"boolsub", r.correspondence[i].second},
                     {"partition", r.c_labels[i]},
                     {"projections", r.b_labels[i]}});
  }
  return {{"spectrum", r.spectrum}, {"c_nodes", r.c_nodes}, {"b_nodes", r.b_nodes}, {"correspondence", pairs}};
}

StoneSpace stone_space(const Omp& b) {
  const std::size_t n = b.size();
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  if (!is_boolean_subalgebra(b, all)) throw OrthoError(OrthoErrc::NotBoolean, "not a Boolean algebra");
  StoneSpace s;
  for (std::size_t e = 0; e < n; ++e) {
    if (e == b.zero() || !b.leq(b.zero(), e)) continue;
    bool atom = true;
    for (std::size_t f = 0; f < n && atom; ++f) atom = f == e || f == b.zero() || !b.leq(f, e);
    if (atom) s.points.push_back(e);
  }
  const std::size_t m = s.points.size();
  if (m >= 64 || (std::size_t{1} << m) != n) throw OrthoError(OrthoErrc::NotBoolean, "size is not 2^atoms");
  for (std::size_t e = 0; e < n; ++e) {
    Mask c = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (b.leq(s.points[i], e)) c |= Mask{1} << i;
    s.clopen.push_back(c);
  }
  const Mask full = (Mask{1} << m) - 1;
  std::vector<bool> used(n);
  for (std::size_t e = 0; e < n; ++e) {
    if (used[s.clopen[e]]) throw OrthoError(OrthoErrc::NotBoolean, "two elements with the same atoms", {e});
    used[s.clopen[e]] = true;
    if (s.clopen[b.ortho(e)] != (full ^ s.clopen[e])) throw OrthoError(OrthoErrc::NotBoolean, "ortho is not complement", {e});
    for (std::size_t f = 0; f < n; ++f) {
      if (b.leq(e, f) != ((s.clopen[e] & s.clopen[f]) == s.clopen[e])) {
        throw OrthoError(OrthoErrc::NotBoolean, "order is not inclusion of atoms", {e, f});
      }
    }
  }
  return s;
}

}  // namespace ordalg::ortho
