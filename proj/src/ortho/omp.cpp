#include "ordalg/ortho/omp.hpp"

#include "ordalg/order/io.hpp"

namespace ordalg::ortho {

const char* to_string(OrthoErrc kind) noexcept {
  switch (kind) {
    case OrthoErrc::Malformed: return "Malformed";
    case OrthoErrc::AxiomViolated: return "AxiomViolated";
    case OrthoErrc::SizeLimit: return "SizeLimit";
    case OrthoErrc::NotBoolean: return "NotBoolean";
    case OrthoErrc::NotCommutative: return "NotCommutative";
    case OrthoErrc::IsoFailure: return "IsoFailure";
  }
  return "Unknown";
}

Omp::Omp(order::FinPoset poset, std::vector<std::size_t> ortho)
    : poset_(std::move(poset)), ortho_(std::move(ortho)) {
  const std::size_t n = poset_.size();
  meet_.resize(n * n);
  join_.resize(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      meet_[p * n + q] = poset_.meet(p, q);
      join_[p * n + q] = poset_.join(p, q);
    }
  }
}

OmpTables Omp::tables() const {
  OmpTables t{poset_.labels(), {}, ortho_};
  t.leq.assign(size(), std::vector<bool>(size()));
  for (std::size_t p = 0; p < size(); ++p)
    for (std::size_t q = 0; q < size(); ++q) t.leq[p][q] = leq(p, q);
  return t;
}

namespace {

std::string names(const order::FinPoset& p, std::initializer_list<std::size_t> xs) {
  std::string out;
  for (std::size_t x : xs) out += (out.empty() ? "" : ", ") + p.label(x);
  return out;
}

}  // namespace

Omp validate_omp(const OmpTables& raw) {
  const std::size_t n = raw.labels.size();
  if (n > kMaxOmpSize) throw OrthoError(OrthoErrc::SizeLimit, "more than 64 elements", {n});
  order::FinPoset poset = [&] {
    try {
      return order::FinPoset::validate(raw.labels, raw.leq);
    } catch (const order::PosetError& e) {
      throw OrthoError(OrthoErrc::Malformed, std::string("order table: ") + e.what(), e.witness());
    }
  }();
  if (raw.ortho.size() != n) throw OrthoError(OrthoErrc::Malformed, "ortho table has the wrong length");
  for (std::size_t p = 0; p < n; ++p) {
    if (raw.ortho[p] >= n) throw OrthoError(OrthoErrc::Malformed, "ortho entry out of range", {p});
  }
  const auto top = poset.top();
  if (!top) throw OrthoError(OrthoErrc::Malformed, "no greatest element");
  const auto& o = raw.ortho;
  const std::size_t one = *top;
  const std::size_t zero = o[one];

  for (std::size_t p = 0; p < n; ++p) {
    if (o[o[p]] != p) throw AxiomError(1, "p'' != p at " + names(poset, {p}), {p});
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (poset.leq(p, q) && !poset.leq(o[q], o[p])) {
        throw AxiomError(2, "p <= q but not q' <= p' at " + names(poset, {p, q}), {p, q});
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (poset.join(p, o[p]) != one) throw AxiomError(3, "p v p' != 1 at " + names(poset, {p}), {p});
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (poset.leq(p, o[q]) && !poset.join(p, q)) {
        throw AxiomError(4, "p <= q' but p v q does not exist at " + names(poset, {p, q}), {p, q});
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (poset.leq(o[q], p) && poset.meet(p, q) == zero && p != o[q]) {
        throw AxiomError(5, "p >= q' and p ^ q = 0 but p != q' at " + names(poset, {p, q}), {p, q});
      }
    }
  }
  Omp out(std::move(poset), o);
  out.zero_ = zero;
  out.one_ = one;
  return out;
}

Omp power_set_omp(std::size_t k) {
  if (k > 6) throw OrthoError(OrthoErrc::SizeLimit, "power set too large for 64-bit masks", {k});
  const std::size_t n = std::size_t{1} << k;
  OmpTables t;
  for (std::size_t s = 0; s < n; ++s) {
    std::string label = "{";
    for (std::size_t i = 0; i < k; ++i)
      if ((s >> i) & 1U) label += (label.size() > 1 ? "," : "") + std::to_string(i);
    t.labels.push_back(label + "}");
    t.ortho.push_back((n - 1) ^ s);
  }
  t.leq.assign(n, std::vector<bool>(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t u = 0; u < n; ++u) t.leq[s][u] = (s & u) == s;
  return validate_omp(t);
}

namespace {

// 0, 1, then a_1, a_1', a_2, a_2', ...
OmpTables mo_tables(std::size_t n) {
  OmpTables t;
  t.labels = {"0", "1"};
  t.ortho = {1, 0};
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t a = t.labels.size();
    t.labels.push_back("a" + std::to_string(i));
    t.labels.push_back("a" + std::to_string(i) + "'");
    t.ortho.push_back(a + 1);
    t.ortho.push_back(a);
  }
  const std::size_t size = t.labels.size();
  t.leq.assign(size, std::vector<bool>(size));
  for (std::size_t p = 0; p < size; ++p) {
    t.leq[p][p] = true;
    t.leq[0][p] = true;
    t.leq[p][1] = true;
  }
  return t;
}

}  // namespace

Omp mo_omp(std::size_t n) { return validate_omp(mo_tables(n)); }

OmpTables mutation_fixture(int axiom) {
  switch (axiom) {
    case 1: {
      // a single ortho entry changed: a' := a, so (a')'' = a
      auto t = mo_tables(2);
      t.ortho[2] = 2;
      return t;
    }
    case 2: {
      // the four-element Boolean algebra with 0 <-> a and b <-> 1 swapped
      OmpTables t;
      t.labels = {"0", "a", "b", "1"};
      t.leq = {{true, true, true, true}, {false, true, false, true}, {false, false, true, true},
               {false, false, false, true}};
      t.ortho = {1, 0, 3, 2};
      return t;
    }
    case 3: {
      // MO2 with a and a' both self-orthogonal: an involution, antitone, but a v a = a
      auto t = mo_tables(2);
      t.ortho[2] = 2;
      t.ortho[3] = 3;
      return t;
    }
    case 4: {
      // atoms and coatoms of the subsets of {w,x,y,z}: w <= x' yet w and x
      // have two minimal upper bounds y' and z'
      OmpTables t;
      const char* atoms[] = {"w", "x", "y", "z"};
      t.labels = {"0", "1"};
      for (auto a : atoms) t.labels.push_back(a);
      for (auto a : atoms) t.labels.push_back(std::string(a) + "'");
      t.ortho = {1, 0, 6, 7, 8, 9, 2, 3, 4, 5};
      t.leq.assign(10, std::vector<bool>(10));
      for (std::size_t p = 0; p < 10; ++p) {
        t.leq[p][p] = t.leq[0][p] = t.leq[p][1] = true;
      }
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
          if (a != b) t.leq[2 + a][6 + b] = true;
      return t;
    }
    case 5: {
      // the hexagon 0 < a < b' < 1, 0 < b < a' < 1: an ortholattice that is
      // not orthomodular
      OmpTables t;
      t.labels = {"0", "a", "b", "a'", "b'", "1"};
      t.ortho = {5, 3, 4, 1, 2, 0};
      t.leq.assign(6, std::vector<bool>(6));
      for (std::size_t p = 0; p < 6; ++p) t.leq[p][p] = t.leq[0][p] = t.leq[p][5] = true;
      t.leq[1][4] = true;  // a <= b'
      t.leq[2][3] = true;  // b <= a'
      return t;
    }
    default:
      throw OrthoError(OrthoErrc::Malformed, "axioms are numbered 1 to 5");
  }
}

nlohmann::json omp_to_json(const Omp& p) {
  nlohmann::json j = order::poset_to_json(p.poset());
  j["ortho"] = p.ortho_table();
  return j;
}

OmpTables omp_tables_from_json(const nlohmann::json& j) {
  OmpTables t;
  try {
    if (!j.at("elements").is_array() || !j.at("leq").is_array()) throw std::invalid_argument("bad tables");
    for (const auto& e : j.at("elements")) t.labels.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    for (const auto& row : j.at("leq")) {
      std::vector<bool> r;
      for (const auto& c : row) r.push_back(c.is_boolean() ? c.get<bool>() : c.get<int>() != 0);
      t.leq.push_back(std::move(r));
    }
    for (const auto& o : j.at("ortho")) t.ortho.push_back(o.get<std::size_t>());
  } catch (const std::exception& e) {
    throw OrthoError(OrthoErrc::Malformed, std::string(R"(expected {"elements", "leq", "ortho"}: )") + e.what());
  }
  return t;
}

}  // namespace ordalg::ortho
