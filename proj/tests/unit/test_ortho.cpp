#include <bit>

#include "doctest.h"
#include "ordalg/order/poset.hpp"
#include "ordalg/ortho/boolsub.hpp"
#include "ordalg/ortho/caf.hpp"
#include "ordalg/ortho/omp.hpp"
#include "ordalg/partitions/eqrel.hpp"
#include "ordalg/staralg/spectral.hpp"

using namespace ordalg::ortho;
using ordalg::staralg::Matrix;

namespace {

int violated_axiom(const OmpTables& t) {
  try {
    validate_omp(t);
  } catch (const AxiomError& e) {
    return e.axiom();
  }
  return 0;
}

// Oracle: scan every subset and apply the definition directly, with P's own
// partial meets and joins and a direct distributivity check.
std::vector<Mask> brute_force_boolsubs(const Omp& p) {
  const std::size_t n = p.size();
  std::vector<Mask> out;
  for (Mask b = 0; b < (Mask{1} << n); ++b) {
    auto in = [&](std::size_t x) { return (b >> x) & 1U; };
    bool ok = in(p.zero()) && in(p.one());
    for (std::size_t x = 0; x < n && ok; ++x) ok = !in(x) || in(p.ortho(x));
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (!in(x) || !in(y)) continue;
        const auto m = p.meet(x, y);
        const auto j = p.join(x, y);
        ok = m && j && in(*m) && in(*j);
      }
    }
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        for (std::size_t z = 0; z < n && ok; ++z)
          if (in(x) && in(y) && in(z))
            ok = *p.meet(x, *p.join(y, z)) == *p.join(*p.meet(x, y), *p.meet(x, z));
    if (ok) out.push_back(b);
  }
  return out;
}

std::vector<Mask> sorted(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("ortho") {
  TEST_CASE("fixtures validate") {
    for (std::size_t k = 0; k <= 4; ++k) CHECK(power_set_omp(k).size() == (std::size_t{1} << k));
    CHECK(mo_omp(2).size() == 6);
    CHECK(mo_omp(3).size() == 8);
    const auto p = power_set_omp(3);
    CHECK(p.zero() == 0);
    CHECK(p.one() == 7);
    CHECK(p.ortho(1) == 6);
    const auto mo = mo_omp(2);
    CHECK(mo.meet(2, 4) == mo.zero());
    CHECK(mo.join(2, 4) == mo.one());
  }

  TEST_CASE("each mutation fixture fails its axiom with a witness") {
    for (int axiom = 1; axiom <= 5; ++axiom) {
      const auto t = mutation_fixture(axiom);
      try {
        validate_omp(t);
        FAIL("fixture validated");
      } catch (const AxiomError& e) {
        CHECK(e.axiom() == axiom);
        CHECK(e.kind() == OrthoErrc::AxiomViolated);
        REQUIRE_FALSE(e.witness().empty());
      }
    }
    // the witnesses name the elements the axiom fails at
    auto witness = [](int axiom) {
      try {
        validate_omp(mutation_fixture(axiom));
      } catch (const AxiomError& e) {
        return e.witness();
      }
      return std::vector<std::size_t>{};
    };
    CHECK(witness(1) == std::vector<std::size_t>{3});     // a1' with (a1')'' = a1
    CHECK(witness(3) == std::vector<std::size_t>{2});     // a1 v a1 = a1
    CHECK(witness(4) == std::vector<std::size_t>{2, 3});  // w <= x' but no w v x
    CHECK(witness(5).size() == 2);
  }

  TEST_CASE("single-entry mutation of MO2 and malformed tables") {
    auto t = mo_omp(2).tables();
    t.ortho[2] = 2;
    CHECK(violated_axiom(t) == 1);
    t = mo_omp(2).tables();
    t.ortho[2] = 2;
    t.ortho[3] = 3;
    CHECK(violated_axiom(t) == 3);
    t = mo_omp(2).tables();
    t.ortho[0] = 9;
    CHECK_THROWS_AS(validate_omp(t), OrthoError);
    t = mo_omp(2).tables();
    t.leq[2][4] = true;
    t.leq[4][2] = true;
    try {
      validate_omp(t);
      FAIL("accepted");
    } catch (const OrthoError& e) {
      CHECK(e.kind() == OrthoErrc::Malformed);
    }
    // no top
    OmpTables no_top{{"a", "b"}, {{true, false}, {false, true}}, {1, 0}};
    CHECK_THROWS_AS(validate_omp(no_top), OrthoError);
  }

  TEST_CASE("JSON round trip") {
    const auto mo = mo_omp(3);
    const auto t = omp_tables_from_json(omp_to_json(mo));
    CHECK(t.labels == mo.tables().labels);
    CHECK(t.leq == mo.tables().leq);
    CHECK(t.ortho == mo.tables().ortho);
    CHECK_THROWS_AS(omp_tables_from_json(nlohmann::json::parse(R"({"elements": [0]})")), OrthoError);
  }

  TEST_CASE("Boolean subalgebras of small OMPs") {
    CHECK(boolean_subalgebras(power_set_omp(3)).subalgebras.size() == 5);
    CHECK(boolean_subalgebras(power_set_omp(1)).subalgebras.size() == 1);
    const auto mo = mo_omp(2);
    const auto b = boolean_subalgebras(mo);
    REQUIRE(b.subalgebras.size() == 3);
    CHECK(describe(mo, b.subalgebras[0]) == "{0,1}");
    CHECK(describe(mo, b.subalgebras[1]) == "{0,1,a1,a1'}");
    CHECK(describe(mo, b.subalgebras[2]) == "{0,1,a2,a2'}");
    // MO2 itself is closed under everything but not distributive
    CHECK_FALSE(is_boolean_subalgebra(mo, 0x3F));
    CHECK(blocks(mo).size() == 2);
    CHECK(blocks(power_set_omp(3)) == std::vector<Mask>{0xFF});
    const auto mo3 = blocks(mo_omp(3));
    CHECK(mo3.size() == 3);
    for (Mask m : mo3) CHECK(std::popcount(m) == 4);
  }

  TEST_CASE("closure search agrees with the subset scan") {
    std::vector<Omp> cases{power_set_omp(1), power_set_omp(2), power_set_omp(3), power_set_omp(4),
                           mo_omp(2), mo_omp(3), mo_omp(4)};
    for (const auto& p : cases) {
      CHECK(sorted(boolean_subalgebras(p).subalgebras) == brute_force_boolsubs(p));
      CHECK(sorted(boolean_subalgebras(p, {PartialPolicy::Lenient, 32}).subalgebras) == brute_force_boolsubs(p));
    }
  }

  TEST_CASE("B(2^k) is the partition lattice and its atoms are {0,p,p',1}") {
    const std::size_t bell[] = {1, 1, 2, 5, 15, 52};
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto p = power_set_omp(k);
      const auto b = boolean_subalgebras(p);
      CHECK(b.subalgebras.size() == bell[k]);
      const auto ref = ordalg::partitions::partition_lattice(k, ordalg::partitions::Orientation::Subalgebra);
      CHECK(ordalg::order::find_order_isomorphism(b.poset, ref.poset).has_value());
      std::size_t atoms = 0;
      for (const auto& [lo, hi] : ordalg::order::hasse(b.poset)) {
        if (lo != 0) continue;
        ++atoms;
        CHECK(std::popcount(b.subalgebras[hi]) == 4);
      }
      CHECK(atoms == (std::size_t{1} << (k - 1)) - 1);
      for (Mask m : b.subalgebras) CHECK(is_boolean_subalgebra(p, m));
    }
  }

  TEST_CASE("size limit") {
    CHECK_THROWS_AS(boolean_subalgebras(power_set_omp(6)), OrthoError);
    CHECK(boolean_subalgebras(power_set_omp(6), {PartialPolicy::Strict, 64}).subalgebras.size() == 203);
  }

  TEST_CASE("even subsets of a 6-set: an OMP that is not a lattice") {
    OmpTables t;
    std::vector<unsigned> sets;
    for (unsigned s = 0; s < 64; ++s)
      if (std::popcount(s) % 2 == 0) sets.push_back(s);
    for (unsigned s : sets) {
      t.labels.push_back(std::to_string(s));
      t.ortho.push_back(static_cast<std::size_t>(std::find(sets.begin(), sets.end(), 63U ^ s) - sets.begin()));
    }
    t.leq.assign(sets.size(), std::vector<bool>(sets.size()));
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = 0; j < sets.size(); ++j) t.leq[i][j] = (sets[i] & sets[j]) == sets[i];
    const auto p = validate_omp(t);
    CHECK(p.size() == 32);
    auto idx = [&](unsigned s) { return static_cast<std::size_t>(std::find(sets.begin(), sets.end(), s) - sets.begin()); };
    CHECK_FALSE(p.join(idx(0b11), idx(0b101)).has_value());

    const auto strict = sorted(boolean_subalgebras(p).subalgebras);
    const auto lenient = sorted(boolean_subalgebras(p, {PartialPolicy::Lenient, 32}).subalgebras);
    CHECK(std::includes(lenient.begin(), lenient.end(), strict.begin(), strict.end()));
    for (Mask m : strict) CHECK(is_boolean_subalgebra(p, m, PartialPolicy::Strict));
    for (Mask m : lenient) CHECK(is_boolean_subalgebra(p, m, PartialPolicy::Lenient));
    // the blocks are the 15 ways to split the 6-set into three pairs
    std::size_t eight = 0;
    for (Mask m : strict) eight += std::popcount(m) == 8;
    CHECK(eight == 15);
    // partitions of the 6-set into even blocks: 1 + 15 (2+4) + 15 (2+2+2)
    CHECK(strict.size() == 31);
    CHECK(lenient == strict);
  }

  TEST_CASE("Proj of a commutative algebra") {
    std::vector<Matrix> ps;
    const auto p = projection_omp(ordalg::staralg::diagonal_algebra(3), &ps);
    CHECK(p.size() == 8);
    CHECK(ps[p.one()] == Matrix::identity(3));
    CHECK(ps[p.zero()].is_zero());
    CHECK(ordalg::order::find_order_isomorphism(p.poset(), power_set_omp(3).poset()).has_value());
    CHECK_THROWS_AS(projection_omp(ordalg::staralg::generated_algebra({Matrix::unit(2, 0, 1)})), OrthoError);
  }

  TEST_CASE("C_AF(A) and B(Proj(A)) are isomorphic") {
    const std::size_t bell[] = {1, 1, 2, 5, 15, 52};
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto r = verify_caf_iso(ordalg::staralg::diagonal_algebra(k));
      CHECK(r.c_nodes == bell[k]);
      CHECK(r.b_nodes == bell[k]);
      CHECK(r.correspondence.size() == bell[k]);
    }
    CHECK(verify_caf_iso(ordalg::staralg::scalars(2)).c_nodes == 1);
    // a non-diagonal algebra: projections onto (1,1) and (1,-1) plus a corner
    const ordalg::staralg::GaussianRational h(ordalg::staralg::Rational(1, 2));
    const Matrix p(3, {h, h, 0, h, h, 0, 0, 0, 0});
    const auto a = ordalg::staralg::generated_algebra({p, Matrix::unit(3, 2, 2)});
    const auto r = verify_caf_iso(a);
    CHECK(r.c_nodes == 5);
    CHECK(caf_report_to_json(r).at("correspondence").size() == 5);
  }

  TEST_CASE("Stone spaces") {
    CHECK(stone_space(power_set_omp(3)).points.size() == 3);
    CHECK(stone_space(power_set_omp(0)).points.empty());
    const auto s = stone_space(power_set_omp(4));
    CHECK(s.points.size() == 4);
    CHECK(s.clopen.size() == 16);
    std::vector<Mask> c(s.clopen);
    CHECK(sorted(c).back() == 15);
    try {
      stone_space(mo_omp(2));
      FAIL("MO2 accepted");
    } catch (const OrthoError& e) {
      CHECK(e.kind() == OrthoErrc::NotBoolean);
    }
  }
}
