#include <random>
#include <set>

#include "doctest.h"
#include "ordalg/order/domain_report.hpp"
#include "ordalg/order/io.hpp"
#include "ordalg/order/poset.hpp"
#include "ordalg/order/topology.hpp"
#include "ordalg/order/way_below.hpp"
#include "ordalg/partitions/eqrel.hpp"
#include "support.hpp"

using namespace ordalg::order;
using ordalg::partitions::EqRel;
using ordalg::partitions::Orientation;
using ordalg::partitions::partition_lattice;

namespace {

PosetErrc validation_error(std::vector<std::vector<bool>> table) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < table.size(); ++i) labels.push_back(std::to_string(i));
  try {
    FinPoset::validate(labels, table);
  } catch (const PosetError& e) {
    return e.kind();
  }
  FAIL("table was accepted");
  return PosetErrc::Malformed;
}

}  // namespace

TEST_SUITE("order") {
  TEST_CASE("validate accepts a 3-chain") {
    const auto p = validate_poset({"0", "1", "2"}, {{true, true, true}, {false, true, true},
                                                    {false, false, true}});
    CHECK(p.size() == 3);
    CHECK(p.bottom() == 0);
    CHECK(p.top() == 2);
  }

  TEST_CASE("validate reports the first violation") {
    CHECK(validation_error({{true, true}, {true, true}}) == PosetErrc::NotAntisymmetric);
    CHECK(validation_error({{true, true, false}, {false, true, true}, {false, false, true}}) ==
          PosetErrc::NotTransitive);
    CHECK(validation_error({{false}}) == PosetErrc::NotReflexive);
    CHECK(validation_error({}) == PosetErrc::Empty);
    CHECK(validation_error({{true, false}}) == PosetErrc::Malformed);

    try {
      validate_poset({"a", "b", "c"},
                     {{true, true, false}, {false, true, true}, {false, false, true}});
    } catch (const PosetError& e) {
      CHECK(e.witness() == std::vector<std::size_t>{0, 1, 2});
    }
  }

  TEST_CASE("lub") {
    const auto c3 = chain(3);
    const std::vector<std::size_t> s{0, 1};
    CHECK(lub(c3, s) == 1);
    CHECK(lub(c3, std::vector<std::size_t>{}) == 0);
    const auto a2 = antichain(2);
    CHECK_FALSE(lub(a2, std::vector<std::size_t>{0, 1}).has_value());
    CHECK_FALSE(a2.bottom().has_value());
  }

  TEST_CASE("lub in the refinement lattice of a 3-set matches brute force") {
    // oracle: relations as pair sets, least upper bound by scanning all five
    const auto rels = testsupport::brute_force_equivalences(3);
    REQUIRE(rels.size() == 5);
    auto pairs_of = [](const EqRel& r) {
      testsupport::Pairs out;
      for (std::size_t x = 0; x < r.ground_size(); ++x)
        for (std::size_t y = 0; y < r.ground_size(); ++y)
          if (r.related(x, y)) out.emplace(x, y);
      return out;
    };
    const auto a = EqRel::from_classes(3, {{0, 1}, {2}});
    const auto b = EqRel::from_classes(3, {{0}, {1, 2}});
    std::vector<testsupport::Pairs> ubs;
    for (const auto& r : rels) {
      if (testsupport::subset_of(pairs_of(a), r) && testsupport::subset_of(pairs_of(b), r)) ubs.push_back(r);
    }
    testsupport::Pairs least;
    for (const auto& u : ubs) {
      bool is_least = true;
      for (const auto& v : ubs) is_least = is_least && testsupport::subset_of(u, v);
      if (is_least) least = u;
    }
    CHECK(least.size() == 9);  // the one-block relation

    const auto lat = partition_lattice(3, Orientation::Refinement);
    const std::vector<std::size_t> s{lat.index_of(a), lat.index_of(b)};
    const auto sup = lub(lat.poset, s);
    REQUIRE(sup.has_value());
    CHECK(pairs_of(lat.partitions[*sup]) == least);
    CHECK(lat.partitions[*sup] == EqRel::full(3));
  }

  TEST_CASE("way below on chains") {
    const auto c3 = chain(3);
    CHECK(way_below(c3, 0, 2));
    CHECK_FALSE(way_below(c3, 2, 0));
    CHECK(way_below(c3, 0, 2, WayBelowPath::FiniteFastPath));
    CHECK_THROWS_AS(way_below(c3, 0, 7), PosetError);
  }

  TEST_CASE("way below on the partition lattice of a 4-set is the order") {
    const auto lat = partition_lattice(4, Orientation::Refinement);
    REQUIRE(lat.poset.size() == 15);
    const WayBelow definitional(lat.poset, WayBelowPath::Definitional);
    const WayBelow fast(lat.poset, WayBelowPath::FiniteFastPath);
    for (std::size_t b = 0; b < 15; ++b) {
      for (std::size_t c = 0; c < 15; ++c) {
        CHECK(definitional(b, c) == lat.poset.leq(b, c));
        CHECK(fast(b, c) == definitional(b, c));
      }
    }
  }

  TEST_CASE("definitional way below refuses large posets") {
    const auto c = chain(kDefinitionalLimit + 1);
    CHECK_THROWS_AS(WayBelow(c, WayBelowPath::Definitional), PosetError);
    CHECK(WayBelow(c).path() == WayBelowPath::FiniteFastPath);
  }

  TEST_CASE("property: way below equals order on random posets") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + rng() % 8;
      const auto table = testsupport::random_order_table(n, 0.35, rng);
      std::vector<std::string> labels(n, "x");
      const auto p = FinPoset::validate(labels, table);
      const WayBelow wb(p, WayBelowPath::Definitional);
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          const bool oracle = testsupport::brute_force_way_below(table, b, c);
          CHECK(wb(b, c) == oracle);
          CHECK(oracle == table[b][c]);
        }
      }
      CHECK(compact_elements(p).size() == n);
    }
  }

  TEST_CASE("compact elements") {
    CHECK(compact_elements(chain(3)) == Subset{0, 1, 2});
    CHECK(compact_elements(chain(1)) == Subset{0});
    const auto lat = partition_lattice(3, Orientation::Subalgebra);
    CHECK(compact_elements(lat.poset, WayBelowPath::Definitional).size() == 5);
  }

  TEST_CASE("domain report on partition lattices") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto o : {Orientation::Refinement, Orientation::Subalgebra}) {
        const auto lat = partition_lattice(n, o);
        const auto r = domain_report(lat.poset);
        CHECK(r.algebraic);
        CHECK(r.continuous);
        CHECK(r.meet_continuous == true);
        CHECK(r.atomistic);  // atomistic and coatomistic, so both orientations
        CHECK(r.quasi_continuous);
        CHECK(r.quasi_algebraic);
        CHECK(r.order_scattered);
        CHECK(r.witnesses.empty());
      }
    }
    const auto lat3 = partition_lattice(3, Orientation::Subalgebra);
    const auto r = domain_report(lat3.poset);
    CHECK(r.path == WayBelowPath::Definitional);
    CHECK_FALSE(r.fin_bounded);
    CHECK(r.all_true());
  }

  TEST_CASE("domain report on a 5-set lattice takes the fast path and is bounded") {
    const auto lat = partition_lattice(5, Orientation::Subalgebra);
    const auto r = domain_report(lat.poset);
    CHECK(r.path == WayBelowPath::FiniteFastPath);
    CHECK(r.fin_bounded);
    CHECK(r.fin_size_bound == kDefaultFinBound);
    CHECK(r.all_true());
  }

  TEST_CASE("two atoms over a bottom") {
    const auto p = antichain_with_bottom(2);
    const auto r = domain_report(p);
    CHECK(r.atomistic);
    CHECK(r.algebraic);
    CHECK(r.meet_continuous.value_or(true));
  }

  TEST_CASE("meet-continuity is not applicable without binary meets") {
    const auto a = antichain(2);
    const auto r = domain_report(a);
    CHECK_FALSE(r.meet_continuous.has_value());
    CHECK_FALSE(r.meet_semilattice);
    ReportOptions strict;
    strict.require_meet_continuity = true;
    try {
      domain_report(a, strict);
      FAIL("expected MeetNotDefined");
    } catch (const PosetError& e) {
      CHECK(e.kind() == PosetErrc::MeetNotDefined);
    }
  }

  TEST_CASE("false flags carry witnesses that re-check") {
    // the top of a 3-chain is not a join of atoms
    const auto c3 = chain(3);
    const auto r = domain_report(c3);
    CHECK_FALSE(r.atomistic);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].property == Property::Atomistic);
    CHECK(r.witnesses[0].element == 2);
    CHECK(witness_is_violation(c3, r.witnesses[0]));

    // witnesses that do not demonstrate anything are rejected
    CHECK_FALSE(witness_is_violation(c3, Witness{Property::Atomistic, 1, {}, {}, ""}));
    CHECK_FALSE(witness_is_violation(c3, Witness{Property::Algebraic, 2, {}, {}, ""}));
    CHECK_FALSE(witness_is_violation(c3, Witness{Property::OrderScattered, {}, {}, {{0, 1, 2}}, ""}));
    CHECK_FALSE(witness_is_violation(c3, Witness{Property::QuasiContinuous, 2, 1, {}, ""}));
    CHECK_FALSE(witness_is_violation(c3, Witness{Property::MeetContinuous, 2, {}, {{0, 1}}, ""}));
  }

  TEST_CASE("property: random posets report consistent flags") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
      const auto p = testsupport::random_poset(1 + rng() % 7, 0.4, rng);
      ReportOptions opts;
      opts.generic_chain_search = true;
      const auto r = domain_report(p, opts);
      CHECK(r.algebraic);
      CHECK(r.continuous);
      CHECK(r.quasi_continuous);
      CHECK(r.quasi_algebraic);
      CHECK(r.order_scattered);
      if (r.meet_semilattice) CHECK(r.meet_continuous == true);
      for (const auto& w : r.witnesses) CHECK(witness_is_violation(p, w, opts));
      CHECK(r.atomistic == r.witnesses.empty());
    }
  }

  TEST_CASE("no finite chain is order dense") {
    const auto c = chain(5);
    CHECK_FALSE(is_order_dense_chain(c, c.full_set()));
    ElementSet two = c.empty_set();
    two.set(1);
    two.set(3);
    CHECK_FALSE(is_order_dense_chain(c, two));
  }

  TEST_CASE("Scott and Lawson opens") {
    const auto c2 = chain(2);
    const auto scott = scott_opens(c2);
    const std::set<ElementSet> expected{ElementSet(2, 0UL), ElementSet(2, 2UL), ElementSet(2, 3UL)};
    CHECK(std::set<ElementSet>(scott.begin(), scott.end()) == expected);
    CHECK(lawson_opens(c2).size() == 4);
    CHECK(scott_opens(antichain(3)).size() == 8);
  }

  TEST_CASE("property: Scott opens form a topology, Lawson opens are discrete") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
      const auto p = testsupport::random_poset(1 + rng() % 6, 0.4, rng);
      const auto scott = scott_opens(p);
      CHECK(is_topology(p.size(), scott));
      for (const auto& u : scott) CHECK(p.up_closure(u) == u);
      // finite posets: Scott opens are exactly the up-sets
      std::size_t upsets = 0;
      for (unsigned long m = 0; m < (1UL << p.size()); ++m) {
        const ElementSet s(p.size(), m);
        if (p.up_closure(s) == s) ++upsets;
      }
      CHECK(scott.size() == upsets);
      const auto lawson = lawson_opens(p);
      CHECK(is_topology(p.size(), lawson));
      CHECK(is_discrete(p.size(), lawson));
    }
  }

  TEST_CASE("hasse") {
    CHECK(hasse(chain(3)) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
    CHECK(hasse(chain(1)).empty());
    const auto lat = partition_lattice(3, Orientation::Refinement);
    CHECK(testsupport::brute_force_cover_count(lat.poset) == 6);
    CHECK(hasse(lat.poset).size() == 6);
  }

  TEST_CASE("dual and isomorphism search") {
    const auto ref = partition_lattice(4, Orientation::Refinement);
    const auto sub = partition_lattice(4, Orientation::Subalgebra);
    CHECK(ref.poset.dual() == sub.poset);
    CHECK(find_order_isomorphism(chain(3), chain(3)).has_value());
    CHECK_FALSE(find_order_isomorphism(chain(3), antichain_with_bottom(2)).has_value());
    // the partition lattice is self-dual only for n <= 2
    CHECK_FALSE(find_order_isomorphism(ref.poset, sub.poset).has_value());
  }

  TEST_CASE("JSON and DOT round trip") {
    const auto lat = partition_lattice(3, Orientation::Subalgebra);
    const auto j = poset_to_json(lat.poset);
    CHECK(poset_from_json(j) == lat.poset);
    const auto dot = to_dot(lat.poset);
    CHECK(dot.find("digraph") == 0);
    std::size_t edges = 0;
    for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1)) ++edges;
    CHECK(edges == 6);
    CHECK(truncate_label(std::string(50, 'x')).size() == kDotLabelWidth);
    const auto rj = report_to_json(lat.poset, domain_report(lat.poset));
    for (const char* key : {"algebraic", "continuous", "meet_continuous", "atomistic",
                            "quasi_continuous", "quasi_algebraic", "order_scattered"}) {
      CHECK(rj.at(key) == true);
    }
  }
}
