#include <random>

#include "doctest.h"
#include "ordalg/order/domain_report.hpp"
#include "ordalg/partitions/eqrel.hpp"
#include "support.hpp"

using namespace ordalg::partitions;
using testsupport::Pairs;
using testsupport::pairs_of;

TEST_SUITE("partitions") {
  TEST_CASE("join and meet on small examples") {
    const auto a = EqRel::from_classes(4, {{0, 1}, {2}, {3}});
    const auto b = EqRel::from_classes(4, {{1, 2}, {0}, {3}});
    CHECK(join(a, b).to_string() == "{0,1,2}{3}");
    CHECK(meet(a, b) == EqRel::discrete(4));
    CHECK(join(a, EqRel::full(4)) == EqRel::full(4));
    CHECK(meet(a, EqRel::full(4)) == a);
    CHECK_THROWS_AS(join(a, EqRel::discrete(3)), PartitionError);
  }

  TEST_CASE("from_classes validation") {
    CHECK_THROWS_AS(EqRel::from_classes(3, {{0, 1}}), PartitionError);
    CHECK_THROWS_AS(EqRel::from_classes(3, {{0, 1}, {1, 2}}), PartitionError);
    CHECK_THROWS_AS(EqRel::from_classes(3, {{0, 1, 2}, {}}), PartitionError);
    CHECK_THROWS_AS(EqRel::from_classes(2, {{0, 5}}), PartitionError);
    const std::vector<std::size_t> labels{7, 3, 7, 1};
    CHECK(EqRel::from_block_labels(labels).to_string() == "{0,2}{1}{3}");
  }

  TEST_CASE("join and meet agree with the pair-set oracle for n <= 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto all = enumerate_partitions(n);
      for (const auto& r : all) {
        for (const auto& s : all) {
          Pairs u = pairs_of(r);
          for (const auto& e : pairs_of(s)) u.insert(e);
          CHECK(pairs_of(join(r, s)) == testsupport::equivalence_closure(n, u));
          CHECK(pairs_of(meet(r, s)) == testsupport::intersect(pairs_of(r), pairs_of(s)));
        }
      }
    }
  }

  TEST_CASE("property: overlapping blocks of R and S lie in one block of the join") {
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto all = enumerate_partitions(n);
      for (const auto& r : all) {
        for (const auto& s : all) {
          const auto j = join(r, s);
          for (const auto& br : r.classes()) {
            for (const auto& bs : s.classes()) {
              bool overlap = false;
              for (auto x : br)
                for (auto y : bs) overlap = overlap || x == y;
              if (!overlap) continue;
              const auto block = j.block_of(br.front());
              for (auto x : br) CHECK(j.block_of(x) == block);
              for (auto y : bs) CHECK(j.block_of(y) == block);
            }
          }
        }
      }
    }
  }

  TEST_CASE("property: lattice laws for n <= 5") {
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto all = enumerate_partitions(n);
      std::mt19937 rng(static_cast<unsigned>(n));
      for (int t = 0; t < 300; ++t) {
        const auto& a = all[rng() % all.size()];
        const auto& b = all[rng() % all.size()];
        const auto& c = all[rng() % all.size()];
        CHECK(join(a, b) == join(b, a));
        CHECK(meet(a, b) == meet(b, a));
        CHECK(join(join(a, b), c) == join(a, join(b, c)));
        CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
        CHECK(join(a, meet(a, b)) == a);
        CHECK(meet(a, join(a, b)) == a);
        CHECK(join(a, a) == a);
        CHECK(a.refines(join(a, b)));
        CHECK(meet(a, b).refines(a));
      }
    }
  }

  TEST_CASE("enumeration counts match brute force") {
    for (std::size_t n = 1; n <= 5; ++n) {
      CHECK(enumerate_partitions(n).size() == testsupport::brute_force_bell(n));
    }
    CHECK(enumerate_partitions(3).size() == 5);
    CHECK(enumerate_partitions(4).size() == 15);
  }

  TEST_CASE("the two orientations are dual") {
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto ref = partition_lattice(n, Orientation::Refinement);
      const auto sub = partition_lattice(n, Orientation::Subalgebra);
      CHECK(ref.poset.dual() == sub.poset);
      for (std::size_t i = 0; i < ref.partitions.size(); ++i) {
        for (std::size_t j = 0; j < ref.partitions.size(); ++j) {
          CHECK(ref.poset.leq(i, j) == ref.partitions[i].refines(ref.partitions[j]));
        }
      }
    }
    CHECK(orientation_from_string("subalgebra") == Orientation::Subalgebra);
    CHECK_THROWS(orientation_from_string("sideways"));
  }

  TEST_CASE("join and meet are the lattice lub and glb") {
    const auto lat = partition_lattice(4, Orientation::Refinement);
    for (std::size_t i = 0; i < lat.partitions.size(); ++i) {
      for (std::size_t j = 0; j < lat.partitions.size(); ++j) {
        const auto& r = lat.partitions[i];
        const auto& s = lat.partitions[j];
        CHECK(lat.poset.join(i, j) == lat.index_of(join(r, s)));
        CHECK(lat.poset.meet(i, j) == lat.index_of(meet(r, s)));
      }
    }
    const auto sub = partition_lattice(4, Orientation::Subalgebra);
    const auto r = EqRel::from_classes(4, {{0, 1}, {2, 3}});
    const auto s = EqRel::from_classes(4, {{0, 2}, {1, 3}});
    CHECK(sub.partitions[*sub.poset.join(sub.index_of(r), sub.index_of(s))] == meet(r, s));
  }

  TEST_CASE("atoms of the subalgebra orientation are the two-block partitions") {
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto lat = partition_lattice(n, Orientation::Subalgebra);
      const auto at = ordalg::order::atoms(lat.poset);
      const std::size_t expected = (std::size_t{1} << (n - 1)) - 1;
      std::size_t count = 0;
      for (std::size_t i = 0; i < lat.partitions.size(); ++i) {
        if (!at.test(i)) continue;
        ++count;
        CHECK(lat.partitions[i].num_classes() == 2);
      }
      CHECK(count == expected);
    }
  }

  TEST_CASE("size guard") {
    CHECK_THROWS_AS(partition_lattice(9, Orientation::Refinement), PartitionError);
    CHECK_THROWS_AS(partition_lattice(0, Orientation::Refinement), PartitionError);
    CHECK(partition_lattice(2, Orientation::Refinement, 2).partitions.size() == 2);
  }

  TEST_CASE("collapse and quotient") {
    const std::vector<std::size_t> k{1, 3};
    const auto c = collapse(5, k);
    CHECK(c.to_string() == "{0}{1,3}{2}{4}");
    CHECK(collapse(3, std::vector<std::size_t>{}) == EqRel::discrete(3));
    CHECK_THROWS_AS(collapse(3, std::vector<std::size_t>{4}), PartitionError);
    const auto q = quotient(c);
    CHECK(q.points == 4);
    for (std::size_t x = 0; x < 5; ++x) {
      for (std::size_t y = 0; y < 5; ++y) {
        CHECK((q.projection[x] == q.projection[y]) == c.related(x, y));
      }
    }
  }

  TEST_CASE("JSON round trip") {
    const auto r = EqRel::from_classes(4, {{0, 3}, {1}, {2}});
    CHECK(eqrel_from_json(eqrel_to_json(r)) == r);
    CHECK_THROWS(eqrel_from_json(nlohmann::json{{"n", 2}, {"classes", {{0}}}}));
  }
}
