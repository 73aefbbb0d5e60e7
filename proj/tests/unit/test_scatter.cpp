#include <random>

#include "doctest.h"
#include "ordalg/scatter/fintop.hpp"
#include "ordalg/scatter/kq.hpp"
#include "ordalg/scatter/ordinal.hpp"

using namespace ordalg::scatter;

namespace {

// Independent ordinal arithmetic below w^w: a list of (exponent, coefficient)
// in decreasing exponent order.
using Ord = std::vector<std::pair<unsigned, std::uint64_t>>;

Ord add(const Ord& a, const Ord& b) {
  if (b.empty()) return a;
  Ord out;
  for (const auto& t : a)
    if (t.first > b.front().first) out.push_back(t);
  Ord tail = b;
  for (const auto& t : a)
    if (t.first == b.front().first) tail.front().second += t.second;
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

// a * b by distributing on the right: a * w^f = w^(lead(a)+f) for f > 0 and
// a * c = w^lead(a)*(c*lead_coef) + rest(a) for finite c.
Ord mul(const Ord& a, const Ord& b) {
  if (a.empty() || b.empty()) return {};
  Ord out;
  for (const auto& [f, d] : b) {
    Ord piece;
    if (f > 0) {
      piece = {{a.front().first + f, d}};
    } else {
      piece = a;
      piece.front().second *= d;
    }
    out = add(out, piece);
  }
  return out;
}

bool leq(const Ord& a, const Ord& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i]) {
      if (a[i].first != b[i].first) return a[i].first < b[i].first;
      return a[i].second < b[i].second;
    }
  }
  return a.size() <= b.size();
}

Ord of(const OrdinalCNF& o) {
  Ord out;
  for (const auto& t : o.terms()) out.emplace_back(t.exponent, t.coefficient);
  return out;
}

Ord make(std::uint64_t a2, std::uint64_t a1, std::uint64_t a0) {
  Ord out;
  if (a2) out.emplace_back(2, a2);
  if (a1) out.emplace_back(1, a1);
  if (a0) out.emplace_back(0, a0);
  return out;
}

// The limit ordinals of [0, a] are w*g for 1 <= g <= b with b the largest
// ordinal satisfying w*b <= a; search the window below w^3 with coefficients <= 3.
Ord limit_layer(const Ord& a) {
  const Ord w{{1, 1}};
  Ord best;
  for (std::uint64_t x = 0; x <= 3; ++x)
    for (std::uint64_t y = 0; y <= 3; ++y)
      for (std::uint64_t z = 0; z <= 3; ++z) {
        const Ord d = make(x, y, z);
        if (leq(mul(w, d), a) && leq(best, d)) best = d;
      }
  return best;
}

std::size_t rank_oracle(Ord a) {
  std::size_t rank = 1;
  while (true) {
    a = limit_layer(a);
    if (a.empty()) return rank;
    ++rank;
  }
}

FinTop sierpinski() { return FinTop::validate({"a", "b"}, {0b00, 0b01, 0b11}); }

// Closes a random subbasis under union and intersection.
FinTop random_topology(std::mt19937& rng, std::size_t n) {
  std::vector<Mask> opens{0, (Mask{1} << n) - 1};
  std::uniform_int_distribution<Mask> pick(0, (Mask{1} << n) - 1);
  const int k = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int i = 0; i < k; ++i) opens.push_back(pick(rng));
  bool grew = true;
  while (grew) {
    grew = false;
    const auto cur = opens;
    for (Mask a : cur)
      for (Mask b : cur)
        for (Mask c : {a | b, a & b})
          if (std::find(opens.begin(), opens.end(), c) == opens.end()) {
            opens.push_back(c);
            grew = true;
          }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FinTop::validate(labels, opens);
}

}  // namespace

TEST_SUITE("scatter") {
  TEST_CASE("validator rejects non-topologies") {
    CHECK_THROWS_AS(FinTop::validate({"a", "b"}, {0b01, 0b11}), TopoError);
    CHECK_THROWS_AS(FinTop::validate({"a", "b"}, {0, 0b01}), TopoError);
    CHECK_THROWS_AS(FinTop::validate({"a", "b", "c"}, {0, 0b001, 0b010, 0b111}), TopoError);
    CHECK_THROWS_AS(FinTop::validate({"a"}, {0, 0b1, 0b10}), TopoError);
    try {
      FinTop::validate({"a", "b", "c"}, {0, 0b011, 0b110, 0b111});
      FAIL("expected InvalidTopology");
    } catch (const TopoError& e) {
      CHECK(e.kind() == TopoErrc::InvalidTopology);
    }
  }

  TEST_CASE("Sierpinski space") {
    const auto s = sierpinski();
    const auto r = cb_rank_fin(s);
    CHECK(r.scattered);
    CHECK(r.rank == 2);
    CHECK(r.stage[0] == std::optional<std::size_t>(0));
    CHECK(r.stage[1] == std::optional<std::size_t>(1));
    CHECK(cb_derivative_fin(s).labels() == std::vector<std::string>{"b"});
    CHECK(is_stonean_fin(s));
    CHECK_FALSE(is_hausdorff_fin(s));
    CHECK_FALSE(is_totally_disconnected_fin(s));
    const auto check = stone_scattered_check(s);
    CHECK(check.holds);
    CHECK(check.stage[1] == std::optional<std::size_t>(1));
  }

  TEST_CASE("indiscrete and discrete spaces") {
    const auto ind = FinTop::indiscrete(2);
    const auto r = cb_rank_fin(ind);
    CHECK_FALSE(r.scattered);
    CHECK(r.residue.size() == 2);
    CHECK_FALSE(stone_scattered_check(ind).holds);
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto d = FinTop::discrete(n);
      CHECK(cb_rank_fin(d).rank == 1);
      CHECK(is_hausdorff_fin(d));
      CHECK(is_totally_disconnected_fin(d));
      const auto check = stone_scattered_check(d);
      CHECK(check.holds);
    }
    CHECK(cb_rank_fin(FinTop::indiscrete(0)).rank == 0);
  }

  TEST_CASE("json round trip") {
    const auto s = sierpinski();
    const auto back = fintop_from_json(fintop_to_json(s));
    CHECK(back.opens() == s.opens());
    CHECK(back.labels() == s.labels());
    CHECK_THROWS_AS(fintop_from_json(nlohmann::json{{"points", {"a"}}}), TopoError);
    CHECK_THROWS_AS(fintop_from_json(nlohmann::json::parse(R"({"points":["a"],"opens":[[],[0],[3]]})")), TopoError);
  }

  TEST_CASE("property: random finite topologies") {
    std::mt19937 rng(20261019);
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t n = 1 + trial % 6;
      const auto t = random_topology(rng, n);
      const auto r = cb_rank_fin(t);
      if (r.scattered) {
        CHECK(cb_derivative_fin(t).size() < t.size());
        if (is_hausdorff_fin(t)) CHECK(is_totally_disconnected_fin(t));
      }
      // each point's stage is the number of derivatives it survives
      FinTop cur = t;
      for (std::size_t k = 0; k < r.rank; ++k) {
        for (std::size_t x = 0; x < cur.size(); ++x) {
          bool isolated = false;
          for (Mask u : cur.opens()) isolated = isolated || u == (Mask{1} << x);
          const auto idx = static_cast<std::size_t>(
              std::find(t.labels().begin(), t.labels().end(), cur.labels()[x]) - t.labels().begin());
          CHECK((r.stage[idx] == std::optional<std::size_t>(k)) == isolated);
        }
        cur = cb_derivative_fin(cur);
      }
      CHECK(cur.size() == r.residue.size());
      // stonean: closures of opens are open, checked via brute-force closure
      bool stonean = true;
      for (Mask u : t.opens()) {
        Mask cl = 0;
        for (std::size_t x = 0; x < n; ++x) {
          bool every_nbhd_meets = true;
          for (Mask v : t.opens())
            if ((v >> x & 1U) && !(v & u)) every_nbhd_meets = false;
          if (every_nbhd_meets) cl |= Mask{1} << x;
        }
        stonean = stonean && t.is_open(cl);
      }
      CHECK(is_stonean_fin(t) == stonean);
    }
  }

  TEST_CASE("ordinal parsing and printing") {
    CHECK(parse_ordinal("w^2*2+w*3+5").to_string() == "w^2*2+w*3+5");
    CHECK(parse_ordinal("w").to_string() == "w");
    CHECK(parse_ordinal("w^2").to_string() == "w^2");
    CHECK(parse_ordinal("w*3").to_string() == "w*3");
    CHECK(parse_ordinal("5").to_string() == "5");
    CHECK(parse_ordinal("0").is_zero());
    CHECK(parse_ordinal("3+w").to_string() == "w");
    CHECK(parse_ordinal("w+w^2").to_string() == "w^2");
    CHECK(parse_ordinal("w*2 + w + 4 + 1").to_string() == "w*3+5");
    CHECK(parse_ordinal("w^0*4").to_string() == "4");
    CHECK_THROWS_AS(parse_ordinal("w^9"), TopoError);
    CHECK_THROWS_AS(parse_ordinal(""), TopoError);
    CHECK_THROWS_AS(parse_ordinal("w^"), TopoError);
    CHECK_THROWS_AS(parse_ordinal("w+"), TopoError);
    CHECK_THROWS_AS(parse_ordinal("x"), TopoError);
    CHECK_THROWS_AS(parse_ordinal("w*-1"), TopoError);
    CHECK(parse_ordinal("w") < parse_ordinal("w+1"));
    CHECK(parse_ordinal("w*5+9") < parse_ordinal("w^2"));
    CHECK(parse_ordinal("7") < parse_ordinal("w"));
  }

  TEST_CASE("Cantor-Bendixson rank of ordinals") {
    CHECK(cb_rank_ord(parse_ordinal("w")) == 2);
    CHECK(cb_rank_ord(parse_ordinal("w^2")) == 3);
    CHECK(cb_rank_ord(parse_ordinal("7")) == 1);
    CHECK(cb_derivative_ord(parse_ordinal("w^2*2+w*3"))->to_string() == "w*2+3");
    CHECK(cb_derivative_ord(parse_ordinal("w"))->to_string() == "1");
    CHECK_FALSE(cb_derivative_ord(parse_ordinal("5")).has_value());
  }

  TEST_CASE("derivative and rank agree with the enumeration oracle below w^3") {
    for (std::uint64_t a = 0; a <= 3; ++a)
      for (std::uint64_t b = 0; b <= 3; ++b)
        for (std::uint64_t c = 0; c <= 3; ++c) {
          const Ord alpha = make(a, b, c);
          std::vector<OrdinalCNF::Term> terms;
          for (const auto& [e, k] : alpha) terms.push_back({e, k});
          const auto cnf = OrdinalCNF::from_terms(terms);
          INFO(cnf.to_string());
          const auto d = cb_derivative_ord(cnf);
          const Ord layer = limit_layer(alpha);
          CHECK(d.has_value() == !layer.empty());
          if (d) CHECK(of(*d) == layer);
          CHECK(cb_rank_ord(cnf) == rank_oracle(alpha));
        }
  }

  TEST_CASE("property: rank is the leading exponent plus one below w^5*3") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<OrdinalCNF::Term> terms;
      const int k = std::uniform_int_distribution<int>(1, 4)(rng);
      for (int i = 0; i < k; ++i)
        terms.push_back({std::uniform_int_distribution<unsigned>(0, 5)(rng),
                         std::uniform_int_distribution<std::uint64_t>(1, 9)(rng)});
      auto cnf = OrdinalCNF::from_terms(terms);
      if (cnf.leading_exponent() == 5) {
        // stay at or below w^5*3
        cnf = OrdinalCNF::from_terms({{5, std::min<std::uint64_t>(cnf.terms().front().coefficient, 2)},
                                      {4, 1}});
      }
      CHECK(cnf <= parse_ordinal("w^5*3"));
      std::size_t steps = 1;
      auto cur = cb_derivative_ord(cnf);
      while (cur) {
        ++steps;
        cur = cb_derivative_ord(*cur);
      }
      CHECK(cb_rank_ord(cnf) == steps);
      CHECK(steps == cnf.leading_exponent() + 1);
      CHECK(parse_ordinal(cnf.to_string()) == cnf);
    }
  }

  TEST_CASE("finite ordinals agree with the finite machinery") {
    for (std::uint64_t n = 0; n <= 8; ++n) {
      const auto space = finite_ordinal_space(n);
      CHECK(space.size() == n + 1);
      CHECK(cb_rank_fin(space).rank == 1);
      CHECK(cb_rank_ord(OrdinalCNF::finite(n)) == 1);
      CHECK_FALSE(cb_derivative_ord(OrdinalCNF::finite(n)).has_value());
      CHECK(cb_derivative_fin(space).size() == 0);
    }
  }

  TEST_CASE("K_q chain witness") {
    const auto c = kq_chain_witness(4, 3);
    REQUIRE(c.chain.size() == 3);
    CHECK(std::popcount(c.chain[0]) == 2);
    CHECK(std::popcount(c.chain[1]) == 3);
    CHECK(std::popcount(c.chain[2]) == 4);
    CHECK(ordalg::cantor::to_string(c.chosen[1]) == "1/2");
    CHECK(c.passed());
    CHECK(kq_chain_witness(2, 2).chain.size() == 2);
    CHECK_THROWS_AS(kq_chain_witness(3, 1), TopoError);
    CHECK_THROWS_AS(kq_chain_witness(2, 3), TopoError);
    for (std::size_t m = 2; m <= 8; ++m)
      for (std::size_t n = 2; n <= m; ++n) {
        const auto w = kq_chain_witness(m, n);
        CHECK(w.passed());
        // Z is never isolated; its neighbourhoods reach the last x
        CHECK_FALSE(w.space.is_isolated(m));
        for (std::size_t i = 0; i + 1 < n; ++i) {
          CHECK(w.duals[i].num_classes() > w.duals[i + 1].num_classes());
        }
      }
    CHECK(kq_chain_to_json(c)["passed"] == true);
  }
}
