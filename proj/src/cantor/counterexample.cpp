#include "ordalg/cantor/counterexample.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ordalg::cantor {

namespace {

std::pair<Stage, Stage> children(const Stage& s) {
  const Rational left_third = (s.b - s.a) / 3;
  const Rational right_third = (s.d - s.c) / 3;
  Stage zero{s.a, s.a + left_third, s.b - left_third, s.b};
  Stage one{s.c, s.c + right_third, s.d - right_third, s.d};
  return {zero, one};
}

const Stage& root() {
  static const Stage s{Rational(0), Rational(1, 3), Rational(2, 3), Rational(1)};
  return s;
}

/// Visits every word of length <= max_len with its stage, shortest first
/// within each branch.
void for_each_stage(unsigned max_len,
                    const std::function<void(const std::string&, const Stage&)>& visit) {
  std::function<void(std::string&, const Stage&)> walk = [&](std::string& w, const Stage& s) {
    visit(w, s);
    if (w.size() == max_len) return;
    const auto [zero, one] = children(s);
    w.push_back('0');
    walk(w, zero);
    w.back() = '1';
    walk(w, one);
    w.pop_back();
  };
  std::string w;
  walk(w, root());
}

void check_depth(unsigned d, unsigned max_depth) {
  if (d > max_depth) {
    throw CantorError(CantorErrc::DepthLimit,
                      "depth " + std::to_string(d) + " exceeds limit " + std::to_string(max_depth),
                      {d});
  }
}

std::string word(const std::string& sigma) { return sigma.empty() ? "eps" : sigma; }

class Verifier {
 public:
  Verifier(unsigned d, const TriRel& r, const std::vector<TriRel>& s) : d_(d), r_(r), s_(s) {
    report_.depth = d;
    report_.r_blocks = r.size();
  }

  CounterexampleReport run() {
    if (s_.size() < d_ + 1) {
      throw CantorError(CantorErrc::OutOfRange, "need S_0..S_" + std::to_string(d_));
    }
    for_each_stage(d_, [&](const std::string& sigma, const Stage& st) {
      const bool ok = 0 <= st.a && st.a < st.b && st.b < st.c && st.c < st.d && st.d <= 1 &&
                      st.d - st.a == third_power(static_cast<unsigned>(sigma.size()));
      if (!ok) fail("stage_endpoints", "sigma=" + word(sigma), sigma.size());
    });
    pass("stage_endpoints", "words up to length " + std::to_string(d_));

    const std::size_t expected_blocks = (std::size_t{1} << (d_ + 1)) - 1;
    if (r_.size() != expected_blocks) {
      fail("r_block_count", std::to_string(r_.size()) + " blocks, expected " +
                                std::to_string(expected_blocks), d_);
    }
    pass("r_block_count", std::to_string(r_.size()));

    if (d_ >= 1) {
      const auto& st = root();
      const bool ok = s_[1].contains(st.a, st.b) && r_.contains(st.b, st.c) && s_[1].contains(st.c, st.d);
      if (!ok) fail("base_chain", "0 S_1 1/3 R 2/3 S_1 1 broken", 0);
      pass("base_chain", "0 S_1 1/3 R 2/3 S_1 1");
    }

    std::vector<std::size_t> chains(d_, 0);
    for_each_stage(d_ == 0 ? 0 : d_ - 1, [&](const std::string& sigma, const Stage& st) {
      if (d_ == 0) return;
      chain(sigma, st);
      ++chains[sigma.size()];
    });
    for (unsigned len = 0; len < d_; ++len) {
      pass("chains[len=" + std::to_string(len) + "]",
           std::to_string(chains[len]) + " words connect a_s to d_s in R_d v S_" +
               std::to_string(len + 1));
    }
    for (unsigned n = 1; n <= d_; ++n) {
      const std::string name = "join_full[n=" + std::to_string(n) + "]";
      const TriRel j = tri_join(r_, s_[n]);
      if (!is_full(j)) fail(name, "n=" + std::to_string(n) + " join=" + to_string(j), n);
      pass(name, "R_d v S_n = " + to_string(j));
    }

    if (!(tri_join(r_, TriRel::diagonal()) == r_)) fail("join_diagonal", "R_d v diag != R_d", d_);
    pass("join_diagonal", "R_d v diag = R_d");
    if (is_full(r_)) fail("r_not_full", "R_d is full", d_);
    pass("r_not_full", std::to_string(r_.size()) + " blocks");

    for (unsigned n = 0; n <= d_; ++n) {
      const std::string name = "width[n=" + std::to_string(n) + "]";
      const Rational w = max_offdiag_width(s_[n]);
      if (w != third_power(n)) fail(name, "n=" + std::to_string(n) + " width=" + to_string(w), n);
      pass(name, to_string(w));
    }

    for (unsigned n = 0; n < d_; ++n) {
      const std::string name = "nesting[n=" + std::to_string(n) + "]";
      if (!s_[n + 1].subset_of(s_[n]) || s_[n + 1] == s_[n]) {
        fail(name, "S_" + std::to_string(n + 1) + " is not strictly inside S_" + std::to_string(n), n);
      }
      pass(name, "S_" + std::to_string(n + 1) + " < S_" + std::to_string(n));
    }

    return report_;
  }

 private:
  // a_s = a_s0 S b_s0 R c_s0 S d_s0 = b_s R c_s = a_s1 S b_s1 R c_s1 S d_s1 = d_s
  void chain(const std::string& sigma, const Stage& st) {
    const auto [zero, one] = children(st);
    const TriRel& s = s_[sigma.size() + 1];
    struct Link {
      const char* what;
      bool ok;
    };
    const Link links[] = {
        {"a_s = a_s0", st.a == zero.a},
        {"a_s0 S b_s0", s.contains(zero.a, zero.b)},
        {"b_s0 R c_s0", r_.contains(zero.b, zero.c)},
        {"c_s0 S d_s0", s.contains(zero.c, zero.d)},
        {"d_s0 = b_s", zero.d == st.b},
        {"b_s R c_s", r_.contains(st.b, st.c)},
        {"c_s = a_s1", st.c == one.a},
        {"a_s1 S b_s1", s.contains(one.a, one.b)},
        {"b_s1 R c_s1", r_.contains(one.b, one.c)},
        {"c_s1 S d_s1", s.contains(one.c, one.d)},
        {"d_s1 = d_s", one.d == st.d},
    };
    for (const auto& link : links) {
      if (!link.ok) {
        fail("chains[len=" + std::to_string(sigma.size()) + "]",
             "sigma=" + word(sigma) + " link " + link.what, sigma.size());
      }
    }
  }

  void pass(const std::string& name, std::string witness) {
    report_.checks.push_back({name, true, std::move(witness)});
  }

  [[noreturn]] void fail(const std::string& name, const std::string& witness, std::size_t index) {
    throw CantorError(CantorErrc::AssertionFailed, name + ": " + witness, {index});
  }

  unsigned d_;
  const TriRel& r_;
  const std::vector<TriRel>& s_;
  CounterexampleReport report_;
};

}  // namespace

Stage stage_intervals(const std::string& sigma) {
  Stage st = root();
  for (char ch : sigma) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("not a binary word: " + sigma);
    const auto [zero, one] = children(st);
    st = ch == '0' ? zero : one;
  }
  return st;
}

TriRel relation_R(unsigned d, unsigned max_depth) {
  check_depth(d, max_depth);
  std::vector<Block> blocks;
  for_each_stage(d, [&](const std::string&, const Stage& st) { blocks.push_back({st.b, st.c}); });
  std::sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) { return x.lo < y.lo; });
  try {
    return TriRel::from_blocks(std::move(blocks));
  } catch (const CantorError& e) {
    throw CantorError(CantorErrc::AssertionFailed, std::string("R blocks overlap: ") + e.what(),
                      e.witness());
  }
}

TriRel relation_S(unsigned n, unsigned max_depth) {
  check_depth(n, max_depth);
  std::vector<Block> blocks;
  for_each_stage(n, [&](const std::string& sigma, const Stage& st) {
    if (sigma.size() == n) blocks.push_back({st.a, st.d});
  });
  // depth-first order with '0' before '1' is already left to right
  if (n == 0) return TriRel::full();
  return TriRel::from_blocks(std::move(blocks));
}

bool CounterexampleReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

CounterexampleReport verify_counterexample(unsigned d, unsigned max_depth) {
  check_depth(d, max_depth);
  const TriRel r = relation_R(d, max_depth);
  std::vector<TriRel> s;
  for (unsigned n = 0; n <= d; ++n) s.push_back(relation_S(n, max_depth));
  return verify_counterexample(d, r, s);
}

CounterexampleReport verify_counterexample(unsigned d, const TriRel& r, const std::vector<TriRel>& s) {
  return Verifier(d, r, s).run();
}

nlohmann::json report_to_json(const CounterexampleReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  }
  return {{"depth", report.depth}, {"r_blocks", report.r_blocks}, {"checks", checks},
          {"passed", report.passed()}};
}

partitions::EqRel sample_to_grid(const TriRel& x, unsigned m) {
  if (m > kMaxGridExponent) {
    throw CantorError(CantorErrc::OutOfRange,
                      "grid exponent " + std::to_string(m) + " exceeds " +
                          std::to_string(kMaxGridExponent),
                      {m});
  }
  std::size_t scale = 1;
  for (unsigned i = 0; i < m; ++i) scale *= 3;
  auto grid_index = [&](const Rational& q, std::size_t block) {
    const Rational scaled = q * static_cast<unsigned long>(scale);
    if (scaled.get_den() != 1) {
      throw CantorError(CantorErrc::GridTooCoarse,
                        "endpoint " + to_string(q) + " is not on the grid of step 1/" +
                            std::to_string(scale),
                        {block});
    }
    return static_cast<std::size_t>(scaled.get_num().get_ui());
  };
  std::vector<std::size_t> labels(scale + 1);
  for (std::size_t k = 0; k <= scale; ++k) labels[k] = k;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto lo = grid_index(x.blocks()[i].lo, i);
    const auto hi = grid_index(x.blocks()[i].hi, i);
    for (std::size_t k = lo; k <= hi; ++k) labels[k] = scale + 1 + i;
  }
  return partitions::EqRel::from_block_labels(labels);
}

std::vector<TriRel> dense_chain_witness(unsigned n) {
  if (n < 2) throw CantorError(CantorErrc::OutOfRange, "dense chain witness needs n >= 2", {n});
  std::vector<TriRel> out;
  for (unsigned i = 1; i <= n; ++i) {
    out.push_back(TriRel::collapse(Rational(i, n + 1), Rational(1)));
  }
  return out;
}

TriRel midpoint_witness(const TriRel& larger, const TriRel& smaller) {
  auto tail = [](const TriRel& r) {
    if (r.size() != 1 || r.blocks()[0].hi != 1) {
      throw CantorError(CantorErrc::InvalidRelation, "expected a single block [x, 1]: " + to_string(r));
    }
    return r.blocks()[0].lo;
  };
  const Rational x = tail(larger);
  const Rational y = tail(smaller);
  if (!(x < y)) {
    throw CantorError(CantorErrc::InvalidRelation,
                      to_string(larger) + " does not strictly contain " + to_string(smaller));
  }
  return TriRel::collapse((x + y) / 2, Rational(1));
}

}  // namespace ordalg::cantor
