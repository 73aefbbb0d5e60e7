#include "ordalg/cli/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ordalg/cantor/counterexample.hpp"
#include "ordalg/cantor/trirel.hpp"
#include "ordalg/order/domain_report.hpp"
#include "ordalg/order/way_below.hpp"
#include "ordalg/ortho/boolsub.hpp"
#include "ordalg/ortho/caf.hpp"
#include "ordalg/ortho/omp.hpp"
#include "ordalg/partitions/eqrel.hpp"
#include "ordalg/scatter/kq.hpp"
#include "ordalg/scatter/ordinal.hpp"
#include "ordalg/staralg/algebra.hpp"
#include "ordalg/staralg/hom.hpp"
#include "ordalg/staralg/spectral.hpp"

namespace ordalg::cli {

namespace {

/// Thrown by `require` to end a criterion with a reason.
struct Unmet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Unmet(what);
}

std::size_t bell(std::size_t n) {
  // Bell triangle
  std::vector<std::size_t> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (std::size_t x : row) next.push_back(next.back() + x);
    row = next;
  }
  return row.front();
}

// 1 ------------------------------------------------------------------------

std::string gelfand_bridge() {
  std::string sizes;
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto c = staralg::c_lattice(staralg::diagonal_algebra(k));
    const auto pl = partitions::partition_lattice(k, partitions::Orientation::Subalgebra);
    require(c.poset.size() == bell(k), "c_lattice(" + std::to_string(k) + ") has " +
                                           std::to_string(c.poset.size()) + " nodes");
    require(c.containment_verified, "containment not verified for k=" + std::to_string(k));
    // node i corresponds to partition i; check that this map is an isomorphism
    std::vector<std::size_t> map;
    for (const auto& part : c.partitions) map.push_back(pl.index_of(part));
    require(order::is_order_isomorphism(c.poset, pl.poset, map),
            "partition correspondence is not an order isomorphism for k=" + std::to_string(k));
    sizes += (sizes.empty() ? "" : ",") + std::to_string(c.poset.size());
  }
  return "sizes " + sizes;
}

// 2 ------------------------------------------------------------------------

std::string seven_flags() {
  std::string out;
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto c = staralg::c_lattice(staralg::diagonal_algebra(k));
    const auto r = order::domain_report(c.poset);
    for (auto p : order::kAllProperties) {
      require(r.flag(p).value_or(false),
              std::string(order::to_string(p)) + " not true for k=" + std::to_string(k));
    }
    if (r.fin_bounded) out += "k=" + std::to_string(k) + " fin bound " + std::to_string(r.fin_size_bound) + "; ";
  }
  return out + "all seven flags true for k=2..5";
}

// 3 ------------------------------------------------------------------------

order::FinPoset random_poset(std::mt19937& rng, std::size_t n) {
  // random DAG on a random linear extension, then transitive closure
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution edge(0.3);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    leq[perm[i]][perm[i]] = true;
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) leq[perm[i]][perm[j]] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return order::FinPoset::validate(labels, leq);
}

std::string way_below_oracle() {
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> size(1, 10);
  std::size_t pairs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poset(rng, size(rng));
    const order::WayBelow wb(p, order::WayBelowPath::Definitional);
    for (std::size_t b = 0; b < p.size(); ++b) {
      for (std::size_t c = 0; c < p.size(); ++c) {
        require(wb(b, c) == p.leq(b, c), "way-below differs from <= on trial " + std::to_string(trial));
        ++pairs;
      }
    }
    require(order::compact_elements(p, order::WayBelowPath::Definitional).size() == p.size(),
            "not every element compact on trial " + std::to_string(trial));
  }
  return std::to_string(pairs) + " pairs over 200 posets";
}

// 4 ------------------------------------------------------------------------

std::string cantor_counterexample() {
  std::size_t checks = 0;
  for (unsigned d = 1; d <= 8; ++d) {
    const auto report = cantor::verify_counterexample(d);
    require(report.passed(), "verifier failed at d=" + std::to_string(d));
    checks += report.checks.size();
    // the headline facts once more, straight from the relation algebra
    const auto r = cantor::relation_R(d);
    const auto diag = cantor::TriRel::diagonal();
    require(cantor::tri_join(r, diag) == r, "R v diagonal != R at d=" + std::to_string(d));
    require(!cantor::is_full(r), "R is full at d=" + std::to_string(d));
    for (unsigned n = 1; n <= d; ++n) {
      const auto s = cantor::relation_S(n);
      require(cantor::is_full(cantor::tri_join(r, s)),
              "R v S_" + std::to_string(n) + " not full at d=" + std::to_string(d));
      require(cantor::max_offdiag_width(s) == cantor::third_power(n),
              "width of S_" + std::to_string(n) + " is not 3^-" + std::to_string(n));
    }
  }
  return std::to_string(checks) + " verifier checks for d=1..8";
}

// 5 ------------------------------------------------------------------------

std::string grid_consistency() {
  std::size_t pairs = 0;
  for (unsigned d = 1; d <= 4; ++d) {
    const unsigned m = d + 1;
    std::vector<std::pair<std::string, cantor::TriRel>> rels{{"R", cantor::relation_R(d)},
                                                             {"diag", cantor::TriRel::diagonal()}};
    for (unsigned n = 1; n <= d; ++n) rels.emplace_back("S" + std::to_string(n), cantor::relation_S(n));
    for (const auto& [xn, x] : rels) {
      for (const auto& [yn, y] : rels) {
        const auto lhs = cantor::sample_to_grid(cantor::tri_join(x, y), m);
        const auto rhs = partitions::join(cantor::sample_to_grid(x, m), cantor::sample_to_grid(y, m));
        require(lhs == rhs, "grid of " + xn + " v " + yn + " differs from the join of grids at d=" +
                                std::to_string(d));
        ++pairs;
      }
    }
  }
  return std::to_string(pairs) + " pairs";
}

// 6 ------------------------------------------------------------------------

std::string caf_iso() {
  std::string sizes;
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto r = ortho::verify_caf_iso(staralg::diagonal_algebra(k));
    require(r.b_nodes == bell(k), "|B(Proj)| = " + std::to_string(r.b_nodes) + " for k=" + std::to_string(k));
    require(r.c_nodes == r.b_nodes, "node counts differ for k=" + std::to_string(k));
    sizes += (sizes.empty() ? "" : ",") + std::to_string(r.b_nodes);
  }
  return "|B(Proj)| = " + sizes;
}

// 7 ------------------------------------------------------------------------

// Rechecks the axiom named by a validation failure at its witness, with
// joins and meets taken from a plain poset built from the raw tables.
bool witness_violates(const ortho::OmpTables& t, int axiom, const std::vector<std::size_t>& w) {
  const auto p = order::FinPoset::validate(t.labels, t.leq);
  const auto& o = t.ortho;
  const auto top = p.top();
  const auto bottom = p.bottom();
  switch (axiom) {
    case 1: return w.size() == 1 && o[o[w[0]]] != w[0];
    case 2: return w.size() == 2 && p.leq(w[0], w[1]) && !p.leq(o[w[1]], o[w[0]]);
    case 3: return w.size() == 1 && p.join(w[0], o[w[0]]) != top;
    case 4: return w.size() == 2 && p.leq(w[0], o[w[1]]) && !p.join(w[0], w[1]).has_value();
    case 5:
      return w.size() == 2 && p.leq(o[w[1]], w[0]) && p.meet(w[0], w[1]) == bottom && bottom.has_value() &&
             w[0] != o[w[1]];
    default: return false;
  }
}

std::string omp_axioms() {
  for (std::size_t k = 0; k <= 4; ++k) ortho::power_set_omp(k);
  ortho::mo_omp(2);
  ortho::mo_omp(3);
  for (int axiom = 1; axiom <= 5; ++axiom) {
    const auto t = ortho::mutation_fixture(axiom);
    bool threw = false;
    try {
      ortho::validate_omp(t);
    } catch (const ortho::AxiomError& e) {
      threw = true;
      require(e.axiom() == axiom, "fixture " + std::to_string(axiom) + " fails axiom " + std::to_string(e.axiom()));
      require(witness_violates(t, axiom, e.witness()),
              "witness of fixture " + std::to_string(axiom) + " does not violate the axiom");
    }
    require(threw, "fixture " + std::to_string(axiom) + " validated");
  }
  const auto b = ortho::boolean_subalgebras(ortho::mo_omp(2));
  require(b.subalgebras.size() == 3, "|B(MO2)| = " + std::to_string(b.subalgebras.size()));
  return "2^0..2^4, MO2, MO3 valid; 5 mutation witnesses confirmed; |B(MO2)| = 3";
}

// 8 ------------------------------------------------------------------------

// Ordinal arithmetic below w^w kept apart from the library: (exponent,
// coefficient) in decreasing exponent order.
using Ord = std::vector<std::pair<unsigned, std::uint64_t>>;

Ord ord_add(const Ord& a, const Ord& b) {
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

Ord ord_mul(const Ord& a, const Ord& b) {
  if (a.empty() || b.empty()) return {};
  Ord out;
  for (const auto& [f, c] : b) {
    Ord piece;
    if (f > 0) {
      piece = {{a.front().first + f, c}};
    } else {
      piece = a;
      piece.front().second *= c;
    }
    out = ord_add(out, piece);
  }
  return out;
}

bool ord_leq(const Ord& a, const Ord& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] == b[i]) continue;
    if (a[i].first != b[i].first) return a[i].first < b[i].first;
    return a[i].second < b[i].second;
  }
  return a.size() <= b.size();
}

Ord ord_make(std::uint64_t c2, std::uint64_t c1, std::uint64_t c0) {
  Ord out;
  if (c2) out.emplace_back(2, c2);
  if (c1) out.emplace_back(1, c1);
  if (c0) out.emplace_back(0, c0);
  return out;
}

// Largest b with w*b <= a among ordinals below w^3 with coefficients <= 3:
// the limit points of [0, a] are exactly w*g for 1 <= g <= b.
Ord limit_layer(const Ord& a) {
  const Ord w{{1, 1}};
  Ord best;
  for (std::uint64_t x = 0; x <= 3; ++x)
    for (std::uint64_t y = 0; y <= 3; ++y)
      for (std::uint64_t z = 0; z <= 3; ++z) {
        const Ord d = ord_make(x, y, z);
        if (ord_leq(ord_mul(w, d), a) && ord_leq(best, d)) best = d;
      }
  return best;
}

std::string cantor_bendixson() {
  using scatter::OrdinalCNF;
  require(scatter::cb_rank_ord(scatter::parse_ordinal("w")) == 2, "rank(w) != 2");
  require(scatter::cb_rank_ord(scatter::parse_ordinal("w^2")) == 3, "rank(w^2) != 3");
  std::mt19937 rng(8);
  const auto bound = scatter::parse_ordinal("w^5*3");
  int sampled = 0;
  while (sampled < 50) {
    std::vector<OrdinalCNF::Term> terms;
    const int count = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < count; ++i)
      terms.push_back({std::uniform_int_distribution<unsigned>(0, 5)(rng),
                       std::uniform_int_distribution<std::uint64_t>(1, 5)(rng)});
    const auto a = OrdinalCNF::from_terms(terms);
    if (a.is_zero() || !(a < bound)) continue;
    ++sampled;
    std::size_t steps = 1;
    for (auto cur = scatter::cb_derivative_ord(a); cur; cur = scatter::cb_derivative_ord(*cur)) ++steps;
    require(scatter::cb_rank_ord(a) == a.leading_exponent() + 1, "rank formula fails at " + a.to_string());
    require(steps == scatter::cb_rank_ord(a), "iterated derivative disagrees at " + a.to_string());
  }
  std::size_t oracle_cases = 0;
  for (std::uint64_t x = 0; x <= 3; ++x)
    for (std::uint64_t y = 0; y <= 3; ++y)
      for (std::uint64_t z = 0; z <= 3; ++z) {
        const Ord alpha = ord_make(x, y, z);
        if (alpha.empty()) continue;
        std::vector<OrdinalCNF::Term> terms;
        for (const auto& [e, c] : alpha) terms.push_back({e, c});
        const auto a = OrdinalCNF::from_terms(terms);
        std::size_t rank = 1;
        Ord cur = alpha;
        for (;;) {
          cur = limit_layer(cur);
          if (cur.empty()) break;
          ++rank;
        }
        require(scatter::cb_rank_ord(a) == rank, "oracle rank differs at " + a.to_string());
        const auto d = scatter::cb_derivative_ord(a);
        const Ord layer = limit_layer(alpha);
        Ord got;
        if (d)
          for (const auto& t : d->terms()) got.emplace_back(t.exponent, t.coefficient);
        require(got == layer, "derivative differs from the limit layer at " + a.to_string());
        ++oracle_cases;
      }
  return "50 random ordinals, " + std::to_string(oracle_cases) + " oracle cases below w^3";
}

// 9 ------------------------------------------------------------------------

std::string atoms_are_bottom_covers() {
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto a = staralg::diagonal_algebra(k);
    const auto atoms = staralg::atoms(a);
    require(atoms.size() == (std::size_t{1} << (k - 1)) - 1,
            std::to_string(atoms.size()) + " atoms for k=" + std::to_string(k));
    const auto c = staralg::c_lattice(a);
    const auto bottom = c.poset.bottom();
    require(bottom.has_value(), "c_lattice has no bottom for k=" + std::to_string(k));
    std::vector<std::size_t> covers;
    for (const auto& [lo, hi] : order::hasse(c.poset))
      if (lo == *bottom) covers.push_back(hi);
    require(covers.size() == atoms.size(), "bottom covers and atoms differ in number for k=" + std::to_string(k));
    for (const auto& atom : atoms) {
      const bool found = std::any_of(covers.begin(), covers.end(), [&](std::size_t i) { return c.nodes[i] == atom; });
      require(found, "an atom is not a bottom cover for k=" + std::to_string(k));
    }
  }
  return "k=1..5";
}

// 10 -----------------------------------------------------------------------

std::string dense_chains() {
  for (unsigned n = 2; n <= 16; ++n) {
    const auto w = cantor::dense_chain_witness(n);
    require(w.size() == n, "chain length for n=" + std::to_string(n));
    for (unsigned i = 0; i + 1 < n; ++i) {
      require(w[i + 1].subset_of(w[i]) && !(w[i] == w[i + 1]), "chain not strict at n=" + std::to_string(n));
      const auto mid = cantor::midpoint_witness(w[i], w[i + 1]);
      require(mid.subset_of(w[i]) && w[i + 1].subset_of(mid) && !(mid == w[i]) && !(mid == w[i + 1]),
              "midpoint not strictly between at n=" + std::to_string(n));
    }
  }
  std::size_t chains = 0;
  for (std::size_t m = 2; m <= 8; ++m) {
    for (std::size_t n = 2; n <= m; ++n) {
      const auto c = scatter::kq_chain_witness(m, n);
      require(c.passed(), "K_q chain fails at m=" + std::to_string(m) + " n=" + std::to_string(n));
      ++chains;
    }
  }
  return "dense chains n=2..16; " + std::to_string(chains) + " K_q chains";
}

// 11 -----------------------------------------------------------------------

std::string scott_continuity() {
  using partitions::Orientation;
  std::size_t checked = 0;
  for (std::size_t x = 1; x <= 4; ++x) {
    const auto lx = partitions::partition_lattice(x, Orientation::Subalgebra);
    const auto directed = order::directed_subsets(lx.poset);
    for (std::size_t y = 1; y <= 4; ++y) {
      const auto ly = partitions::partition_lattice(y, Orientation::Subalgebra);
      staralg::SpectrumMap h(y);
      std::size_t total = 1;
      for (std::size_t i = 0; i < y; ++i) total *= x;
      for (std::size_t code = 0; code < total; ++code) {
        for (std::size_t i = 0, c = code; i < y; ++i, c /= x) h[i] = c % x;
        std::vector<std::size_t> image(lx.partitions.size());
        for (std::size_t i = 0; i < image.size(); ++i)
          image[i] = ly.index_of(staralg::pushforward_hom(h, x, lx.partitions[i]));
        for (const auto& d : directed) {
          order::ElementSet img(ly.poset.size());
          for (std::size_t i = d.members.find_first(); i != order::ElementSet::npos; i = d.members.find_next(i))
            img.set(image[i]);
          const auto sup = ly.poset.lub(img);
          require(sup.has_value() && *sup == image[d.sup],
                  "directed join not preserved for |X|=" + std::to_string(x) + " |Y|=" + std::to_string(y));
          ++checked;
        }
      }
    }
  }
  return std::to_string(checked) + " (map, directed set) pairs";
}

using Runner = std::string (*)();

struct Entry {
  CriterionInfo info;
  Runner run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table{
      {{1, "commutative subalgebras of diag(k) match partition lattices", 5}, gelfand_bridge},
      {{2, "domain report flags on the criterion-1 lattices", 10}, seven_flags},
      {{3, "way-below equals <= on random finite posets", 30}, way_below_oracle},
      {{4, "Cantor counterexample verified for d=1..8", 60}, cantor_counterexample},
      {{5, "grid sampling commutes with joins", 10}, grid_consistency},
      {{6, "C(A) matches B(Proj(A)) for diagonal algebras", 20}, caf_iso},
      {{7, "orthomodular axioms and mutation witnesses", 5}, omp_axioms},
      {{8, "Cantor-Bendixson ranks of ordinals", 5}, cantor_bendixson},
      {{9, "atoms are the bottom covers", 5}, atoms_are_bottom_covers},
      {{10, "dense-chain and K_q witnesses", 5}, dense_chains},
      {{11, "pushforward preserves directed joins", 30}, scott_continuity},
  };
  return table;
}

}  // namespace

Selector selector_from_string(const std::string& s) {
  if (s == "all") return Selector::All;
  if (s == "fast") return Selector::Fast;
  throw std::invalid_argument("selector must be \"all\" or \"fast\", got \"" + s + "\"");
}

const std::vector<CriterionInfo>& criteria() {
  static const std::vector<CriterionInfo> infos = [] {
    std::vector<CriterionInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

CriterionResult run_criterion(int id) {
  const auto& table = entries();
  auto it = std::find_if(table.begin(), table.end(), [&](const Entry& e) { return e.info.id == id; });
  if (it == table.end()) throw std::invalid_argument("no criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.name = it->info.name;
  r.budget_seconds = it->info.budget_seconds;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.detail = it->run();
    r.checks_ok = true;
  } catch (const Unmet& e) {
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = r.checks_ok && r.seconds < r.budget_seconds;
  if (r.checks_ok && !r.pass) r.detail += "; over the time budget";
  return r;
}

std::vector<CriterionResult> run_acceptance(Selector selector) {
  std::vector<CriterionResult> out;
  for (const auto& info : criteria()) {
    if (selector == Selector::Fast && info.budget_seconds > 10) continue;
    out.push_back(run_criterion(info.id));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "(%.2f s, budget %.0f s)", r.seconds, r.budget_seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + "  " + (r.id < 10 ? " " : "") + std::to_string(r.id) + "  " +
         r.name + "  " + timing + "  " + r.detail;
}

nlohmann::json acceptance_to_json(const std::vector<CriterionResult>& results) {
  auto arr = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    arr.push_back({{"id", r.id},
                   {"name", r.name},
                   {"pass", r.pass},
                   {"checks_ok", r.checks_ok},
                   {"seconds", r.seconds},
                   {"budget_seconds", r.budget_seconds},
                   {"detail", r.detail}});
  }
  return {{"criteria", arr}, {"passed", all}};
}

}  // namespace ordalg::cli
