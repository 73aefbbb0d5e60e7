#include "ordalg/order/domain_report.hpp"

#include <functional>
#include <map>
#include <string>

namespace ordalg::order {

const char* to_string(Property p) noexcept {
  switch (p) {
    case Property::Algebraic: return "algebraic";
    case Property::Continuous: return "continuous";
    case Property::MeetContinuous: return "meet_continuous";
    case Property::Atomistic: return "atomistic";
    case Property::QuasiContinuous: return "quasi_continuous";
    case Property::QuasiAlgebraic: return "quasi_algebraic";
    case Property::OrderScattered: return "order_scattered";
  }
  return "unknown";
}

std::optional<bool> DomainReport::flag(Property p) const {
  switch (p) {
    case Property::Algebraic: return algebraic;
    case Property::Continuous: return continuous;
    case Property::MeetContinuous: return meet_continuous;
    case Property::Atomistic: return atomistic;
    case Property::QuasiContinuous: return quasi_continuous;
    case Property::QuasiAlgebraic: return quasi_algebraic;
    case Property::OrderScattered: return order_scattered;
  }
  return std::nullopt;
}

bool DomainReport::all_true() const {
  for (Property p : kAllProperties) {
    if (auto f = flag(p); f && !*f) return false;
  }
  return true;
}

ElementSet atoms(const FinPoset& p) {
  ElementSet rest = p.full_set();
  if (auto b = p.bottom()) rest.reset(*b);
  return p.minimal(rest);
}

bool is_order_dense_chain(const FinPoset& p, const ElementSet& chain) {
  if (chain.count() < 2 || !p.is_chain(chain)) return false;
  for (std::size_t x = chain.find_first(); x != ElementSet::npos; x = chain.find_next(x)) {
    for (std::size_t y = chain.find_first(); y != ElementSet::npos; y = chain.find_next(y)) {
      if (!p.less(x, y)) continue;
      ElementSet between = p.up(x) & p.down(y) & chain;
      between.reset(x);
      between.reset(y);
      if (between.none()) return false;
    }
  }
  return true;
}

namespace {

/// Distinct up-closures of a family of finite subsets, each with one
/// representative subset that produced it.
using UpsetFamily = std::map<ElementSet, Subset>;

void for_each_subset_up_to(std::size_t n, std::size_t max_size,
                           const std::function<void(const Subset&)>& visit) {
  Subset current;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    for (std::size_t i = start; i < n; ++i) {
      current.push_back(i);
      visit(current);
      if (current.size() < max_size) rec(i + 1);
      current.pop_back();
    }
  };
  if (max_size > 0) rec(0);
}

class Checker {
 public:
  Checker(const FinPoset& p, const ReportOptions& options)
      : p_(p), wb_(p, options.path), options_(options) {
    const std::size_t n = p.size();
    fin_bound_ = options.fin_size_bound.value_or(n <= kCompleteFinLimit ? n : kDefaultFinBound);
    if (fin_bound_ > n) fin_bound_ = n;
    compact_ = wb_.compact();
  }

  const WayBelow& way_below() const { return wb_; }
  std::size_t fin_bound() const { return fin_bound_; }

  ElementSet algebraic_basis(std::size_t c) const { return compact_ & p_.down(c); }
  ElementSet continuous_basis(std::size_t c) const { return wb_.way_below_set(c); }

  bool approximates(const ElementSet& s, std::size_t c) const {
    if (!p_.is_directed(s)) return false;
    auto sup = p_.lub(s);
    return sup && *sup == c;
  }

  /// The directed sets over which meet-continuity is tested: every directed
  /// subset on the definitional path, and principal ideals plus comparable
  /// pairs on the fast path.
  std::vector<DirectedSubset> meet_test_sets() const {
    if (wb_.path() == WayBelowPath::Definitional) return directed_subsets(p_);
    std::vector<DirectedSubset> out;
    for (std::size_t m = 0; m < p_.size(); ++m) {
      out.push_back({p_.down(m), m});
      for (std::size_t d = p_.down(m).find_first(); d != ElementSet::npos;
           d = p_.down(m).find_next(d)) {
        ElementSet pair = p_.empty_set();
        pair.set(d);
        pair.set(m);
        out.push_back({pair, m});
      }
    }
    return out;
  }

  /// C meet sup(D) against the sup of the meets C meet d.
  bool meet_distributes(std::size_t c, const DirectedSubset& d) const {
    const auto lhs = p_.meet(c, d.sup);
    ElementSet meets = p_.empty_set();
    for (std::size_t x = d.members.find_first(); x != ElementSet::npos;
         x = d.members.find_next(x)) {
      auto m = p_.meet(c, x);
      if (!m) return false;
      meets.set(*m);
    }
    const auto rhs = p_.lub(meets);
    return lhs && rhs && *lhs == *rhs;
  }

  UpsetFamily fin(std::size_t c, bool compact_only) const {
    UpsetFamily family;
    const ElementSet& up_c = p_.up(c);
    for_each_subset_up_to(p_.size(), fin_bound_, [&](const Subset& f) {
      const ElementSet up_f = p_.up_closure(p_.to_set(f));
      if (!wb_.sets(up_f, up_c)) return;
      if (compact_only && !wb_.sets(up_f, up_f)) return;
      family.emplace(up_f, f);
    });
    return family;
  }

  /// A finite family of up-sets is directed (G <= H iff up H within up G)
  /// exactly when it has a single inclusion-minimal member. Returns two
  /// distinct minimal members otherwise, or nothing when directed.
  static std::optional<std::pair<Subset, Subset>> undirected_pair(const UpsetFamily& family,
                                                                  bool& empty) {
    empty = family.empty();
    if (empty) return std::nullopt;
    std::vector<const UpsetFamily::value_type*> minimal;
    for (const auto& entry : family) {
      bool is_min = true;
      for (const auto& other : family) {
        if (other.first != entry.first && other.first.is_subset_of(entry.first)) {
          is_min = false;
          break;
        }
      }
      if (is_min) minimal.push_back(&entry);
    }
    if (minimal.size() <= 1) return std::nullopt;
    return std::make_pair(minimal[0]->second, minimal[1]->second);
  }

  /// Some D with C not below D lies in every member of the family.
  std::optional<std::size_t> unseparated(std::size_t c, const UpsetFamily& family) const {
    for (std::size_t d = 0; d < p_.size(); ++d) {
      if (p_.leq(c, d)) continue;
      bool separated = false;
      for (const auto& entry : family) {
        if (!entry.first.test(d)) {
          separated = true;
          break;
        }
      }
      if (!separated) return d;
    }
    return std::nullopt;
  }

  /// Quasi-continuity (compact_only = false) or quasi-algebraicity at c.
  std::optional<Witness> quasi_violation(std::size_t c, bool compact_only) const {
    const Property prop = compact_only ? Property::QuasiAlgebraic : Property::QuasiContinuous;
    const UpsetFamily family = fin(c, compact_only);
    bool empty = false;
    if (auto pair = undirected_pair(family, empty)) {
      return Witness{prop, c, std::nullopt, {pair->first, pair->second},
                     "family of finite approximants is not directed"};
    }
    if (empty) {
      return Witness{prop, c, std::nullopt, {}, "family of finite approximants is empty"};
    }
    if (auto d = unseparated(c, family)) {
      return Witness{prop, c, *d, {}, "no finite approximant separates the element"};
    }
    return std::nullopt;
  }

  /// Chains of at least two elements, built as strictly increasing sequences.
  std::optional<Subset> find_dense_chain() const {
    std::optional<Subset> found;
    Subset current;
    std::function<void(std::size_t)> rec = [&](std::size_t last) {
      if (found) return;
      if (current.size() >= 2 && is_order_dense_chain(p_, p_.to_set(current))) {
        found = current;
        return;
      }
      for (std::size_t next = 0; next < p_.size() && !found; ++next) {
        if (!p_.less(last, next)) continue;
        current.push_back(next);
        rec(next);
        current.pop_back();
      }
    };
    for (std::size_t start = 0; start < p_.size() && !found; ++start) {
      current = {start};
      rec(start);
    }
    return found;
  }

 private:
  const FinPoset& p_;
  WayBelow wb_;
  ReportOptions options_;
  std::size_t fin_bound_ = 0;
  ElementSet compact_;
};

}  // namespace

DomainReport domain_report(const FinPoset& p, const ReportOptions& options) {
  DomainReport report;
  const Checker check(p, options);
  report.path = check.way_below().path();
  report.fin_size_bound = check.fin_bound();
  report.fin_bounded = check.fin_bound() < p.size();
  report.generic_chain_search = options.generic_chain_search;
  report.meet_semilattice = p.is_meet_semilattice();

  report.algebraic = true;
  report.continuous = true;
  report.atomistic = true;
  report.quasi_continuous = true;
  report.quasi_algebraic = true;

  const ElementSet atom_set = atoms(p);
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (const ElementSet basis = check.algebraic_basis(c); !check.approximates(basis, c)) {
      if (report.algebraic) {
        report.witnesses.push_back({Property::Algebraic, c, std::nullopt,
                                    {FinPoset::to_subset(basis)},
                                    "compact elements below do not have the element as directed sup"});
      }
      report.algebraic = false;
    }
    if (const ElementSet basis = check.continuous_basis(c); !check.approximates(basis, c)) {
      if (report.continuous) {
        report.witnesses.push_back({Property::Continuous, c, std::nullopt,
                                    {FinPoset::to_subset(basis)},
                                    "elements way below do not have the element as directed sup"});
      }
      report.continuous = false;
    }
    const ElementSet below = atom_set & p.down(c);
    if (auto sup = p.lub(below); !sup || *sup != c) {
      if (report.atomistic) {
        report.witnesses.push_back({Property::Atomistic, c, std::nullopt,
                                    {FinPoset::to_subset(below)},
                                    "element is not the join of the atoms below it"});
      }
      report.atomistic = false;
    }
    if (report.quasi_continuous) {
      if (auto w = check.quasi_violation(c, false)) {
        report.witnesses.push_back(*w);
        report.quasi_continuous = false;
      }
    }
    if (report.quasi_algebraic) {
      if (auto w = check.quasi_violation(c, true)) {
        report.witnesses.push_back(*w);
        report.quasi_algebraic = false;
      }
    }
  }

  if (report.meet_semilattice) {
    report.meet_continuous = true;
    const auto tests = check.meet_test_sets();
    for (std::size_t c = 0; c < p.size() && *report.meet_continuous; ++c) {
      for (const auto& d : tests) {
        if (!check.meet_distributes(c, d)) {
          report.meet_continuous = false;
          report.witnesses.push_back({Property::MeetContinuous, c, std::nullopt,
                                      {FinPoset::to_subset(d.members)},
                                      "meet does not distribute over the directed sup"});
          break;
        }
      }
    }
  } else if (options.require_meet_continuity) {
    throw PosetError(PosetErrc::MeetNotDefined,
                     "meet-continuity requested on a poset that lacks some binary meet");
  }

  if (options.generic_chain_search) {
    auto chain = check.find_dense_chain();
    report.order_scattered = !chain.has_value();
    if (chain) {
      report.witnesses.push_back({Property::OrderScattered, std::nullopt, std::nullopt, {*chain},
                                  "order-dense chain"});
    }
  } else {
    // Any finite chain with two or more elements has a covering pair, so no
    // finite poset contains an order-dense chain.
    report.order_scattered = true;
  }
  return report;
}

bool witness_is_violation(const FinPoset& p, const Witness& w, const ReportOptions& options) {
  const Checker check(p, options);
  auto element = [&]() -> std::size_t {
    if (!w.element) throw PosetError(PosetErrc::Malformed, "witness lacks an element");
    p.check_element(*w.element);
    return *w.element;
  };
  switch (w.property) {
    case Property::Algebraic: {
      const std::size_t c = element();
      return !check.approximates(check.algebraic_basis(c), c);
    }
    case Property::Continuous: {
      const std::size_t c = element();
      return !check.approximates(check.continuous_basis(c), c);
    }
    case Property::Atomistic: {
      const std::size_t c = element();
      const ElementSet below = atoms(p) & p.down(c);
      auto sup = p.lub(below);
      return !sup || *sup != c;
    }
    case Property::MeetContinuous: {
      const std::size_t c = element();
      if (w.sets.size() != 1) return false;
      const ElementSet d = p.to_set(w.sets[0]);
      if (!p.is_directed(d)) return false;
      return !check.meet_distributes(c, {d, *p.lub(d)});
    }
    case Property::QuasiContinuous:
    case Property::QuasiAlgebraic: {
      const std::size_t c = element();
      const bool compact_only = w.property == Property::QuasiAlgebraic;
      const UpsetFamily family = check.fin(c, compact_only);
      if (w.other) {
        p.check_element(*w.other);
        if (p.leq(c, *w.other)) return false;
        for (const auto& entry : family) {
          if (!entry.first.test(*w.other)) return false;
        }
        return true;
      }
      if (w.sets.empty()) return family.empty();
      if (w.sets.size() != 2) return false;
      const ElementSet u1 = p.up_closure(p.to_set(w.sets[0]));
      const ElementSet u2 = p.up_closure(p.to_set(w.sets[1]));
      if (!family.contains(u1) || !family.contains(u2)) return false;
      const ElementSet both = u1 & u2;
      for (const auto& entry : family) {
        if (entry.first.is_subset_of(both)) return false;
      }
      return true;
    }
    case Property::OrderScattered:
      return w.sets.size() == 1 && is_order_dense_chain(p, p.to_set(w.sets[0]));
  }
  return false;
}

}  // namespace ordalg::order
