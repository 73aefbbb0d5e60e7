#include "ordalg/order/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ordalg::order {

const char* to_string(PosetErrc kind) noexcept {
  switch (kind) {
    case PosetErrc::Empty: return "Empty";
    case PosetErrc::Malformed: return "Malformed";
    case PosetErrc::NotReflexive: return "NotReflexive";
    case PosetErrc::NotAntisymmetric: return "NotAntisymmetric";
    case PosetErrc::NotTransitive: return "NotTransitive";
    case PosetErrc::ElementNotInPoset: return "ElementNotInPoset";
    case PosetErrc::MeetNotDefined: return "MeetNotDefined";
    case PosetErrc::SizeLimit: return "SizeLimit";
  }
  return "Unknown";
}

FinPoset FinPoset::validate(std::vector<std::string> labels,
                            const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = labels.size();
  if (leq.size() != n) {
    throw PosetError(PosetErrc::Malformed, "order table has " + std::to_string(leq.size()) +
                                               " rows for " + std::to_string(n) + " elements");
  }
  std::vector<ElementSet> up(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n) {
      throw PosetError(PosetErrc::Malformed, "order table row " + std::to_string(i) +
                                                 " has wrong length",
                       {i});
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (leq[i][j]) up[i].set(j);
    }
  }
  return validate(std::move(labels), std::move(up));
}

FinPoset FinPoset::validate(std::vector<std::string> labels, std::vector<ElementSet> up) {
  const std::size_t n = labels.size();
  if (n == 0) throw PosetError(PosetErrc::Empty, "a poset needs at least one element");
  if (up.size() != n) throw PosetError(PosetErrc::Malformed, "order table size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (up[i].size() != n) {
      throw PosetError(PosetErrc::Malformed, "order table row has wrong length", {i});
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!up[i].test(i)) {
      throw PosetError(PosetErrc::NotReflexive, "not reflexive at " + std::to_string(i), {i});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = up[i].find_next(i); j != ElementSet::npos; j = up[i].find_next(j)) {
      if (up[j].test(i)) {
        throw PosetError(PosetErrc::NotAntisymmetric,
                         "not antisymmetric: " + std::to_string(i) + " <= " + std::to_string(j) +
                             " <= " + std::to_string(i),
                         {i, j});
      }
    }
  }
  // i <= j requires up(j) to be contained in up(i).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = up[i].find_first(); j != ElementSet::npos; j = up[i].find_next(j)) {
      if (!up[j].is_subset_of(up[i])) {
        const std::size_t k = (up[j] - up[i]).find_first();
        throw PosetError(PosetErrc::NotTransitive,
                         "not transitive: " + std::to_string(i) + " <= " + std::to_string(j) +
                             " <= " + std::to_string(k) + " but not " + std::to_string(i) +
                             " <= " + std::to_string(k),
                         {i, j, k});
      }
    }
  }

  std::vector<ElementSet> down(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = up[i].find_first(); j != ElementSet::npos; j = up[i].find_next(j)) {
      down[j].set(i);
    }
  }
  return FinPoset(std::move(labels), std::move(up), std::move(down));
}

void FinPoset::check_element(std::size_t i) const {
  if (i >= size()) {
    throw PosetError(PosetErrc::ElementNotInPoset,
                     "element " + std::to_string(i) + " is not in a poset of size " +
                         std::to_string(size()),
                     {i});
  }
}

ElementSet FinPoset::to_set(std::span<const std::size_t> elements) const {
  ElementSet s(size());
  for (std::size_t e : elements) {
    check_element(e);
    s.set(e);
  }
  return s;
}

Subset FinPoset::to_subset(const ElementSet& set) {
  Subset out;
  out.reserve(set.count());
  for (std::size_t i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

ElementSet FinPoset::upper_bounds(const ElementSet& s) const {
  ElementSet ub = full_set();
  for (std::size_t i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) ub &= up_[i];
  return ub;
}

ElementSet FinPoset::lower_bounds(const ElementSet& s) const {
  ElementSet lb = full_set();
  for (std::size_t i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) lb &= down_[i];
  return lb;
}

ElementSet FinPoset::up_closure(const ElementSet& s) const {
  ElementSet out = empty_set();
  for (std::size_t i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out |= up_[i];
  return out;
}

ElementSet FinPoset::down_closure(const ElementSet& s) const {
  ElementSet out = empty_set();
  for (std::size_t i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out |= down_[i];
  return out;
}

std::optional<std::size_t> FinPoset::lub(const ElementSet& s) const {
  const ElementSet ub = upper_bounds(s);
  for (std::size_t u = ub.find_first(); u != ElementSet::npos; u = ub.find_next(u)) {
    if (ub.is_subset_of(up_[u])) return u;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinPoset::glb(const ElementSet& s) const {
  const ElementSet lb = lower_bounds(s);
  for (std::size_t l = lb.find_first(); l != ElementSet::npos; l = lb.find_next(l)) {
    if (lb.is_subset_of(down_[l])) return l;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinPoset::join(std::size_t a, std::size_t b) const {
  ElementSet s = empty_set();
  s.set(a);
  s.set(b);
  return lub(s);
}

std::optional<std::size_t> FinPoset::meet(std::size_t a, std::size_t b) const {
  ElementSet s = empty_set();
  s.set(a);
  s.set(b);
  return glb(s);
}

bool FinPoset::is_directed(const ElementSet& s) const {
  if (s.none()) return false;
  for (std::size_t i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    for (std::size_t j = s.find_next(i); j != ElementSet::npos; j = s.find_next(j)) {
      if (!(up_[i] & up_[j]).intersects(s)) return false;
    }
  }
  return true;
}

bool FinPoset::is_chain(const ElementSet& s) const {
  for (std::size_t i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    for (std::size_t j = s.find_next(i); j != ElementSet::npos; j = s.find_next(j)) {
      if (!comparable(i, j)) return false;
    }
  }
  return true;
}

bool FinPoset::is_meet_semilattice() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (!meet(i, j)) return false;
    }
  }
  return true;
}

ElementSet FinPoset::maximal(const ElementSet& s) const {
  ElementSet out = empty_set();
  for (std::size_t i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    ElementSet above = up_[i] & s;
    above.reset(i);
    if (above.none()) out.set(i);
  }
  return out;
}

ElementSet FinPoset::minimal(const ElementSet& s) const {
  ElementSet out = empty_set();
  for (std::size_t i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    ElementSet below = down_[i] & s;
    below.reset(i);
    if (below.none()) out.set(i);
  }
  return out;
}

FinPoset FinPoset::dual() const { return FinPoset(labels_, down_, up_); }

std::optional<std::size_t> lub(const FinPoset& p, std::span<const std::size_t> s) {
  return p.lub(p.to_set(s));
}

std::vector<std::pair<std::size_t, std::size_t>> hasse(const FinPoset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!p.less(i, j)) continue;
      ElementSet between = p.up(i) & p.down(j);
      between.reset(i);
      between.reset(j);
      if (between.none()) covers.emplace_back(i, j);
    }
  }
  return covers;
}

bool is_order_isomorphism(const FinPoset& a, const FinPoset& b,
                          std::span<const std::size_t> mapping) {
  const std::size_t n = a.size();
  if (b.size() != n || mapping.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t x : mapping) {
    if (x >= n || hit[x]) return false;
    hit[x] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a.leq(i, j) != b.leq(mapping[i], mapping[j])) return false;
    }
  }
  return true;
}

namespace {

struct IsoSearch {
  const FinPoset& a;
  const FinPoset& b;
  std::vector<std::size_t> order;  // a-elements in assignment order
  std::vector<std::size_t> map;
  std::vector<bool> used;
  std::vector<std::pair<std::size_t, std::size_t>> sig_a, sig_b;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const std::size_t x = order[depth];
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (used[y] || sig_a[x] != sig_b[y]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t u = order[d];
        ok = a.leq(x, u) == b.leq(y, map[u]) && a.leq(u, x) == b.leq(map[u], y);
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = true;
      if (extend(depth + 1)) return true;
      used[y] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> find_order_isomorphism(const FinPoset& a,
                                                               const FinPoset& b) {
  if (a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.size();
  IsoSearch search{a, b, {}, std::vector<std::size_t>(n), std::vector<bool>(n, false), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    search.sig_a.emplace_back(a.down(i).count(), a.up(i).count());
    search.sig_b.emplace_back(b.down(i).count(), b.up(i).count());
  }
  auto sa = search.sig_a, sb = search.sig_b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  search.order.resize(n);
  std::iota(search.order.begin(), search.order.end(), 0);
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](std::size_t x, std::size_t y) { return a.down(x).count() < a.down(y).count(); });
  if (!search.extend(0)) return std::nullopt;
  return search.map;
}

FinPoset chain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FinPoset::from_relation(std::move(labels), [](std::size_t i, std::size_t j) { return i <= j; });
}

FinPoset antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FinPoset::from_relation(std::move(labels), [](std::size_t i, std::size_t j) { return i == j; });
}

FinPoset antichain_with_bottom(std::size_t n) {
  std::vector<std::string> labels{"bot"};
  for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  return FinPoset::from_relation(std::move(labels),
                                 [](std::size_t i, std::size_t j) { return i == 0 || i == j; });
}

}  // namespace ordalg::order
