#include "ordalg/order/topology.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ordalg/order/way_below.hpp"

namespace ordalg::order {

namespace {

void check_size(const FinPoset& p) {
  if (p.size() > kTopologyLimit) {
    throw PosetError(PosetErrc::SizeLimit, "open-set enumeration is capped at " +
                                               std::to_string(kTopologyLimit) + " elements");
  }
}

}  // namespace

OpenFamily scott_opens(const FinPoset& p) {
  check_size(p);
  const std::size_t n = p.size();
  const auto directed = directed_subsets(p);
  OpenFamily out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    const ElementSet u(n, mask);
    if (p.up_closure(u) != u) continue;
    const bool inaccessible = std::all_of(directed.begin(), directed.end(), [&](const auto& d) {
      return !u.test(d.sup) || d.members.intersects(u);
    });
    if (inaccessible) out.push_back(u);
  }
  return out;
}

OpenFamily lawson_opens(const FinPoset& p) {
  check_size(p);
  const std::size_t n = p.size();
  const OpenFamily scott = scott_opens(p);

  std::set<ElementSet> finitely_generated;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    finitely_generated.insert(p.up_closure(ElementSet(n, mask)));
  }
  std::set<ElementSet> basis;
  for (const auto& u : scott) {
    for (const auto& v : finitely_generated) basis.insert(u - v);
  }
  // The subbasis is closed under finite intersection already:
  // (U1 \ V1) & (U2 \ V2) = (U1 & U2) \ (V1 | V2), so its unions are the opens.
  OpenFamily out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    const ElementSet w(n, mask);
    ElementSet covered(n);
    for (const auto& b : basis) {
      if (b.is_subset_of(w)) covered |= b;
    }
    if (covered == w) out.push_back(w);
  }
  return out;
}

bool is_topology(std::size_t points, const OpenFamily& opens) {
  const std::set<ElementSet> family(opens.begin(), opens.end());
  ElementSet empty(points), full(points);
  full.set();
  if (!family.contains(empty) || !family.contains(full)) return false;
  for (const auto& a : family) {
    if (a.size() != points) return false;
    for (const auto& b : family) {
      if (!family.contains(a | b) || !family.contains(a & b)) return false;
    }
  }
  return true;
}

bool is_discrete(std::size_t points, const OpenFamily& opens) {
  const std::set<ElementSet> family(opens.begin(), opens.end());
  return points < 64 && family.size() == (std::size_t{1} << points);
}

}  // namespace ordalg::order
