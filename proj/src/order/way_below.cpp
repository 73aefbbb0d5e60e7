#include "ordalg/order/way_below.hpp"

#include <cstdint>
#include <string>

namespace ordalg::order {

const char* to_string(WayBelowPath path) noexcept {
  return path == WayBelowPath::Definitional ? "definitional" : "finite-fast-path";
}

WayBelowPath default_path(const FinPoset& p) noexcept {
  return p.size() <= kDefinitionalLimit ? WayBelowPath::Definitional
                                        : WayBelowPath::FiniteFastPath;
}

std::vector<DirectedSubset> directed_subsets(const FinPoset& p) {
  const std::size_t n = p.size();
  if (n > kDefinitionalLimit) {
    throw PosetError(PosetErrc::SizeLimit, "directed-subset enumeration is capped at " +
                                               std::to_string(kDefinitionalLimit) + " elements");
  }
  std::vector<DirectedSubset> out;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    const ElementSet members(n, mask);
    if (!p.is_directed(members)) continue;
    // finite posets are dcpos: the sup of a directed subset always exists
    out.push_back({members, *p.lub(members)});
  }
  return out;
}

WayBelow::WayBelow(const FinPoset& p, std::optional<WayBelowPath> path)
    : poset_(&p), path_(path.value_or(default_path(p))) {
  if (path_ == WayBelowPath::Definitional) directed_ = directed_subsets(p);
}

bool WayBelow::sets(const ElementSet& up_g, const ElementSet& up_h) const {
  if (path_ == WayBelowPath::FiniteFastPath) return up_h.is_subset_of(up_g);
  for (const auto& d : directed_) {
    if (up_h.test(d.sup) && !d.members.intersects(up_g)) return false;
  }
  return true;
}

bool WayBelow::operator()(std::size_t b, std::size_t c) const {
  poset_->check_element(b);
  poset_->check_element(c);
  return sets(poset_->up(b), poset_->up(c));
}

ElementSet WayBelow::way_below_set(std::size_t c) const {
  ElementSet out = poset_->empty_set();
  for (std::size_t b = 0; b < poset_->size(); ++b) {
    if ((*this)(b, c)) out.set(b);
  }
  return out;
}

ElementSet WayBelow::compact() const {
  ElementSet out = poset_->empty_set();
  for (std::size_t c = 0; c < poset_->size(); ++c) {
    if ((*this)(c, c)) out.set(c);
  }
  return out;
}

bool way_below(const FinPoset& p, std::size_t b, std::size_t c,
               std::optional<WayBelowPath> path) {
  p.check_element(b);
  p.check_element(c);
  return WayBelow(p, path)(b, c);
}

Subset compact_elements(const FinPoset& p, std::optional<WayBelowPath> path) {
  return FinPoset::to_subset(WayBelow(p, path).compact());
}

}  // namespace ordalg::order
