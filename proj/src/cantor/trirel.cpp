#include "ordalg/cantor/trirel.hpp"

#include <algorithm>

namespace ordalg::cantor {

const char* to_string(CantorErrc kind) noexcept {
  switch (kind) {
    case CantorErrc::InvalidRelation: return "InvalidRelation";
    case CantorErrc::DepthLimit: return "DepthLimit";
    case CantorErrc::AssertionFailed: return "AssertionFailed";
    case CantorErrc::GridTooCoarse: return "GridTooCoarse";
    case CantorErrc::OutOfRange: return "OutOfRange";
  }
  return "Unknown";
}

namespace {

std::string describe(const Block& b) { return "[" + to_string(b.lo) + ", " + to_string(b.hi) + "]"; }

}  // namespace

TriRel TriRel::from_blocks(std::vector<Block> blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    if (b.lo < 0 || b.hi > 1 || !(b.lo < b.hi)) {
      throw CantorError(CantorErrc::InvalidRelation, "bad block " + describe(b), {i});
    }
    if (i > 0 && !(blocks[i - 1].hi < b.lo)) {
      throw CantorError(CantorErrc::InvalidRelation,
                        "blocks " + describe(blocks[i - 1]) + " and " + describe(b) +
                            " are unsorted, overlapping or touching",
                        {i - 1, i});
    }
  }
  TriRel r;
  r.blocks_ = std::move(blocks);
  return r;
}

TriRel TriRel::normalized(std::vector<Block> blocks) {
  std::sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) { return x.lo < y.lo; });
  std::vector<Block> merged;
  for (auto& b : blocks) {
    if (!merged.empty() && b.lo <= merged.back().hi) {
      if (merged.back().hi < b.hi) merged.back().hi = b.hi;
    } else {
      merged.push_back(std::move(b));
    }
  }
  return from_blocks(std::move(merged));
}

TriRel TriRel::full() { return from_blocks({{Rational(0), Rational(1)}}); }

TriRel TriRel::collapse(const Rational& lo, const Rational& hi) { return from_blocks({{lo, hi}}); }

std::size_t TriRel::block_of(const Rational& x) const {
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), x,
                             [](const Rational& v, const Block& b) { return v < b.lo; });
  if (it == blocks_.begin()) return blocks_.size();
  --it;
  return x <= it->hi ? static_cast<std::size_t>(it - blocks_.begin()) : blocks_.size();
}

bool TriRel::contains(const Rational& x, const Rational& y) const {
  if (x == y) return true;
  const auto b = block_of(x);
  return b < blocks_.size() && b == block_of(y);
}

bool TriRel::subset_of(const TriRel& other) const {
  for (const auto& b : blocks_) {
    const auto i = other.block_of(b.lo);
    if (i == other.size() || other.blocks_[i].hi < b.hi) return false;
  }
  return true;
}

TriRel tri_join(const TriRel& x, const TriRel& y) {
  std::vector<Block> all(x.blocks());
  all.insert(all.end(), y.blocks().begin(), y.blocks().end());
  return TriRel::normalized(std::move(all));
}

TriRel tri_meet(const TriRel& x, const TriRel& y) {
  std::vector<Block> out;
  const auto& xs = x.blocks();
  const auto& ys = y.blocks();
  std::size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    const Rational& lo = std::max(xs[i].lo, ys[j].lo);
    const Rational& hi = std::min(xs[i].hi, ys[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (xs[i].hi < ys[j].hi) ++i; else ++j;
  }
  return TriRel::from_blocks(std::move(out));
}

Rational max_offdiag_width(const TriRel& x) {
  Rational w(0);
  for (const auto& b : x.blocks()) w = std::max(w, Rational(b.hi - b.lo));
  return w;
}

bool is_full(const TriRel& x) {
  return x.size() == 1 && x.blocks()[0].lo == 0 && x.blocks()[0].hi == 1;
}

nlohmann::json trirel_to_json(const TriRel& x) {
  auto out = nlohmann::json::array();
  for (const auto& b : x.blocks()) out.push_back({to_string(b.lo), to_string(b.hi)});
  return out;
}

TriRel trirel_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw CantorError(CantorErrc::InvalidRelation, "expected an array of blocks");
  std::vector<Block> blocks;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
      throw CantorError(CantorErrc::InvalidRelation, "block must be a pair of fraction strings");
    }
    try {
      blocks.push_back({parse_rational(item[0].get<std::string>()),
                        parse_rational(item[1].get<std::string>())});
    } catch (const std::invalid_argument& e) {
      throw CantorError(CantorErrc::InvalidRelation, e.what());
    }
  }
  return TriRel::from_blocks(std::move(blocks));
}

std::string to_string(const TriRel& x) {
  if (x.size() == 0) return "diag";
  std::string out;
  for (const auto& b : x.blocks()) out += describe(b);
  return out;
}

}  // namespace ordalg::cantor
