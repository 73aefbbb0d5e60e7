#include "ordalg/staralg/hom.hpp"

#include <numeric>

#include "ordalg/staralg/matrix.hpp"

namespace ordalg::staralg {

namespace {

std::vector<std::size_t> total(const SpectrumMap& h, std::size_t x_size) {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < h.size(); ++y) {
    if (!h[y]) throw StarError(StarErrc::NotTotal, "map undefined at " + std::to_string(y), {y});
    if (*h[y] >= x_size) {
      throw StarError(StarErrc::DimMismatch,
                      "image " + std::to_string(*h[y]) + " of " + std::to_string(y) + " outside X",
                      {y, *h[y]});
    }
    out.push_back(*h[y]);
  }
  return out;
}

}  // namespace

partitions::EqRel pushforward_hom(const SpectrumMap& h, std::size_t x_size, const partitions::EqRel& c) {
  const auto f = total(h, x_size);
  if (c.ground_size() != x_size) {
    throw StarError(StarErrc::DimMismatch, "partition is not on X", {c.ground_size(), x_size});
  }
  std::vector<std::size_t> labels;
  for (std::size_t y = 0; y < f.size(); ++y) labels.push_back(c.block_of(f[y]));
  return partitions::EqRel::from_block_labels(labels);
}

partitions::EqRel pullback_adjoint(const SpectrumMap& h, std::size_t x_size, const partitions::EqRel& d) {
  const auto f = total(h, x_size);
  if (d.ground_size() != f.size()) {
    throw StarError(StarErrc::DimMismatch, "partition is not on Y", {d.ground_size(), f.size()});
  }
  std::vector<std::size_t> parent(x_size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& block : d.classes()) {
    for (std::size_t y : block) parent[find(f[y])] = find(f[block.front()]);
  }
  std::vector<std::size_t> labels(x_size);
  for (std::size_t x = 0; x < x_size; ++x) labels[x] = find(x);
  return partitions::EqRel::from_block_labels(labels);
}

SpectrumMap spectrum_map_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw StarError(StarErrc::Malformed, "map must be an array");
  SpectrumMap out;
  for (const auto& v : j) {
    if (v.is_null()) {
      out.emplace_back();
    } else if (v.is_number_unsigned()) {
      out.emplace_back(v.get<std::size_t>());
    } else {
      throw StarError(StarErrc::Malformed, "map entries must be indices or null");
    }
  }
  return out;
}

}  // namespace ordalg::staralg
