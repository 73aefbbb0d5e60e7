#include "ordalg/scatter/kq.hpp"

#include <bit>

namespace ordalg::scatter {

namespace {

std::vector<std::size_t> members(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1)
    if (m & 1U) out.push_back(i);
  return out;
}

FinTop truncated_sequence(std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("x" + std::to_string(i));
  labels.push_back("Z");
  const Mask isolated = (Mask{1} << m) - 1;
  const Mask z = Mask{1} << m;
  const Mask tail = Mask{1} << (m - 1);
  std::vector<Mask> opens;
  for (Mask u = 0; u <= isolated; ++u) {
    opens.push_back(u);
    if (u & tail) opens.push_back(u | z);
  }
  return FinTop::validate(labels, opens);
}

}  // namespace

KqChain kq_chain_witness(std::size_t m, std::size_t n) {
  if (n < 2 || n > m || m > 10) {
    throw TopoError(TopoErrc::BadParameters,
                    "need 2 <= n <= m <= 10, got m=" + std::to_string(m) + " n=" + std::to_string(n),
                    {m, n});
  }
  KqChain c{truncated_sequence(m), {}, {}, {}, {}, false, false, false};
  for (std::size_t i = 1; i <= m; ++i) c.labels.push_back(cantor::make_rational(static_cast<long>(i), static_cast<long>(m)));
  const Mask z = Mask{1} << m;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& q = c.labels[i];
    c.chosen.push_back(q);
    Mask k = z;
    for (std::size_t r = 0; r < m; ++r)
      if (c.labels[r] <= q) k |= Mask{1} << r;
    c.chain.push_back(k);
    const auto pts = members(k);
    c.duals.push_back(partitions::collapse(m + 1, pts));
  }
  c.strictly_increasing = true;
  c.dual_reverses = true;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Mask a = c.chain[i], b = c.chain[i + 1];
    if (!((a & ~b) == 0 && a != b)) c.strictly_increasing = false;
    const bool finer = c.duals[i].refines(c.duals[i + 1]) && !(c.duals[i] == c.duals[i + 1]);
    if (!finer) c.dual_reverses = false;
  }
  c.all_closed = true;
  for (Mask k : c.chain)
    if (!c.space.is_closed(k)) c.all_closed = false;
  return c;
}

nlohmann::json kq_chain_to_json(const KqChain& c) {
  auto chain = nlohmann::json::array();
  for (std::size_t i = 0; i < c.chain.size(); ++i) {
    auto labels = nlohmann::json::array();
    for (std::size_t x : members(c.chain[i])) labels.push_back(c.space.labels()[x]);
    chain.push_back({{"q", cantor::to_string(c.chosen[i])},
                     {"members", labels},
                     {"size", labels.size()},
                     {"dual", partitions::eqrel_to_json(c.duals[i])}});
  }
  return {{"space", fintop_to_json(c.space)},
          {"chain", chain},
          {"strictly_increasing", c.strictly_increasing},
          {"all_closed", c.all_closed},
          {"dual_reverses", c.dual_reverses},
          {"passed", c.passed()}};
}

}  // namespace ordalg::scatter
