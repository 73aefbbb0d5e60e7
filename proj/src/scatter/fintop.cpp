#include "ordalg/scatter/fintop.hpp"

#include <algorithm>
#include <bit>

namespace ordalg::scatter {

const char* to_string(TopoErrc kind) noexcept {
  switch (kind) {
    case TopoErrc::InvalidTopology: return "InvalidTopology";
    case TopoErrc::BadParameters: return "BadParameters";
    case TopoErrc::ParseError: return "ParseError";
    case TopoErrc::SizeLimit: return "SizeLimit";
  }
  return "Unknown";
}

namespace {

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

std::vector<std::size_t> members(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1)
    if (m & 1U) out.push_back(i);
  return out;
}

}  // namespace

FinTop FinTop::validate(std::vector<std::string> labels, std::vector<Mask> opens) {
  if (labels.size() > kMaxPoints) throw TopoError(TopoErrc::SizeLimit, "too many points", {labels.size()});
  FinTop t;
  t.labels_ = std::move(labels);
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  t.opens_ = std::move(opens);
  const Mask all = t.points();
  for (Mask u : t.opens_) {
    if (u & ~all) throw TopoError(TopoErrc::InvalidTopology, "open set mentions an unknown point");
  }
  if (!t.is_open(0)) throw TopoError(TopoErrc::InvalidTopology, "empty set is not open");
  if (!t.is_open(all)) throw TopoError(TopoErrc::InvalidTopology, "whole space is not open");
  for (std::size_t i = 0; i < t.opens_.size(); ++i) {
    for (std::size_t j = i + 1; j < t.opens_.size(); ++j) {
      if (!t.is_open(t.opens_[i] | t.opens_[j])) {
        throw TopoError(TopoErrc::InvalidTopology, "not closed under union", {i, j});
      }
      if (!t.is_open(t.opens_[i] & t.opens_[j])) {
        throw TopoError(TopoErrc::InvalidTopology, "not closed under intersection", {i, j});
      }
    }
  }
  return t;
}

FinTop FinTop::discrete(std::size_t n) {
  if (n > 20) throw TopoError(TopoErrc::SizeLimit, "discrete space too large to list", {n});
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<Mask> opens;
  for (Mask m = 0; m < bit(n); ++m) opens.push_back(m);
  return validate(labels, opens);
}

FinTop FinTop::indiscrete(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return validate(labels, {0, n == 0 ? 0 : bit(n) - 1});
}

bool FinTop::is_open(Mask s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }

Mask FinTop::closure(Mask s) const {
  Mask outside = 0;
  for (Mask u : opens_)
    if ((u & s) == 0) outside |= u;
  return points() & ~outside;
}

FinTop FinTop::subspace(Mask s) const {
  const auto keep = members(s & points());
  auto restrict = [&](Mask u) {
    Mask out = 0;
    for (std::size_t i = 0; i < keep.size(); ++i)
      if (u & bit(keep[i])) out |= bit(i);
    return out;
  };
  std::vector<std::string> labels;
  for (std::size_t x : keep) labels.push_back(labels_[x]);
  std::vector<Mask> opens;
  for (Mask u : opens_) opens.push_back(restrict(u));
  return validate(labels, opens);
}

FinTop cb_derivative_fin(const FinTop& t) {
  Mask keep = 0;
  for (std::size_t x = 0; x < t.size(); ++x)
    if (!t.is_isolated(x)) keep |= bit(x);
  return t.subspace(keep);
}

namespace {

/// Derivative sequence tracked against the original point indices.
struct Stages {
  std::vector<std::optional<std::size_t>> stage;
  std::vector<FinTop> spaces;        // D^0, D^1, ... up to the first empty or stable one
  std::vector<std::vector<std::size_t>> origin;  // original index of each point of spaces[k]
};

Stages derive(const FinTop& t) {
  Stages s;
  s.stage.assign(t.size(), std::nullopt);
  s.spaces.push_back(t);
  std::vector<std::size_t> ids(t.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  s.origin.push_back(ids);
  for (std::size_t k = 0;; ++k) {
    const FinTop& cur = s.spaces.back();
    if (cur.size() == 0) break;
    Mask keep = 0;
    std::vector<std::size_t> next_ids;
    for (std::size_t x = 0; x < cur.size(); ++x) {
      if (cur.is_isolated(x)) {
        s.stage[s.origin.back()[x]] = k;
      } else {
        keep |= bit(x);
        next_ids.push_back(s.origin.back()[x]);
      }
    }
    if (keep == cur.points()) break;  // no isolated points: stable residue
    FinTop next = cur.subspace(keep);
    s.spaces.push_back(std::move(next));
    s.origin.push_back(std::move(next_ids));
  }
  return s;
}

}  // namespace

CbRank cb_rank_fin(const FinTop& t) {
  const auto s = derive(t);
  CbRank r;
  r.stage = s.stage;
  const FinTop& last = s.spaces.back();
  r.scattered = last.size() == 0;
  r.rank = s.spaces.size() - 1;
  if (!r.scattered) r.residue = last.labels();
  return r;
}

bool is_scattered_fin(const FinTop& t) { return cb_rank_fin(t).scattered; }

bool is_stonean_fin(const FinTop& t) {
  return std::all_of(t.opens().begin(), t.opens().end(), [&](Mask u) { return t.is_open(t.closure(u)); });
}

bool is_totally_disconnected_fin(const FinTop& t) {
  for (std::size_t x = 0; x < t.size(); ++x) {
    Mask quasi = t.points();
    for (Mask u : t.opens())
      if ((u & bit(x)) && t.is_clopen(u)) quasi &= u;
    if (quasi != bit(x)) return false;
  }
  return true;
}

bool is_hausdorff_fin(const FinTop& t) {
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = x + 1; y < t.size(); ++y) {
      bool separated = false;
      for (Mask u : t.opens()) {
        if (!(u & bit(x)) || (u & bit(y))) continue;
        for (Mask v : t.opens()) {
          if ((v & bit(y)) && !(u & v)) {
            separated = true;
            break;
          }
        }
        if (separated) break;
      }
      if (!separated) return false;
    }
  }
  return true;
}

StoneScatteredReport stone_scattered_check(const FinTop& t) {
  StoneScatteredReport r;
  r.stonean = is_stonean_fin(t);
  r.hausdorff = is_hausdorff_fin(t);
  const auto s = derive(t);
  r.scattered = s.spaces.back().size() == 0;
  r.stage = s.stage;
  r.clopen_at_stage.assign(t.size(), false);
  for (std::size_t k = 0; k < s.spaces.size(); ++k) {
    const auto& space = s.spaces[k];
    for (std::size_t x = 0; x < space.size(); ++x) {
      const std::size_t id = s.origin[k][x];
      if (s.stage[id] == k) r.clopen_at_stage[id] = space.is_clopen(bit(x));
    }
  }
  r.holds = r.stonean && r.scattered;
  if (r.holds && r.hausdorff) {
    r.holds = std::all_of(r.clopen_at_stage.begin(), r.clopen_at_stage.end(), [](bool b) { return b; });
  }
  return r;
}

FinTop fintop_from_json(const nlohmann::json& j) {
  std::vector<std::string> labels;
  std::vector<Mask> opens;
  try {
    for (const auto& p : j.at("points")) labels.push_back(p.is_string() ? p.get<std::string>() : p.dump());
    if (labels.size() > kMaxPoints) throw TopoError(TopoErrc::SizeLimit, "too many points", {labels.size()});
    for (const auto& u : j.at("opens")) {
      Mask m = 0;
      for (const auto& x : u) {
        const auto i = x.get<std::size_t>();
        if (i >= labels.size()) throw TopoError(TopoErrc::ParseError, "point index out of range", {i});
        m |= bit(i);
      }
      opens.push_back(m);
    }
  } catch (const nlohmann::json::exception& e) {
    throw TopoError(TopoErrc::ParseError, std::string(R"(expected {"points", "opens"}: )") + e.what());
  }
  return FinTop::validate(labels, opens);
}

nlohmann::json fintop_to_json(const FinTop& t) {
  auto opens = nlohmann::json::array();
  for (Mask u : t.opens()) opens.push_back(members(u));
  return {{"points", t.labels()}, {"opens", opens}};
}

}  // namespace ordalg::scatter
