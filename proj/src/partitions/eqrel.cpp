#include "ordalg/partitions/eqrel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace ordalg::partitions {

const char* to_string(PartitionErrc kind) noexcept {
  switch (kind) {
    case PartitionErrc::GroundMismatch: return "GroundMismatch";
    case PartitionErrc::SizeLimit: return "SizeLimit";
    case PartitionErrc::OutOfRange: return "OutOfRange";
    case PartitionErrc::InvalidClasses: return "InvalidClasses";
  }
  return "Unknown";
}

EqRel EqRel::from_classes(std::size_t n, std::vector<std::vector<std::size_t>> classes) {
  std::vector<std::size_t> labels(n, n);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw PartitionError(PartitionErrc::InvalidClasses, "empty class");
    for (std::size_t x : classes[c]) {
      if (x >= n) {
        throw PartitionError(PartitionErrc::OutOfRange,
                             "point " + std::to_string(x) + " outside ground set of size " +
                                 std::to_string(n),
                             {x});
      }
      if (labels[x] != n) {
        throw PartitionError(PartitionErrc::InvalidClasses,
                             "point " + std::to_string(x) + " appears in two classes", {x});
      }
      labels[x] = c;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (labels[x] == n) {
      throw PartitionError(PartitionErrc::InvalidClasses,
                           "point " + std::to_string(x) + " is in no class", {x});
    }
  }
  return from_block_labels(labels);
}

EqRel EqRel::from_block_labels(std::span<const std::size_t> labels) {
  EqRel r;
  r.block_.resize(labels.size());
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto [it, inserted] = renumber.emplace(labels[x], r.classes_.size());
    if (inserted) r.classes_.emplace_back();
    r.classes_[it->second].push_back(x);
    r.block_[x] = it->second;
  }
  // scanning x upward already yields sorted classes ordered by least member
  return r;
}

EqRel EqRel::discrete(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return from_block_labels(labels);
}

EqRel EqRel::full(std::size_t n) {
  const std::vector<std::size_t> labels(n, 0);
  return from_block_labels(labels);
}

bool EqRel::refines(const EqRel& coarser) const {
  if (coarser.ground_size() != ground_size()) {
    throw PartitionError(PartitionErrc::GroundMismatch, "ground sets differ");
  }
  for (const auto& cls : classes_) {
    const std::size_t b = coarser.block_of(cls.front());
    for (std::size_t x : cls) {
      if (coarser.block_of(x) != b) return false;
    }
  }
  return true;
}

std::string EqRel::to_string() const {
  std::string out;
  for (const auto& cls : classes_) {
    out += '{';
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cls[i]);
    }
    out += '}';
  }
  return out;
}

namespace {

void check_same_ground(const EqRel& r, const EqRel& s) {
  if (r.ground_size() != s.ground_size()) {
    throw PartitionError(PartitionErrc::GroundMismatch,
                         "ground sets of size " + std::to_string(r.ground_size()) + " and " +
                             std::to_string(s.ground_size()));
  }
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

EqRel join(const EqRel& r, const EqRel& s) {
  check_same_ground(r, s);
  const std::size_t n = r.ground_size();
  DisjointSets sets(n);
  for (const EqRel* rel : {&r, &s}) {
    for (const auto& cls : rel->classes()) {
      for (std::size_t x : cls) sets.unite(x, cls.front());
    }
  }
  std::vector<std::size_t> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = sets.find(x);
  return EqRel::from_block_labels(labels);
}

EqRel meet(const EqRel& r, const EqRel& s) {
  check_same_ground(r, s);
  const std::size_t n = r.ground_size();
  std::vector<std::size_t> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = r.block_of(x) * n + s.block_of(x);
  return EqRel::from_block_labels(labels);
}

EqRel collapse(std::size_t n, std::span<const std::size_t> k) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  for (std::size_t x : k) {
    if (x >= n) {
      throw PartitionError(PartitionErrc::OutOfRange,
                           "point " + std::to_string(x) + " outside ground set of size " +
                               std::to_string(n),
                           {x});
    }
    labels[x] = 0;
  }
  return EqRel::from_block_labels(labels);
}

Quotient quotient(const EqRel& r) {
  Quotient q;
  q.points = r.num_classes();
  q.projection.resize(r.ground_size());
  for (std::size_t x = 0; x < r.ground_size(); ++x) q.projection[x] = r.block_of(x);
  return q;
}

std::vector<EqRel> enumerate_partitions(std::size_t n) {
  std::vector<EqRel> out;
  if (n == 0) {
    out.push_back(EqRel::discrete(0));
    return out;
  }
  // restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1])
  std::vector<std::size_t> rgs(n, 0), prefix_max(n, 0);
  while (true) {
    out.push_back(EqRel::from_block_labels(rgs));
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return out;
}

const char* to_string(Orientation o) noexcept {
  return o == Orientation::Refinement ? "refinement" : "subalgebra";
}

Orientation orientation_from_string(const std::string& s) {
  if (s == "refinement") return Orientation::Refinement;
  if (s == "subalgebra") return Orientation::Subalgebra;
  throw PartitionError(PartitionErrc::InvalidClasses,
                       "orientation must be \"refinement\" or \"subalgebra\", got \"" + s + "\"");
}

std::size_t PartitionLattice::index_of(const EqRel& r) const {
  auto it = std::find(partitions.begin(), partitions.end(), r);
  if (it == partitions.end()) {
    throw PartitionError(PartitionErrc::GroundMismatch, "relation is not in this lattice");
  }
  return static_cast<std::size_t>(it - partitions.begin());
}

PartitionLattice partition_lattice(std::size_t n, Orientation orientation, std::size_t max_n) {
  if (n < 1 || n > max_n) {
    throw PartitionError(PartitionErrc::SizeLimit,
                         "partition lattice size must be in [1, " + std::to_string(max_n) +
                             "], got " + std::to_string(n));
  }
  std::vector<EqRel> parts = enumerate_partitions(n);
  std::vector<std::string> labels;
  labels.reserve(parts.size());
  for (const auto& p : parts) labels.push_back(p.to_string());
  auto poset = order::FinPoset::from_relation(std::move(labels), [&](std::size_t i, std::size_t j) {
    return orientation == Orientation::Refinement ? parts[i].refines(parts[j])
                                                  : parts[j].refines(parts[i]);
  });
  return PartitionLattice{orientation, std::move(parts), std::move(poset)};
}

EqRel eqrel_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("classes")) {
    throw PartitionError(PartitionErrc::InvalidClasses,
                         "relation JSON needs \"n\" and \"classes\"");
  }
  try {
    return EqRel::from_classes(j.at("n").get<std::size_t>(),
                               j.at("classes").get<std::vector<std::vector<std::size_t>>>());
  } catch (const nlohmann::json::exception& e) {
    throw PartitionError(PartitionErrc::InvalidClasses, e.what());
  }
}

nlohmann::json eqrel_to_json(const EqRel& r) {
  return {{"n", r.ground_size()}, {"classes", r.classes()}};
}

}  // namespace ordalg::partitions
