#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordalg/error.hpp"
#include "ordalg/order/poset.hpp"

namespace ordalg::ortho {

enum class OrthoErrc { Malformed, AxiomViolated, SizeLimit, NotBoolean, NotCommutative, IsoFailure };

const char* to_string(OrthoErrc kind) noexcept;

using OrthoError = KindedError<OrthoErrc>;

/// AxiomViolated with the axiom number (1-5) and the elements exhibiting it.
class AxiomError : public OrthoError {
 public:
  AxiomError(int axiom, std::string message, std::vector<std::size_t> witness)
      : OrthoError(OrthoErrc::AxiomViolated, std::move(message), std::move(witness)), axiom_(axiom) {}
  int axiom() const noexcept { return axiom_; }

 private:
  int axiom_;
};

/// Unvalidated tables: order matrix and orthocomplement as an index map.
struct OmpTables {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;
  std::vector<std::size_t> ortho;
};

/// Largest OMP whose subsets fit in a 64-bit mask.
inline constexpr std::size_t kMaxOmpSize = 64;

using Mask = std::uint64_t;

/// A validated finite orthomodular poset. Binary meets and joins are partial;
/// a missing one is an empty optional, never a default.
class Omp {
 public:
  const order::FinPoset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  std::size_t ortho(std::size_t p) const { return ortho_.at(p); }
  const std::vector<std::size_t>& ortho_table() const noexcept { return ortho_; }
  std::size_t zero() const noexcept { return zero_; }
  std::size_t one() const noexcept { return one_; }
  bool leq(std::size_t p, std::size_t q) const { return poset_.leq(p, q); }
  std::optional<std::size_t> meet(std::size_t p, std::size_t q) const { return meet_[p * size() + q]; }
  std::optional<std::size_t> join(std::size_t p, std::size_t q) const { return join_[p * size() + q]; }
  const std::string& label(std::size_t p) const { return poset_.label(p); }

  OmpTables tables() const;

 private:
  Omp(order::FinPoset poset, std::vector<std::size_t> ortho);

  order::FinPoset poset_;
  std::vector<std::size_t> ortho_;
  std::size_t zero_ = 0;
  std::size_t one_ = 0;
  std::vector<std::optional<std::size_t>> meet_;
  std::vector<std::optional<std::size_t>> join_;

  friend Omp validate_omp(const OmpTables& raw);
};

/// Checks the tables, then the five axioms in order, each over all elements
/// before the next:
///   1. p'' = p
///   2. p <= q implies q' <= p'
///   3. p v p' = 1
///   4. p <= q' implies p v q exists
///   5. p >= q' and p ^ q = 0 = 1' imply p = q'
/// Throws Malformed (bad tables, no top) or AxiomError for the first failure.
Omp validate_omp(const OmpTables& raw);

/// Subsets of a k-set under inclusion and complement; element i is the mask i.
Omp power_set_omp(std::size_t k);
/// 0, 1 and n incomparable pairs a_i, a_i'.
Omp mo_omp(std::size_t n);

/// Table fixtures that break exactly one axiom (the first one checked).
OmpTables mutation_fixture(int axiom);

nlohmann::json omp_to_json(const Omp& p);
/// {"elements": [...], "leq": [[...]], "ortho": [...]}.
OmpTables omp_tables_from_json(const nlohmann::json& j);

}  // namespace ordalg::ortho
