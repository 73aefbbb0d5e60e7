#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordalg/scatter/fintop.hpp"

namespace ordalg::scatter {

inline constexpr unsigned kMaxOrdinalExponent = 8;

/// Ordinal below w^9 in Cantor normal form.
class OrdinalCNF {
 public:
  struct Term {
    unsigned exponent;
    std::uint64_t coefficient;
    bool operator==(const Term&) const = default;
  };

  OrdinalCNF() = default;
  static OrdinalCNF finite(std::uint64_t n);
  /// Terms in any order; combined with ordinal addition left to right.
  static OrdinalCNF from_terms(const std::vector<Term>& terms);

  /// Strictly decreasing exponents, positive coefficients.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const noexcept { return terms_.empty() || terms_.front().exponent == 0; }
  unsigned leading_exponent() const noexcept { return terms_.empty() ? 0 : terms_.front().exponent; }

  std::strong_ordering operator<=>(const OrdinalCNF& o) const;
  bool operator==(const OrdinalCNF& o) const = default;

  std::string to_string() const;

 private:
  friend OrdinalCNF ordinal_add(const OrdinalCNF& a, const OrdinalCNF& b);
  std::vector<Term> terms_;
};

OrdinalCNF ordinal_add(const OrdinalCNF& a, const OrdinalCNF& b);

/// "w^E*C + ..." with shorthands "w", "w^E", "w*C" and plain naturals.
OrdinalCNF parse_ordinal(const std::string& text);

/// [0,a]' is order-homeomorphic to [1,b]; returns b, or nothing when a is
/// finite and the derivative is empty.
std::optional<OrdinalCNF> cb_derivative_ord(const OrdinalCNF& a);

/// Least n with the n-th derivative of [0,a] empty.
std::size_t cb_rank_ord(const OrdinalCNF& a);

/// [0,n] with the order topology (discrete). Used to compare with the finite
/// machinery.
FinTop finite_ordinal_space(std::uint64_t n);

}  // namespace ordalg::scatter
