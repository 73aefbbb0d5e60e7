#pragma once

#include <string>

#include <gmpxx.h>

namespace ordalg::cantor {

/// Exact rational, always kept canonical (reduced, positive denominator).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// 3^-n.
Rational third_power(unsigned n);

/// "num/den", also for integers ("0/1", "1/1").
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" and "-p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& s);

}  // namespace ordalg::cantor
