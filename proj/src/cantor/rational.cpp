#include "ordalg/cantor/rational.hpp"

#include <regex>
#include <stdexcept>

namespace ordalg::cantor {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational third_power(unsigned n) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 3, n);
  return Rational(mpz_class(1), den);
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  static const std::regex pattern(R"(\s*(-?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, pattern)) throw std::invalid_argument("not a rational: " + s);
  mpz_class num(m[1].str());
  mpz_class den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace ordalg::cantor
