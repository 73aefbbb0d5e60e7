#include "ordalg/staralg/gaussian.hpp"

#include <regex>
#include <stdexcept>

namespace ordalg::staralg {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.norm();
  if (n == 0) throw std::domain_error("division by zero");
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string to_string(const GaussianRational& z) {
  std::string out = z.re().get_str();
  if (z.im() == 0) return out;
  const Rational mag = abs(z.im());
  out += z.im() < 0 ? "-" : "+";
  if (mag != 1) out += mag.get_str() + " ";
  return out + "i";
}

GaussianRational parse_gaussian(const std::string& s) {
  static const std::regex imaginary(R"(\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*i\s*)");
  static const std::regex general(
      R"(\s*([+-]?\d+(?:/\d+)?)\s*(?:([+-])\s*(\d+(?:/\d+)?)?\s*\*?\s*i)?\s*)");
  std::smatch m;
  if (std::regex_match(s, m, imaginary)) {
    Rational im = m[2].matched ? cantor::parse_rational(m[2].str()) : Rational(1);
    return {Rational(0), m[1].str() == "-" ? Rational(-im) : im};
  }
  if (std::regex_match(s, m, general)) {
    Rational re = cantor::parse_rational(m[1].str());
    Rational im = 0;
    if (m[2].matched) {
      im = m[3].matched ? cantor::parse_rational(m[3].str()) : Rational(1);
      if (m[2].str() == "-") im = -im;
    }
    return {re, im};
  }
  throw std::invalid_argument("not a Gaussian rational: \"" + s + "\"");
}

}  // namespace ordalg::staralg
