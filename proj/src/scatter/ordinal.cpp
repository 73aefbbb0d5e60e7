#include "ordalg/scatter/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace ordalg::scatter {

OrdinalCNF OrdinalCNF::finite(std::uint64_t n) {
  OrdinalCNF o;
  if (n > 0) o.terms_.push_back({0, n});
  return o;
}

OrdinalCNF OrdinalCNF::from_terms(const std::vector<Term>& terms) {
  OrdinalCNF out;
  for (const auto& t : terms) {
    if (t.exponent > kMaxOrdinalExponent) {
      throw TopoError(TopoErrc::SizeLimit,
                      "ordinal exponent " + std::to_string(t.exponent) + " exceeds " +
                          std::to_string(kMaxOrdinalExponent),
                      {t.exponent});
    }
    if (t.coefficient == 0) continue;
    OrdinalCNF single;
    single.terms_.push_back(t);
    out = ordinal_add(out, single);
  }
  return out;
}

std::strong_ordering OrdinalCNF::operator<=>(const OrdinalCNF& o) const {
  const std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = terms_[i];
    const auto& b = o.terms_[i];
    if (a.exponent != b.exponent) return a.exponent <=> b.exponent;
    if (a.coefficient != b.coefficient) return a.coefficient <=> b.coefficient;
  }
  return terms_.size() <=> o.terms_.size();
}

std::string OrdinalCNF::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += "+";
    if (t.exponent == 0) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += "w";
    if (t.exponent > 1) out += "^" + std::to_string(t.exponent);
    if (t.coefficient > 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

OrdinalCNF ordinal_add(const OrdinalCNF& a, const OrdinalCNF& b) {
  if (b.is_zero()) return a;
  const unsigned lead = b.terms_.front().exponent;
  OrdinalCNF out;
  // terms of a below the leading exponent of b are absorbed
  for (const auto& t : a.terms_)
    if (t.exponent > lead) out.terms_.push_back(t);
  auto rest = b.terms_;
  for (const auto& t : a.terms_) {
    if (t.exponent != lead) continue;
    if (rest.front().coefficient > std::numeric_limits<std::uint64_t>::max() - t.coefficient) {
      throw TopoError(TopoErrc::SizeLimit, "ordinal coefficient overflow");
    }
    rest.front().coefficient += t.coefficient;
  }
  out.terms_.insert(out.terms_.end(), rest.begin(), rest.end());
  return out;
}

namespace {

std::uint64_t parse_natural(const std::string& text, const std::string& whole) {
  std::uint64_t v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw TopoError(TopoErrc::ParseError, "bad number \"" + text + "\" in ordinal \"" + whole + "\"");
  }
  return v;
}

}  // namespace

OrdinalCNF parse_ordinal(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw TopoError(TopoErrc::ParseError, "empty ordinal");
  std::vector<OrdinalCNF::Term> terms;
  std::size_t pos = 0;
  while (true) {
    const std::size_t plus = s.find('+', pos);
    const std::string tok = s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    if (tok.empty()) throw TopoError(TopoErrc::ParseError, "empty term in ordinal \"" + text + "\"");
    if (tok[0] == 'w') {
      std::uint64_t exponent = 1, coefficient = 1;
      std::string rest = tok.substr(1);
      if (!rest.empty() && rest[0] == '^') {
        const std::size_t star = rest.find('*');
        exponent = parse_natural(rest.substr(1, star == std::string::npos ? std::string::npos : star - 1), text);
        rest = star == std::string::npos ? "" : rest.substr(star);
      }
      if (!rest.empty()) {
        if (rest[0] != '*') throw TopoError(TopoErrc::ParseError, "unexpected \"" + rest + "\" in \"" + text + "\"");
        coefficient = parse_natural(rest.substr(1), text);
      }
      if (exponent > kMaxOrdinalExponent) {
        throw TopoError(TopoErrc::SizeLimit,
                        "ordinal exponent " + std::to_string(exponent) + " exceeds " +
                            std::to_string(kMaxOrdinalExponent),
                        {static_cast<std::size_t>(exponent)});
      }
      terms.push_back({static_cast<unsigned>(exponent), coefficient});
    } else {
      terms.push_back({0, parse_natural(tok, text)});
    }
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return OrdinalCNF::from_terms(terms);
}

std::optional<OrdinalCNF> cb_derivative_ord(const OrdinalCNF& a) {
  if (a.is_finite()) return std::nullopt;
  std::vector<OrdinalCNF::Term> terms;
  for (const auto& t : a.terms())
    if (t.exponent > 0) terms.push_back({t.exponent - 1, t.coefficient});
  return OrdinalCNF::from_terms(terms);
}

std::size_t cb_rank_ord(const OrdinalCNF& a) { return a.leading_exponent() + 1; }

FinTop finite_ordinal_space(std::uint64_t n) {
  if (n + 1 > kMaxPoints) throw TopoError(TopoErrc::SizeLimit, "finite ordinal too large", {static_cast<std::size_t>(n)});
  // generated from the intervals; comes out discrete
  std::vector<std::string> labels;
  for (std::uint64_t i = 0; i <= n; ++i) labels.push_back(std::to_string(i));
  const std::size_t m = labels.size();
  if (m > 20) throw TopoError(TopoErrc::SizeLimit, "too many open sets to list", {m});
  std::vector<Mask> basis;
  for (std::size_t lo = 0; lo <= m; ++lo) {
    for (std::size_t hi = lo; hi <= m; ++hi) {
      Mask b = 0;
      for (std::size_t x = lo; x < hi; ++x) b |= Mask{1} << x;
      basis.push_back(b);
    }
  }
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  std::vector<Mask> opens;
  for (Mask u = 0; u < (Mask{1} << m); ++u) {
    Mask cover = 0;
    for (Mask b : basis)
      if ((b & ~u) == 0) cover |= b;
    if (cover == u) opens.push_back(u);
  }
  return FinTop::validate(labels, opens);
}

}  // namespace ordalg::scatter
