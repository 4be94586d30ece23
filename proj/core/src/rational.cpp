#include "binlr/rational.hpp"

#include <stdexcept>

namespace binlr {

namespace {

std::int64_t parse_int(const std::string& s, const std::string& whole) {
  const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
  if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
    throw std::invalid_argument("bad rational '" + whole + "'");
  try {
    return std::stoll(s);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("rational out of range '" + whole + "'");
  }
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return {parse_int(text.substr(0, slash), text), den};
  }
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15 || frac.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad rational '" + text + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::string head = text.substr(0, dot);
    const std::int64_t whole = parse_int(head, text);
    if (head[0] == '-')
      throw std::invalid_argument("negative decimal '" + text + "'");
    return Rational(whole) + Rational(parse_int(frac, text), scale);
  }
  return Rational(parse_int(text, text));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

bool within_ratio(std::uint64_t error, const Rational& bound, std::uint64_t reference) {
  // error * den <= num * reference, in 128 bits.
  const auto lhs = static_cast<Int128>(error) * bound.denominator();
  const auto rhs = static_cast<Int128>(bound.numerator()) * static_cast<Int128>(reference);
  return lhs <= rhs;
}

}  // namespace binlr
