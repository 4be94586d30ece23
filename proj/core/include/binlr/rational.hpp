#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace binlr {

__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

/// Exact ratios for approximation bounds; never compared in floating point.
using Rational = boost::rational<std::int64_t>;

/// "a/b", "a", or a decimal such as "0.25".
Rational parse_rational(const std::string& text);
/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& r);

/// error <= bound * reference, exactly.
bool within_ratio(std::uint64_t error, const Rational& bound, std::uint64_t reference);

}  // namespace binlr
