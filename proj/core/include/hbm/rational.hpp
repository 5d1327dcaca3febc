#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hbm {

/// Exact rational used for every threshold comparison in the solver.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Accepts "p/q", integers and finite decimals such as "0.25"; exponent
/// notation is rejected. Conversion is exact. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" or "p" form.
std::string format_rational(const Rational& value);

BigInt floor(const Rational& value);
BigInt ceil(const Rational& value);

/// count > value, with count an integer.
inline bool greater(std::uint64_t count, const Rational& value) {
  return Rational(count) > value;
}

}  // namespace hbm
