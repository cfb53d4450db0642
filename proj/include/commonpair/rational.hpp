#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace commonpair {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction. Always reduced, denominator always positive; no rounding
// anywhere in the library outside the float certificate search.
using Rational = boost::multiprecision::cpp_rational;

// Bad inputs and broken preconditions. The CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Accepts "a" or "a/b" with optional leading '-', b > 0 after sign
// normalization. Rejects "1/0" and any other malformed text.
Rational parse_rational(std::string_view text);

// "a" when the value is integral, "a/b" otherwise; sign on the numerator.
std::string format_rational(const Rational& value);

// base^exponent; negative exponents invert (base must be nonzero then).
Rational rational_pow(const Rational& base, long long exponent);

BigInt factorial(int n);

}  // namespace commonpair
