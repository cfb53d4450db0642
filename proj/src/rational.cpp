#include "commonpair/rational.hpp"

#include <cctype>

namespace commonpair {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw DomainError("malformed rational \"" + std::string(text) + "\"");
  }
  BigInt n{std::string(num)};
  BigInt d{std::string(den)};
  if (d == 0) {
    throw DomainError("malformed rational \"" + std::string(text) +
                      "\": zero denominator");
  }
  if (negative) n = -n;
  return Rational(n, d);
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational rational_pow(const Rational& base, long long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("0 cannot be raised to a negative power");
    return rational_pow(Rational(1) / base, -exponent);
  }
  Rational result(1);
  Rational b = base;
  unsigned long long e = static_cast<unsigned long long>(exponent);
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative number");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace commonpair
