#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace irrforge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

int sign(const Rational& r);
BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);
bool is_integer(const Rational& r);
double to_double(const Rational& r);

// "p/q", or "p" for integers. Stable and parseable.
std::string to_fraction_string(const Rational& r);
Rational parse_fraction(const std::string& text);

// Human form: exact decimal when the expansion terminates, otherwise a
// six-place decimal followed by the fraction in parentheses.
std::string to_display_string(const Rational& r);

}  // namespace irrforge
