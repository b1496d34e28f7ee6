#pragma once

#include <string>

#include "irrforge/rational.hpp"

namespace irrforge {

// An exact real of the form  base + coeff * sqrt(radicand)  with a
// non-negative rational radicand. Enough to express every bound side in
// the catalog without floating point; perfect-square radicands are folded
// into the rational part on construction.
class Surd {
 public:
  Surd() = default;
  Surd(const Rational& value);  // NOLINT: implicit from rational
  Surd(std::int64_t value) : Surd(Rational(value)) {}  // NOLINT
  Surd(const Rational& base, const Rational& coeff, const Rational& radicand);

  static Surd sqrt(const Rational& radicand) { return Surd(0, 1, radicand); }

  const Rational& base() const { return base_; }
  const Rational& coeff() const { return coeff_; }
  const Rational& radicand() const { return radicand_; }

  bool is_rational() const { return coeff_ == 0; }
  // Only valid when is_rational().
  const Rational& rational() const;

  Surd operator+(const Rational& r) const { return Surd(base_ + r, coeff_, radicand_); }
  Surd operator-(const Rational& r) const { return Surd(base_ - r, coeff_, radicand_); }
  Surd operator*(const Rational& r) const { return Surd(base_ * r, coeff_ * r, radicand_); }

  double approx() const;
  // "p/q" when rational, otherwise "base+coeff*sqrt(rad)" with fraction
  // components; the base is omitted when zero.
  std::string to_string() const;

  friend bool operator==(const Surd& a, const Surd& b) { return compare(a, b) == 0; }

  // Exact three-way comparison; returns -1, 0 or 1.
  static int compare(const Surd& a, const Surd& b);

 private:
  void normalize();

  Rational base_ = 0;
  Rational coeff_ = 0;
  Rational radicand_ = 0;
};

// sign(p + q*sqrt(r)), r >= 0.
int sign_of(const Rational& p, const Rational& q, const Rational& r);
// sign(p + q*sqrt(r) + t*sqrt(s)), r, s >= 0.
int sign_of(const Rational& p, const Rational& q, const Rational& r, const Rational& t,
            const Rational& s);

// 2^x for x a non-negative multiple of 1/2.
Surd pow2_half_integer(const Rational& x);

// Exact square root when the rational is a perfect square.
bool exact_sqrt(const Rational& r, Rational& root);

}  // namespace irrforge
