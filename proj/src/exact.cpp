#include "irrforge/exact.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "irrforge/error.hpp"

namespace irrforge {

namespace mp = boost::multiprecision;

int sign(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

BigInt floor_of(const Rational& r) {
  BigInt num = mp::numerator(r);
  BigInt den = mp::denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

BigInt ceil_of(const Rational& r) { return -floor_of(-r); }

bool is_integer(const Rational& r) { return mp::denominator(r) == 1; }

double to_double(const Rational& r) {
  return mp::numerator(r).convert_to<double>() / mp::denominator(r).convert_to<double>();
}

std::string to_fraction_string(const Rational& r) {
  std::string s = mp::numerator(r).str();
  if (mp::denominator(r) != 1) s += "/" + mp::denominator(r).str();
  return s;
}

Rational parse_fraction(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(ErrorKind::ParseError, "not a fraction: '" + text + "'");
  }
}

std::string to_display_string(const Rational& r) {
  BigInt den = mp::denominator(r);
  int twos = 0, fives = 0;
  BigInt rest = den;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  auto fixed = [&](int places) {
    BigInt scale = mp::pow(BigInt(10), places);
    Rational scaled = mp::abs(r) * scale;
    BigInt digits = floor_of(scaled + Rational(1, 2));
    std::string body = digits.str();
    if (places > 0) {
      if (static_cast<int>(body.size()) <= places)
        body.insert(0, static_cast<std::size_t>(places + 1 - body.size()), '0');
      body.insert(body.size() - static_cast<std::size_t>(places), ".");
    }
    return (r < 0 && digits != 0 ? "-" : "") + body;
  };
  if (rest == 1) return fixed(std::max(twos, fives));
  return fixed(6) + " (" + to_fraction_string(r) + ")";
}

bool exact_sqrt(const Rational& r, Rational& root) {
  if (r < 0) return false;
  BigInt num = mp::numerator(r);
  BigInt den = mp::denominator(r);
  BigInt sn = mp::sqrt(num);
  BigInt sd = mp::sqrt(den);
  if (sn * sn != num || sd * sd != den) return false;
  root = Rational(sn, sd);
  return true;
}

namespace {

// Pulls square factors out of a positive integer: x = outside² · inside.
void split_square(BigInt& x, BigInt& outside) {
  outside = 1;
  for (BigInt p = 2; p * p <= x && p < 10000; ++p) {
    BigInt sq = p * p;
    while (x % sq == 0) {
      x /= sq;
      outside *= p;
    }
  }
}

}  // namespace

Surd::Surd(const Rational& value) : base_(value) {}

Surd::Surd(const Rational& base, const Rational& coeff, const Rational& radicand)
    : base_(base), coeff_(coeff), radicand_(radicand) {
  normalize();
}

void Surd::normalize() {
  if (radicand_ < 0) throw std::domain_error("negative radicand");
  if (coeff_ == 0 || radicand_ == 0) {
    coeff_ = 0;
    radicand_ = 0;
    return;
  }
  // sqrt(a/b) = sqrt(a·b) / b
  BigInt den = mp::denominator(radicand_);
  BigInt x = mp::numerator(radicand_) * den;
  coeff_ /= Rational(den);
  BigInt outside;
  split_square(x, outside);
  coeff_ *= Rational(outside);
  radicand_ = Rational(x);
  Rational root;
  if (exact_sqrt(radicand_, root)) {
    base_ += coeff_ * root;
    coeff_ = 0;
    radicand_ = 0;
  }
}

const Rational& Surd::rational() const {
  if (!is_rational()) throw std::logic_error("surd is irrational");
  return base_;
}

double Surd::approx() const {
  return to_double(base_) + to_double(coeff_) * std::sqrt(to_double(radicand_));
}

std::string Surd::to_string() const {
  if (is_rational()) return to_fraction_string(base_);
  std::string out;
  if (base_ != 0) out = to_fraction_string(base_);
  Rational c = coeff_;
  if (c < 0) {
    out += "-";
    c = -c;
  } else if (!out.empty()) {
    out += "+";
  }
  if (c != 1) out += to_fraction_string(c) + "*";
  out += "sqrt(" + to_fraction_string(radicand_) + ")";
  return out;
}

int Surd::compare(const Surd& a, const Surd& b) {
  return sign_of(a.base_ - b.base_, a.coeff_, a.radicand_, -b.coeff_, b.radicand_);
}

int sign_of(const Rational& p, const Rational& q, const Rational& r) {
  int sp = sign(p);
  int sq = r > 0 ? sign(q) : 0;
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  int c = sign(p * p - q * q * r);
  if (c == 0) return 0;
  return c > 0 ? sp : sq;
}

int sign_of(const Rational& p, const Rational& q, const Rational& r, const Rational& t,
            const Rational& s) {
  if (r == s) return sign_of(p, q + t, r);
  if (q == 0 || r == 0) return sign_of(p, t, s);
  if (t == 0 || s == 0) return sign_of(p, q, r);
  int sq = sign(q), st = sign(t);
  int su;
  if (sq == st) {
    su = sq;
  } else {
    int c = sign(q * q * r - t * t * s);
    su = c == 0 ? 0 : (c > 0 ? sq : st);
  }
  int sp = sign(p);
  if (sp == 0) return su;
  if (su == 0 || sp == su) return sp;
  int c = sign_of(p * p - q * q * r - t * t * s, -2 * q * t, r * s);
  if (c == 0) return 0;
  return c > 0 ? sp : su;
}

Surd pow2_half_integer(const Rational& x) {
  Rational twice = x * 2;
  if (!is_integer(twice)) throw std::domain_error("exponent is not a multiple of 1/2");
  BigInt whole = floor_of(x);
  bool half = x != Rational(whole);
  Rational scale = whole >= 0 ? Rational(mp::pow(BigInt(2), whole.convert_to<unsigned>()))
                              : Rational(BigInt(1), mp::pow(BigInt(2), (-whole).convert_to<unsigned>()));
  if (!half) return Surd(scale);
  return Surd(0, scale, 2);
}

}  // namespace irrforge
