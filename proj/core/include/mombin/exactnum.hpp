#pragma once

/**
 * @file exactnum.hpp
 * @brief Exact scalars: arbitrary-precision rationals and quadratic surds.
 *
 * Every geometric and statistical predicate in mombin is decided on these
 * types. Floating point is only produced by the explicit to_double() calls
 * used for display.
 *
 *  - Rational: p/q, always reduced, q > 0.
 *  - Surd: a + b*sqrt(r) with rational a, b and r >= 0. A Surd whose radicand
 *    is a rational square (or whose b is zero) collapses to a Rational.
 *  - RootTerm: c*sqrt(r), used for skewness values whose standardisation
 *    introduces a different square root per shape.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mombin {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }

  /// Exact square root when this is the square of a rational.
  std::optional<Rational> exact_sqrt() const;

  /// "p/q", or "p" when the denominator is one.
  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& q);
Rational pow(const Rational& base, unsigned exponent);
/// Largest integer <= q.
mpz_class floor(const Rational& q);

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Parses a signed decimal literal ("-0.37", "5", ".5") or a fraction
/// ("-3/7"). Decimals with d fractional digits become integer/10^d before
/// reduction, so "0.37" is exactly 37/100.
Rational parse_exact(std::string_view text);

/// Value a + b*sqrt(r). One radicand per value; arithmetic between two
/// irrational surds requires equal radicands.
class Surd {
 public:
  Surd() = default;
  Surd(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  Surd(long a) : a_(a) {}             // NOLINT(google-explicit-constructor)
  Surd(const Rational& a, const Rational& b, const Rational& r);

  /// sqrt(r) as a Surd.
  static Surd sqrt(const Rational& r) { return Surd(Rational(0), Rational(1), r); }

  const Rational& rational_part() const { return a_; }
  const Rational& root_coefficient() const { return b_; }
  const Rational& radicand() const { return r_; }

  bool is_rational() const { return b_.is_zero(); }
  /// Throws std::domain_error when the value is irrational.
  const Rational& as_rational() const;

  /// Exact sign of a + b*sqrt(r).
  int sign() const;
  double to_double() const;
  std::string str() const;

  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Rational& o);

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  friend Surd operator/(Surd a, const Rational& b) { return a /= b; }
  Surd operator-() const;

  friend bool operator==(const Surd& x, const Surd& y) { return (x - y).sign() == 0; }
  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  void normalize();
  const Rational& common_radicand(const Surd& o) const;

  Rational a_;
  Rational b_;
  Rational r_;
};

using ExactScalar = Surd;

/// Exact sign of a + b*sqrt(r). Throws std::domain_error for r < 0.
int surd_sign(const Rational& a, const Rational& b, const Rational& r);

std::ostream& operator<<(std::ostream& os, const Surd& x);

/// coefficient * sqrt(radicand), radicand >= 0.
struct RootTerm {
  Rational coefficient;
  Rational radicand{1};

  int sign() const;
  double to_double() const;
  RootTerm scaled(const Rational& factor) const { return {coefficient * factor, radicand}; }
  RootTerm operator-() const { return {-coefficient, radicand}; }
};

/// Exact sign of a sum of at most three root terms with arbitrary radicands.
int sign_of_sum(std::span<const RootTerm> terms);

/// Three-way comparison of two root terms.
std::strong_ordering compare(const RootTerm& x, const RootTerm& y);

/// Compares |x - ref| with |y - ref| exactly.
std::strong_ordering compare_distance(const RootTerm& x, const RootTerm& y, const RootTerm& ref);

}  // namespace mombin
