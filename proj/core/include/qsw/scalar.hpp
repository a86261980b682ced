#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "qsw/poly.hpp"

namespace qsw {

/// Reduced quotient of bivariate polynomials. Canonical form: numerator and
/// denominator coprime, denominator monic under grlex; zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(Poly num, Poly den);
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(1) {}

  /// r^a s^b for arbitrary integer exponents.
  static RatFunc laurent_monomial(int a, int b, const Rational& c = 1);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFunc inverse() const;
  Rational evaluate(const Rational& r, const Rational& s) const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  std::string str() const;

 private:
  struct Canonical {};
  RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// An element of the coefficient field: an exact rational, or a rational
/// function of r and s. Constants are always stored as rationals, so equal
/// values have identical representations regardless of how they were built.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(int c) : v_(Rational(c)) {}            // NOLINT(google-explicit-constructor)
  Scalar(long c) : v_(Rational(c)) {}           // NOLINT(google-explicit-constructor)
  Scalar(Rational c) : v_(std::move(c)) {        // NOLINT(google-explicit-constructor)
    std::get<Rational>(v_).canonicalize();
  }
  Scalar(RatFunc f);                            // NOLINT(google-explicit-constructor)

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  RatFunc to_ratfunc() const;

  Scalar inverse() const;
  Scalar pow(int k) const;
  /// Value at (r, s) = (r0, s0). Throws DivisionByZero if a denominator vanishes.
  Rational evaluate(const Rational& r0, const Rational& s0) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text, e.g. "(r^2 + r*s)/(r - s)" or "-3/2".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

 private:
  std::variant<Rational, RatFunc> v_;
};

/// Parameters of the coefficient field: either symbolic r, s, or an exact
/// rational specialization (r0, s0) with r0/s0 not a root of unity.
class ParamSpec {
 public:
  static ParamSpec symbolic();
  /// Throws InvalidParams unless r0, s0 nonzero and r0/s0 != +-1.
  static ParamSpec specialized(const Rational& r0, const Rational& s0);
  /// Specialization allowing s0 = -r0, for the non-generic fixtures.
  static ParamSpec nongeneric(const Rational& r0, const Rational& s0);

  bool is_symbolic() const { return symbolic_; }
  bool is_generic() const { return generic_; }
  const Rational& r_value() const { return r0_; }
  const Rational& s_value() const { return s0_; }

  Scalar r() const { return rs_power(1, 0); }
  Scalar s() const { return rs_power(0, 1); }
  /// r^a s^b.
  Scalar rs_power(int a, int b) const;
  /// Maps a symbolic scalar into this field (identity in symbolic mode).
  Scalar specialize(const Scalar& x) const;
  /// True when s = -r in this field (never in symbolic mode).
  bool s_equals_minus_r() const;

  std::string str() const;
  friend bool operator==(const ParamSpec&, const ParamSpec&) = default;

 private:
  bool symbolic_ = true;
  bool generic_ = true;
  Rational r0_ = 0;
  Rational s0_ = 0;
};

/// The q-integer [k] = (r^k - s^k)/(r - s) = r^{k-1} + r^{k-2}s + ... + s^{k-1}.
Scalar qint(int k, const ParamSpec& p);

/// (r s^{-1})^e for a half-integer exponent e, stored as 2e.
class GScalar {
 public:
  GScalar() = default;
  static GScalar from_twice(long twice) {
    GScalar g;
    g.twice_ = twice;
    return g;
  }
  long twice_exponent() const { return twice_; }
  bool is_integral() const { return twice_ % 2 == 0; }
  /// "3/2", "-1", "0".
  std::string exponent_str() const;

  friend GScalar operator*(GScalar a, GScalar b) { return from_twice(a.twice_ + b.twice_); }
  friend auto operator<=>(const GScalar&, const GScalar&) = default;

 private:
  long twice_ = 0;
};

/// Materializes (r s^{-1})^e as a field element. Throws HalfPowerUnavailable
/// for a half-odd exponent unless r0/s0 is the square of a rational.
Scalar materialize(const GScalar& g, const ParamSpec& p);

/// Parses the rendering grammar: sums, products, quotients, integer powers
/// (possibly negative), parentheses, integer literals, and the symbols r, s.
Scalar parse_scalar(std::string_view text);
/// Parses "p/q" or "p" into an exact rational.
Rational parse_rational(std::string_view text);

}  // namespace qsw
