#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace qdim {

/// An exact element a + b*phi of the golden field Q(sqrt 5), where
/// phi = (1 + sqrt 5) / 2 satisfies phi^2 = phi + 1.
///
/// Coefficients are arbitrary-precision rationals kept in lowest terms with
/// positive denominator, so equality is structural.
class GoldenNum {
 public:
  GoldenNum() = default;
  GoldenNum(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  GoldenNum(mpq_class a, mpq_class b = 0);

  static GoldenNum phi() { return GoldenNum(0, 1); }
  static GoldenNum rational(long num, long den) { return GoldenNum(mpq_class(num, den)); }

  const mpq_class& a() const noexcept { return a_; }
  const mpq_class& b() const noexcept { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  GoldenNum operator-() const;
  GoldenNum& operator+=(const GoldenNum& o);
  GoldenNum& operator-=(const GoldenNum& o);
  GoldenNum& operator*=(const GoldenNum& o);
  GoldenNum& operator/=(const GoldenNum& o);

  friend GoldenNum operator+(GoldenNum l, const GoldenNum& r) { return l += r; }
  friend GoldenNum operator-(GoldenNum l, const GoldenNum& r) { return l -= r; }
  friend GoldenNum operator*(GoldenNum l, const GoldenNum& r) { return l *= r; }
  friend GoldenNum operator/(GoldenNum l, const GoldenNum& r) { return l /= r; }

  friend bool operator==(const GoldenNum& l, const GoldenNum& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }

  /// Multiplicative inverse. Throws DivisionByZero on zero.
  GoldenNum inverse() const;

  /// Galois conjugate: phi -> 1 - phi.
  GoldenNum galois() const;

  /// Field norm x * galois(x) = a^2 + ab - b^2, a rational.
  mpq_class field_norm() const;

  /// Sign (-1, 0, 1) of the value under the real embedding phi -> (1+sqrt 5)/2.
  int sign() const;

  /// "a + b*phi" with reduced fractions, e.g. "1/2 + -1/2*phi".
  std::string to_string() const;

  /// Inverse of to_string. Throws ParseError.
  static GoldenNum parse(std::string_view text);

 private:
  mpq_class a_{0};
  mpq_class b_{0};
};

GoldenNum golden_mul(const GoldenNum& x, const GoldenNum& y);
GoldenNum golden_inv(const GoldenNum& x);

}  // namespace qdim
