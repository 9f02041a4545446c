#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "qdim/golden.hpp"

namespace qdim {

/// Quaternion w + x i + y j + z k with coefficients in the golden field.
/// The algebra is a division algebra: the reduced norm is a sum of squares,
/// positive under the real embedding for every nonzero element.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(GoldenNum w, GoldenNum x = 0, GoldenNum y = 0, GoldenNum z = 0)  // NOLINT
      : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  static Quaternion one() { return Quaternion(1); }
  static Quaternion i() { return Quaternion(0, 1, 0, 0); }
  static Quaternion j() { return Quaternion(0, 0, 1, 0); }
  static Quaternion k() { return Quaternion(0, 0, 0, 1); }

  const GoldenNum& w() const noexcept { return w_; }
  const GoldenNum& x() const noexcept { return x_; }
  const GoldenNum& y() const noexcept { return y_; }
  const GoldenNum& z() const noexcept { return z_; }

  bool is_zero() const { return w_.is_zero() && x_.is_zero() && y_.is_zero() && z_.is_zero(); }

  Quaternion operator-() const { return Quaternion(-w_, -x_, -y_, -z_); }
  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

  friend Quaternion operator+(Quaternion l, const Quaternion& r) { return l += r; }
  friend Quaternion operator-(Quaternion l, const Quaternion& r) { return l -= r; }
  friend Quaternion operator*(const Quaternion& l, const Quaternion& r);
  friend Quaternion operator*(const GoldenNum& c, const Quaternion& q);

  friend bool operator==(const Quaternion& l, const Quaternion& r) = default;

  Quaternion conj() const { return Quaternion(w_, -x_, -y_, -z_); }

  /// w^2 + x^2 + y^2 + z^2.
  GoldenNum norm() const;

  /// conj(q) / N(q). Throws DivisionByZero on zero.
  Quaternion inverse() const;

  /// Galois conjugation applied coefficientwise.
  Quaternion galois() const;

  /// "(w) + (x)*i + (y)*j + (z)*k", each coefficient rendered as "a + b*phi".
  std::string to_string() const;
  static Quaternion parse(std::string_view text);

 private:
  GoldenNum w_, x_, y_, z_;
};

Quaternion quat_mul(const Quaternion& p, const Quaternion& q);
Quaternion quat_inv(const Quaternion& q);
GoldenNum quat_norm(const Quaternion& q);

/// q^e for any integer e (negative powers through the inverse).
Quaternion quat_pow(const Quaternion& q, long e);

/// Multiplication, identity and inverse for generic word evaluation.
struct QuaternionAlgebra {
  using value_type = Quaternion;
  Quaternion identity() const { return Quaternion::one(); }
  Quaternion mul(const Quaternion& a, const Quaternion& b) const { return a * b; }
  Quaternion inv(const Quaternion& a) const { return a.inverse(); }
};

}  // namespace qdim

template <>
struct std::hash<qdim::GoldenNum> {
  std::size_t operator()(const qdim::GoldenNum& g) const noexcept;
};

template <>
struct std::hash<qdim::Quaternion> {
  std::size_t operator()(const qdim::Quaternion& q) const noexcept;
};
