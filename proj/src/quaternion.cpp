#include "qdim/quaternion.hpp"

#include <array>

#include "qdim/errors.hpp"

namespace qdim {

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  w_ += o.w_;
  x_ += o.x_;
  y_ += o.y_;
  z_ += o.z_;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  w_ -= o.w_;
  x_ -= o.x_;
  y_ -= o.y_;
  z_ -= o.z_;
  return *this;
}

Quaternion operator*(const Quaternion& l, const Quaternion& r) {
  const GoldenNum& a1 = l.w_;
  const GoldenNum& b1 = l.x_;
  const GoldenNum& c1 = l.y_;
  const GoldenNum& d1 = l.z_;
  const GoldenNum& a2 = r.w_;
  const GoldenNum& b2 = r.x_;
  const GoldenNum& c2 = r.y_;
  const GoldenNum& d2 = r.z_;
  return Quaternion(a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                    a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                    a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                    a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2);
}

Quaternion operator*(const GoldenNum& c, const Quaternion& q) {
  return Quaternion(c * q.w_, c * q.x_, c * q.y_, c * q.z_);
}

GoldenNum Quaternion::norm() const { return w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_; }

Quaternion Quaternion::inverse() const {
  GoldenNum n = norm();
  if (n.is_zero()) throw DivisionByZero();
  return n.inverse() * conj();
}

Quaternion Quaternion::galois() const {
  return Quaternion(w_.galois(), x_.galois(), y_.galois(), z_.galois());
}

std::string Quaternion::to_string() const {
  return "(" + w_.to_string() + ") + (" + x_.to_string() + ")*i + (" + y_.to_string() +
         ")*j + (" + z_.to_string() + ")*k";
}

Quaternion Quaternion::parse(std::string_view text) {
  std::array<GoldenNum, 4> parts;
  constexpr std::array<std::string_view, 4> kSuffix = {")", ")*i", ")*j", ")*k"};
  std::size_t pos = 0;
  for (std::size_t n = 0; n < 4; ++n) {
    if (n > 0) {
      if (text.substr(pos, 3) != " + ") throw ParseError("expected ' + '", pos);
      pos += 3;
    }
    if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
    auto close = text.find(kSuffix[n], pos);
    if (close == std::string_view::npos) throw ParseError("unterminated coefficient", pos);
    try {
      parts[n] = GoldenNum::parse(text.substr(pos + 1, close - pos - 1));
    } catch (const ParseError& e) {
      throw ParseError("bad coefficient: " + e.detail(), pos + 1 + e.position());
    }
    pos = close + kSuffix[n].size();
  }
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return Quaternion(parts[0], parts[1], parts[2], parts[3]);
}

Quaternion quat_mul(const Quaternion& p, const Quaternion& q) { return p * q; }

Quaternion quat_inv(const Quaternion& q) { return q.inverse(); }

GoldenNum quat_norm(const Quaternion& q) { return q.norm(); }

Quaternion quat_pow(const Quaternion& q, long e) {
  Quaternion base = e < 0 ? q.inverse() : q;
  unsigned long m = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  Quaternion acc = Quaternion::one();
  while (m != 0) {
    if (m & 1UL) acc = acc * base;
    m >>= 1;
    if (m != 0) base = base * base;
  }
  return acc;
}

}  // namespace qdim

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_rational(const mpq_class& q) {
  return combine(mpz_get_ui(q.get_num_mpz_t()) * (sgn(q) < 0 ? 3 : 1),
                 mpz_get_ui(q.get_den_mpz_t()));
}

}  // namespace

std::size_t std::hash<qdim::GoldenNum>::operator()(const qdim::GoldenNum& g) const noexcept {
  return combine(hash_rational(g.a()), hash_rational(g.b()));
}

std::size_t std::hash<qdim::Quaternion>::operator()(const qdim::Quaternion& q) const noexcept {
  std::hash<qdim::GoldenNum> h;
  return combine(combine(h(q.w()), h(q.x())), combine(h(q.y()), h(q.z())));
}
