#include "qdim/golden.hpp"

#include <cctype>

#include "qdim/errors.hpp"

namespace qdim {

GoldenNum::GoldenNum(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

GoldenNum GoldenNum::operator-() const { return GoldenNum(-a_, -b_); }

GoldenNum& GoldenNum::operator+=(const GoldenNum& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

GoldenNum& GoldenNum::operator-=(const GoldenNum& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

// (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
GoldenNum& GoldenNum::operator*=(const GoldenNum& o) {
  mpq_class bd = b_ * o.b_;
  mpq_class na = a_ * o.a_ + bd;
  mpq_class nb = a_ * o.b_ + b_ * o.a_ + bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

GoldenNum& GoldenNum::operator/=(const GoldenNum& o) { return *this *= o.inverse(); }

GoldenNum GoldenNum::inverse() const {
  mpq_class n = field_norm();
  if (sgn(n) == 0) throw DivisionByZero();
  GoldenNum g = galois();
  return GoldenNum(g.a_ / n, g.b_ / n);
}

GoldenNum GoldenNum::galois() const { return GoldenNum(a_ + b_, -b_); }

mpq_class GoldenNum::field_norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

int GoldenNum::sign() const {
  // 2 * value = c + b sqrt5 with c = 2a + b.
  mpq_class c = 2 * a_ + b_;
  int sc = sgn(c);
  int sb = sgn(b_);
  if (sb == 0) return sc;
  if (sc == 0 || sc == sb) return sb;
  mpq_class lhs = c * c;
  mpq_class rhs = 5 * b_ * b_;
  return lhs > rhs ? sc : sb;
}

std::string GoldenNum::to_string() const {
  return a_.get_str() + " + " + b_.get_str() + "*phi";
}

namespace {

mpq_class parse_rational(std::string_view s, std::size_t offset) {
  if (s.empty()) throw ParseError("expected rational", offset);
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              (i == 0 && (c == '-' || c == '+'));
    if (!ok) throw ParseError("bad character in rational", offset + i);
  }
  std::string str(s.front() == '+' ? s.substr(1) : s);
  mpq_class q;
  if (q.set_str(str, 10) != 0 || str.find('/') == str.size() - 1)
    throw ParseError("malformed rational", offset);
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator", offset);
  q.canonicalize();
  return q;
}

}  // namespace

GoldenNum GoldenNum::parse(std::string_view text) {
  constexpr std::string_view kSep = " + ";
  constexpr std::string_view kPhi = "*phi";
  auto sep = text.find(kSep);
  if (sep == std::string_view::npos) throw ParseError("expected 'a + b*phi'", 0);
  std::string_view rest = text.substr(sep + kSep.size());
  if (rest.size() < kPhi.size() || rest.substr(rest.size() - kPhi.size()) != kPhi)
    throw ParseError("expected '*phi' suffix", text.size());
  return GoldenNum(parse_rational(text.substr(0, sep), 0),
                   parse_rational(rest.substr(0, rest.size() - kPhi.size()),
                                  sep + kSep.size()));
}

GoldenNum golden_mul(const GoldenNum& x, const GoldenNum& y) { return x * y; }

GoldenNum golden_inv(const GoldenNum& x) { return x.inverse(); }

}  // namespace qdim
