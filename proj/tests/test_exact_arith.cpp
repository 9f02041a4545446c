#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qdim/errors.hpp"
#include "qdim/golden.hpp"
#include "qdim/quaternion.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace qdim;
using qdim::testing::Rng;

namespace {

const GoldenNum kPhi = GoldenNum::phi();
const GoldenNum kHalf = GoldenNum::rational(1, 2);

Quaternion s_gen() { return Quaternion(kHalf, kHalf, kHalf, kHalf); }
Quaternion t_gen() { return Quaternion(kHalf * kPhi, kHalf * (kPhi - 1), kHalf, 0); }

}  // namespace

TEST_CASE("golden_mul") {
  CHECK(golden_mul(kPhi, kPhi) == GoldenNum(1, 1));
  CHECK(golden_mul(kPhi - 1, kPhi) == GoldenNum(1));
  // (1 + 2 phi)(2 - phi) = 2 + 3 phi - 2 phi^2 = phi
  CHECK(golden_mul(GoldenNum(1, 2), GoldenNum(2, -1)) == kPhi);
}

TEST_CASE("golden_inv") {
  CHECK(golden_inv(kPhi) == kPhi - 1);
  CHECK(golden_inv(GoldenNum(2)) == GoldenNum::rational(1, 2));
  // 1 + phi = phi^2, inverse (phi - 1)^2 = 2 - phi
  CHECK(golden_inv(GoldenNum(1, 1)) == GoldenNum(2, -1));
  CHECK_THROWS_AS(golden_inv(GoldenNum()), DivisionByZero);
}

TEST_CASE("golden rationals are kept in lowest terms") {
  GoldenNum g(mpq_class(4, -6), mpq_class(10, 5));
  CHECK(g.a().get_num() == -2);
  CHECK(g.a().get_den() == 3);
  CHECK(g.b() == 2);
  CHECK(g == GoldenNum(mpq_class(-2, 3), 2));
}

TEST_CASE("golden sign in the real embedding") {
  CHECK(kPhi.sign() == 1);
  CHECK((GoldenNum(1) - kPhi).sign() == -1);  // 1 - phi ~ -0.618
  CHECK(GoldenNum(2, -1).sign() == 1);        // 2 - phi ~ 0.382
  CHECK(GoldenNum(-3, 2).sign() == 1);        // 2 phi - 3 ~ 0.236
  CHECK(GoldenNum(-4, 2).sign() == -1);
  CHECK(GoldenNum().sign() == 0);
}

TEST_CASE("golden text round trip") {
  GoldenNum g(mpq_class(1, 2), mpq_class(-3, 4));
  CHECK(g.to_string() == "1/2 + -3/4*phi");
  CHECK(GoldenNum::parse(g.to_string()) == g);
  CHECK_THROWS_AS(GoldenNum::parse("1/2 + x*phi"), ParseError);
  CHECK_THROWS_AS(GoldenNum::parse("1/0 + 1*phi"), ParseError);
  CHECK_THROWS_AS(GoldenNum::parse("1"), ParseError);
}

TEST_CASE("quat_mul") {
  CHECK(quat_mul(Quaternion::i(), Quaternion::j()) == Quaternion::k());
  CHECK(quat_mul(Quaternion::j(), Quaternion::i()) == -Quaternion::k());
  const Quaternion minus_one = -Quaternion::one();
  CHECK(quat_mul(Quaternion::i(), Quaternion::i()) == minus_one);
  CHECK(quat_mul(quat_mul(Quaternion::i(), Quaternion::j()), Quaternion::k()) == minus_one);
  CHECK(testing::naive_power(s_gen(), 3) == minus_one);
  CHECK(testing::naive_power(t_gen(), 5) == minus_one);
  CHECK(quat_pow(t_gen(), 5) == testing::naive_power(t_gen(), 5));
  CHECK(quat_pow(t_gen(), -3) == testing::naive_power(t_gen(), 7));
}

TEST_CASE("quat_inv") {
  CHECK(quat_inv(Quaternion::i()) == -Quaternion::i());
  CHECK(quat_inv(s_gen()) == Quaternion(kHalf, -kHalf, -kHalf, -kHalf));
  CHECK(quat_inv(Quaternion(0, 2, 0, 0)) == Quaternion(0, -kHalf, 0, 0));
  CHECK_THROWS_AS(quat_inv(Quaternion()), DivisionByZero);
}

TEST_CASE("quat_norm") {
  CHECK(quat_norm(s_gen()) == GoldenNum(1));
  CHECK(quat_norm(t_gen()) == GoldenNum(1));
  CHECK(quat_norm(Quaternion(1, 1, 0, 0)) == GoldenNum(2));
}

TEST_CASE("quaternion text round trip") {
  Quaternion q = t_gen();
  CHECK(q.to_string() == "(0 + 1/2*phi) + (-1/2 + 1/2*phi)*i + (1/2 + 0*phi)*j + (0 + 0*phi)*k");
  CHECK(Quaternion::parse(q.to_string()) == q);
  CHECK_THROWS_AS(Quaternion::parse("(0 + 1*phi) + (0 + 0*phi)*i"), ParseError);
}

TEST_CASE("property: golden field axioms") {
  Rng rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    GoldenNum a = testing::random_golden(rng), b = testing::random_golden(rng),
              c = testing::random_golden(rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == GoldenNum());
    if (!a.is_zero()) REQUIRE(a * golden_inv(a) == GoldenNum(1));
  }
}

TEST_CASE("property: Galois conjugation is a field automorphism") {
  Rng rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    GoldenNum a = testing::random_golden(rng), b = testing::random_golden(rng);
    REQUIRE((a * b).galois() == a.galois() * b.galois());
    REQUIRE((a + b).galois() == a.galois() + b.galois());
    REQUIRE(a.galois().galois() == a);
    REQUIRE((a * a.galois()) == GoldenNum(a.field_norm()));
  }
}

TEST_CASE("property: quaternion division algebra") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    Quaternion p = testing::random_nonzero_quaternion(rng);
    Quaternion q = testing::random_nonzero_quaternion(rng);
    Quaternion r = testing::random_quaternion(rng);
    REQUIRE_FALSE(quat_mul(p, q).is_zero());
    REQUIRE(quat_norm(p * q) == quat_norm(p) * quat_norm(q));
    REQUIRE((p * q).conj() == q.conj() * p.conj());
    REQUIRE((p * q) * r == p * (q * r));
    REQUIRE(p * quat_inv(p) == Quaternion::one());
    REQUIRE(quat_inv(p) * p == Quaternion::one());
    REQUIRE(quat_norm(p).sign() == 1);
  }
}
