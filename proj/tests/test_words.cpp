#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qdim/icosian.hpp"
#include "qdim/quaternion.hpp"
#include "qdim/word.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace qdim;
using qdim::testing::Rng;

namespace {

const std::vector<std::string> kXY{"x", "y"};

Word w(std::string_view text) { return parse_word(text, kXY); }

}  // namespace

TEST_CASE("parse_word") {
  CHECK(w("x y^-1").syllables() == std::vector<Syllable>{{0, 1}, {1, -1}});
  CHECK(w("x x^-1").empty());
  CHECK(w("x^2 y^3 y^-3").syllables() == std::vector<Syllable>{{0, 2}});
  CHECK(w("  x^+2   y ").syllables() == std::vector<Syllable>{{0, 2}, {1, 1}});
  CHECK(w("").empty());
  CHECK(w("1").empty());
}

TEST_CASE("parse_word errors carry positions") {
  auto position_of = [](std::string_view text) -> std::size_t {
    try {
      parse_word(text, kXY);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position_of("x z") == 2);
  CHECK(position_of("x y^0") == 4);
  CHECK(position_of("x^ y") == 2);
  CHECK(position_of("x^2a") == 2);
  CHECK(position_of("x* y") == 1);
  CHECK(position_of("1 x") == 0);
  CHECK_THROWS_AS(parse_word("x^99999999999999999999", kXY), ParseError);
}

TEST_CASE("render_word") {
  CHECK(render_word(w("x y^-1 x^3"), kXY) == "x y^-1 x^3");
  CHECK(render_word(Word(2), kXY) == "1");
}

TEST_CASE("word_mul") {
  Word u = w("x y^2 x^-1");
  CHECK(word_mul(u, word_inv(u)).empty());
  CHECK(word_mul(w("x"), w("x^2")) == w("x^3"));
  CHECK(word_mul(w("x y"), w("y^-1 x")) == w("x^2"));
  CHECK_THROWS_AS(word_mul(Word(2), Word(3)), InputError);
  CHECK(u.inverse().length() == u.length());
  CHECK(commutator(u, u).empty());
}

TEST_CASE("Word::pow") {
  CHECK(w("x y").pow(3) == w("x y x y x y"));
  CHECK(w("x y").pow(-2) == w("y^-1 x^-1 y^-1 x^-1"));
  CHECK(w("x y x^-1").pow(4) == w("x y^4 x^-1"));
  CHECK(w("x").pow(0).empty());
}

TEST_CASE("presentation text format") {
  Presentation p = parse_presentation("gens: a, b ; rels: a b^3 a b^-1 a^-2 b^-1 , a^5");
  CHECK(p.generators == std::vector<std::string>{"a", "b"});
  REQUIRE(p.relators.size() == 2);
  CHECK(render_presentation(p) == "gens: a, b ; rels: a b^3 a b^-1 a^-2 b^-1 , a^5");
  CHECK(parse_presentation(render_presentation(p)).relators == p.relators);

  Presentation free = parse_presentation("gens: x, y ; rels:");
  CHECK(free.relators.empty());
  CHECK_THROWS_AS(parse_presentation("gens: x, x ; rels: x"), InputError);
  CHECK_THROWS_AS(parse_presentation("gens: x ; rels: y"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: x rels: x"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gen: x ; rels: x"), ParseError);
}

TEST_CASE("eval_word") {
  const IcosianGroup& ico = binary_icosahedral();
  const FiniteGroup& g = ico.group();
  std::vector<Element> images{ico.gen_s(), ico.gen_t()};
  CHECK(eval_word(Word(2), std::span<const Element>(images), g) == g.identity());
  CHECK(eval_word(w("x^3"), std::span<const Element>(images), g) == ico.minus_one());

  std::vector<Quaternion> q{IcosianGroup::generator_s(), IcosianGroup::generator_t()};
  CHECK(eval_word(w("x^3"), std::span<const Quaternion>(q), QuaternionAlgebra{}) == -Quaternion::one());

  std::vector<Element> one_image{0};
  CHECK_THROWS_AS(eval_word(w("x"), std::span<const Element>(one_image), g), InputError);
}

TEST_CASE("eval_word: M^6 x M^-7 y^-1 under the family map") {
  const IcosianGroup& ico = binary_icosahedral();
  const Quaternion s = IcosianGroup::generator_s();
  const Quaternion t = IcosianGroup::generator_t();
  std::vector<Quaternion> images{-(t * t), s * s * t * t * s};
  Word m = w("x y x^-1 y^-1");
  Word r = m.pow(6) * w("x") * m.pow(-7) * w("y^-1");
  CHECK(eval_word(r, std::span<const Quaternion>(images), QuaternionAlgebra{}) == Quaternion::one());

  std::vector<Element> idx{ico.index_of(images[0]), ico.index_of(images[1])};
  CHECK(eval_word(r, std::span<const Element>(idx), ico.group()) == ico.group().identity());
}

TEST_CASE("property: free reduction is confluent") {
  CHECK(w("x y y^-1 x") == w("x x"));
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto letters = testing::random_letters(rng, 3, 30);
    // Reduce left to right, and right to left via inverses: both must agree.
    Word forward(3, letters);
    Word backward(3);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      backward = Word(3, std::vector<Syllable>{*it}) * backward;
    REQUIRE(forward == backward);
    // Inserting a cancelling pair anywhere does not change the reduced word.
    std::uniform_int_distribution<std::size_t> at(0, letters.size());
    auto padded = letters;
    padded.insert(padded.begin() + static_cast<std::ptrdiff_t>(at(rng)), {{1, 1}, {1, -1}});
    REQUIRE(Word(3, padded) == forward);
    for (std::size_t i = 1; i < forward.syllables().size(); ++i)
      REQUIRE(forward.syllables()[i].generator != forward.syllables()[i - 1].generator);
  }
}

TEST_CASE("property: eval_word is a homomorphism from the free group") {
  const IcosianGroup& ico = binary_icosahedral();
  const FiniteGroup& g = ico.group();
  Rng rng(12);
  std::uniform_int_distribution<Element> pick(0, 119);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Element> images{pick(rng), pick(rng)};
    std::span<const Element> im(images);
    Word u = testing::random_word(rng, 2, 10, 12);
    Word v = testing::random_word(rng, 2, 10, 12);
    REQUIRE(eval_word(u * v, im, g) == g.mul(eval_word(u, im, g), eval_word(v, im, g)));
    REQUIRE(eval_word(u.inverse(), im, g) == g.inv(eval_word(u, im, g)));
    REQUIRE(eval_word(u, im, g) == testing::naive_eval(u, images, g));
  }
}
