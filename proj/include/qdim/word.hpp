#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdim/errors.hpp"

namespace qdim {

struct Syllable {
  std::uint32_t generator;
  std::int64_t exponent;  // never zero inside a Word

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A freely reduced word over an alphabet of `rank` generators, stored as
/// maximal runs g^e. Adjacent syllables always have distinct generators.
class Word {
 public:
  explicit Word(std::size_t rank = 0) : rank_(rank) {}
  Word(std::size_t rank, std::span<const Syllable> syllables);

  static Word letter(std::size_t rank, std::uint32_t generator, std::int64_t exponent = 1);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }

  /// Number of letters, i.e. the sum of |exponent| over syllables.
  std::uint64_t length() const;

  /// Total exponent of each generator (the image in the abelianization).
  std::vector<std::int64_t> exponent_sums() const;

  Word inverse() const;
  Word pow(std::int64_t n) const;

  /// Appends g^e with free reduction.
  Word& push(Syllable s);
  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::size_t rank_;
  std::vector<Syllable> syllables_;
};

/// Freely reduced product. Throws InputError on alphabet mismatch.
Word word_mul(const Word& u, const Word& v);
Word word_inv(const Word& w);

/// [a, b] = a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);

/// Parses whitespace-separated tokens `name` or `name^<int>`; a lone `1`
/// denotes the empty word. Throws ParseError with the offending position.
Word parse_word(std::string_view text, std::span<const std::string> generators);

/// "x y^-1"; the empty word renders as "1".
std::string render_word(const Word& w, std::span<const std::string> generators);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t rank() const noexcept { return generators.size(); }
};

/// Throws InputError if a relator is over a different alphabet or a
/// generator name is duplicated or invalid.
void validate(const Presentation& p);

/// Parses `gens: x, y ; rels: <word> , <word>`.
Presentation parse_presentation(std::string_view text);
std::string render_presentation(const Presentation& p);

/// Multiplicative structure usable as a word-evaluation target.
template <class M>
concept MultiplicativeStructure = requires(const M& m, const typename M::value_type& a) {
  { m.identity() } -> std::convertible_to<typename M::value_type>;
  { m.mul(a, a) } -> std::convertible_to<typename M::value_type>;
  { m.inv(a) } -> std::convertible_to<typename M::value_type>;
};

template <MultiplicativeStructure M>
typename M::value_type power(const M& m, const typename M::value_type& a, std::int64_t e) {
  using T = typename M::value_type;
  T base = e < 0 ? m.inv(a) : a;
  std::uint64_t k = e < 0 ? -static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(e);
  T acc = m.identity();
  while (k != 0) {
    if (k & 1U) acc = m.mul(acc, base);
    k >>= 1;
    if (k != 0) base = m.mul(base, base);
  }
  return acc;
}

/// Evaluates w left to right with generator i mapped to images[i]. Each run
/// g^e costs O(log |e|) multiplications.
template <MultiplicativeStructure M>
typename M::value_type eval_word(const Word& w, std::span<const typename M::value_type> images,
                                 const M& m) {
  if (images.size() != w.rank())
    throw InputError("eval_word: " + std::to_string(images.size()) + " images for " +
                     std::to_string(w.rank()) + " generators");
  typename M::value_type acc = m.identity();
  for (const Syllable& s : w.syllables()) acc = m.mul(acc, power(m, images[s.generator], s.exponent));
  return acc;
}

}  // namespace qdim
