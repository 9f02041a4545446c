#pragma once

// Seeded random generators shared by the property tests and the acceptance
// suite. Every generator is deterministic for a given engine state.

#include <random>
#include <vector>

#include "qdim/golden.hpp"
#include "qdim/quaternion.hpp"
#include "qdim/smith.hpp"
#include "qdim/word.hpp"

namespace qdim::testing {

using Rng = std::mt19937_64;

inline mpq_class random_rational(Rng& rng, long span = 6, long max_den = 4) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, max_den);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline GoldenNum random_golden(Rng& rng) { return GoldenNum(random_rational(rng), random_rational(rng)); }

inline GoldenNum random_nonzero_golden(Rng& rng) {
  GoldenNum g;
  do g = random_golden(rng);
  while (g.is_zero());
  return g;
}

inline Quaternion random_quaternion(Rng& rng) {
  return Quaternion(random_golden(rng), random_golden(rng), random_golden(rng), random_golden(rng));
}

inline Quaternion random_nonzero_quaternion(Rng& rng) {
  Quaternion q;
  do q = random_quaternion(rng);
  while (q.is_zero());
  return q;
}

inline Word random_word(Rng& rng, std::size_t rank, std::size_t max_syllables, int max_exp = 3) {
  std::uniform_int_distribution<std::size_t> len(0, max_syllables);
  std::uniform_int_distribution<std::uint32_t> gen(0, static_cast<std::uint32_t>(rank - 1));
  std::uniform_int_distribution<int> exp(-max_exp, max_exp);
  Word w(rank);
  for (std::size_t i = len(rng); i > 0; --i) w.push({gen(rng), exp(rng)});
  return w;
}

/// Letter sequence (not reduced) as (generator, +-1) pairs.
inline std::vector<Syllable> random_letters(Rng& rng, std::size_t rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> gen(0, static_cast<std::uint32_t>(rank - 1));
  std::bernoulli_distribution sign(0.5);
  std::vector<Syllable> letters;
  for (std::size_t i = len(rng); i > 0; --i) letters.push_back({gen(rng), sign(rng) ? 1 : -1});
  return letters;
}

inline IntMatrix random_matrix(Rng& rng, std::size_t max_dim = 4, long span = 9) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<long> entry(-span, span);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
  return m;
}

}  // namespace qdim::testing
