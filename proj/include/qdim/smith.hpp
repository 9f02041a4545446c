#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "qdim/word.hpp"

namespace qdim {

/// Dense row-major integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// Determinant of a square matrix (fraction-free elimination).
  mpz_class determinant() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal, each nonzero diagonal
/// entry nonnegative and dividing the next.
struct SNFResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::vector<mpz_class> diagonal() const;
};

SNFResult smith_normal_form(const IntMatrix& a);

/// Rows are relators, columns generators, entries exponent sums.
IntMatrix exponent_sum_matrix(const Presentation& p);

/// Invariant factors of the abelianization: units dropped, 0 for each free
/// Z summand. Empty means the group is perfect.
std::vector<std::int64_t> first_homology(const Presentation& p);

/// "0", "Z", "Z/3 + Z" ...
std::string render_homology(const std::vector<std::int64_t>& factors);

}  // namespace qdim
