#include "qdim/smith.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "qdim/errors.hpp"

namespace qdim {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values)
    : IntMatrix(rows, cols) {
  if (values.size() != rows * cols) throw InputError("IntMatrix: wrong number of entries");
  std::size_t i = 0;
  for (long v : values) data_[i++] = v;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("IntMatrix: dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

mpz_class IntMatrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).get_str();
  }
  os << ']';
  return os.str();
}

std::vector<mpz_class> SNFResult::diagonal() const {
  std::vector<mpz_class> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

// Row and column operations applied simultaneously to D and to the
// transforms, so that U * A * V = D holds throughout.
class Reducer {
 public:
  explicit Reducer(const IntMatrix& a)
      : d_(a), u_(IntMatrix::identity(a.rows())), v_(IntMatrix::identity(a.cols())) {}

  SNFResult run() {
    const std::size_t limit = std::min(d_.rows(), d_.cols());
    for (std::size_t t = 0; t < limit; ++t) {
      if (!move_smallest_to(t)) break;
      while (true) {
        if (!clear_row_and_column(t)) continue;
        auto bad = find_nondivisible(t);
        if (!bad) break;
        add_row(t, bad->first, 1);
      }
      if (d_(t, t) < 0) negate_row(t);
    }
    return {std::move(u_), std::move(d_), std::move(v_)};
  }

 private:
  // Brings the nonzero entry of least absolute value in the trailing
  // submatrix to (t, t). False if the submatrix is zero.
  bool move_smallest_to(std::size_t t) {
    std::size_t br = 0, bc = 0;
    bool found = false;
    for (std::size_t r = t; r < d_.rows(); ++r)
      for (std::size_t c = t; c < d_.cols(); ++c) {
        if (d_(r, c) == 0) continue;
        if (!found || abs(d_(r, c)) < abs(d_(br, bc))) {
          br = r;
          bc = c;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  // Euclidean reduction of row t and column t against the pivot. Returns
  // false if a smaller remainder appeared and was swapped in as the new pivot.
  bool clear_row_and_column(std::size_t t) {
    for (std::size_t r = t + 1; r < d_.rows(); ++r) {
      if (d_(r, t) == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), d_(r, t).get_mpz_t(), d_(t, t).get_mpz_t());
      add_row(r, t, -q);
      if (d_(r, t) != 0) {
        swap_rows(t, r);
        return false;
      }
    }
    for (std::size_t c = t + 1; c < d_.cols(); ++c) {
      if (d_(t, c) == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), d_(t, c).get_mpz_t(), d_(t, t).get_mpz_t());
      add_col(c, t, -q);
      if (d_(t, c) != 0) {
        swap_cols(t, c);
        return false;
      }
    }
    return true;
  }

  std::optional<std::pair<std::size_t, std::size_t>> find_nondivisible(std::size_t t) const {
    for (std::size_t r = t + 1; r < d_.rows(); ++r)
      for (std::size_t c = t + 1; c < d_.cols(); ++c)
        if (!mpz_divisible_p(d_(r, c).get_mpz_t(), d_(t, t).get_mpz_t())) return std::pair{r, c};
    return std::nullopt;
  }

  // row[dst] += m * row[src]
  void add_row(std::size_t dst, std::size_t src, const mpz_class& m) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(dst, c) += m * d_(src, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(dst, c) += m * u_(src, c);
  }
  void add_col(std::size_t dst, std::size_t src, const mpz_class& m) {
    for (std::size_t r = 0; r < d_.rows(); ++r) d_(r, dst) += m * d_(r, src);
    for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, dst) += m * v_(r, src);
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < d_.cols(); ++c) std::swap(d_(a, c), d_(b, c));
    for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(a, c), u_(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < d_.rows(); ++r) std::swap(d_(r, a), d_(r, b));
    for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, a), v_(r, b));
  }
  void negate_row(std::size_t t) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(t, c) = -d_(t, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(t, c) = -u_(t, c);
  }

  IntMatrix d_, u_, v_;
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a) { return Reducer(a).run(); }

IntMatrix exponent_sum_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.rank());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    auto sums = p.relators[r].exponent_sums();
    for (std::size_t c = 0; c < sums.size(); ++c) m(r, c) = static_cast<long>(sums[c]);
  }
  return m;
}

std::vector<std::int64_t> first_homology(const Presentation& p) {
  auto diag = smith_normal_form(exponent_sum_matrix(p)).diagonal();
  std::vector<std::int64_t> factors;
  std::size_t rank = 0;
  for (const mpz_class& d : diag) {
    if (d == 0) continue;
    ++rank;
    if (d == 1) continue;
    if (!d.fits_slong_p()) throw IntegrityError("invariant factor does not fit in 64 bits");
    factors.push_back(d.get_si());
  }
  for (std::size_t i = rank; i < p.rank(); ++i) factors.push_back(0);
  return factors;
}

std::string render_homology(const std::vector<std::int64_t>& factors) {
  if (factors.empty()) return "0";
  std::string out;
  for (std::int64_t f : factors) {
    if (!out.empty()) out += " + ";
    out += f == 0 ? "Z" : "Z/" + std::to_string(f);
  }
  return out;
}

}  // namespace qdim
