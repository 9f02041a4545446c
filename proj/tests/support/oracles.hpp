#pragma once

// Independent reference computations. None of these call into the code
// paths they are used to check.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "qdim/finite_group.hpp"
#include "qdim/quaternion.hpp"
#include "qdim/smith.hpp"
#include "qdim/word.hpp"

namespace qdim::testing {

/// q multiplied by itself n times, one factor at a time.
inline Quaternion naive_power(const Quaternion& q, int n) {
  Quaternion acc = Quaternion::one();
  for (int i = 0; i < n; ++i) acc = quat_mul(acc, q);
  return acc;
}

/// Cofactor-expansion determinant.
inline mpz_class cofactor_det(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpz_class> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(row);
    }
    mpz_class term = m[0][c] * cofactor_det(minor);
    det += (c % 2 == 0) ? term : mpz_class(-term);
  }
  return det;
}

/// d_k = gcd of all k x k minors; invariant factors are d_k / d_{k-1}.
/// Returns the diagonal of the Smith form (length min(rows, cols)).
inline std::vector<mpz_class> minor_gcd_invariants(const IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t kmax = std::min(rows, cols);
  std::vector<mpz_class> d{1};
  for (std::size_t k = 1; k <= kmax; ++k) {
    mpz_class g = 0;
    std::vector<std::size_t> rsel(k), csel(k);
    std::function<void(std::size_t, std::size_t)> pick_rows;
    std::function<void(std::size_t, std::size_t)> pick_cols;
    pick_cols = [&](std::size_t start, std::size_t depth) {
      if (depth == k) {
        std::vector<std::vector<mpz_class>> m(k, std::vector<mpz_class>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a(rsel[i], csel[j]);
        mpz_class det = cofactor_det(m);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
        return;
      }
      for (std::size_t c = start; c < cols; ++c) {
        csel[depth] = c;
        pick_cols(c + 1, depth + 1);
      }
    };
    pick_rows = [&](std::size_t start, std::size_t depth) {
      if (depth == k) {
        pick_cols(0, 0);
        return;
      }
      for (std::size_t r = start; r < rows; ++r) {
        rsel[depth] = r;
        pick_rows(r + 1, depth + 1);
      }
    };
    pick_rows(0, 0);
    d.push_back(g);
  }
  std::vector<mpz_class> diag;
  for (std::size_t k = 1; k <= kmax; ++k) diag.push_back(d[k - 1] == 0 ? mpz_class(0) : mpz_class(d[k] / d[k - 1]));
  return diag;
}

/// Number of solutions of the exponent-sum system A x = 0 over Z/d, by
/// enumerating all of (Z/d)^rank. Equals |Hom(G, Z/d)|.
inline std::uint64_t brute_force_abelian_hom_count(const Presentation& p, std::uint64_t d) {
  std::vector<std::vector<std::int64_t>> sums;
  for (const Word& r : p.relators) sums.push_back(r.exponent_sums());
  std::vector<std::uint64_t> x(p.rank(), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& row : sums) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * static_cast<std::int64_t>(x[i]);
      if (((acc % static_cast<std::int64_t>(d)) + static_cast<std::int64_t>(d)) % static_cast<std::int64_t>(d) != 0) {
        ok = false;
        break;
      }
    }
    count += ok ? 1 : 0;
    std::size_t i = 0;
    while (i < x.size() && ++x[i] == d) x[i++] = 0;
    if (i == x.size()) break;
  }
  return count;
}

/// Conjugacy class sizes by orbit enumeration over sets (sorted output).
inline std::vector<std::size_t> orbit_class_sizes(const FiniteGroup& g) {
  std::set<std::set<Element>> orbits;
  for (Element a = 0; a < g.size(); ++a) {
    std::set<Element> orbit;
    for (Element b = 0; b < g.size(); ++b) orbit.insert(g.mul(g.mul(b, a), g.inv(b)));
    orbits.insert(orbit);
  }
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Smallest normal subgroup containing a, grown by closing under products
/// and conjugation until stable.
inline std::set<Element> naive_normal_closure(const FiniteGroup& g, Element a) {
  std::set<Element> h{g.identity(), a};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Element> cur(h.begin(), h.end());
    for (Element x : cur) {
      for (Element y : cur)
        grew |= h.insert(g.mul(x, y)).second;
      for (Element c = 0; c < g.size(); ++c)
        grew |= h.insert(g.mul(g.mul(c, x), g.inv(c))).second;
    }
  }
  return h;
}

/// Letter-by-letter evaluation in a finite group, no run-length powers.
inline Element naive_eval(const Word& w, const std::vector<Element>& images, const FiniteGroup& g) {
  Element acc = g.identity();
  for (const Syllable& s : w.syllables()) {
    Element letter = s.exponent > 0 ? images[s.generator] : g.inv(images[s.generator]);
    for (std::int64_t i = 0; i < (s.exponent > 0 ? s.exponent : -s.exponent); ++i) acc = g.mul(acc, letter);
  }
  return acc;
}

}  // namespace qdim::testing
