#pragma once

// Shared helpers for the unit tests: seeded random data and small
// brute-force oracles that do not reuse library code.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "galedual/matrix.hpp"

namespace testutil {

using galedual::Integer;
using galedual::IntMatrix;
using galedual::Rational;
using galedual::RatMatrix;

inline IntMatrix random_int_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

inline Rational random_rational(std::mt19937& rng, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> n(lo, hi), d(1, 6);
  Rational q(n(rng), d(rng));
  q.canonicalize();
  return q;
}

// Random unimodular matrix as a product of elementary operations.
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> k(-2, 2), op(0, 3);
  for (int s = 0; s < steps; ++s) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    switch (op(rng)) {
      case 0: u.swap_rows(a, b); break;
      case 1: u.negate_row(a); break;
      default: u.add_row_multiple(a, b, Integer(k(rng))); break;
    }
  }
  return u;
}

// Leibniz-formula determinant (independent of the Bareiss implementation).
inline Integer leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// gcd of all maximal minors of a full-row-rank r x c matrix.
inline Integer gcd_of_maximal_minors(const IntMatrix& b) {
  const std::size_t r = b.rows(), c = b.cols();
  std::vector<bool> choose(c, false);
  std::fill(choose.begin(), choose.begin() + static_cast<long>(r), true);
  Integer g = 0;
  do {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < c; ++j)
      if (choose[j]) cols.push_back(j);
    Integer d = leibniz_det(b.select_cols(cols));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return g;
}

// Twice the area of a lattice polygon via the shoelace formula over the
// gift-wrapped hull of `pts`.
inline long shoelace_double_area(std::vector<std::pair<long, long>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto cross = [](std::pair<long, long> o, std::pair<long, long> a, std::pair<long, long> b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<long, long>> hull;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t start = hull.size();
    for (const auto& p : pts) {
      while (hull.size() >= start + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(pts.begin(), pts.end());
  }
  long s = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    s += a.first * b.second - b.first * a.second;
  }
  return std::labs(s);
}

inline std::string data_path(const std::string& name) { return std::string(GALEDUAL_DATA_DIR) + "/" + name; }

}  // namespace testutil
