#pragma once

// Exact univariate polynomials over Q used by the resultant solver.

#include <complex>
#include <vector>

#include "galedual/matrix.hpp"

namespace galedual::detail {

/// Coefficients c[i] of x^i, no trailing zeros (the zero polynomial is empty).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& lead() const { return c_.back(); }

  UniPoly derivative() const;
  UniPoly monic() const;
  Rational evaluate(const Rational& x) const;
  std::complex<long double> evaluate(std::complex<long double> x) const;

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  /// Quotient and remainder; b must be nonzero.
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  friend UniPoly gcd(UniPoly a, UniPoly b);

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

struct SquarefreeFactor {
  UniPoly factor;
  int multiplicity;
};

/// Yun's algorithm: p = const * prod factor_k^k with squarefree, pairwise
/// coprime factors.
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p);

/// Number of distinct real roots (Sturm sequence).
int count_real_roots(const UniPoly& p);

/// Newton interpolation through (x_i, y_i) with exact arithmetic.
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Numeric roots (companion matrix eigenvalues, then Newton-polished).
std::vector<std::complex<long double>> numeric_roots(const UniPoly& p);
std::vector<std::complex<long double>> numeric_roots(
    const std::vector<std::complex<long double>>& coeffs);

}  // namespace galedual::detail
