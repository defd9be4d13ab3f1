#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "galedual/exactlat.hpp"
#include "galedual/matrix.hpp"
#include "galedual/polynomial.hpp"

namespace galedual {

using ComplexPoint = std::vector<std::complex<long double>>;

/// n Laurent polynomials sharing the support {0, w_1, ..., w_{l+m+n}}.
/// Coefficient column 0 is the constant term, column i the coefficient of
/// x^{w_i}.
class SparseSystem {
 public:
  SparseSystem() = default;
  SparseSystem(ExponentMatrix support, RatMatrix coefficients,
               std::vector<std::string> variables = {});

  /// Derives (l, m, n) from the shapes of `support` and `coefficients`.
  static SparseSystem from_columns(IntMatrix support, RatMatrix coefficients,
                                   std::vector<std::string> variables = {});

  const Dims& dims() const { return support_.dims(); }
  const ExponentMatrix& support() const { return support_; }
  const RatMatrix& coefficients() const { return coefficients_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t num_variables() const { return support_.matrix().rows(); }
  std::size_t num_polynomials() const { return coefficients_.rows(); }

  Polynomial polynomial(std::size_t i) const;
  std::string monomial_string(std::size_t column) const;

 private:
  ExponentMatrix support_;
  RatMatrix coefficients_;
  std::vector<std::string> variables_;
};

/// A sparse system with an arbitrary (possibly repeated, possibly nonzero
/// minimal) support: every column of `exponents` is a monomial and column j
/// of `coefficients` holds its coefficients.
struct RawSparseSystem {
  IntMatrix exponents;  // nvars x k
  RatMatrix coefficients;  // npolys x k
  std::vector<std::string> variables;
};

SparseSystem normalize_support(const RawSparseSystem& raw);

/// A degree-1 polynomial constant + sum coeffs[k] * y_k.
struct AffineForm {
  Rational constant;
  RatVector coeffs;

  Rational evaluate(const RatVector& y) const;
  std::complex<long double> evaluate(const ComplexPoint& y) const;
  Polynomial as_polynomial() const;
  std::string to_string(const std::vector<std::string>& names) const;
  bool is_zero() const;
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

class Arrangement {
 public:
  Arrangement() = default;
  Arrangement(std::size_t ambient_dim, std::vector<AffineForm> forms);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<AffineForm>& forms() const { return forms_; }
  std::size_t size() const { return forms_.size(); }
  /// Rows (constant | gradient) of 1, p_1, ..., p_k.
  RatMatrix affine_matrix() const;
  bool pairwise_nonproportional() const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<AffineForm> forms_;
};

class MasterSystem {
 public:
  MasterSystem() = default;
  MasterSystem(Arrangement arrangement, IntMatrix weights,
               std::vector<std::string> variables = {});

  const Dims& dims() const { return weights_.dims(); }
  const Arrangement& arrangement() const { return arrangement_; }
  const WeightBasis& weights() const { return weights_; }
  const std::vector<std::string>& variables() const { return variables_; }

  /// p(y)^{beta_j} rendered as numerator / denominator.
  std::string master_function_string(std::size_t j) const;

 private:
  Arrangement arrangement_;
  WeightBasis weights_;
  std::vector<std::string> variables_;
};

/// Result of making the pivot coefficient block the identity.
struct DiagonalizedSystem {
  SparseSystem base;
  std::vector<std::size_t> pivots;        // support column indices (0-based)
  std::vector<std::size_t> free_columns;  // the remaining l+m columns
  RatMatrix witness;                      // inverse of the pivot block
  RatMatrix transformed;                  // witness * base.coefficients()
  /// x^{w_pivot[i]} = rhs[i](x^{w_free[0]}, ..., x^{w_free[l+m-1]})
  std::vector<AffineForm> rhs;
};

/// Lexicographically least invertible pivot set unless `pivots` is given.
DiagonalizedSystem diagonalize(const SparseSystem& s,
                               std::optional<std::vector<std::size_t>> pivots = std::nullopt);

/// p^{beta_+} - p^{beta_-} = 0, exponents indexed by form.
struct ClearedBinomial {
  std::vector<unsigned long> plus;
  std::vector<unsigned long> minus;

  Polynomial expand(const Arrangement& a) const;
  IntVector weight() const;
};

ClearedBinomial clear_denominators(const MasterSystem& ms, std::size_t j);

bool is_essential(const Arrangement& a);

/// Per-form scalings lambda with lambda^{beta_j} = 1 / targets[j].
std::vector<Rational> absorb_scalings(const MasterSystem& ms, const std::vector<Rational>& targets);

/// Rescales the forms so that p^{beta_j} = targets[j] becomes p'^{beta_j} = 1.
MasterSystem absorb_constants(const MasterSystem& ms, const std::vector<Rational>& targets);

RatVector evaluate_phi(const ExponentMatrix& w, const RatVector& x);
ComplexPoint evaluate_phi(const ExponentMatrix& w, const ComplexPoint& x);

RatVector evaluate_psi(const Arrangement& a, const RatVector& y);
ComplexPoint evaluate_psi(const Arrangement& a, const ComplexPoint& y);

bool in_complement(const Arrangement& a, const RatVector& y);
bool in_complement(const Arrangement& a, const ComplexPoint& y, long double tol);

/// p(y)^{beta_j}, evaluated in floating point.
std::complex<long double> master_value(const MasterSystem& ms, std::size_t j, const ComplexPoint& y);

std::vector<std::string> default_names(std::size_t count, const std::string& prefix);

}  // namespace galedual
