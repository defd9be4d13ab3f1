#pragma once

// Exact integer lattice algebra: Hermite and Smith normal forms, saturated
// kernels, saturation indices and the quotient lattice construction.

#include <cstddef>
#include <string>

#include "galedual/matrix.hpp"

namespace galedual {

/// Counts (l, m, n) shared by a Gale dual pair: l weights, n polynomials in
/// m+n variables, and l+m+n nonzero monomials / hyperplanes.
struct Dims {
  std::size_t l = 0;
  std::size_t m = 0;
  std::size_t n = 0;

  std::size_t total() const { return l + m + n; }
  std::size_t torus_dim() const { return m + n; }
  std::size_t arrangement_dim() const { return l + m; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

std::string to_string(const Dims& d);

/// Nonzero support w_1..w_{l+m+n} as the columns of an (m+n) x (l+m+n)
/// matrix. The zeroth exponent w_0 = 0 is implicit.
class ExponentMatrix {
 public:
  ExponentMatrix() = default;
  ExponentMatrix(Dims dims, IntMatrix columns);

  const Dims& dims() const { return dims_; }
  const IntMatrix& matrix() const { return columns_; }
  std::size_t size() const { return columns_.cols(); }
  IntVector column(std::size_t i) const { return columns_.col_vector(i); }
  bool has_distinct_columns() const;

 private:
  Dims dims_;
  IntMatrix columns_;
};

/// Weights beta_1..beta_l as the rows of an l x (l+m+n) matrix.
class WeightBasis {
 public:
  WeightBasis() = default;
  WeightBasis(Dims dims, IntMatrix rows);

  const Dims& dims() const { return dims_; }
  const IntMatrix& matrix() const { return rows_; }
  std::size_t size() const { return rows_.rows(); }

 private:
  Dims dims_;
  IntMatrix rows_;
};

struct HermiteForm {
  IntMatrix form;       // H
  IntMatrix transform;  // U, unimodular, U * M == H
  std::size_t rank = 0;
};

struct SmithForm {
  IntMatrix diagonal;  // S
  IntMatrix left;      // U
  IntMatrix right;     // V, U * M * V == S
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: echelon, positive pivots, entries above a
/// pivot reduced into [0, pivot). Zero rows are moved to the bottom.
HermiteForm hnf(const IntMatrix& m);

/// Smith normal form with nonnegative diagonal d_1 | d_2 | ...
SmithForm snf(const IntMatrix& m);

/// Canonical (HNF) basis of the integer kernel {b : m * b^T = 0}, one basis
/// vector per row. The result is always saturated.
IntMatrix kernel_basis(const IntMatrix& m);

/// Index of the row lattice of `b` in its saturation; 1 iff primitive.
/// Throws DependentRows if the rows are rationally dependent.
Integer saturation_index(const IntMatrix& b);

/// Integer points of the rational row span of `b`, as an HNF basis.
IntMatrix saturation(const IntMatrix& b);

/// Nonzero rows of the HNF; identical for any two bases of one lattice.
IntMatrix lattice_basis(const IntMatrix& m);

bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

/// Whether v lies in the row lattice of `basis`.
bool in_lattice(const IntMatrix& basis, const IntVector& v);

/// LLL-reduced basis of the row lattice (rows independent), with each row
/// signed so its last nonzero entry is negative, sorted by length then
/// lexicographically. Short weights give low-degree cleared binomials.
IntMatrix reduced_basis(const IntMatrix& b);

/// Images of the standard unit vectors under Z^{l+m+n} / ZB ~= Z^{m+n}.
/// Requires B primitive with independent rows.
ExponentMatrix quotient_images(const WeightBasis& b);

}  // namespace galedual
