#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "galedual/matrix.hpp"

namespace galedual {

/// Reduced row echelon form over Q.
struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

Echelon rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);
Rational determinant(RatMatrix m);
/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(IntMatrix m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Rows spanning {v : v * m = 0}, in reduced row echelon form.
RatMatrix left_kernel(const RatMatrix& m);

}  // namespace galedual
