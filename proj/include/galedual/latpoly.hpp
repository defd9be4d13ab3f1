#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "galedual/exactlat.hpp"
#include "galedual/matrix.hpp"

namespace galedual {

/// Supporting hyperplane normal . p <= offset, normal primitive.
struct Facet {
  IntVector normal;
  Integer offset;
  std::vector<std::size_t> points;  // indices into LatticePolytope::points
};

struct LatticePolytope {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> points;    // deduplicated input
  std::vector<IntVector> vertices;  // deterministic order
  std::vector<Facet> facets;
};

/// Exact hull of a full-dimensional point set in dimension 1..6. In the
/// plane the vertices run counterclockwise from the lexicographic minimum;
/// otherwise they are sorted lexicographically.
LatticePolytope convex_hull(const std::vector<IntVector>& points);

/// d! times the Euclidean volume (an integer for lattice polytopes).
Integer normalized_volume(const LatticePolytope& p);

/// Normalized volume of conv(0, w_1, ..., w_{l+m+n}).
Integer kouchnirenko_bound(const ExponentMatrix& w);

/// (-1)^m C(m+n-1, n-1) (m+n)! vol(conv(0, W)) with W = quotient_images(B).
Integer euler_characteristic(const Dims& dims, const WeightBasis& b);

enum class FewnomialVariant { PositiveOrthant, AllReal, Betti };

struct FewnomialBound {
  double value = 0;
  std::string symbolic;
};

/// (e^2+3)/4 2^C(l,2) n^l, its (e^4+3)/4 analogue, or the Betti-number bound
/// (e^2+3)/4 2^C(l,2) (m+1)^l 2^(m+1); `n` is ignored for Betti.
FewnomialBound fewnomial_bound(std::size_t l, std::size_t n, FewnomialVariant variant,
                               std::size_t m = 0);

std::string to_string(FewnomialVariant v);

}  // namespace galedual
