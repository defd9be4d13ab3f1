#include "galedual/latpoly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "galedual/error.hpp"
#include "galedual/linalg.hpp"

namespace galedual {

namespace {

using Point = IntVector;


Integer dot(const IntVector& a, const Point& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::size_t affine_rank(const std::vector<Point>& pts, const std::vector<std::size_t>& idx) {
  if (idx.size() <= 1) return 0;
  IntMatrix d(idx.size() - 1, pts[idx[0]].size());
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) d(i - 1, j) = pts[idx[i]][j] - pts[idx[0]][j];
  return rank(d);
}

// Normal to the hyperplane through d affinely independent points: the
// cofactor vector of the (d-1) x d difference matrix.
IntVector hyperplane_normal(const std::vector<Point>& pts, const std::vector<std::size_t>& idx) {
  const std::size_t d = pts[idx[0]].size();
  IntVector normal(d);
  for (std::size_t c = 0; c < d; ++c) {
    IntMatrix minor(d - 1, d - 1);
    for (std::size_t i = 1; i < idx.size(); ++i) {
      std::size_t cc = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == c) continue;
        minor(i - 1, cc++) = pts[idx[i]][j] - pts[idx[0]][j];
      }
    }
    Integer m = determinant(minor);
    normal[c] = (c % 2 == 0) ? m : Integer(-m);
  }
  return normal;
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Facet> enumerate_facets(const std::vector<Point>& pts, std::size_t d) {
  std::map<std::pair<IntVector, Integer>, std::size_t> seen;
  std::vector<Facet> facets;
  for_each_subset(pts.size(), d, [&](const std::vector<std::size_t>& idx) {
    if (affine_rank(pts, idx) != d - 1) return;
    IntVector a = hyperplane_normal(pts, idx);
    Integer g = 0;
    for (const auto& v : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    for (auto& v : a) v /= g;
    Integer b = dot(a, pts[idx[0]]);
    bool above = false, below = false;
    for (const auto& p : pts) {
      Integer s = dot(a, p);
      above = above || s > b;
      below = below || s < b;
    }
    if (above && below) return;
    if (above) {
      for (auto& v : a) v = -v;
      b = -b;
    }
    if (!seen.emplace(std::pair{a, b}, facets.size()).second) return;
    Facet f{a, b, {}};
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(a, pts[i]) == b) f.points.push_back(i);
    facets.push_back(std::move(f));
  });
  std::sort(facets.begin(), facets.end(),
            [](const Facet& x, const Facet& y) { return x.points < y.points; });
  return facets;
}

Integer cross2(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<Point> monotone_chain(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  std::vector<Point> lo, hi;
  for (const auto& p : pts) {
    while (lo.size() >= 2 && cross2(lo[lo.size() - 2], lo.back(), p) <= 0) lo.pop_back();
    lo.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (hi.size() >= 2 && cross2(hi[hi.size() - 2], hi.back(), *it) <= 0) hi.pop_back();
    hi.push_back(*it);
  }
  lo.pop_back();
  hi.pop_back();
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

// Pulling triangulation: cone from the first vertex of a face over the
// facets of that face not containing it. Faces are point-index sets; the
// facets of a face are its maximal intersections with facets of P.
void triangulate(const std::vector<Point>& pts, const std::vector<Facet>& facets,
                 const std::vector<std::size_t>& face, std::size_t dim,
                 std::vector<std::size_t>& apexes, std::vector<std::vector<std::size_t>>& out) {
  if (dim == 0) {
    auto s = apexes;
    s.push_back(face.front());
    out.push_back(std::move(s));
    return;
  }
  const std::size_t apex = face.front();
  std::set<std::vector<std::size_t>> subfaces;
  for (const auto& f : facets) {
    std::vector<std::size_t> inter;
    std::set_intersection(face.begin(), face.end(), f.points.begin(), f.points.end(),
                          std::back_inserter(inter));
    if (inter.size() < dim || inter.size() == face.size()) continue;
    if (affine_rank(pts, inter) != dim - 1) continue;
    if (std::binary_search(inter.begin(), inter.end(), apex)) continue;
    subfaces.insert(std::move(inter));
  }
  apexes.push_back(apex);
  for (const auto& g : subfaces) triangulate(pts, facets, g, dim - 1, apexes, out);
  apexes.pop_back();
}

}  // namespace

LatticePolytope convex_hull(const std::vector<IntVector>& input) {
  if (input.empty()) throw Error(ErrorCode::InvalidInput, "no points");
  const std::size_t d = input.front().size();
  if (d == 0 || d > 6) throw Error(ErrorCode::DimensionCap, "hull dimension must be 1..6");
  LatticePolytope p;
  p.ambient_dim = d;
  std::set<Point> uniq;
  for (const auto& q : input) {
    if (q.size() != d) throw Error(ErrorCode::InvalidInput, "points of mixed dimension");
    if (uniq.insert(q).second) p.points.push_back(q);
  }
  std::vector<std::size_t> all(p.points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (affine_rank(p.points, all) != d)
    throw Error(ErrorCode::NotFullDimensional, "points do not affinely span the ambient space");

  p.facets = enumerate_facets(p.points, d);
  if (d == 2) {
    p.vertices = monotone_chain(p.points);
    return p;
  }
  for (std::size_t i = 0; i < p.points.size(); ++i) {
    std::vector<std::vector<Integer>> normals;
    for (const auto& f : p.facets)
      if (std::binary_search(f.points.begin(), f.points.end(), i)) normals.push_back(f.normal);
    if (normals.size() >= d && rank(IntMatrix::from_rows(normals)) == d)
      p.vertices.push_back(p.points[i]);
  }
  std::sort(p.vertices.begin(), p.vertices.end());
  return p;
}

Integer normalized_volume(const LatticePolytope& p) {
  const std::size_t d = p.ambient_dim;
  // restrict to vertices so every simplex is spanned by vertices
  std::vector<Point> verts = p.vertices;
  std::sort(verts.begin(), verts.end());
  std::vector<std::size_t> all(verts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (affine_rank(verts, all) != d)
    throw Error(ErrorCode::NotFullDimensional, "polytope is not full-dimensional");
  std::vector<Facet> facets;
  for (const auto& f : p.facets) {
    Facet g{f.normal, f.offset, {}};
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (dot(f.normal, verts[i]) == f.offset) g.points.push_back(i);
    facets.push_back(std::move(g));
  }
  std::vector<std::size_t> apexes;
  std::vector<std::vector<std::size_t>> simplices;
  triangulate(verts, facets, all, d, apexes, simplices);
  Integer vol = 0;
  for (const auto& s : simplices) {
    IntMatrix m(d, d);
    for (std::size_t i = 1; i <= d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i - 1, j) = verts[s[i]][j] - verts[s[0]][j];
    vol += abs(determinant(m));
  }
  return vol;
}

Integer kouchnirenko_bound(const ExponentMatrix& w) {
  const IntMatrix& m = w.matrix();
  std::vector<IntVector> pts{IntVector(m.rows(), 0)};
  for (std::size_t j = 0; j < m.cols(); ++j) pts.push_back(m.col_vector(j));
  return normalized_volume(convex_hull(pts));
}

Integer euler_characteristic(const Dims& dims, const WeightBasis& b) {
  if (dims.n == 0) throw Error(ErrorCode::InvalidInput, "Euler characteristic needs n > 0");
  if (!(dims == b.dims())) throw Error(ErrorCode::InvalidInput, "dims do not match the weights");
  const Integer vol = kouchnirenko_bound(quotient_images(b));
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), dims.m + dims.n - 1, dims.n - 1);
  Integer chi = binom * vol;
  return dims.m % 2 ? Integer(-chi) : chi;
}

std::string to_string(FewnomialVariant v) {
  switch (v) {
    case FewnomialVariant::PositiveOrthant: return "positive-orthant";
    case FewnomialVariant::AllReal: return "all-real";
    case FewnomialVariant::Betti: return "betti";
  }
  return "?";
}

FewnomialBound fewnomial_bound(std::size_t l, std::size_t n, FewnomialVariant variant,
                               std::size_t m) {
  const double e = std::numbers::e;
  const std::size_t c2 = l * (l - (l ? 1 : 0)) / 2;
  const double two_c2 = std::ldexp(1.0, static_cast<int>(c2));
  std::ostringstream sym;
  FewnomialBound out;
  switch (variant) {
    case FewnomialVariant::PositiveOrthant:
    case FewnomialVariant::AllReal: {
      const bool real = variant == FewnomialVariant::AllReal;
      const double lead = ((real ? std::pow(e, 4) : e * e) + 3) / 4;
      out.value = lead * two_c2 * std::pow(static_cast<double>(n), static_cast<double>(l));
      sym << (real ? "(e^4+3)/4" : "(e^2+3)/4") << " * 2^" << c2 << " * " << n << "^" << l;
      break;
    }
    case FewnomialVariant::Betti: {
      const double lead = (e * e + 3) / 4;
      out.value = lead * two_c2 * std::pow(static_cast<double>(m + 1), static_cast<double>(l)) *
                  std::ldexp(1.0, static_cast<int>(m + 1));
      sym << "(e^2+3)/4 * 2^" << c2 << " * " << m + 1 << "^" << l << " * 2^" << m + 1;
      break;
    }
  }
  out.symbolic = sym.str();
  return out;
}

}  // namespace galedual
