#include <doctest.h>

#include <cmath>
#include <numbers>

#include "galedual/error.hpp"
#include "galedual/latpoly.hpp"
#include "galedual/linalg.hpp"
#include "test_support.hpp"

using namespace galedual;

namespace {

std::vector<IntVector> pts(std::initializer_list<std::initializer_list<long>> in) {
  std::vector<IntVector> out;
  for (const auto& p : in) {
    IntVector v;
    for (long c : p) v.push_back(c);
    out.push_back(v);
  }
  return out;
}

const std::vector<IntVector> kPentagon = pts({{0, 0}, {3, 2}, {1, 2}, {4, -1}, {4, 1}});

std::vector<IntVector> transform(const IntMatrix& u, const std::vector<IntVector>& in) {
  std::vector<IntVector> out;
  for (const auto& p : in) {
    IntVector q(u.rows(), 0);
    for (std::size_t i = 0; i < u.rows(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) q[i] += u(i, j) * p[j];
    out.push_back(q);
  }
  return out;
}

std::vector<std::pair<long, long>> as_pairs(const std::vector<IntVector>& in) {
  std::vector<std::pair<long, long>> out;
  for (const auto& p : in) out.emplace_back(p[0].get_si(), p[1].get_si());
  return out;
}

Integer factorial(unsigned d) {
  Integer f = 1;
  for (unsigned i = 2; i <= d; ++i) f *= i;
  return f;
}

std::vector<IntVector> box(const std::vector<long>& sides) {
  std::vector<IntVector> out{IntVector(sides.size(), 0)};
  for (std::size_t i = 0; i < sides.size(); ++i) {
    std::vector<IntVector> next = out;
    for (auto p : out) {
      p[i] = sides[i];
      next.push_back(p);
    }
    out = next;
  }
  return out;
}

}  // namespace

TEST_CASE("pentagon hull and volume") {
  LatticePolytope p = convex_hull(kPentagon);
  CHECK(p.vertices == pts({{0, 0}, {4, -1}, {4, 1}, {3, 2}, {1, 2}}));
  CHECK(p.facets.size() == 5);
  CHECK(normalized_volume(p) == 17);
  CHECK(testutil::shoelace_double_area(as_pairs(kPentagon)) == 17);
  ExponentMatrix w(Dims{2, 0, 2}, IntMatrix{{3, 1, 4, 4}, {2, 2, -1, 1}});
  CHECK(kouchnirenko_bound(w) == 17);
}

TEST_CASE("facets bound every point") {
  std::mt19937 rng(41);
  for (std::size_t d = 2; d <= 4; ++d) {
    for (int t = 0; t < 10; ++t) {
      std::vector<IntVector> in;
      for (int k = 0; k < 8; ++k) {
        IntMatrix r = testutil::random_int_matrix(rng, 1, d, -3, 3);
        in.push_back(r.row_vector(0));
      }
      LatticePolytope p;
      try {
        p = convex_hull(in);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotFullDimensional);
        continue;
      }
      for (const auto& f : p.facets) {
        CHECK(f.points.size() >= d);
        for (const auto& q : p.points) {
          Integer s = 0;
          for (std::size_t i = 0; i < d; ++i) s += f.normal[i] * q[i];
          CHECK(s <= f.offset);
        }
      }
      for (const auto& v : p.vertices) CHECK(std::find(p.points.begin(), p.points.end(), v) != p.points.end());
    }
  }
}

TEST_CASE("planar volume agrees with the shoelace formula") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<long> c(-6, 6);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    std::vector<IntVector> in;
    for (int k = 0; k < 6; ++k) in.push_back({Integer(c(rng)), Integer(c(rng))});
    try {
      CHECK(normalized_volume(convex_hull(in)) == testutil::shoelace_double_area(as_pairs(in)));
      ++checked;
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotFullDimensional);
    }
  }
  CHECK(checked > 250);
}

TEST_CASE("volumes of boxes, simplices and cross-polytopes") {
  CHECK(normalized_volume(convex_hull(box({2, 3, 5}))) == factorial(3) * 30);
  CHECK(normalized_volume(convex_hull(box({1, 1, 1, 1}))) == 24);
  for (std::size_t d = 1; d <= 6; ++d) {
    std::vector<IntVector> simplex{IntVector(d, 0)};
    for (std::size_t i = 0; i < d; ++i) {
      IntVector e(d, 0);
      e[i] = 1;
      simplex.push_back(e);
    }
    CHECK(normalized_volume(convex_hull(simplex)) == 1);
    // cross-polytope: 2^d unit simplices
    std::vector<IntVector> cross;
    for (std::size_t i = 0; i < d; ++i) {
      IntVector e(d, 0);
      e[i] = 1;
      cross.push_back(e);
      e[i] = -1;
      cross.push_back(e);
    }
    if (d <= 4) CHECK(normalized_volume(convex_hull(cross)) == Integer(1) << d);
  }
  CHECK(normalized_volume(convex_hull(pts({{0}, {7}, {3}}))) == 7);
}

TEST_CASE("volume is invariant under unimodular maps and translation") {
  std::mt19937 rng(43);
  for (int t = 0; t < 100; ++t) {
    IntMatrix u = testutil::random_unimodular(rng, 2);
    CHECK(normalized_volume(convex_hull(transform(u, kPentagon))) == 17);
  }
  std::vector<IntVector> shifted = kPentagon;
  for (auto& p : shifted) {
    p[0] += 5;
    p[1] -= 11;
  }
  CHECK(normalized_volume(convex_hull(shifted)) == 17);
  for (int t = 0; t < 20; ++t) {
    IntMatrix u = testutil::random_unimodular(rng, 3);
    std::vector<IntVector> b = box({1, 2, 3});
    CHECK(normalized_volume(convex_hull(transform(u, b))) == 36);
  }
}

TEST_CASE("hull errors") {
  CHECK_THROWS_AS(convex_hull({}), Error);
  try {
    convex_hull(pts({{0, 0}, {1, 1}, {2, 2}}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFullDimensional);
  }
  try {
    convex_hull({IntVector(7, 0)});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionCap);
  }
}

TEST_CASE("Euler characteristic equals the Kouchnirenko bound when m = 0") {
  WeightBasis b(Dims{2, 0, 2}, IntMatrix{{-1, 3, 2, -2}, {3, -1, 1, -3}});
  CHECK(euler_characteristic(Dims{2, 0, 2}, b) == 17);
  std::mt19937 rng(44);
  int checked = 0;
  for (int t = 0; t < 200 && checked < 30; ++t) {
    IntMatrix w = testutil::random_int_matrix(rng, 2, 4, -4, 4);
    if (testutil::gcd_of_maximal_minors(w) != 1) continue;
    IntMatrix beta = kernel_basis(w);
    CHECK(euler_characteristic(Dims{2, 0, 2}, WeightBasis(Dims{2, 0, 2}, beta)) ==
          kouchnirenko_bound(ExponentMatrix(Dims{2, 0, 2}, w)));
    ++checked;
  }
  CHECK(checked == 30);
}

TEST_CASE("Euler characteristic sign and binomial factor") {
  // (-1)^m C(m+n-1, n-1) times the volume
  Dims d{1, 1, 1};
  WeightBasis b(d, IntMatrix{{1, 1, -2}});
  Integer vol = kouchnirenko_bound(quotient_images(b));
  CHECK(euler_characteristic(d, b) == -vol);
  Dims d2{1, 1, 2};
  WeightBasis b2(d2, IntMatrix{{1, 1, 1, -3}});
  Integer vol2 = kouchnirenko_bound(quotient_images(b2));
  CHECK(euler_characteristic(d2, b2) == -2 * vol2);
  CHECK_THROWS_AS(euler_characteristic(Dims{2, 2, 0}, WeightBasis(Dims{2, 2, 0}, IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}})), Error);
}

TEST_CASE("fewnomial bound formulas") {
  const double e = std::numbers::e;
  auto close = [](double a, double b) { return std::fabs(a - b) <= 1e-12 * std::fabs(b); };
  CHECK(close(fewnomial_bound(2, 2, FewnomialVariant::PositiveOrthant).value, 2 * (e * e + 3)));
  CHECK(close(fewnomial_bound(0, 5, FewnomialVariant::PositiveOrthant).value, (e * e + 3) / 4));
  CHECK(close(fewnomial_bound(2, 2, FewnomialVariant::AllReal).value, 2 * (std::pow(e, 4) + 3)));
  CHECK(close(fewnomial_bound(1, 0, FewnomialVariant::Betti, 1).value, 2 * (e * e + 3)));
  CHECK(close(fewnomial_bound(3, 2, FewnomialVariant::PositiveOrthant).value, (e * e + 3) / 4 * 8 * 8));
  CHECK(fewnomial_bound(2, 2, FewnomialVariant::PositiveOrthant).symbolic == "(e^2+3)/4 * 2^1 * 2^2");
  CHECK(fewnomial_bound(1, 0, FewnomialVariant::Betti, 1).symbolic == "(e^2+3)/4 * 2^0 * 2^1 * 2^2");
  CHECK(to_string(FewnomialVariant::AllReal) == "all-real");
}
