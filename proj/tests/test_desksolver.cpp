#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "galedual/desksolver.hpp"
#include "galedual/error.hpp"
#include "galedual/latpoly.hpp"
#include "test_support.hpp"
#include "univariate.hpp"

using namespace galedual;
using detail::UniPoly;
using testutil::random_rational;

namespace {

Rational R(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

UniPoly U(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.push_back(x);
  return UniPoly(v);
}

UniPoly mul(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return UniPoly(c);
}

UniPoly power(const UniPoly& a, int k) {
  UniPoly r = U({1});
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

Polynomial X() { return Polynomial::variable(2, 0); }
Polynomial Y() { return Polynomial::variable(2, 1); }
Polynomial C(const Rational& c) { return Polynomial::constant(2, c); }

SparseSystem example_sparse() {
  IntMatrix w{{3, 1, 4, 4}, {2, 2, -1, 1}};
  RatMatrix c{{R(-1, 2), -3, 1, 2, -4}, {R(-1, 2), 1, -1, 0, 2}};
  return SparseSystem::from_columns(w, c, {"x", "y"});
}

MasterSystem example_master() {
  Arrangement a(2, {{R(-1, 2), {1, -1}}, {-1, {1, 1}}, {0, {1, 0}}, {0, {0, 1}}});
  return MasterSystem(a, IntMatrix{{-1, 3, 2, -2}, {3, -1, 1, -3}}, {"s", "t"});
}

// Every solution has its complex conjugate in the set, with the same multiplicity.
bool conjugation_closed(const SolutionSet& s, double tol) {
  for (const auto& a : s.solutions) {
    bool found = false;
    for (const auto& b : s.solutions) {
      double d = 0;
      for (std::size_t k = 0; k < a.point.size(); ++k) d = std::max(d, std::abs(std::conj(a.point[k]) - b.point[k]));
      double scale = 1;
      for (const auto& z : a.point) scale = std::max(scale, std::abs(z));
      if (d <= tol * scale && a.multiplicity == b.multiplicity) found = true;
    }
    if (!found) return false;
  }
  return true;
}

double max_residual(const SolutionSet& s) {
  double r = 0;
  for (const auto& p : s.counted()) r = std::max(r, p.residual);
  return r;
}

Polynomial random_dense(std::mt19937& rng, int deg) {
  Polynomial p(2);
  for (long i = 0; i <= deg; ++i)
    for (long j = 0; i + j <= deg; ++j) p.add_term({i, j}, random_rational(rng));
  return p;
}

}  // namespace

TEST_CASE("univariate arithmetic") {
  UniPoly a = mul(U({-1, 1}), U({2, 0, 1}));  // (x - 1)(x^2 + 2)
  UniPoly b = mul(U({-1, 1}), U({3, 1}));     // (x - 1)(x + 3)
  CHECK(gcd(a, b).coeffs() == U({-1, 1}).coeffs());
  auto [q, r] = divmod(a, b);
  UniPoly back = mul(q, b);
  std::vector<Rational> sum(std::max(back.coeffs().size(), r.coeffs().size()), 0);
  for (std::size_t i = 0; i < back.coeffs().size(); ++i) sum[i] += back.coeffs()[i];
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) sum[i] += r.coeffs()[i];
  CHECK(UniPoly(sum).coeffs() == a.coeffs());
  CHECK(r.degree() < b.degree());
  CHECK(a.evaluate(Rational(1)) == 0);
  CHECK(a.derivative().coeffs() == U({2, -2, 3}).coeffs());
}

TEST_CASE("squarefree decomposition") {
  UniPoly f1 = U({1, 0, 1}), f2 = U({-1, 1}), f3 = U({2, 1});
  UniPoly p = mul(mul(f1, power(f2, 2)), power(f3, 3)).monic();
  auto parts = squarefree_decomposition(mul(p, U({5})));
  UniPoly rebuilt = U({1});
  for (const auto& part : parts) rebuilt = mul(rebuilt, power(part.factor, part.multiplicity));
  CHECK(rebuilt.monic().coeffs() == p.coeffs());
  for (const auto& part : parts) {
    if (part.multiplicity == 1) CHECK(part.factor.monic().coeffs() == f1.coeffs());
    if (part.multiplicity == 2) CHECK(part.factor.monic().coeffs() == f2.coeffs());
    if (part.multiplicity == 3) CHECK(part.factor.monic().coeffs() == f3.coeffs());
  }
}

TEST_CASE("Sturm real root counts") {
  CHECK(count_real_roots(U({1, 0, 1})) == 0);
  CHECK(count_real_roots(U({-2, 0, 1})) == 2);
  CHECK(count_real_roots(mul(U({-1, 1}), mul(U({-2, 1}), U({-3, 1})))) == 3);
  CHECK(count_real_roots(power(U({-1, 1}), 4)) == 1);
  // x^5 - x - 1 has one real root
  CHECK(count_real_roots(U({-1, -1, 0, 0, 0, 1})) == 1);
}

TEST_CASE("interpolation recovers a polynomial") {
  std::mt19937 rng(51);
  std::vector<Rational> c;
  for (int i = 0; i < 7; ++i) c.push_back(random_rational(rng));
  UniPoly p(c);
  std::vector<Rational> xs, ys;
  for (int i = 0; i < 7; ++i) {
    xs.push_back(i - 3);
    ys.push_back(p.evaluate(xs.back()));
  }
  CHECK(detail::interpolate(xs, ys).coeffs() == p.coeffs());
}

TEST_CASE("numeric roots") {
  UniPoly w = U({1});
  for (int k = 1; k <= 12; ++k) w = mul(w, U({-k, 1}));
  auto roots = detail::numeric_roots(w);
  REQUIRE(roots.size() == 12);
  std::vector<long double> re;
  for (auto z : roots) {
    CHECK(std::abs(z.imag()) < 1e-8L);
    re.push_back(z.real());
  }
  std::sort(re.begin(), re.end());
  for (int k = 1; k <= 12; ++k) CHECK(std::abs(re[k - 1] - k) < 1e-8L);

  auto unit = detail::numeric_roots(U({-1, 0, 0, 0, 0, 1}));
  REQUIRE(unit.size() == 5);
  for (auto z : unit) CHECK(std::abs(std::pow(z, 5) - 1.0L) < 1e-14L);

  auto with_zero = detail::numeric_roots(U({0, 0, -4, 1}));
  REQUIRE(with_zero.size() == 3);
  int zeros = 0;
  for (auto z : with_zero) zeros += std::abs(z) < 1e-15L;
  CHECK(zeros == 2);
}

TEST_CASE("bivariate systems with known solutions") {
  SUBCASE("two lines") {
    SolutionSet s = solve_bivariate(X() + Y() - C(3), X() - Y() - C(1));
    REQUIRE(s.count() == 1);
    CHECK(std::abs(s.solutions[0].point[0] - 2.0) < 1e-12);
    CHECK(std::abs(s.solutions[0].point[1] - 1.0) < 1e-12);
    CHECK(s.solutions[0].is_real);
  }
  SUBCASE("circle and line") {
    SolutionSet s = solve_bivariate(X() * X() + Y() * Y() - C(1), X() - Y());
    CHECK(s.count() == 2);
    CHECK(s.real_count() == 2);
    SolutionSet t = solve_bivariate(X() * X() + Y() * Y() - C(1), X() + Y() - C(5));
    CHECK(t.count() == 2);
    CHECK(t.real_count() == 0);
    CHECK(conjugation_closed(t, 1e-9));
  }
  SUBCASE("tangency gives a double solution") {
    SolutionSet s = solve_bivariate(Y() - X() * X(), Y());
    REQUIRE(s.solutions.size() == 1);
    CHECK(s.solutions[0].multiplicity == 2);
    CHECK(s.count() == 2);
  }
  SUBCASE("vertical fibre needs another frame") {
    // x = 1 meets y^2 = 2 twice over the same x
    SolutionSet s = solve_bivariate(X() - C(1), Y() * Y() - C(2));
    CHECK(s.count() == 2);
    CHECK(s.real_count() == 2);
    CHECK(max_residual(s) < 1e-12);
  }
}

TEST_CASE("generic dense systems have the Bezout number of solutions") {
  std::mt19937 rng(52);
  for (int t = 0; t < 5; ++t) {
    Polynomial f = random_dense(rng, 2), g = random_dense(rng, 3);
    SolutionSet s = solve_bivariate(f, g);
    CHECK(s.count() == 6);
    CHECK(max_residual(s) < 1e-8);
    CHECK(conjugation_closed(s, 1e-7));
  }
}

TEST_CASE("solver errors") {
  SUBCASE("common component") {
    Polynomial f = (X() - C(1)) * (Y() - C(1)), g = (X() - C(1)) * (Y() + C(1));
    try {
      solve_bivariate(f, g);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CommonComponent);
    }
    try {
      solve_bivariate((Y() - C(2)) * X(), (Y() - C(2)) * (X() + C(1)));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CommonComponent);
    }
  }
  SUBCASE("degree cap") {
    try {
      solve_bivariate(X().pow(40) - C(1), Y() - C(1));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegreeCap);
    }
  }
  SUBCASE("three variables") {
    SparseSystem s = SparseSystem::from_columns(IntMatrix{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}},
                                                RatMatrix{{1, 1, 1, 1, 1}, {1, 2, 3, 4, 5}, {2, 1, 3, 1, 1}});
    try {
      solve_sparse(s);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DimensionCap);
    }
  }
}

TEST_CASE("example sparse system") {
  SolutionSet s = solve_sparse(example_sparse());
  CHECK(s.count() == 17);
  CHECK(s.real_count() == 3);
  for (const auto& p : s.counted()) {
    CHECK(p.multiplicity == 1);
    CHECK(p.location == Location::Torus);
  }
  CHECK(max_residual(s) < 1e-9);
  CHECK(conjugation_closed(s, 1e-8));
}

TEST_CASE("example master system") {
  SolutionSet s = solve_master(example_master());
  CHECK(s.count() == 17);
  CHECK(s.real_count() == 3);
  for (const auto& p : s.counted()) {
    CHECK(p.multiplicity == 1);
    CHECK(p.location == Location::Complement);
  }
  // cleared binomials also vanish at points of the arrangement
  CHECK(s.excluded_count() >= 1);
  CHECK(max_residual(s) < 1e-9);
  CHECK(conjugation_closed(s, 1e-8));
}

TEST_CASE("second master system of the example") {
  Arrangement a(2, {{-2, {1, -7}}, {-7, {4, 1}}, {0, {2, -3}}, {1, {1, -3}}});
  MasterSystem ms(a, IntMatrix{{-1, 3, 2, -2}, {3, -1, 1, -3}});
  SolutionSet s = solve_master(ms);
  CHECK(s.count() == 17);
  CHECK(max_residual(s) < 1e-9);
  CHECK(conjugation_closed(s, 1e-8));
}

TEST_CASE("master system with one rational solution") {
  Arrangement a(2, {{1, {1, 0}}, {3, {0, 2}}, {5, {1, -1}}, {-2, {3, 1}}});
  MasterSystem ms(a, IntMatrix{{1, -1, 0, 0}, {0, 0, 1, -1}});
  SolutionSet s = solve_master(ms);
  REQUIRE(s.count() == 1);
  const auto p = s.counted().front();
  CHECK(std::abs(p.point[0] - 3.0) < 1e-12);
  CHECK(std::abs(p.point[1] - 0.5) < 1e-12);
}

TEST_CASE("isomorphism on the example pair") {
  GalePair gp = dualize_poly_to_master(example_sparse());
  IsomorphismReport r = verify_isomorphism(gp);
  CHECK(r.is_bijection());
  CHECK(r.reals_preserved());
  CHECK(r.matching.size() == 17);
  CHECK(r.max_distance() < 1e-6);
  for (const auto& m : r.matching) {
    CHECK(r.poly_solutions.solutions[m.poly_index].is_real == r.master_solutions.solutions[m.master_index].is_real);
  }
}

TEST_CASE("random sparse systems: count within the bound and closed under conjugation") {
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> e(-2, 3);
  int solved = 0;
  for (int t = 0; t < 30; ++t) {
    IntMatrix w(2, 3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) w(i, j) = e(rng);
    bool ok = true;
    for (std::size_t j = 0; j < 3; ++j) ok = ok && !(w(0, j) == 0 && w(1, j) == 0);
    if (!ok) continue;
    Integer bound;
    try {
      bound = kouchnirenko_bound(ExponentMatrix(Dims{1, 0, 2}, w));
    } catch (const Error&) {
      continue;
    }
    RatMatrix c(2, 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 4; ++j) c(i, j) = random_rational(rng);
    SolutionSet s;
    try {
      s = solve_sparse(SparseSystem::from_columns(w, c));
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::CommonComponent);
      continue;
    }
    ++solved;
    CHECK(Integer(static_cast<unsigned long>(s.count())) <= bound);
    CHECK(conjugation_closed(s, 1e-6));
  }
  CHECK(solved >= 15);
}

TEST_CASE("results do not depend on repeated runs") {
  SolverConfig cfg;
  cfg.seed = 7;
  SolutionSet a = solve_sparse(example_sparse(), cfg), b = solve_sparse(example_sparse(), cfg);
  REQUIRE(a.solutions.size() == b.solutions.size());
  for (std::size_t i = 0; i < a.solutions.size(); ++i) CHECK(a.solutions[i].point == b.solutions[i].point);
  CHECK(a.elimination == b.elimination);
}
