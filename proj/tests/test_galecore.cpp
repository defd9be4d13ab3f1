#include <doctest.h>

#include "galedual/error.hpp"
#include "galedual/galecore.hpp"
#include "galedual/latpoly.hpp"
#include "galedual/linalg.hpp"
#include "test_support.hpp"

using namespace galedual;
using testutil::random_rational;

namespace {

Rational R(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

SparseSystem example_form_order() {
  IntMatrix w{{3, 1, 4, 4}, {2, 2, -1, 1}};
  RatMatrix c{{R(-1, 2), -3, 1, 2, -4}, {R(-1, 2), 1, -1, 0, 2}};
  return SparseSystem::from_columns(w, c, {"x", "y"});
}

MasterSystem example_master() {
  Arrangement a(2, {{R(-1, 2), {1, -1}}, {-1, {1, 1}}, {0, {1, 0}}, {0, {0, 1}}});
  return MasterSystem(a, IntMatrix{{-1, 3, 2, -2}, {3, -1, 1, -3}}, {"s", "t"});
}

const IntMatrix kExampleWeights{{-1, 3, 2, -2}, {3, -1, 1, -3}};

Rational monomial_value(const IntVector& e, const RatVector& x) {
  Rational v = 1;
  for (std::size_t k = 0; k < e.size(); ++k) {
    long p = e[k].get_si();
    for (long i = 0; i < std::labs(p); ++i) v = p > 0 ? Rational(v * x[k]) : Rational(v / x[k]);
  }
  return v;
}

// Random 2 x 4 support of full rank with no zero column.
IntMatrix random_support(std::mt19937& rng) {
  while (true) {
    IntMatrix w = testutil::random_int_matrix(rng, 2, 4, -4, 4);
    bool ok = rank(w) == 2;
    for (std::size_t j = 0; j < 4; ++j) ok = ok && !(w(0, j) == 0 && w(1, j) == 0);
    if (ok) return w;
  }
}

}  // namespace

TEST_CASE("polynomial side of the example dualizes to the expected master system") {
  GalePair gp = dualize_poly_to_master(example_form_order());
  CHECK(gp.master.weights().matrix() == kExampleWeights);
  CHECK(lattice_equal(gp.master.weights().matrix(), kExampleWeights));
  CHECK(gp.form_column == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(gp.master.arrangement().forms()[0] == AffineForm{R(-1, 2), {1, -1}});
  CHECK(gp.master.arrangement().forms()[1] == AffineForm{-1, {1, 1}});
  CHECK(gp.master.arrangement().forms()[2] == AffineForm{0, {1, 0}});
  CHECK(gp.master.arrangement().forms()[3] == AffineForm{0, {0, 1}});
  CHECK(gp.variable_sources == std::vector<std::string>{"x^4*y^-1", "x^4*y"});
  GaleCheck c = check_gale_pair(gp);
  CHECK(c.all_pass());
  CHECK(c.failures().empty());
  CHECK(c.distinct_columns);
}

TEST_CASE("master side of the example dualizes to a support of volume 17") {
  GalePair gp = dualize_master_to_poly(example_master());
  GaleCheck c = check_gale_pair(gp);
  CHECK(c.all_pass());
  CHECK(kouchnirenko_bound(gp.poly.support()) == 17);
  // same row lattice as the original exponents
  CHECK(lattice_equal(gp.poly.support().matrix(), IntMatrix{{3, 1, 4, 4}, {2, 2, -1, 1}}));
  CHECK((gp.poly.support().matrix() * kExampleWeights.transpose()).is_zero());
}

TEST_CASE("round trip through both dualizations") {
  GalePair forward = dualize_poly_to_master(example_form_order());
  GalePair back = dualize_master_to_poly(forward.master);
  CHECK(check_gale_pair(back).all_pass());
  CHECK(lattice_equal(back.poly.support().matrix(), forward.ordered_support().matrix()));
  // the recovered system has the same row space of coefficients (by form)
  RatMatrix both(4, 5);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 5; ++k) {
      both(i, k) = back.poly.coefficients()(i, k);
      both(2 + i, k) = forward.poly.coefficients()(i, k);
    }
  CHECK(rank(both) == 2);
}

TEST_CASE("forms express the pivot monomials on the torus") {
  SparseSystem s = example_form_order();
  GalePair gp = dualize_poly_to_master(s);
  std::mt19937 rng(31);
  for (int t = 0; t < 20; ++t) {
    RatVector x{random_rational(rng, 1, 9), random_rational(rng, -9, -1)};
    RatVector z = evaluate_phi(gp.ordered_support(), x);
    RatVector y{z[2], z[3]};
    RatVector p = evaluate_psi(gp.master.arrangement(), y);
    // Lambda_i(1, z) = z_i - p_i(y) identically
    for (std::size_t i = 0; i < 2; ++i) {
      Rational lam = gp.linear_forms(i, 0);
      for (std::size_t k = 0; k < 4; ++k) lam += gp.linear_forms(i, k + 1) * z[k];
      CHECK(lam == z[i] - p[i]);
    }
    CHECK(p[2] == y[0]);
    CHECK(p[3] == y[1]);
  }
}

TEST_CASE("non-primitive data") {
  SUBCASE("support of index 2") {
    SparseSystem s = SparseSystem::from_columns(IntMatrix{{2, 0, 2}, {0, 1, 3}},
                                                RatMatrix{{1, 1, 1, 1}, {2, -1, 3, 1}});
    try {
      dualize_poly_to_master(s);
      FAIL("expected NotPrimitiveError");
    } catch (const NotPrimitiveError& e) {
      CHECK(e.index() == 2);
    }
    GalePair gp = dualize_poly_to_master(s, {.allow_nonprimitive = true});
    GaleCheck c = check_gale_pair(gp);
    CHECK(c.support_index == 2);
    CHECK_FALSE(c.all_pass());
    CHECK_FALSE(c.real_isomorphism_possible());
  }
  SUBCASE("weights of index 2") {
    MasterSystem ms(example_master().arrangement(), IntMatrix{{-2, 6, 4, -4}, {3, -1, 1, -3}});
    CHECK_THROWS_AS(dualize_master_to_poly(ms), NotPrimitiveError);
    GalePair gp = dualize_master_to_poly(ms, {.allow_nonprimitive = true});
    GaleCheck c = check_gale_pair(gp);
    CHECK(c.weight_index == 2);
    CHECK(c.annihilates);
    CHECK_FALSE(c.all_pass());
  }
  SUBCASE("odd index keeps the real isomorphism") {
    MasterSystem ms(example_master().arrangement(), IntMatrix{{-3, 9, 6, -6}, {3, -1, 1, -3}});
    GaleCheck c = check_gale_pair(dualize_master_to_poly(ms, {.allow_nonprimitive = true}));
    CHECK(c.weight_index == 3);
    CHECK(c.real_isomorphism_possible());
  }
}

TEST_CASE("degenerate inputs") {
  SUBCASE("no free monomials") {
    SparseSystem s = SparseSystem::from_columns(IntMatrix{{1, 0}, {0, 1}}, RatMatrix{{-1, 1, 0}, {-1, 0, 1}});
    try {
      dualize_poly_to_master(s);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NoPivot);
    }
  }
  SUBCASE("inessential arrangement") {
    Arrangement a(2, {{0, {1, 0}}, {1, {1, 0}}, {2, {1, 0}}, {3, {1, 0}}});
    MasterSystem ms(a, IntMatrix{{1, -1, 0, 0}, {0, 0, 1, -1}});
    try {
      dualize_master_to_poly(ms);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotEssential);
    }
  }
  SUBCASE("rank-deficient support") {
    SparseSystem s = SparseSystem::from_columns(IntMatrix{{1, 2, 3}, {1, 2, 3}}, RatMatrix{{1, 1, 1, 1}, {1, 2, 3, 4}});
    CHECK_THROWS_AS(dualize_poly_to_master(s), NotPrimitiveError);
  }
}

TEST_CASE("random primitive systems dualize consistently") {
  std::mt19937 rng(32);
  int done = 0;
  for (int t = 0; t < 200 && done < 40; ++t) {
    IntMatrix w = random_support(rng);
    if (testutil::gcd_of_maximal_minors(w) != 1) continue;
    RatMatrix c(2, 5);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 5; ++j) c(i, j) = random_rational(rng);
    if (rank(c) < 2) continue;
    SparseSystem s = SparseSystem::from_columns(w, c);
    GalePair gp;
    try {
      gp = dualize_poly_to_master(s);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NoPivot);
      continue;
    }
    ++done;
    GaleCheck gc = check_gale_pair(gp);
    CHECK(gc.annihilates);
    CHECK(gc.weights_primitive());
    CHECK(gc.pullback_vanishes);
    CHECK(gc.forms_match_system);
    // an inessential arrangement can arise from special coefficients only
    if (gc.essential) {
      CHECK(gc.all_pass());
      GalePair back = dualize_master_to_poly(gp.master);
      CHECK(check_gale_pair(back).all_pass());
      CHECK(lattice_equal(back.poly.support().matrix(), gp.ordered_support().matrix()));
      CHECK(kouchnirenko_bound(back.poly.support()) == kouchnirenko_bound(s.support()));
    }
    // the monomials satisfy every weight relation
    RatVector x{random_rational(rng, 1, 5), random_rational(rng, 1, 5)};
    RatVector z = evaluate_phi(gp.ordered_support(), x);
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(monomial_value(gp.master.weights().matrix().row_vector(j), z) == 1);
  }
  CHECK(done >= 20);
}
