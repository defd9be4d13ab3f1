#include "galedual/galecore.hpp"

#include <algorithm>

#include "galedual/error.hpp"
#include "galedual/linalg.hpp"

namespace galedual {

ExponentMatrix GalePair::ordered_support() const {
  return ExponentMatrix(poly.dims(), poly.support().matrix().select_cols(form_column));
}

namespace {

Integer index_or_zero(const IntMatrix& m) {
  if (m.rows() == 0 || rank(m) != m.rows()) return 0;
  return saturation_index(m);
}

// Index of the lattice generated by the support columns in Z^{m+n}.
Integer support_index(const IntMatrix& w) {
  if (rank(w) != w.rows()) return 0;
  return index_or_zero(lattice_basis(w.transpose()));
}

}  // namespace

GalePair dualize_poly_to_master(const SparseSystem& s, const DualizeOptions& opts) {
  const Dims d = s.dims();
  if (d.l == 0)
    throw Error(ErrorCode::NoPivot,
                "need l > 0: the support must have more nonzero monomials than variables");
  const Integer idx = support_index(s.support().matrix());
  if (idx != 1 && !opts.allow_nonprimitive) {
    if (idx == 0) throw NotPrimitiveError("support does not span the lattice", idx);
    throw NotPrimitiveError("support is not primitive (index " + idx.get_str() + ")", idx);
  }

  DiagonalizedSystem diag = diagonalize(s, opts.pivots);
  GalePair gp;
  gp.poly = s;
  gp.form_column = diag.pivots;
  gp.form_column.insert(gp.form_column.end(), diag.free_columns.begin(), diag.free_columns.end());

  const std::size_t dim = d.arrangement_dim();
  std::vector<AffineForm> forms = diag.rhs;
  for (std::size_t k = 0; k < dim; ++k) {
    AffineForm y{0, RatVector(dim, 0)};
    y.coeffs[k] = 1;
    forms.push_back(std::move(y));
  }
  for (auto f : diag.free_columns) gp.variable_sources.push_back(s.monomial_string(f));

  // Lambda_i(z) = z_i - p_i(z_{n+1}, ..., z_{l+m+n})
  gp.linear_forms = RatMatrix(d.n, d.total() + 1);
  for (std::size_t i = 0; i < d.n; ++i) {
    gp.linear_forms(i, 0) = -diag.rhs[i].constant;
    gp.linear_forms(i, i + 1) = 1;
    for (std::size_t k = 0; k < dim; ++k) gp.linear_forms(i, d.n + k + 1) = -diag.rhs[i].coeffs[k];
  }

  IntMatrix ordered = s.support().matrix().select_cols(gp.form_column);
  IntMatrix weights = reduced_basis(kernel_basis(ordered));
  gp.master = MasterSystem(Arrangement(dim, std::move(forms)), std::move(weights),
                           default_names(dim, dim <= 3 ? "s" : "y"));
  return gp;
}

GalePair dualize_master_to_poly(const MasterSystem& ms, const DualizeOptions& opts) {
  const Dims d = ms.dims();
  if (d.n == 0)
    throw Error(ErrorCode::InvalidInput,
                "need n > 0: the arrangement must have more forms than dimensions");
  if (!is_essential(ms.arrangement()))
    throw Error(ErrorCode::NotEssential, "arrangement is not essential");
  IntMatrix b = ms.weights().matrix();
  const Integer idx = saturation_index(b);
  if (idx != 1) {
    if (!opts.allow_nonprimitive)
      throw NotPrimitiveError("weights are not primitive (index " + idx.get_str() + ")", idx);
    b = saturation(b);
  }
  ExponentMatrix w = quotient_images(WeightBasis(d, b));

  // relations among 1, p_1, ..., p_{l+m+n}
  RatMatrix lambda = left_kernel(ms.arrangement().affine_matrix());
  if (lambda.rows() != d.n)
    throw Error(ErrorCode::NotEssential, "linear relations do not have the expected count");

  GalePair gp;
  gp.master = ms;
  gp.linear_forms = lambda;
  for (std::size_t i = 0; i < d.total(); ++i) gp.form_column.push_back(i);
  gp.poly = SparseSystem(w, lambda, default_names(d.torus_dim(), "x"));
  gp.variable_sources.assign(d.arrangement_dim(), "");
  return gp;
}

bool GaleCheck::real_isomorphism_possible() const {
  auto odd = [](const Integer& v) { return v != 0 && mpz_odd_p(v.get_mpz_t()); };
  return odd(support_index) && odd(weight_index) && annihilates && pullback_vanishes &&
         forms_match_system && essential && dims_consistent;
}

bool GaleCheck::all_pass() const { return failures().empty(); }

std::vector<std::string> GaleCheck::failures() const {
  std::vector<std::string> f;
  if (!dims_consistent) f.push_back("dimension counts are inconsistent");
  if (!support_primitive())
    f.push_back("support is not primitive (saturation index " + support_index.get_str() + ")");
  if (!weights_primitive())
    f.push_back("weights are not primitive (saturation index " + weight_index.get_str() + ")");
  if (!annihilates) f.push_back("support does not annihilate the weights");
  if (!pullback_vanishes) f.push_back("linear forms do not vanish on the arrangement parametrization");
  if (!forms_match_system) f.push_back("linear forms do not define the polynomial system");
  if (!essential) f.push_back("arrangement is not essential");
  return f;
}

GaleCheck check_gale_pair(const GalePair& gp) {
  GaleCheck r;
  const Dims pd = gp.poly.dims();
  const Dims md = gp.master.dims();
  const std::size_t total = pd.total();
  r.dims_consistent = pd == md && gp.form_column.size() == total &&
                      gp.linear_forms.rows() == pd.n && gp.linear_forms.cols() == total + 1;
  {
    auto sorted = gp.form_column;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      r.dims_consistent = r.dims_consistent && sorted[i] == i;
  }
  r.support_index = support_index(gp.poly.support().matrix());
  r.weight_index = index_or_zero(gp.master.weights().matrix());
  r.essential = is_essential(gp.master.arrangement());
  r.distinct_columns = gp.poly.support().has_distinct_columns();
  if (!r.dims_consistent) return r;

  const IntMatrix w = gp.poly.support().matrix().select_cols(gp.form_column);
  r.annihilates = (w * gp.master.weights().matrix().transpose()).is_zero();

  // Lambda_j(1, p_1(y), ..., p_k(y)) as a degree-1 form must be zero
  const RatMatrix affine = gp.master.arrangement().affine_matrix();
  r.pullback_vanishes = (gp.linear_forms * affine).is_zero();

  // polynomial rows, reindexed by form, must span the same space as Lambda
  RatMatrix rows(pd.n, total + 1);
  for (std::size_t i = 0; i < pd.n; ++i) {
    rows(i, 0) = gp.poly.coefficients()(i, 0);
    for (std::size_t k = 0; k < total; ++k)
      rows(i, k + 1) = gp.poly.coefficients()(i, gp.form_column[k] + 1);
  }
  RatMatrix both(2 * pd.n, total + 1);
  for (std::size_t i = 0; i < pd.n; ++i)
    for (std::size_t k = 0; k <= total; ++k) {
      both(i, k) = rows(i, k);
      both(pd.n + i, k) = gp.linear_forms(i, k);
    }
  r.forms_match_system = rank(gp.linear_forms) == pd.n && rank(both) == pd.n;
  return r;
}

}  // namespace galedual
