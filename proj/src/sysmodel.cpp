#include "galedual/sysmodel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "galedual/error.hpp"
#include "galedual/linalg.hpp"

namespace galedual {

std::vector<std::string> default_names(std::size_t count, const std::string& prefix) {
  static const std::vector<std::string> torus{"x", "y", "z"};
  static const std::vector<std::string> plane{"s", "t", "u"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) {
    if (count <= 3 && prefix == "x")
      names.push_back(torus[i]);
    else if (count <= 3 && prefix == "s")
      names.push_back(plane[i]);
    else
      names.push_back(prefix + std::to_string(i + 1));
  }
  return names;
}

// ---------------------------------------------------------------- sparse

SparseSystem::SparseSystem(ExponentMatrix support, RatMatrix coefficients,
                           std::vector<std::string> variables)
    : support_(std::move(support)),
      coefficients_(std::move(coefficients)),
      variables_(std::move(variables)) {
  const Dims& d = support_.dims();
  if (coefficients_.rows() != d.n || coefficients_.cols() != d.total() + 1)
    throw Error(ErrorCode::InvalidInput, "coefficient matrix must be n x (l+m+n+1) for dims " +
                                             to_string(d));
  if (d.n == 0) throw Error(ErrorCode::InvalidInput, "system has no polynomials");
  if (variables_.empty()) variables_ = default_names(d.torus_dim(), "x");
  if (variables_.size() != d.torus_dim())
    throw Error(ErrorCode::InvalidInput, "variable count does not match the support dimension");
  if (rank(coefficients_) != d.n)
    throw Error(ErrorCode::DependentRows, "coefficient rows are linearly dependent");
}

SparseSystem SparseSystem::from_columns(IntMatrix support, RatMatrix coefficients,
                                        std::vector<std::string> variables) {
  const std::size_t nvars = support.rows();
  const std::size_t total = support.cols();
  const std::size_t n = coefficients.rows();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "system has no polynomials");
  if (nvars < n)
    throw Error(ErrorCode::InvalidInput, "more polynomials than variables (not a complete intersection)");
  if (total < nvars)
    throw Error(ErrorCode::InvalidInput,
                "support needs at least as many nonzero exponents as variables");
  Dims d{total - nvars, nvars - n, n};
  return SparseSystem(ExponentMatrix(d, std::move(support)), std::move(coefficients),
                      std::move(variables));
}

Polynomial SparseSystem::polynomial(std::size_t i) const {
  const std::size_t nv = num_variables();
  Polynomial p(nv);
  p.add_term(Exponent(nv, 0), coefficients_(i, 0));
  for (std::size_t j = 0; j < support_.size(); ++j) {
    Exponent e(nv);
    for (std::size_t k = 0; k < nv; ++k) e[k] = support_.matrix()(k, j).get_si();
    p.add_term(e, coefficients_(i, j + 1));
  }
  return p;
}

std::string SparseSystem::monomial_string(std::size_t column) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < num_variables(); ++k) {
    const Integer& a = support_.matrix()(k, column);
    if (a == 0) continue;
    if (!first) os << '*';
    os << variables_[k];
    if (a != 1) os << '^' << a;
    first = false;
  }
  return first ? "1" : os.str();
}

SparseSystem normalize_support(const RawSparseSystem& raw) {
  const std::size_t nvars = raw.exponents.rows();
  const std::size_t k = raw.exponents.cols();
  if (raw.coefficients.cols() != k)
    throw Error(ErrorCode::InvalidInput, "coefficient columns must match exponent columns");
  // merge repeated exponents, keeping first-appearance order
  std::vector<IntVector> exps;
  std::vector<std::vector<Rational>> cols;
  std::map<IntVector, std::size_t> where;
  for (std::size_t j = 0; j < k; ++j) {
    IntVector e = raw.exponents.col_vector(j);
    auto [it, inserted] = where.emplace(e, exps.size());
    if (inserted) {
      exps.push_back(e);
      cols.push_back(raw.coefficients.col_vector(j));
    } else {
      auto& c = cols[it->second];
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += raw.coefficients(i, j);
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < exps.size(); ++j)
    if (std::any_of(cols[j].begin(), cols[j].end(), [](const Rational& v) { return v != 0; }))
      keep.push_back(j);
  if (keep.empty()) throw Error(ErrorCode::InvalidInput, "system has no monomials");
  for (std::size_t i = 0; i < raw.coefficients.rows(); ++i)
    if (std::all_of(keep.begin(), keep.end(), [&](std::size_t j) { return cols[j][i] == 0; }))
      throw Error(ErrorCode::InvalidInput, "polynomial " + std::to_string(i + 1) + " is zero");

  const IntVector zero(nvars, 0);
  IntVector shift = zero;
  auto has_zero = std::find_if(keep.begin(), keep.end(), [&](std::size_t j) { return exps[j] == zero; });
  std::size_t origin;
  if (has_zero != keep.end()) {
    origin = *has_zero;
  } else {
    origin = *std::min_element(keep.begin(), keep.end(),
                               [&](std::size_t a, std::size_t b) { return exps[a] < exps[b]; });
    shift = exps[origin];
  }

  const std::size_t n = raw.coefficients.rows();
  IntMatrix support(nvars, keep.size() - 1);
  RatMatrix coeffs(n, keep.size());
  for (std::size_t i = 0; i < n; ++i) coeffs(i, 0) = cols[origin][i];
  std::size_t c = 0;
  for (std::size_t j : keep) {
    if (j == origin) continue;
    for (std::size_t r = 0; r < nvars; ++r) support(r, c) = exps[j][r] - shift[r];
    for (std::size_t i = 0; i < n; ++i) coeffs(i, c + 1) = cols[j][i];
    ++c;
  }
  return SparseSystem::from_columns(std::move(support), std::move(coeffs), raw.variables);
}

// ----------------------------------------------------------- arrangement

Rational AffineForm::evaluate(const RatVector& y) const {
  Rational v = constant;
  for (std::size_t k = 0; k < coeffs.size(); ++k) v += coeffs[k] * y.at(k);
  return v;
}

std::complex<long double> AffineForm::evaluate(const ComplexPoint& y) const {
  std::complex<long double> v = to_long_double(constant);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) v += to_long_double(coeffs[k]) * y.at(k);
  return v;
}

Polynomial AffineForm::as_polynomial() const {
  Polynomial p = Polynomial::constant(coeffs.size(), constant);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    p = p + Polynomial::variable(coeffs.size(), k).scaled(coeffs[k]);
  return p;
}

std::string AffineForm::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& var) {
    if (c == 0) return;
    Rational a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? "-" : "+");
    if (var.empty() || a != 1) os << rational_string(a);
    if (!var.empty() && a != 1) os << '*';
    os << var;
    first = false;
  };
  for (std::size_t k = 0; k < coeffs.size(); ++k) emit(coeffs[k], names.at(k));
  emit(constant, "");
  return first ? "0" : os.str();
}

bool AffineForm::is_zero() const {
  return constant == 0 &&
         std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

Arrangement::Arrangement(std::size_t ambient_dim, std::vector<AffineForm> forms)
    : ambient_dim_(ambient_dim), forms_(std::move(forms)) {
  for (std::size_t i = 0; i < forms_.size(); ++i)
    if (forms_[i].coeffs.size() != ambient_dim_)
      throw Error(ErrorCode::InvalidInput,
                  "form " + std::to_string(i + 1) + " has the wrong number of coefficients");
}

RatMatrix Arrangement::affine_matrix() const {
  RatMatrix m(forms_.size() + 1, ambient_dim_ + 1);
  m(0, 0) = 1;
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    m(i + 1, 0) = forms_[i].constant;
    for (std::size_t k = 0; k < ambient_dim_; ++k) m(i + 1, k + 1) = forms_[i].coeffs[k];
  }
  return m;
}

bool Arrangement::pairwise_nonproportional() const {
  RatMatrix a = affine_matrix();
  for (std::size_t i = 1; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.rows(); ++j) {
      std::size_t idx[] = {i, j};
      if (rank(a.select_rows(idx)) < 2) return false;
    }
  return true;
}

bool is_essential(const Arrangement& a) {
  return rank(a.affine_matrix()) == a.ambient_dim() + 1;
}

// ---------------------------------------------------------------- master

namespace {

Dims master_dims(const Arrangement& a, const IntMatrix& w) {
  const std::size_t l = w.rows();
  if (a.ambient_dim() < l)
    throw Error(ErrorCode::InvalidInput, "more weights than arrangement dimensions");
  if (a.size() < a.ambient_dim())
    throw Error(ErrorCode::InvalidInput, "fewer forms than arrangement dimensions");
  if (w.cols() != a.size())
    throw Error(ErrorCode::InvalidInput, "weight length must equal the number of forms");
  return Dims{l, a.ambient_dim() - l, a.size() - a.ambient_dim()};
}

}  // namespace

MasterSystem::MasterSystem(Arrangement arrangement, IntMatrix weights,
                           std::vector<std::string> variables)
    : arrangement_(std::move(arrangement)), variables_(std::move(variables)) {
  Dims d = master_dims(arrangement_, weights);
  if (d.l == 0) throw Error(ErrorCode::InvalidInput, "master system has no weights");
  weights_ = WeightBasis(d, std::move(weights));
  if (variables_.empty()) variables_ = default_names(arrangement_.ambient_dim(), "s");
  if (variables_.size() != arrangement_.ambient_dim())
    throw Error(ErrorCode::InvalidInput, "variable count does not match the arrangement dimension");
}

std::string MasterSystem::master_function_string(std::size_t j) const {
  auto side = [&](bool positive) {
    std::ostringstream os;
    std::size_t factors = 0;
    for (std::size_t i = 0; i < arrangement_.size(); ++i) {
      Integer b = weights_.matrix()(j, i);
      if (positive ? b <= 0 : b >= 0) continue;
      Integer e = abs(b);
      std::string f = arrangement_.forms()[i].to_string(variables_);
      bool atom = f.find_first_of("+-*") == std::string::npos ||
                  (f.size() > 1 && f[0] == '-' && f.find_first_of("+-*", 1) == std::string::npos);
      if (factors++) os << '*';
      os << (atom ? f : "(" + f + ")");
      if (e != 1) os << '^' << e;
    }
    return std::pair{os.str(), factors};
  };
  auto [num, nf] = side(true);
  auto [den, df] = side(false);
  if (nf == 0) num = "1";
  if (df == 0) return num;
  return num + "/" + (df > 1 ? "(" + den + ")" : den);
}

Polynomial ClearedBinomial::expand(const Arrangement& a) const {
  const std::size_t nv = a.ambient_dim();
  Polynomial p = Polynomial::constant(nv, 1);
  Polynomial q = Polynomial::constant(nv, 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (plus[i]) p = p * a.forms()[i].as_polynomial().pow(static_cast<unsigned>(plus[i]));
    if (minus[i]) q = q * a.forms()[i].as_polynomial().pow(static_cast<unsigned>(minus[i]));
  }
  return p - q;
}

IntVector ClearedBinomial::weight() const {
  IntVector b(plus.size());
  for (std::size_t i = 0; i < plus.size(); ++i)
    b[i] = Integer(plus[i]) - Integer(minus[i]);
  return b;
}

ClearedBinomial clear_denominators(const MasterSystem& ms, std::size_t j) {
  if (j >= ms.weights().size())
    throw Error(ErrorCode::InvalidInput, "weight index out of range");
  const std::size_t k = ms.arrangement().size();
  ClearedBinomial c{std::vector<unsigned long>(k, 0), std::vector<unsigned long>(k, 0)};
  for (std::size_t i = 0; i < k; ++i) {
    const Integer& b = ms.weights().matrix()(j, i);
    if (b > 0) c.plus[i] = b.get_ui();
    if (b < 0) c.minus[i] = Integer(-b).get_ui();
  }
  return c;
}

// ------------------------------------------------------ absorb constants

namespace {

// Pairwise coprime set of integers > 1 whose products give every input.
std::vector<Integer> coprime_base(std::vector<Integer> values) {
  std::vector<Integer> base;
  for (auto& v : values)
    if (v > 1) base.push_back(v);
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (std::size_t i = 0; i < base.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        Integer g = gcd(base[i], base[j]);
        if (g == 1) continue;
        Integer a = base[i] / g, b = base[j] / g;
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        for (Integer* v : {&a, &b, &g})
          if (*v > 1) base.push_back(*v);
        changed = true;
      }
  }
  return base;
}

// Exponent of each base element in v (v must factor completely).
std::vector<Integer> factor_over(const std::vector<Integer>& base, Integer v) {
  std::vector<Integer> e(base.size(), 0);
  for (std::size_t i = 0; i < base.size(); ++i)
    while (mpz_divisible_p(v.get_mpz_t(), base[i].get_mpz_t())) {
      v /= base[i];
      ++e[i];
    }
  if (v != 1) throw std::logic_error("coprime base does not cover value");
  return e;
}

// Integer solution x of B x = rhs via the Smith form; nullopt if none.
std::optional<IntVector> solve_integer(const SmithForm& s, const IntVector& rhs,
                                       std::optional<unsigned> modulus) {
  const IntMatrix& u = s.left;
  const std::size_t rows = u.rows(), cols = s.right.rows();
  IntVector ur(rows, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < rows; ++k) ur[i] += u(i, k) * rhs[k];
  IntVector y(cols, 0);
  for (std::size_t k = 0; k < rows; ++k) {
    const Integer d = k < s.rank ? s.diagonal(k, k) : Integer(0);
    if (modulus) {
      Integer rem = ur[k] % *modulus;
      Integer dm = d % *modulus;
      if (dm == 0) {
        if (rem != 0) return std::nullopt;
      } else {
        // modulus 2: an odd d acts as 1
        y[k] = rem;
      }
    } else {
      if (d == 0) {
        if (ur[k] != 0) return std::nullopt;
      } else {
        if (!mpz_divisible_p(ur[k].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
        y[k] = ur[k] / d;
      }
    }
  }
  IntVector x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t k = 0; k < cols; ++k) x[i] += s.right(i, k) * y[k];
  if (modulus)
    for (auto& v : x) {
      v %= *modulus;
      if (v < 0) v += *modulus;
    }
  return x;
}

}  // namespace

std::vector<Rational> absorb_scalings(const MasterSystem& ms, const std::vector<Rational>& targets) {
  const IntMatrix& b = ms.weights().matrix();
  const std::size_t l = b.rows(), k = b.cols();
  if (targets.size() != l)
    throw Error(ErrorCode::InvalidInput, "need one target per weight");
  std::vector<Rational> want(l);
  std::vector<Integer> values;
  for (std::size_t j = 0; j < l; ++j) {
    if (targets[j] == 0) throw Error(ErrorCode::InvalidInput, "targets must be nonzero");
    want[j] = 1 / targets[j];
    values.push_back(abs(want[j].get_num()));
    values.push_back(want[j].get_den());
  }
  const std::vector<Integer> base = coprime_base(values);
  const SmithForm s = snf(b);

  std::vector<Rational> lambda(k, 1);
  for (std::size_t q = 0; q < base.size(); ++q) {
    IntVector rhs(l);
    for (std::size_t j = 0; j < l; ++j) {
      Integer num = abs(want[j].get_num());
      Integer den = want[j].get_den();
      rhs[j] = factor_over(base, num)[q] - factor_over(base, den)[q];
    }
    auto x = solve_integer(s, rhs, std::nullopt);
    if (!x) throw Error(ErrorCode::NoRationalScaling, "no rational scaling absorbs the targets");
    for (std::size_t i = 0; i < k; ++i) {
      Integer e = (*x)[i];
      Rational f;
      mpz_pow_ui(f.get_num_mpz_t(), base[q].get_mpz_t(), Integer(abs(e)).get_ui());
      if (e < 0) f = 1 / f;
      lambda[i] *= f;
    }
  }
  IntVector signs(l);
  for (std::size_t j = 0; j < l; ++j) signs[j] = want[j] < 0 ? 1 : 0;
  auto x = solve_integer(s, signs, 2u);
  if (!x) throw Error(ErrorCode::NoRationalScaling, "no rational scaling absorbs the target signs");
  for (std::size_t i = 0; i < k; ++i)
    if ((*x)[i] != 0) lambda[i] = -lambda[i];
  return lambda;
}

MasterSystem absorb_constants(const MasterSystem& ms, const std::vector<Rational>& targets) {
  std::vector<Rational> lambda = absorb_scalings(ms, targets);
  std::vector<AffineForm> forms = ms.arrangement().forms();
  for (std::size_t i = 0; i < forms.size(); ++i) {
    forms[i].constant *= lambda[i];
    for (auto& c : forms[i].coeffs) c *= lambda[i];
  }
  return MasterSystem(Arrangement(ms.arrangement().ambient_dim(), std::move(forms)),
                      ms.weights().matrix(), ms.variables());
}

// ------------------------------------------------------------ evaluation

RatVector evaluate_phi(const ExponentMatrix& w, const RatVector& x) {
  const IntMatrix& m = w.matrix();
  if (x.size() != m.rows()) throw Error(ErrorCode::InvalidInput, "point has wrong dimension");
  for (const auto& v : x)
    if (v == 0) throw Error(ErrorCode::ZeroCoordinate, "point has a zero coordinate");
  Exponent e(m.rows());
  RatVector z(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t k = 0; k < m.rows(); ++k) e[k] = m(k, j).get_si();
    z[j] = Polynomial::monomial(e, 1).evaluate(x);
  }
  return z;
}

ComplexPoint evaluate_phi(const ExponentMatrix& w, const ComplexPoint& x) {
  const IntMatrix& m = w.matrix();
  if (x.size() != m.rows()) throw Error(ErrorCode::InvalidInput, "point has wrong dimension");
  for (const auto& v : x)
    if (v == std::complex<long double>(0))
      throw Error(ErrorCode::ZeroCoordinate, "point has a zero coordinate");
  ComplexPoint z(m.cols(), 1);
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t k = 0; k < m.rows(); ++k)
      if (m(k, j) != 0) z[j] *= std::pow(x[k], static_cast<int>(m(k, j).get_si()));
  return z;
}

RatVector evaluate_psi(const Arrangement& a, const RatVector& y) {
  RatVector z;
  for (const auto& f : a.forms()) z.push_back(f.evaluate(y));
  return z;
}

ComplexPoint evaluate_psi(const Arrangement& a, const ComplexPoint& y) {
  ComplexPoint z;
  for (const auto& f : a.forms()) z.push_back(f.evaluate(y));
  return z;
}

bool in_complement(const Arrangement& a, const RatVector& y) {
  for (const auto& f : a.forms())
    if (f.evaluate(y) == 0) return false;
  return true;
}

bool in_complement(const Arrangement& a, const ComplexPoint& y, long double tol) {
  for (const auto& f : a.forms())
    if (std::abs(f.evaluate(y)) <= tol) return false;
  return true;
}

std::complex<long double> master_value(const MasterSystem& ms, std::size_t j, const ComplexPoint& y) {
  std::complex<long double> v = 1;
  const auto& forms = ms.arrangement().forms();
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const Integer& b = ms.weights().matrix()(j, i);
    if (b != 0) v *= std::pow(forms[i].evaluate(y), static_cast<int>(b.get_si()));
  }
  return v;
}

// --------------------------------------------------------- diagonalize

DiagonalizedSystem diagonalize(const SparseSystem& s, std::optional<std::vector<std::size_t>> pivots) {
  const RatMatrix& c = s.coefficients();
  const std::size_t n = c.rows();
  const std::size_t total = s.support().size();
  std::vector<std::size_t> piv;
  if (pivots) {
    piv = *pivots;
    if (piv.size() != n) throw Error(ErrorCode::NoPivot, "need exactly one pivot per polynomial");
    for (auto p : piv)
      if (p >= total) throw Error(ErrorCode::NoPivot, "pivot column out of range");
  } else {
    // greedy over columns in order gives the lexicographically least basis
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < total && piv.size() < n; ++j) {
      cols = piv;
      cols.push_back(j + 1);
      if (rank(c.select_cols(cols)) == cols.size()) piv.push_back(j);
    }
  }
  std::vector<std::size_t> pcols;
  for (auto p : piv) pcols.push_back(p + 1);
  auto inv = inverse(c.select_cols(pcols));
  if (!inv || piv.size() != n)
    throw Error(ErrorCode::NoPivot, "no invertible coefficient block among the nonzero monomials");

  DiagonalizedSystem d;
  d.base = s;
  d.pivots = piv;
  for (std::size_t j = 0; j < total; ++j)
    if (std::find(piv.begin(), piv.end(), j) == piv.end()) d.free_columns.push_back(j);
  d.witness = std::move(*inv);
  d.transformed = d.witness * c;
  for (std::size_t i = 0; i < n; ++i) {
    AffineForm g;
    g.constant = -d.transformed(i, 0);
    for (auto f : d.free_columns) g.coeffs.push_back(-d.transformed(i, f + 1));
    d.rhs.push_back(std::move(g));
  }
  return d;
}

}  // namespace galedual
