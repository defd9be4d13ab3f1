#include "univariate.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "galedual/polynomial.hpp"

namespace galedual::detail {

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return *this;
  std::vector<Rational> m = c_;
  const Rational inv = 1 / c_.back();
  for (auto& v : m) v *= inv;
  return UniPoly(std::move(m));
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

std::complex<long double> UniPoly::evaluate(std::complex<long double> x) const {
  std::complex<long double> v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + to_long_double(*it);
  return v;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> r = a.c_;
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational t = r[static_cast<std::size_t>(k + db)] / b.lead();
    q[static_cast<std::size_t>(k)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= t * b.c_[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p) {
  std::vector<SquarefreeFactor> out;
  if (p.degree() < 1) return out;
  const UniPoly dp = p.derivative();
  const UniPoly b = gcd(p, dp);
  UniPoly c = divmod(p, b).first;
  UniPoly d = divmod(dp, b).first - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    UniPoly a = gcd(c, d);
    c = divmod(c, a).first;
    d = divmod(d, a).first - c.derivative();
    if (a.degree() > 0) out.push_back({a, i});
  }
  return out;
}

int count_real_roots(const UniPoly& p) {
  if (p.degree() < 1) return 0;
  std::vector<UniPoly> seq{p, p.derivative()};
  while (seq.back().degree() > 0) {
    UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(UniPoly() - r);
  }
  auto changes = [&](bool at_plus_inf) {
    int count = 0, last = 0;
    for (const auto& s : seq) {
      int sign = sgn(s.lead());
      if (!at_plus_inf && s.degree() % 2 == 1) sign = -sign;
      if (sign == 0) continue;
      if (last != 0 && sign != last) ++count;
      last = sign;
    }
    return count;
  };
  return changes(false) - changes(true);
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  // Horner on the Newton form
  std::vector<Rational> c{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<Rational> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * xs[k];
    }
    next[0] += dd[k];
    c = std::move(next);
  }
  return UniPoly(std::move(c));
}

namespace {

std::complex<long double> horner(const std::vector<std::complex<long double>>& c,
                                 std::complex<long double> x,
                                 std::complex<long double>* deriv) {
  std::complex<long double> v = 0, d = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * x + v;
    v = v * x + *it;
  }
  if (deriv) *deriv = d;
  return v;
}

// Parlett-Reinsch balancing by powers of two; eigenvalues are unchanged.
void balance(Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  bool done = false;
  for (int sweep = 0; sweep < 100 && !done; ++sweep) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0, col = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        col += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (col == 0 || r == 0) continue;
      double f = 1, g = r / 2, s = col + r;
      while (col < g) {
        f *= 2;
        col *= 4;
      }
      g = r * 2;
      while (col > g) {
        f /= 2;
        col /= 4;
      }
      if ((col + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

// Simultaneous refinement of all roots (Aberth-Ehrlich).
void aberth(const std::vector<std::complex<long double>>& c, std::vector<std::complex<long double>>& z) {
  const std::size_t n = z.size();
  for (int it = 0; it < 200; ++it) {
    long double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      std::complex<long double> d;
      std::complex<long double> v = horner(c, z[k], &d);
      if (v == std::complex<long double>(0)) continue;
      if (d == std::complex<long double>(0)) continue;
      std::complex<long double> w = v / d, sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k && z[j] != z[k]) sum += 1.0L / (z[k] - z[j]);
      std::complex<long double> step = w / (1.0L - w * sum);
      if (!std::isfinite(std::abs(step))) continue;
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[k])));
    }
    if (worst <= 1e-18L) break;
  }
}

}  // namespace

std::vector<std::complex<long double>> numeric_roots(
    const std::vector<std::complex<long double>>& coeffs_in) {
  std::vector<std::complex<long double>> c = coeffs_in;
  while (!c.empty() && c.back() == std::complex<long double>(0)) c.pop_back();
  std::vector<std::complex<long double>> roots;
  if (c.size() < 2) return roots;
  // zero roots are exact
  std::size_t zeros = 0;
  while (zeros < c.size() && c[zeros] == std::complex<long double>(0)) ++zeros;
  roots.assign(zeros, 0);
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
  const std::size_t deg = c.size() - 1;
  if (deg == 0) return roots;
  if (deg == 1) {
    roots.push_back(-c[0] / c[1]);
    return roots;
  }
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(deg),
                                                 static_cast<Eigen::Index>(deg));
  for (std::size_t i = 1; i < deg; ++i)
    comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) {
    std::complex<long double> v = c[i] / c[deg];
    comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(deg - 1)) =
        -std::complex<double>(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  }
  balance(comp);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<std::complex<long double>> z;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    std::complex<double> e = es.eigenvalues()[i];
    z.emplace_back(e.real(), e.imag());
  }
  aberth(c, z);
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

std::vector<std::complex<long double>> numeric_roots(const UniPoly& p) {
  std::vector<std::complex<long double>> c;
  for (const auto& v : p.coeffs()) c.emplace_back(to_long_double(v), 0.0L);
  return numeric_roots(c);
}

}  // namespace galedual::detail
