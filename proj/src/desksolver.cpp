#include "galedual/desksolver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "galedual/error.hpp"
#include "galedual/linalg.hpp"
#include "univariate.hpp"

namespace galedual {

using detail::UniPoly;
using cld = std::complex<long double>;

std::string to_string(Location loc) {
  switch (loc) {
    case Location::Plane: return "plane";
    case Location::Torus: return "torus";
    case Location::Complement: return "complement";
    case Location::Excluded: return "excluded";
  }
  return "?";
}

std::vector<NumericSolution> SolutionSet::counted() const {
  std::vector<NumericSolution> out;
  for (const auto& s : solutions)
    if (s.location != Location::Excluded) out.push_back(s);
  return out;
}

std::size_t SolutionSet::count() const {
  std::size_t c = 0;
  for (const auto& s : solutions)
    if (s.location != Location::Excluded) c += static_cast<std::size_t>(s.multiplicity);
  return c;
}

std::size_t SolutionSet::real_count() const {
  std::size_t c = 0;
  for (const auto& s : solutions)
    if (s.location != Location::Excluded && s.is_real) c += static_cast<std::size_t>(s.multiplicity);
  return c;
}

std::size_t SolutionSet::excluded_count() const {
  std::size_t c = 0;
  for (const auto& s : solutions)
    if (s.location == Location::Excluded) ++c;
  return c;
}

namespace {

long double norm_inf(const std::vector<cld>& v) {
  long double m = 0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

// ------------------------------------------------------------ resultant

// Integer coefficient table: rows[j] holds the x-polynomial multiplying y^j.
struct IntTable {
  std::vector<std::vector<Integer>> rows;
  int deg_x = 0;
  int deg_y() const { return static_cast<int>(rows.size()) - 1; }
};

IntTable integer_table(const Polynomial& p) {
  Integer den = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IntTable t;
  t.rows.assign(static_cast<std::size_t>(std::max(0L, p.degree_in(1)) + 1), {});
  t.deg_x = static_cast<int>(std::max(0L, p.degree_in(0)));
  for (auto& r : t.rows) r.assign(static_cast<std::size_t>(t.deg_x + 1), 0);
  for (const auto& [e, c] : p.terms()) {
    Rational v = c * den;
    t.rows[static_cast<std::size_t>(e[1])][static_cast<std::size_t>(e[0])] = v.get_num();
  }
  return t;
}

Integer horner_int(const std::vector<Integer>& c, const Integer& x) {
  Integer v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

// Res_y(f, g) as a polynomial in x, by exact evaluation at integer nodes
// and interpolation.
UniPoly resultant_y(const Polynomial& f, const Polynomial& g) {
  const IntTable a = integer_table(f), b = integer_table(g);
  const int p = a.deg_y(), q = b.deg_y();
  const long bound = std::min<long>(static_cast<long>(a.deg_x) * q + static_cast<long>(b.deg_x) * p,
                                    f.total_degree() * g.total_degree());
  const std::size_t size = static_cast<std::size_t>(p + q);
  std::vector<Rational> xs, ys;
  for (long node = 0; node <= std::max(0L, bound); ++node) {
    const Integer x = node;
    IntMatrix s(size, size);
    std::vector<Integer> av(static_cast<std::size_t>(p + 1)), bv(static_cast<std::size_t>(q + 1));
    for (int j = 0; j <= p; ++j) av[static_cast<std::size_t>(j)] = horner_int(a.rows[static_cast<std::size_t>(j)], x);
    for (int j = 0; j <= q; ++j) bv[static_cast<std::size_t>(j)] = horner_int(b.rows[static_cast<std::size_t>(j)], x);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j <= p; ++j)
        s(static_cast<std::size_t>(i), static_cast<std::size_t>(i + j)) = av[static_cast<std::size_t>(p - j)];
    for (int i = 0; i < p; ++i)
      for (int j = 0; j <= q; ++j)
        s(static_cast<std::size_t>(q + i), static_cast<std::size_t>(i + j)) = bv[static_cast<std::size_t>(q - j)];
    xs.emplace_back(x);
    ys.emplace_back(determinant(std::move(s)));
  }
  return detail::interpolate(xs, ys);
}

UniPoly coefficient_in_y(const Polynomial& f, long j) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(0L, f.degree_in(0)) + 1));
  for (const auto& [e, v] : f.terms())
    if (e[1] == j) c[static_cast<std::size_t>(e[0])] = v;
  return UniPoly(std::move(c));
}

// gcd of the coefficients of f as a polynomial in y
UniPoly content_in_x(const Polynomial& f) {
  UniPoly c;
  for (long j = 0; j <= f.degree_in(1); ++j) {
    UniPoly a = coefficient_in_y(f, j);
    if (a.is_zero()) continue;
    c = c.is_zero() ? a.monic() : gcd(c, a);
  }
  return c;
}

std::vector<cld> fiber(const Polynomial& f, cld x0) {
  std::vector<cld> c(static_cast<std::size_t>(std::max(0L, f.degree_in(1)) + 1), 0);
  for (const auto& [e, v] : f.terms())
    c[static_cast<std::size_t>(e[1])] += to_long_double(v) * std::pow(x0, static_cast<int>(e[0]));
  return c;
}

// True when f(x0, y) is zero up to rounding in the coefficients.
bool fiber_vanishes(const Polynomial& f, const std::vector<cld>& c, cld x0) {
  long double scale = 0;
  for (const auto& [e, v] : f.terms())
    scale = std::max(scale, std::abs(to_long_double(v)) * std::pow(std::abs(x0), static_cast<long double>(e[0])));
  return norm_inf(c) <= 1e-9L * scale;
}

// |p(y)| relative to the size of its terms
long double relative_value(const std::vector<cld>& c, cld y) {
  cld v = 0;
  long double scale = 0, ay = std::abs(y), pw = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    scale += std::abs(c[i]) * pw;
    pw *= ay;
  }
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * y + *it;
  return scale == 0 ? 0 : std::abs(v) / scale;
}

// ------------------------------------------------------------- changes

struct Frame {
  enum Kind { Identity, Swap, Shear } kind = Identity;
  Rational shear = 0;
  std::string label;

  Polynomial apply(const Polynomial& f) const {
    if (kind == Identity) return f;
    Polynomial out(2);
    if (kind == Swap) {
      for (const auto& [e, c] : f.terms()) out.add_term({e[1], e[0]}, c);
      return out;
    }
    // f(u - c v, v)
    const Polynomial u = Polynomial::variable(2, 0) - Polynomial::variable(2, 1).scaled(shear);
    for (const auto& [e, c] : f.terms())
      out = out + u.pow(static_cast<unsigned>(e[0])) * Polynomial::monomial({0, e[1]}, c);
    return out;
  }

  std::vector<cld> back(cld a, cld b) const {
    if (kind == Swap) return {b, a};
    if (kind == Shear) return {a - to_long_double(shear) * b, b};
    return {a, b};
  }
};

struct RawPoint {
  std::vector<cld> point;
  int multiplicity;
  bool is_real;
};

struct AttemptResult {
  std::vector<RawPoint> points;
  bool generic = true;
  std::vector<std::string> warnings;
};

// Resultant roots are only as accurate as long double evaluation of a
// high-degree factor allows; Newton on (f, g) sharpens the point afterwards
// and the residual on the defining system is what gets reported.
constexpr long double kCommonRootTol = 1e-4L;
constexpr long double kSecondRootTol = 1e-10L;

AttemptResult run_attempt(const Polynomial& f0, const Polynomial& g0, const Frame& frame,
                          const SolverConfig& cfg) {
  AttemptResult out;
  const Polynomial f = frame.apply(f0), g = frame.apply(g0);
  if (f.degree_in(1) <= 0 && g.degree_in(1) <= 0) {
    out.generic = false;
    return out;
  }
  const UniPoly res = resultant_y(f, g);
  if (res.is_zero())
    throw Error(ErrorCode::CommonComponent, "the polynomials share a common component");
  const UniPoly lf = coefficient_in_y(f, f.degree_in(1));
  const UniPoly lg = coefficient_in_y(g, g.degree_in(1));

  for (const auto& [factor, mult] : detail::squarefree_decomposition(res)) {
    std::vector<cld> roots = detail::numeric_roots(factor);
    const int nreal = detail::count_real_roots(factor);
    std::vector<std::size_t> order(roots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(roots[a].imag()) / std::max(1.0L, std::abs(roots[a])) <
             std::abs(roots[b].imag()) / std::max(1.0L, std::abs(roots[b]));
    });
    std::vector<bool> real(roots.size(), false);
    for (int i = 0; i < nreal && i < static_cast<int>(order.size()); ++i) {
      real[order[static_cast<std::size_t>(i)]] = true;
      roots[order[static_cast<std::size_t>(i)]] = roots[order[static_cast<std::size_t>(i)]].real();
    }

    for (std::size_t r = 0; r < roots.size(); ++r) {
      const cld x0 = roots[r];
      const std::vector<cld> fy = fiber(f, x0), gy = fiber(g, x0);
      const bool f_vanishes = fiber_vanishes(f, fy, x0), g_vanishes = fiber_vanishes(g, gy, x0);
      std::vector<cld> cands;
      if (!f_vanishes) cands = detail::numeric_roots(fy);
      if (!g_vanishes)
        for (const auto& c : detail::numeric_roots(gy)) cands.push_back(c);
      auto score = [&](cld y) {
        return (f_vanishes ? 0 : relative_value(fy, y)) + (g_vanishes ? 0 : relative_value(gy, y));
      };
      std::size_t best = cands.size();
      for (std::size_t i = 0; i < cands.size(); ++i)
        if (best == cands.size() || score(cands[i]) < score(cands[best])) best = i;

      const long double lead_scale = std::max(1.0L, std::pow(std::abs(x0), 1.0L * std::max(lf.degree(), lg.degree())));
      const bool at_infinity =
          std::abs(lf.evaluate(x0)) <= 1e-9L * lead_scale && std::abs(lg.evaluate(x0)) <= 1e-9L * lead_scale;
      if (best == cands.size() || score(cands[best]) > kCommonRootTol) {
        std::ostringstream os;
        os << "resultant root " << static_cast<double>(x0.real()) << (x0.imag() < 0 ? "" : "+")
           << static_cast<double>(x0.imag()) << "i has no finite common root"
           << (at_infinity ? " (solution at infinity)" : "");
        out.warnings.push_back(os.str());
        continue;
      }
      cld y0 = cands[best];
      const long double yscale = std::max(1.0L, std::abs(y0));
      for (std::size_t i = 0; i < cands.size(); ++i) {
        if (std::abs(cands[i] - y0) <= 1e-5L * yscale) continue;
        const long double sc = score(cands[i]);
        if (sc < kCommonRootTol && sc < std::max(kSecondRootTol, 1e3L * score(cands[best]))) out.generic = false;
      }
      if (at_infinity) out.generic = false;
      if (real[r]) y0 = y0.real();
      out.points.push_back({frame.back(x0, y0), mult, static_cast<bool>(real[r])});
    }
  }
  (void)cfg;
  return out;
}

struct Polished {
  std::vector<cld> point;
  bool converged;
};

// Newton on (f, g); keeps the start if the iteration wanders off.
Polished newton(const Polynomial& f, const Polynomial& g, std::vector<cld> z, int max_iter) {
  const Polynomial fx = f.derivative(0), fy = f.derivative(1);
  const Polynomial gx = g.derivative(0), gy = g.derivative(1);
  const std::vector<cld> start = z;
  auto resid = [&](const std::vector<cld>& p) {
    return std::max(std::abs(f.evaluate(p)), std::abs(g.evaluate(p)));
  };
  long double r = resid(z);
  bool converged = false;
  for (int it = 0; it < max_iter; ++it) {
    const cld a = fx.evaluate(z), b = fy.evaluate(z), c = gx.evaluate(z), d = gy.evaluate(z);
    const cld det = a * d - b * c;
    if (std::abs(det) == 0) break;
    const cld fv = f.evaluate(z), gv = g.evaluate(z);
    const cld dx = (d * fv - b * gv) / det;
    const cld dy = (a * gv - c * fv) / det;
    std::vector<cld> next{z[0] - dx, z[1] - dy};
    const long double rn = resid(next);
    if (!std::isfinite(rn)) break;
    const long double step = std::max(std::abs(dx), std::abs(dy));
    if (rn > r && it > 2) {
      converged = step <= 1e-12L * std::max(1.0L, norm_inf(z));
      break;
    }
    z = std::move(next);
    r = rn;
    if (step <= 1e-17L * std::max(1.0L, norm_inf(z)) || r == 0) {
      converged = true;
      break;
    }
    if (step <= 1e-12L * std::max(1.0L, norm_inf(z))) converged = true;
  }
  long double moved = std::max(std::abs(z[0] - start[0]), std::abs(z[1] - start[1]));
  if (moved > 1e-4L * std::max(1.0L, norm_inf(start))) return {start, false};
  return {z, converged};
}

std::vector<std::complex<double>> to_double(const std::vector<cld>& z) {
  std::vector<std::complex<double>> out;
  for (const auto& v : z) out.emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  return out;
}

Rational random_shear(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(2, 7), sign(0, 1);
  Rational c(num(rng), den(rng));
  c.canonicalize();
  return sign(rng) ? Rational(-c) : c;
}

}  // namespace

SolutionSet solve_bivariate(const Polynomial& f, const Polynomial& g, const SolverConfig& cfg) {
  if (f.nvars() != 2 || g.nvars() != 2)
    throw Error(ErrorCode::DimensionCap, "solve_bivariate needs polynomials in two variables");
  for (const Polynomial* p : {&f, &g})
    for (const auto& [e, c] : p->terms())
      if (e[0] < 0 || e[1] < 0)
        throw Error(ErrorCode::InvalidInput, "solve_bivariate needs nonnegative exponents");
  if (f.is_zero() || g.is_zero())
    throw Error(ErrorCode::CommonComponent, "a zero polynomial has no isolated solutions");
  if (f.total_degree() > cfg.max_degree || g.total_degree() > cfg.max_degree)
    throw Error(ErrorCode::DegreeCap, "total degree exceeds the cap of " + std::to_string(cfg.max_degree));

  // a shared factor in one variable only leaves the resultant nonzero
  for (int swap = 0; swap < 2; ++swap) {
    const Frame fr{swap ? Frame::Swap : Frame::Identity, 0, ""};
    if (gcd(content_in_x(fr.apply(f)), content_in_x(fr.apply(g))).degree() > 0)
      throw Error(ErrorCode::CommonComponent, "the polynomials share a common component");
  }

  SolutionSet out;
  if (f.total_degree() == 0 || g.total_degree() == 0) {
    out.elimination = "none (constant polynomial)";
    return out;
  }

  std::mt19937_64 rng(cfg.seed);
  std::vector<Frame> frames{{Frame::Identity, 0, "eliminate x2"}, {Frame::Swap, 0, "eliminate x1"}};
  for (int i = 0; i < 4; ++i) {
    Rational c = random_shear(rng);
    frames.push_back({Frame::Shear, c, "shear x1 + (" + rational_string(c) + ")*x2, eliminate x2"});
  }

  AttemptResult result;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    result = run_attempt(f, g, frames[i], cfg);
    out.elimination = frames[i].label;
    if (result.generic) break;
    if (i + 1 == frames.size())
      out.warnings.push_back("no generic projection found; multiplicities may be merged");
  }
  out.warnings.insert(out.warnings.end(), result.warnings.begin(), result.warnings.end());

  // polish, then merge points that coincide
  struct Item {
    std::vector<cld> z;
    int mult;
    bool real;
    bool converged;
    int merged;
  };
  std::vector<Item> items;
  for (const auto& p : result.points) {
    Polished pol = newton(f, g, p.point, cfg.newton_max_iter);
    if (p.is_real)
      for (auto& v : pol.point) v = v.real();
    bool merged = false;
    for (auto& it : items) {
      const long double scale = std::max(1.0L, norm_inf(it.z));
      if (std::max(std::abs(it.z[0] - pol.point[0]), std::abs(it.z[1] - pol.point[1])) <= cfg.cluster_tol * scale) {
        it.mult += p.multiplicity;
        it.merged += 1;
        merged = true;
        break;
      }
    }
    if (!merged) items.push_back({pol.point, p.multiplicity, p.is_real, pol.converged, 1});
  }
  for (const auto& it : items) {
    if (it.merged > 1)
      out.warnings.push_back("cluster of " + std::to_string(it.merged) +
                             " resultant roots merged into one point");
    NumericSolution s;
    s.point = to_double(it.z);
    s.residual = static_cast<double>(std::max(std::abs(f.evaluate(it.z)), std::abs(g.evaluate(it.z))));
    s.multiplicity = it.mult;
    s.is_real = it.real;
    s.converged = it.converged || s.residual < cfg.verify_tol;
    if (!s.converged) out.warnings.push_back("Newton refinement did not converge at a solution");
    out.solutions.push_back(std::move(s));
  }
  std::sort(out.solutions.begin(), out.solutions.end(), [](const NumericSolution& a, const NumericSolution& b) {
    for (std::size_t i = 0; i < a.point.size(); ++i) {
      if (a.point[i].real() != b.point[i].real()) return a.point[i].real() < b.point[i].real();
      if (a.point[i].imag() != b.point[i].imag()) return a.point[i].imag() < b.point[i].imag();
    }
    return false;
  });
  return out;
}

namespace {

std::vector<cld> to_long(const std::vector<std::complex<double>>& z) {
  std::vector<cld> out;
  for (const auto& v : z) out.emplace_back(v.real(), v.imag());
  return out;
}

}  // namespace

SolutionSet solve_sparse(const SparseSystem& s, const SolverConfig& cfg) {
  if (s.num_variables() != 2 || s.num_polynomials() != 2)
    throw Error(ErrorCode::DimensionCap, "solve_sparse handles two polynomials in two variables");
  const Polynomial f = s.polynomial(0), g = s.polynomial(1);
  auto clear = [](const Polynomial& p) {
    Exponent m = p.min_exponents();
    for (auto& v : m) v = -v;
    return p.shifted(m);
  };
  SolutionSet out = solve_bivariate(clear(f), clear(g), cfg);
  for (auto& sol : out.solutions) {
    const bool torus = std::abs(sol.point[0]) > cfg.membership_tol && std::abs(sol.point[1]) > cfg.membership_tol;
    sol.location = torus ? Location::Torus : Location::Excluded;
    if (!torus) continue;
    const std::vector<cld> z = to_long(sol.point);
    sol.residual = static_cast<double>(std::max(std::abs(f.evaluate(z)), std::abs(g.evaluate(z))));
  }
  return out;
}

SolutionSet solve_master(const MasterSystem& ms, const SolverConfig& cfg) {
  if (ms.arrangement().ambient_dim() != 2 || ms.dims().l != 2)
    throw Error(ErrorCode::DimensionCap, "solve_master handles two weights on a plane arrangement");
  // same solution set for any basis of the weight lattice; short weights
  // keep the cleared degrees low
  const MasterSystem reduced(ms.arrangement(), reduced_basis(ms.weights().matrix()), ms.variables());
  const Polynomial f = clear_denominators(reduced, 0).expand(ms.arrangement());
  const Polynomial g = clear_denominators(reduced, 1).expand(ms.arrangement());
  SolutionSet out = solve_bivariate(f, g, cfg);
  for (auto& sol : out.solutions) {
    const std::vector<cld> y = to_long(sol.point);
    const bool inside = in_complement(ms.arrangement(), y, cfg.membership_tol);
    sol.location = inside ? Location::Complement : Location::Excluded;
    if (!inside) continue;
    long double r = 0;
    for (std::size_t j = 0; j < 2; ++j) r = std::max(r, std::abs(master_value(ms, j, y) - 1.0L));
    sol.residual = static_cast<double>(r);
  }
  return out;
}

// --------------------------------------------------------- isomorphism

bool IsomorphismReport::is_bijection() const {
  if (!unmatched_poly.empty() || !unmatched_master.empty()) return false;
  for (const auto& m : matching)
    if (!(m.distance < match_tol)) return false;
  return true;
}

bool IsomorphismReport::reals_preserved() const {
  return std::all_of(matching.begin(), matching.end(), [](const SolutionMatch& m) { return m.real_agrees; });
}

double IsomorphismReport::max_distance() const {
  double d = 0;
  for (const auto& m : matching) d = std::max(d, m.distance);
  return d;
}

IsomorphismReport verify_isomorphism(const GalePair& gp, const SolverConfig& cfg) {
  IsomorphismReport rep;
  rep.match_tol = cfg.match_tol;
  rep.poly_solutions = solve_sparse(gp.poly, cfg);
  rep.master_solutions = solve_master(gp.master, cfg);

  const ExponentMatrix w = gp.ordered_support();
  const Arrangement& arr = gp.master.arrangement();
  const std::size_t k = arr.size(), dim = arr.ambient_dim();
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = arr.forms()[i].coeffs[j].get_d();
  const auto qr = a.colPivHouseholderQr();

  // image of each torus solution on the arrangement side
  struct Image {
    std::size_t index;
    Eigen::VectorXcd y;
  };
  std::vector<Image> images;
  std::vector<std::size_t> master_idx;
  for (std::size_t i = 0; i < rep.master_solutions.solutions.size(); ++i)
    if (rep.master_solutions.solutions[i].location != Location::Excluded) master_idx.push_back(i);
  for (std::size_t i = 0; i < rep.poly_solutions.solutions.size(); ++i) {
    const auto& sol = rep.poly_solutions.solutions[i];
    if (sol.location == Location::Excluded) continue;
    const ComplexPoint z = evaluate_phi(w, to_long(sol.point));
    Eigen::VectorXcd rhs(static_cast<Eigen::Index>(k));
    for (std::size_t j = 0; j < k; ++j) {
      const cld v = z[j] - to_long_double(arr.forms()[j].constant);
      rhs(static_cast<Eigen::Index>(j)) = {static_cast<double>(v.real()), static_cast<double>(v.imag())};
    }
    images.push_back({i, qr.solve(rhs)});
  }

  struct Candidate {
    double distance;
    std::size_t image, master;
  };
  std::vector<Candidate> cands;
  for (std::size_t a_i = 0; a_i < images.size(); ++a_i)
    for (std::size_t b_i = 0; b_i < master_idx.size(); ++b_i) {
      const auto& ms = rep.master_solutions.solutions[master_idx[b_i]];
      double d = 0, scale = 1;
      for (std::size_t j = 0; j < dim; ++j) {
        d = std::max(d, std::abs(images[a_i].y(static_cast<Eigen::Index>(j)) - ms.point[j]));
        scale = std::max(scale, std::abs(ms.point[j]));
      }
      cands.push_back({d / scale, a_i, b_i});
    }
  std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
    return std::tie(x.distance, x.image, x.master) < std::tie(y.distance, y.image, y.master);
  });
  std::vector<bool> used_img(images.size(), false), used_master(master_idx.size(), false);
  for (const auto& c : cands) {
    if (used_img[c.image] || used_master[c.master] || !(c.distance < cfg.match_tol)) continue;
    used_img[c.image] = used_master[c.master] = true;
    const auto& ps = rep.poly_solutions.solutions[images[c.image].index];
    const auto& ms = rep.master_solutions.solutions[master_idx[c.master]];
    rep.matching.push_back({images[c.image].index, master_idx[c.master], c.distance,
                            ps.is_real == ms.is_real && ps.multiplicity == ms.multiplicity});
  }
  std::sort(rep.matching.begin(), rep.matching.end(),
            [](const SolutionMatch& x, const SolutionMatch& y) { return x.poly_index < y.poly_index; });
  for (std::size_t i = 0; i < images.size(); ++i)
    if (!used_img[i]) rep.unmatched_poly.push_back(images[i].index);
  for (std::size_t i = 0; i < master_idx.size(); ++i)
    if (!used_master[i]) rep.unmatched_master.push_back(master_idx[i]);
  return rep;
}

}  // namespace galedual
