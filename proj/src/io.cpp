#include "galedual/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "galedual/error.hpp"

namespace galedual::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::Parse, field + ": " + what);
}

const json& member(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where.empty() ? "input" : where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where.empty() ? key : where + "." + key, "missing field");
  return *it;
}

const json& array_of(const json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array");
  return j;
}

Integer integer_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) == 0) return v;
  }
  fail(field, "expected an integer");
}

std::vector<std::string> names_from_json(const json& j, std::size_t count) {
  auto it = j.find("variables");
  if (it == j.end()) return {};
  const json& v = array_of(*it, "variables");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string() || v[i].get<std::string>().empty())
      fail("variables[" + std::to_string(i) + "]", "expected a nonempty string");
    names.push_back(v[i].get<std::string>());
  }
  if (names.size() != count)
    fail("variables", "expected " + std::to_string(count) + " names, got " + std::to_string(names.size()));
  return names;
}

std::string idx(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json point_json(const std::vector<std::complex<double>>& p) {
  json a = json::array();
  for (const auto& z : p) a.push_back(json::array({z.real(), z.imag()}));
  return a;
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

std::string complex_text(std::complex<double> z) {
  std::ostringstream os;
  os << std::setprecision(10);
  if (z.imag() == 0) {
    os << z.real();
  } else {
    os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  }
  return os.str();
}

}  // namespace

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open input file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

InputKind detect_kind(const json& j) {
  if (!j.is_object()) fail("input", "expected a JSON object");
  if (j.contains("support")) return InputKind::Sparse;
  if (j.contains("forms")) return InputKind::Master;
  fail("input", "neither \"support\" (sparse system) nor \"forms\" (master system) present");
}

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(field, "expected a rational string \"p/q\"");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  auto digits = [](const std::string& t, bool sign) {
    std::size_t i = sign && !t.empty() && t[0] == '-' ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  Rational q;
  if (slash == std::string::npos) {
    if (!digits(s, true)) fail(field, "\"" + s + "\" is not a rational \"p/q\"");
    q.get_num().set_str(s, 10);
    q.get_den() = 1;
  } else {
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false)) fail(field, "\"" + s + "\" is not a rational \"p/q\"");
    q.get_num().set_str(num, 10);
    q.get_den().set_str(den, 10);
    if (q.get_den() == 0) fail(field, "zero denominator");
  }
  q.canonicalize();
  return q;
}

SparseSystem sparse_from_json(const json& j) {
  const json& sup = array_of(member(j, "support", ""), "support");
  const json& co = array_of(member(j, "coefficients", ""), "coefficients");
  if (sup.empty()) fail("support", "empty support");
  const std::size_t k = sup.size();
  std::size_t nvars = 0;
  for (std::size_t c = 0; c < k; ++c) {
    const json& e = array_of(sup[c], idx("support", c));
    if (c == 0) nvars = e.size();
    if (e.size() != nvars || nvars == 0)
      fail(idx("support", c), "every exponent vector needs " + std::to_string(nvars) + " entries");
  }
  IntMatrix exps(nvars, k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < nvars; ++r)
      exps(r, c) = integer_from_json(sup[c][r], idx(idx("support", c), r));
  if (co.empty()) fail("coefficients", "no polynomials");
  const std::size_t width = array_of(co[0], "coefficients[0]").size();
  if (width != k && width != k + 1)
    fail("coefficients[0]", "expected " + std::to_string(k + 1) + " entries (constant first) or " +
                                std::to_string(k) + " (one per support entry)");
  RatMatrix coeffs(co.size(), width);
  for (std::size_t i = 0; i < co.size(); ++i) {
    const json& row = array_of(co[i], idx("coefficients", i));
    if (row.size() != width) fail(idx("coefficients", i), "expected " + std::to_string(width) + " entries");
    for (std::size_t c = 0; c < width; ++c) coeffs(i, c) = rational_from_json(row[c], idx(idx("coefficients", i), c));
  }
  std::vector<std::string> names = names_from_json(j, nvars);
  try {
    if (width == k) return normalize_support({exps, coeffs, names});
    for (std::size_t c = 0; c < k; ++c)
      if (exps.col_vector(c) == IntVector(nvars, 0))
        fail(idx("support", c), "the zero exponent belongs in coefficient column 0, not in the support");
    return SparseSystem::from_columns(exps, coeffs, names);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    throw Error(e.code(), std::string("support/coefficients: ") + e.what());
  }
}

MasterSystem master_from_json(const json& j) {
  const json& fs = array_of(member(j, "forms", ""), "forms");
  const json& ws = array_of(member(j, "weights", ""), "weights");
  if (fs.empty()) fail("forms", "no forms");
  std::vector<AffineForm> forms;
  std::size_t dim = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string f = idx("forms", i);
    AffineForm a;
    a.constant = rational_from_json(member(fs[i], "constant", f), f + ".constant");
    const json& c = array_of(member(fs[i], "coeffs", f), f + ".coeffs");
    if (i == 0) dim = c.size();
    if (c.size() != dim || dim == 0) fail(f + ".coeffs", "every form needs " + std::to_string(dim) + " coefficients");
    for (std::size_t k = 0; k < c.size(); ++k) a.coeffs.push_back(rational_from_json(c[k], idx(f + ".coeffs", k)));
    forms.push_back(std::move(a));
  }
  if (ws.empty()) fail("weights", "no weights");
  IntMatrix w(ws.size(), fs.size());
  for (std::size_t r = 0; r < ws.size(); ++r) {
    const json& row = array_of(ws[r], idx("weights", r));
    if (row.size() != fs.size()) fail(idx("weights", r), "expected one entry per form (" + std::to_string(fs.size()) + ")");
    for (std::size_t c = 0; c < row.size(); ++c) w(r, c) = integer_from_json(row[c], idx(idx("weights", r), c));
  }
  std::vector<std::string> names = names_from_json(j, dim);
  if (names.empty()) names = default_names(dim, "s");
  try {
    return MasterSystem(Arrangement(dim, std::move(forms)), std::move(w), names);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    throw Error(e.code(), std::string("forms/weights: ") + e.what());
  }
}

json to_json(const Rational& q) { return rational_string(q); }

json to_json(const SparseSystem& s) {
  json out;
  out["variables"] = s.variables();
  json sup = json::array();
  for (std::size_t c = 0; c < s.support().size(); ++c) {
    json e = json::array();
    for (const auto& v : s.support().column(c)) e.push_back(integer_json(v));
    sup.push_back(std::move(e));
  }
  out["support"] = std::move(sup);
  json co = json::array();
  for (std::size_t i = 0; i < s.coefficients().rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < s.coefficients().cols(); ++c) row.push_back(to_json(s.coefficients()(i, c)));
    co.push_back(std::move(row));
  }
  out["coefficients"] = std::move(co);
  return out;
}

json to_json(const MasterSystem& ms) {
  json out;
  out["variables"] = ms.variables();
  json forms = json::array();
  for (const auto& f : ms.arrangement().forms()) {
    json c = json::array();
    for (const auto& v : f.coeffs) c.push_back(to_json(v));
    forms.push_back(json{{"constant", to_json(f.constant)}, {"coeffs", std::move(c)}});
  }
  out["forms"] = std::move(forms);
  json w = json::array();
  for (std::size_t r = 0; r < ms.weights().matrix().rows(); ++r) {
    json row = json::array();
    for (const auto& v : ms.weights().matrix().row_vector(r)) row.push_back(integer_json(v));
    w.push_back(std::move(row));
  }
  out["weights"] = std::move(w);
  return out;
}

json to_json(const GaleCheck& c, const Dims& d) {
  json out;
  out["dims"] = json{{"l", d.l}, {"m", d.m}, {"n", d.n}};
  out["support_index"] = integer_json(c.support_index);
  out["weight_index"] = integer_json(c.weight_index);
  out["dims_consistent"] = c.dims_consistent;
  out["annihilates"] = c.annihilates;
  out["pullback_vanishes"] = c.pullback_vanishes;
  out["forms_match_system"] = c.forms_match_system;
  out["essential"] = c.essential;
  out["distinct_columns"] = c.distinct_columns;
  out["real_isomorphism_possible"] = c.real_isomorphism_possible();
  out["all_pass"] = c.all_pass();
  out["failures"] = c.failures();
  return out;
}

json to_json(const GalePair& gp, const std::string& direction) {
  json out;
  out["direction"] = direction;
  out["poly"] = to_json(gp.poly);
  out["master"] = to_json(gp.master);
  json master_functions = json::array();
  for (std::size_t j = 0; j < gp.master.dims().l; ++j) master_functions.push_back(gp.master.master_function_string(j));
  out["master_functions"] = std::move(master_functions);
  json lf = json::array();
  for (std::size_t i = 0; i < gp.linear_forms.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < gp.linear_forms.cols(); ++c) row.push_back(to_json(gp.linear_forms(i, c)));
    lf.push_back(std::move(row));
  }
  out["witness"] = json{{"form_column", gp.form_column},
                        {"linear_forms", std::move(lf)},
                        {"variable_sources", gp.variable_sources}};
  out["check"] = to_json(check_gale_pair(gp), gp.poly.dims());
  return out;
}

json to_json(const SolutionSet& s) {
  json out;
  out["elimination"] = s.elimination;
  out["count"] = s.count();
  out["real_count"] = s.real_count();
  out["excluded_count"] = s.excluded_count();
  json sols = json::array();
  for (const auto& p : s.solutions) {
    sols.push_back(json{{"point", point_json(p.point)},
                        {"real", p.is_real},
                        {"multiplicity", p.multiplicity},
                        {"location", to_string(p.location)},
                        {"residual", p.residual},
                        {"converged", p.converged}});
  }
  out["solutions"] = std::move(sols);
  out["warnings"] = s.warnings;
  return out;
}

json to_json(const IsomorphismReport& r) {
  json out;
  out["bijection"] = r.is_bijection();
  out["reals_preserved"] = r.reals_preserved();
  out["match_tol"] = r.match_tol;
  out["max_distance"] = r.max_distance();
  json m = json::array();
  for (const auto& x : r.matching)
    m.push_back(json{{"poly", x.poly_index}, {"master", x.master_index}, {"distance", x.distance}, {"real_agrees", x.real_agrees}});
  out["matching"] = std::move(m);
  out["unmatched_poly"] = r.unmatched_poly;
  out["unmatched_master"] = r.unmatched_master;
  out["poly_solutions"] = to_json(r.poly_solutions);
  out["master_solutions"] = to_json(r.master_solutions);
  return out;
}

namespace {

void fill_fewnomial(BoundReport& b) {
  b.positive = fewnomial_bound(b.dims.l, b.dims.n, FewnomialVariant::PositiveOrthant);
  b.all_real = fewnomial_bound(b.dims.l, b.dims.n, FewnomialVariant::AllReal);
  b.betti = fewnomial_bound(b.dims.l, b.dims.n, FewnomialVariant::Betti, b.dims.m);
}

}  // namespace

BoundReport compute_bounds(const SparseSystem& s) {
  BoundReport b;
  b.dims = s.dims();
  b.kouchnirenko = kouchnirenko_bound(s.support());
  if (b.dims.l > 0) {
    const IntMatrix rel = kernel_basis(s.support().matrix());
    if (rel.rows() == b.dims.l && saturation_index(lattice_basis(s.support().matrix().transpose())) == 1) {
      b.euler = euler_characteristic(b.dims, WeightBasis(b.dims, rel));
      b.has_euler = true;
    }
  }
  fill_fewnomial(b);
  return b;
}

BoundReport compute_bounds(const MasterSystem& ms) {
  BoundReport b;
  b.dims = ms.dims();
  if (b.dims.n == 0) throw Error(ErrorCode::InvalidInput, "bounds need n > 0 (more forms than dimensions)");
  b.kouchnirenko = kouchnirenko_bound(quotient_images(ms.weights()));
  b.euler = euler_characteristic(b.dims, ms.weights());
  b.has_euler = true;
  fill_fewnomial(b);
  return b;
}

json to_json(const BoundReport& b) {
  json out;
  out["dims"] = json{{"l", b.dims.l}, {"m", b.dims.m}, {"n", b.dims.n}};
  out["kouchnirenko_bound"] = integer_json(b.kouchnirenko);
  out["euler_characteristic"] = b.has_euler ? integer_json(b.euler) : json(nullptr);
  json f;
  auto entry = [](const FewnomialBound& x) {
    return json{{"value", x.value}, {"display", fixed(x.value, 4)}, {"formula", x.symbolic}};
  };
  f[to_string(FewnomialVariant::PositiveOrthant)] = entry(b.positive);
  f[to_string(FewnomialVariant::AllReal)] = entry(b.all_real);
  f[to_string(FewnomialVariant::Betti)] = entry(b.betti);
  out["fewnomial"] = std::move(f);
  return out;
}

// ---------------------------------------------------------------- text

std::string render_text(const SparseSystem& s) {
  std::ostringstream os;
  const auto& names = s.variables();
  for (std::size_t i = 0; i < s.num_polynomials(); ++i)
    os << "  " << s.polynomial(i).to_string(names) << " = 0\n";
  os << "  in the torus (C^*)^" << s.num_variables() << ", dims " << to_string(s.dims()) << "\n";
  return os.str();
}

std::string render_text(const MasterSystem& ms) {
  std::ostringstream os;
  for (std::size_t j = 0; j < ms.dims().l; ++j) os << "  " << ms.master_function_string(j) << " = 1\n";
  os << "  off the lines";
  for (const auto& f : ms.arrangement().forms()) os << "  " << f.to_string(ms.variables()) << " = 0";
  os << "\n  dims " << to_string(ms.dims()) << "\n";
  return os.str();
}

std::string render_text(const GaleCheck& c) {
  std::ostringstream os;
  os << "  support index " << c.support_index << ", weight index " << c.weight_index << "\n";
  if (c.all_pass()) {
    os << "  all checks pass\n";
  } else {
    for (const auto& f : c.failures()) os << "  FAIL " << f << "\n";
    if (c.real_isomorphism_possible()) os << "  odd indices: the real points still correspond\n";
  }
  return os.str();
}

std::string render_text(const GalePair& gp, const std::string& direction) {
  std::ostringstream os;
  os << "direction: " << direction << "\n";
  os << "polynomial system:\n" << render_text(gp.poly);
  os << "master functions:\n" << render_text(gp.master);
  bool any = false;
  for (std::size_t k = 0; k < gp.variable_sources.size(); ++k) {
    if (gp.variable_sources[k].empty()) continue;
    if (!any) os << "variables:\n";
    any = true;
    os << "  " << gp.master.variables()[k] << " stands for " << gp.variable_sources[k] << "\n";
  }
  os << "check:\n" << render_text(check_gale_pair(gp));
  return os.str();
}

std::string render_text(const SolutionSet& s, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "elimination: " << s.elimination << "\n";
  os << "solutions: " << s.count() << " (" << s.real_count() << " real)";
  if (s.excluded_count()) os << ", " << s.excluded_count() << " excluded";
  os << "\n";
  std::size_t i = 0;
  for (const auto& p : s.solutions) {
    os << "  #" << ++i << " ";
    for (std::size_t k = 0; k < p.point.size(); ++k)
      os << (k ? ", " : "") << (k < names.size() ? names[k] : "v" + std::to_string(k)) << " = " << complex_text(p.point[k]);
    os << "  [" << to_string(p.location) << (p.is_real ? ", real" : "");
    if (p.multiplicity != 1) os << ", multiplicity " << p.multiplicity;
    os << ", residual " << fixed(p.residual, 3) << "]\n";
  }
  for (const auto& w : s.warnings) os << "warning: " << w << "\n";
  return os.str();
}

std::string render_text(const IsomorphismReport& r, const GalePair& gp) {
  std::ostringstream os;
  os << "polynomial side:\n" << render_text(r.poly_solutions, gp.poly.variables());
  os << "master side:\n" << render_text(r.master_solutions, gp.master.variables());
  os << "matched " << r.matching.size() << " pairs, max distance " << fixed(r.max_distance(), 3) << "\n";
  if (!r.unmatched_poly.empty()) os << "unmatched polynomial solutions: " << r.unmatched_poly.size() << "\n";
  if (!r.unmatched_master.empty()) os << "unmatched master solutions: " << r.unmatched_master.size() << "\n";
  os << "bijection: " << (r.is_bijection() ? "yes" : "no") << ", reals preserved: " << (r.reals_preserved() ? "yes" : "no") << "\n";
  return os.str();
}

std::string render_text(const BoundReport& b) {
  std::ostringstream os;
  os << "dims " << to_string(b.dims) << "\n";
  os << "Kouchnirenko bound: " << b.kouchnirenko << "\n";
  if (b.has_euler) os << "Euler characteristic: " << b.euler << "\n";
  os << "fewnomial bound (positive orthant): " << fixed(b.positive.value, 4) << "  = " << b.positive.symbolic << "\n";
  os << "fewnomial bound (all real): " << fixed(b.all_real.value, 4) << "  = " << b.all_real.symbolic << "\n";
  os << "Betti number bound: " << fixed(b.betti.value, 4) << "  = " << b.betti.symbolic << "\n";
  return os.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace galedual::io
