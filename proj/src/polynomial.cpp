#include "galedual/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace galedual {

long double to_long_double(const Rational& q) {
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t()))
    return static_cast<long double>(q.get_num().get_si()) /
           static_cast<long double>(q.get_den().get_si());
  return static_cast<long double>(q.get_d());
}

std::string rational_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  assert(e.size() == nvars_);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) {
    long s = 0;
    for (long v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

long Polynomial::degree_in(std::size_t var) const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

Exponent Polynomial::min_exponents() const {
  Exponent m(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

Polynomial Polynomial::shifted(const Exponent& by) const {
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < nvars_; ++i) f[i] += by[i];
    p.terms_.emplace(std::move(f), c);
  }
  return p;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    p.add_term(f, c * e[var]);
  }
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::scaled(const Rational& k) const {
  Polynomial p(nvars_);
  if (k == 0) return p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, c * k);
  return p;
}

Polynomial Polynomial::normalized() const {
  if (terms_.empty()) return *this;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational k(den_lcm, num_gcd);
  k.canonicalize();
  if (terms_.rbegin()->second < 0) k = -k;
  return scaled(k);
}

Rational Polynomial::evaluate(const std::vector<Rational>& x) const {
  assert(x.size() == nvars_);
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      Rational base = e[i] > 0 ? x[i] : Rational(1) / x[i];
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(std::labs(e[i])));
      mpz_pow_ui(pw.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(std::labs(e[i])));
      t *= pw;
    }
    sum += t;
  }
  return sum;
}

std::complex<long double> Polynomial::evaluate(
    const std::vector<std::complex<long double>>& x) const {
  assert(x.size() == nvars_);
  std::complex<long double> sum = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<long double> t = to_long_double(c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] != 0) t *= std::pow(x[i], static_cast<int>(e[i]));
    sum += t;
  }
  return sum;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest exponents first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool is_const = std::all_of(e.begin(), e.end(), [](long v) { return v == 0; });
    Rational a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (is_const || a != 1) {
      os << rational_string(a);
      wrote = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << names.at(i);
      if (e[i] != 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  assert(a.nvars_ == b.nvars_);
  Polynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  assert(a.nvars_ == b.nvars_);
  Polynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  assert(a.nvars_ == b.nvars_);
  Polynomial r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

}  // namespace galedual
