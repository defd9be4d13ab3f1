#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "galedual/matrix.hpp"

namespace galedual {

using Exponent = std::vector<long>;

/// Sparse multivariate Laurent polynomial with rational coefficients.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const Exponent& e, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const Rational& c);

  /// Largest total degree; -1 for the zero polynomial.
  long total_degree() const;
  long degree_in(std::size_t var) const;
  /// Componentwise minimum exponent (0 for an empty polynomial).
  Exponent min_exponents() const;

  Polynomial shifted(const Exponent& by) const;
  Polynomial derivative(std::size_t var) const;
  Polynomial pow(unsigned k) const;
  Polynomial scaled(const Rational& k) const;
  /// Same polynomial times the rational making it primitive with positive
  /// leading coefficient; used to compare up to scaling.
  Polynomial normalized() const;

  Rational evaluate(const std::vector<Rational>& x) const;
  std::complex<long double> evaluate(const std::vector<std::complex<long double>>& x) const;

  std::string to_string(const std::vector<std::string>& names) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_;
  std::map<Exponent, Rational> terms_;
};

/// Canonical rendering of a rational: "p/q" in lowest terms, "p" when q = 1.
std::string rational_string(const Rational& q);

long double to_long_double(const Rational& q);

}  // namespace galedual
