#pragma once

// Desk-scale numerical solving of bivariate systems by exact resultant
// elimination, used to count solutions and to check Gale duality pointwise.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "galedual/galecore.hpp"
#include "galedual/polynomial.hpp"
#include "galedual/sysmodel.hpp"

namespace galedual {

struct SolverConfig {
  double cluster_tol = 1e-6;
  double membership_tol = 1e-8;
  double verify_tol = 1e-9;
  double match_tol = 1e-6;
  int newton_max_iter = 50;
  std::uint64_t seed = 0;
  int max_degree = 30;
};

enum class Location { Plane, Torus, Complement, Excluded };

std::string to_string(Location loc);

struct NumericSolution {
  std::vector<std::complex<double>> point;
  double residual = 0;
  int multiplicity = 1;
  bool is_real = false;
  Location location = Location::Plane;
  bool converged = true;
};

struct SolutionSet {
  std::vector<NumericSolution> solutions;
  /// Which elimination succeeded, e.g. "eliminate x2" or "shear x1 + 3/5*x2".
  std::string elimination;
  std::vector<std::string> warnings;

  /// Solutions not marked Excluded.
  std::vector<NumericSolution> counted() const;
  /// Number of counted solutions, with multiplicity.
  std::size_t count() const;
  std::size_t real_count() const;
  std::size_t excluded_count() const;
};

/// All isolated solutions of f = g = 0 in C^2 (f, g polynomials in two
/// variables with nonnegative exponents).
SolutionSet solve_bivariate(const Polynomial& f, const Polynomial& g, const SolverConfig& cfg = {});

/// Solutions of a two-polynomial system in (C^*)^2.
SolutionSet solve_sparse(const SparseSystem& s, const SolverConfig& cfg = {});

/// Solutions of a two-weight master function system in the complement of a
/// line arrangement in C^2.
SolutionSet solve_master(const MasterSystem& ms, const SolverConfig& cfg = {});

struct SolutionMatch {
  std::size_t poly_index;
  std::size_t master_index;
  double distance;
  bool real_agrees;
};

struct IsomorphismReport {
  SolutionSet poly_solutions;
  SolutionSet master_solutions;
  std::vector<SolutionMatch> matching;
  std::vector<std::size_t> unmatched_poly;    // indices into poly_solutions.solutions
  std::vector<std::size_t> unmatched_master;  // indices into master_solutions.solutions
  double match_tol = 0;

  bool is_bijection() const;
  bool reals_preserved() const;
  double max_distance() const;
};

IsomorphismReport verify_isomorphism(const GalePair& gp, const SolverConfig& cfg = {});

}  // namespace galedual
