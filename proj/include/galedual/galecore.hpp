#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "galedual/exactlat.hpp"
#include "galedual/sysmodel.hpp"

namespace galedual {

/// A polynomial system and a master function system together with the
/// linear data identifying them. Coordinate z_i of P^{l+m+n} pulls back to
/// the master form p_i and to the monomial x^{w_{form_column[i]}}.
struct GalePair {
  SparseSystem poly;
  MasterSystem master;
  /// n x (l+m+n+1) rows Lambda_j over z_0, z_1, ..., z_{l+m+n}.
  RatMatrix linear_forms;
  std::vector<std::size_t> form_column;
  /// For each master variable, the monomial it stands for (may be empty).
  std::vector<std::string> variable_sources;

  /// Support columns reordered to follow the master forms.
  ExponentMatrix ordered_support() const;
};

struct DualizeOptions {
  /// Proceed on non-primitive data (using the saturation) instead of
  /// throwing; the resulting pair then fails check_gale_pair.
  bool allow_nonprimitive = false;
  std::optional<std::vector<std::size_t>> pivots;
};

GalePair dualize_poly_to_master(const SparseSystem& s, const DualizeOptions& opts = {});
GalePair dualize_master_to_poly(const MasterSystem& ms, const DualizeOptions& opts = {});

struct GaleCheck {
  Integer support_index = 0;  // 0 when the support is not of full rank
  Integer weight_index = 0;
  bool dims_consistent = false;
  bool annihilates = false;
  bool pullback_vanishes = false;  // Lambda_j(1, p(y)) == 0 identically
  bool forms_match_system = false;  // Lambda rows span the polynomial rows
  bool essential = false;
  bool distinct_columns = false;

  bool support_primitive() const { return support_index == 1; }
  bool weights_primitive() const { return weight_index == 1; }
  /// Odd saturation indices still give an isomorphism over the reals.
  bool real_isomorphism_possible() const;
  bool all_pass() const;
  std::vector<std::string> failures() const;
};

GaleCheck check_gale_pair(const GalePair& gp);

}  // namespace galedual
