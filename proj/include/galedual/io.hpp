#pragma once

// JSON reading and writing of systems and reports, plus plain-text renderings.
//
// sparse: {"variables": [...], "support": [[e_1, ..., e_k], ...],
//          "coefficients": [["p/q", ...], ...]}
//   one support entry per nonzero monomial; coefficient column 0 is the
//   constant term. Rows with exactly one entry per support monomial are read
//   as an arbitrary support and normalized.
// master: {"variables": [...], "forms": [{"constant": "p/q", "coeffs": [...]}],
//          "weights": [[int, ...], ...]}

#include <string>

#include <json.hpp>

#include "galedual/desksolver.hpp"
#include "galedual/galecore.hpp"
#include "galedual/latpoly.hpp"
#include "galedual/sysmodel.hpp"

namespace galedual::io {

using json = nlohmann::ordered_json;

enum class InputKind { Sparse, Master };

json parse_text(const std::string& text);
json read_file(const std::string& path);

/// "support" means sparse, "forms" means master; anything else is a Parse error.
InputKind detect_kind(const json& j);

Rational rational_from_json(const json& j, const std::string& field);
SparseSystem sparse_from_json(const json& j);
MasterSystem master_from_json(const json& j);

json to_json(const Rational& q);
json to_json(const SparseSystem& s);
json to_json(const MasterSystem& ms);
json to_json(const GaleCheck& c, const Dims& dims);
json to_json(const GalePair& gp, const std::string& direction);
json to_json(const SolutionSet& s);
json to_json(const IsomorphismReport& r);

struct BoundReport {
  Dims dims;
  Integer kouchnirenko = 0;
  bool has_euler = false;
  Integer euler = 0;
  FewnomialBound positive, all_real, betti;
};

BoundReport compute_bounds(const SparseSystem& s);
BoundReport compute_bounds(const MasterSystem& ms);
json to_json(const BoundReport& b);

std::string render_text(const SparseSystem& s);
std::string render_text(const MasterSystem& ms);
std::string render_text(const GaleCheck& c);
std::string render_text(const GalePair& gp, const std::string& direction);
std::string render_text(const SolutionSet& s, const std::vector<std::string>& names);
std::string render_text(const IsomorphismReport& r, const GalePair& gp);
std::string render_text(const BoundReport& b);

/// Canonical serialization: two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace galedual::io
