#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "galedual/desksolver.hpp"
#include "galedual/error.hpp"
#include "galedual/exactlat.hpp"
#include "galedual/galecore.hpp"
#include "galedual/io.hpp"
#include "galedual/latpoly.hpp"

namespace py = pybind11;
using namespace galedual;

namespace {

using io::json;

py::object to_py(const Integer& v) { return py::int_(py::str(v.get_str())); }

Integer from_py(const py::handle& h) { return Integer(py::str(h).cast<std::string>()); }

IntMatrix matrix_from_py(const py::sequence& rows) {
  std::vector<std::vector<Integer>> out;
  for (const auto& r : rows) {
    std::vector<Integer> row;
    for (const auto& v : r.cast<py::sequence>()) row.push_back(from_py(v));
    out.push_back(std::move(row));
  }
  for (const auto& r : out)
    if (r.size() != out.front().size()) throw Error(ErrorCode::InvalidInput, "rows of different length");
  return IntMatrix::from_rows(out);
}

py::list matrix_to_py(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list r;
    for (std::size_t j = 0; j < m.cols(); ++j) r.append(to_py(m(i, j)));
    rows.append(r);
  }
  return rows;
}

struct Loaded {
  io::InputKind kind;
  SparseSystem sparse;
  MasterSystem master;
};

Loaded load(const std::string& text) {
  const json j = io::parse_text(text);
  Loaded in{io::detect_kind(j), {}, {}};
  if (in.kind == io::InputKind::Sparse)
    in.sparse = io::sparse_from_json(j);
  else
    in.master = io::master_from_json(j);
  return in;
}

const char* direction(io::InputKind k) {
  return k == io::InputKind::Sparse ? "poly-to-master" : "master-to-poly";
}

GalePair dualize_loaded(const Loaded& in, bool allow_nonprimitive) {
  DualizeOptions opts;
  opts.allow_nonprimitive = allow_nonprimitive;
  return in.kind == io::InputKind::Sparse ? dualize_poly_to_master(in.sparse, opts)
                                          : dualize_master_to_poly(in.master, opts);
}

SolverConfig solver_config(double cluster_tol, double verify_tol, std::uint64_t seed) {
  SolverConfig cfg;
  cfg.cluster_tol = cluster_tol;
  cfg.verify_tol = verify_tol;
  cfg.seed = seed;
  return cfg;
}

std::string dualize(const std::string& text, bool allow_nonprimitive) {
  const Loaded in = load(text);
  return io::dump(io::to_json(dualize_loaded(in, allow_nonprimitive), direction(in.kind)));
}

std::string bound(const std::string& text) {
  const Loaded in = load(text);
  return io::dump(io::to_json(in.kind == io::InputKind::Sparse ? io::compute_bounds(in.sparse)
                                                               : io::compute_bounds(in.master)));
}

std::string solve(const std::string& text, double cluster_tol, double verify_tol, std::uint64_t seed) {
  const Loaded in = load(text);
  const SolverConfig cfg = solver_config(cluster_tol, verify_tol, seed);
  return io::dump(io::to_json(in.kind == io::InputKind::Sparse ? solve_sparse(in.sparse, cfg)
                                                               : solve_master(in.master, cfg)));
}

std::string verify(const std::string& text, double cluster_tol, double verify_tol, std::uint64_t seed) {
  const Loaded in = load(text);
  const GalePair gp = dualize_loaded(in, true);
  const IsomorphismReport rep = verify_isomorphism(gp, solver_config(cluster_tol, verify_tol, seed));
  json out;
  out["direction"] = direction(in.kind);
  out["check"] = io::to_json(check_gale_pair(gp), gp.poly.dims());
  out["report"] = io::to_json(rep);
  return io::dump(out);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gale duality between sparse polynomial systems and master function systems";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> exc_storage;
  exc_storage.call_once_and_store_result([&]() { return py::exception<Error>(m, "GaledualError"); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string msg = std::string(to_string(e.code())) + ": " + e.what();
      py::set_error(exc_storage.get_stored(), msg.c_str());
    }
  });

  m.def("dualize", &dualize, py::arg("text"), py::arg("allow_nonprimitive") = false,
        "Gale dual of a system given as JSON text; returns the pair as JSON text.");
  m.def("bound", &bound, py::arg("text"));
  m.def("solve", &solve, py::arg("text"), py::arg("cluster_tol") = 1e-6, py::arg("verify_tol") = 1e-9,
        py::arg("seed") = 0);
  m.def("verify", &verify, py::arg("text"), py::arg("cluster_tol") = 1e-6, py::arg("verify_tol") = 1e-9,
        py::arg("seed") = 0);

  m.def("hnf", [](const py::sequence& rows) {
    const HermiteForm h = hnf(matrix_from_py(rows));
    return py::make_tuple(matrix_to_py(h.form), matrix_to_py(h.transform));
  });
  m.def("snf_diagonal", [](const py::sequence& rows) {
    const SmithForm s = snf(matrix_from_py(rows));
    py::list d;
    for (std::size_t i = 0; i < s.rank; ++i) d.append(to_py(s.diagonal(i, i)));
    return d;
  });
  m.def("kernel_basis", [](const py::sequence& rows) { return matrix_to_py(kernel_basis(matrix_from_py(rows))); });
  m.def("saturation_index", [](const py::sequence& rows) { return to_py(saturation_index(matrix_from_py(rows))); });
  m.def("normalized_volume", [](const py::sequence& points) {
    IntMatrix pts = matrix_from_py(points);
    std::vector<IntVector> v;
    for (std::size_t i = 0; i < pts.rows(); ++i) v.push_back(pts.row_vector(i));
    return to_py(normalized_volume(convex_hull(v)));
  });
  m.def(
      "fewnomial_bound",
      [](std::size_t l, std::size_t n, const std::string& variant, std::size_t mm) {
        FewnomialVariant v;
        if (variant == "positive-orthant")
          v = FewnomialVariant::PositiveOrthant;
        else if (variant == "all-real")
          v = FewnomialVariant::AllReal;
        else if (variant == "betti")
          v = FewnomialVariant::Betti;
        else
          throw Error(ErrorCode::InvalidInput, "unknown variant " + variant);
        const FewnomialBound b = fewnomial_bound(l, n, v, mm);
        return py::make_tuple(b.value, b.symbolic);
      },
      py::arg("l"), py::arg("n"), py::arg("variant") = "positive-orthant", py::arg("m") = 0);
}
