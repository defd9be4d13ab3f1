#include "galedual/cli.hpp"

#include <fstream>
#include <iostream>

#include "galedual/error.hpp"
#include "galedual/io.hpp"

namespace galedual::cli {

namespace {

using io::json;

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse:
    case ErrorCode::InvalidInput:
    case ErrorCode::DependentRows:
      return kParseError;
    case ErrorCode::CommonComponent:
    case ErrorCode::DegreeCap:
    case ErrorCode::DimensionCap:
      return kSolverFailure;
    default:
      return kDiagnosticFailure;
  }
}

int report_error(const Error& e) {
  std::cerr << "galedual: " << to_string(e.code()) << ": " << e.what() << "\n";
  return exit_code(e.code());
}

void emit(const JobConfig& cfg, const std::string& text) {
  if (cfg.output_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, "cannot open output file " + cfg.output_path);
  out << text;
}

struct Input {
  io::InputKind kind;
  SparseSystem sparse;
  MasterSystem master;
};

Input load(const JobConfig& cfg) {
  const json j = io::read_file(cfg.input_path);
  Input in{io::detect_kind(j), {}, {}};
  if (in.kind == io::InputKind::Sparse)
    in.sparse = io::sparse_from_json(j);
  else
    in.master = io::master_from_json(j);
  return in;
}

const char* direction(io::InputKind k) {
  return k == io::InputKind::Sparse ? "poly-to-master" : "master-to-poly";
}

GalePair dualize(const Input& in, const DualizeOptions& opts) {
  return in.kind == io::InputKind::Sparse ? dualize_poly_to_master(in.sparse, opts)
                                          : dualize_master_to_poly(in.master, opts);
}

}  // namespace

int cmd_dualize(const JobConfig& cfg) {
  try {
    const Input in = load(cfg);
    GalePair gp;
    try {
      gp = dualize(in, {});
    } catch (const NotPrimitiveError& e) {
      if (e.index() == 0) {
        std::cerr << "galedual: " << to_string(e.code()) << ": " << e.what() << "\n";
        const json rep{{"direction", direction(in.kind)},
                       {"check", {{"support_index", 0}, {"all_pass", false}, {"failures", {e.what()}}}}};
        emit(cfg, cfg.format == Format::Json ? io::dump(rep) : std::string(e.what()) + "\n");
        return kDiagnosticFailure;
      }
      // carry on with the saturation so the report shows the index
      DualizeOptions opts;
      opts.allow_nonprimitive = true;
      gp = dualize(in, opts);
    }
    const GaleCheck chk = check_gale_pair(gp);
    emit(cfg, cfg.format == Format::Json ? io::dump(io::to_json(gp, direction(in.kind)))
                                         : io::render_text(gp, direction(in.kind)));
    return chk.all_pass() ? kOk : kDiagnosticFailure;
  } catch (const Error& e) {
    return report_error(e);
  }
}

int cmd_bound(const JobConfig& cfg) {
  try {
    const Input in = load(cfg);
    const io::BoundReport b =
        in.kind == io::InputKind::Sparse ? io::compute_bounds(in.sparse) : io::compute_bounds(in.master);
    emit(cfg, cfg.format == Format::Json ? io::dump(io::to_json(b)) : io::render_text(b));
    return kOk;
  } catch (const Error& e) {
    return report_error(e);
  }
}

int cmd_solve(const JobConfig& cfg) {
  try {
    const Input in = load(cfg);
    const bool sparse = in.kind == io::InputKind::Sparse;
    const SolutionSet s = sparse ? solve_sparse(in.sparse, cfg.solver) : solve_master(in.master, cfg.solver);
    if (cfg.format == Format::Json) {
      json out;
      out["system"] = sparse ? "sparse" : "master";
      out["variables"] = sparse ? in.sparse.variables() : in.master.variables();
      out["result"] = io::to_json(s);
      emit(cfg, io::dump(out));
    } else {
      emit(cfg, (sparse ? io::render_text(in.sparse) : io::render_text(in.master)) +
                    io::render_text(s, sparse ? in.sparse.variables() : in.master.variables()));
    }
    return kOk;
  } catch (const Error& e) {
    return report_error(e);
  }
}

int cmd_verify(const JobConfig& cfg) {
  try {
    const Input in = load(cfg);
    DualizeOptions opts;
    opts.allow_nonprimitive = true;
    const GalePair gp = dualize(in, opts);
    const GaleCheck chk = check_gale_pair(gp);
    const IsomorphismReport rep = verify_isomorphism(gp, cfg.solver);
    const Integer bound = kouchnirenko_bound(gp.ordered_support());

    const std::size_t np = rep.poly_solutions.count(), nm = rep.master_solutions.count();
    bool ok = rep.is_bijection() && rep.reals_preserved() && np == nm;
    if (cfg.generic) ok = ok && Integer(static_cast<unsigned long>(np)) == bound;

    if (cfg.format == Format::Json) {
      json out;
      out["direction"] = direction(in.kind);
      out["counts"] = json{{"poly", np},
                           {"master", nm},
                           {"poly_real", rep.poly_solutions.real_count()},
                           {"master_real", rep.master_solutions.real_count()},
                           {"kouchnirenko_bound", bound.get_si()}};
      out["generic_claimed"] = cfg.generic;
      out["pass"] = ok;
      out["check"] = io::to_json(chk, gp.poly.dims());
      out["report"] = io::to_json(rep);
      emit(cfg, io::dump(out));
    } else {
      std::string text = io::render_text(gp, direction(in.kind)) + io::render_text(rep, gp);
      text += "Kouchnirenko bound: " + bound.get_str() + "\n";
      text += std::string("result: ") + (ok ? "pass" : "mismatch") + "\n";
      emit(cfg, text);
    }
    return ok ? kOk : kMismatch;
  } catch (const Error& e) {
    return report_error(e);
  }
}

int run(const JobConfig& cfg) {
  switch (cfg.command) {
    case Command::Dualize: return cmd_dualize(cfg);
    case Command::Bound: return cmd_bound(cfg);
    case Command::Solve: return cmd_solve(cfg);
    case Command::Verify: return cmd_verify(cfg);
  }
  return kParseError;
}

}  // namespace galedual::cli
