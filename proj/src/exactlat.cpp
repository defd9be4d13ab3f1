#include "galedual/exactlat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "galedual/error.hpp"
#include "galedual/linalg.hpp"

namespace galedual {

std::string to_string(const Dims& d) {
  std::ostringstream os;
  os << "(l=" << d.l << ", m=" << d.m << ", n=" << d.n << ")";
  return os.str();
}

ExponentMatrix::ExponentMatrix(Dims dims, IntMatrix columns)
    : dims_(dims), columns_(std::move(columns)) {
  if (columns_.rows() != dims_.torus_dim() || columns_.cols() != dims_.total())
    throw Error(ErrorCode::InvalidInput,
                "exponent matrix shape does not match dims " + to_string(dims_));
  for (std::size_t j = 0; j < columns_.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < columns_.rows(); ++i) zero = zero && columns_(i, j) == 0;
    if (zero)
      throw Error(ErrorCode::InvalidInput,
                  "exponent column " + std::to_string(j + 1) + " is zero (w_0 = 0 is implicit)");
  }
}

bool ExponentMatrix::has_distinct_columns() const {
  std::set<IntVector> seen;
  for (std::size_t j = 0; j < columns_.cols(); ++j)
    if (!seen.insert(columns_.col_vector(j)).second) return false;
  return true;
}

WeightBasis::WeightBasis(Dims dims, IntMatrix rows) : dims_(dims), rows_(std::move(rows)) {
  if (rows_.rows() != dims_.l || rows_.cols() != dims_.total())
    throw Error(ErrorCode::InvalidInput,
                "weight matrix shape does not match dims " + to_string(dims_));
  if (rank(rows_) != rows_.rows())
    throw Error(ErrorCode::DependentRows, "weights are linearly dependent");
}

namespace {

// Index of the row (>= from) with smallest nonzero |m(i, col)|, ties by
// lowest index; rows() if the column is zero there.
std::size_t min_pivot_row(const IntMatrix& m, std::size_t from, std::size_t col) {
  std::size_t best = m.rows();
  for (std::size_t i = from; i < m.rows(); ++i) {
    if (m(i, col) == 0) continue;
    if (best == m.rows() || abs(m(i, col)) < abs(m(best, col))) best = i;
  }
  return best;
}

}  // namespace

HermiteForm hnf(const IntMatrix& input) {
  IntMatrix h = input;
  IntMatrix u = IntMatrix::identity(input.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (;;) {
      std::size_t p = min_pivot_row(h, r, c);
      if (p == h.rows()) break;
      h.swap_rows(r, p);
      u.swap_rows(r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t k = 0; k < r; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(k, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (q == 0) continue;
      h.add_row_multiple(k, r, -q);
      u.add_row_multiple(k, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u), r};
}

SmithForm snf(const IntMatrix& input) {
  IntMatrix s = input;
  IntMatrix u = IntMatrix::identity(input.rows());
  IntMatrix v = IntMatrix::identity(input.cols());
  const std::size_t lim = std::min(s.rows(), s.cols());
  std::size_t t = 0;
  for (; t < lim; ++t) {
    // smallest nonzero entry of the trailing block moves to (t, t)
    auto place_min = [&]() {
      std::size_t bi = s.rows(), bj = s.cols();
      for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
          if (s(i, j) == 0) continue;
          if (bi == s.rows() || abs(s(i, j)) < abs(s(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == s.rows()) return false;
      s.swap_rows(t, bi);
      u.swap_rows(t, bi);
      s.swap_cols(t, bj);
      v.swap_cols(t, bj);
      return true;
    };
    if (!place_min()) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) {
        place_min();
        continue;
      }
      // divisibility: fold an offending row into row t and repeat
      bool divides = true;
      for (std::size_t i = t + 1; i < s.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            s.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(s), std::move(u), std::move(v), t};
}

IntMatrix lattice_basis(const IntMatrix& m) {
  HermiteForm h = hnf(m);
  return h.form.row_range(0, h.rank);
}

IntMatrix kernel_basis(const IntMatrix& m) {
  // U * M^T = H; rows of U opposite the zero rows of H span the kernel
  HermiteForm h = hnf(m.transpose());
  IntMatrix k = h.transform.row_range(h.rank, h.transform.rows());
  if (k.rows() == 0) return IntMatrix(0, m.cols());
  return lattice_basis(k);
}

Integer saturation_index(const IntMatrix& b) {
  if (rank(b) != b.rows())
    throw Error(ErrorCode::DependentRows, "rows are rationally dependent");
  SmithForm s = snf(b);
  Integer idx = 1;
  for (std::size_t i = 0; i < s.rank; ++i) idx *= s.diagonal(i, i);
  return idx;
}

IntMatrix saturation(const IntMatrix& b) {
  IntMatrix k = kernel_basis(b);
  if (k.rows() == 0) return lattice_basis(IntMatrix::identity(b.cols()));
  IntMatrix sat = kernel_basis(k);
  if (sat.rows() == 0) return IntMatrix(0, b.cols());
  return sat;
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return lattice_basis(a) == lattice_basis(b);
}

bool in_lattice(const IntMatrix& basis, const IntVector& v) {
  if (v.size() != basis.cols()) return false;
  IntMatrix ext(basis.rows() + 1, basis.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = 0; j < basis.cols(); ++j) ext(i, j) = basis(i, j);
  for (std::size_t j = 0; j < v.size(); ++j) ext(basis.rows(), j) = v[j];
  return lattice_equal(basis, ext);
}

namespace {

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer nearest(const Rational& q) {
  Rational h = q + Rational(1, 2);
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return f;
}

}  // namespace

IntMatrix reduced_basis(const IntMatrix& b) {
  const std::size_t r = b.rows(), c = b.cols();
  if (r > 0 && rank(b) != r) throw Error(ErrorCode::DependentRows, "basis rows are dependent");
  std::vector<IntVector> v;
  for (std::size_t i = 0; i < r; ++i) v.push_back(b.row_vector(i));

  std::vector<RatVector> star(r);
  std::vector<std::vector<Rational>> mu(r, std::vector<Rational>(r));
  std::vector<Rational> len(r);
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < r; ++i) {
      star[i].assign(c, 0);
      for (std::size_t t = 0; t < c; ++t) star[i][t] = v[i][t];
      for (std::size_t j = 0; j < i; ++j) {
        RatVector vi(c);
        for (std::size_t t = 0; t < c; ++t) vi[t] = v[i][t];
        mu[i][j] = dot(vi, star[j]) / len[j];
        for (std::size_t t = 0; t < c; ++t) star[i][t] -= mu[i][j] * star[j][t];
      }
      len[i] = dot(star[i], star[i]);
    }
  };

  const Rational delta(99, 100);
  gram_schmidt();
  std::size_t k = 1;
  while (k < r) {
    for (std::size_t jj = k; jj-- > 0;) {
      Integer q = nearest(mu[k][jj]);
      if (q == 0) continue;
      for (std::size_t t = 0; t < c; ++t) v[k][t] -= q * v[jj][t];
      gram_schmidt();
    }
    if (len[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * len[k - 1]) {
      ++k;
    } else {
      std::swap(v[k], v[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }

  for (auto& row : v) {
    for (std::size_t t = c; t-- > 0;) {
      if (row[t] == 0) continue;
      if (row[t] > 0)
        for (auto& e : row) e = -e;
      break;
    }
  }
  auto norm2 = [](const IntVector& x) {
    Integer s = 0;
    for (const auto& e : x) s += e * e;
    return s;
  };
  std::sort(v.begin(), v.end(), [&](const IntVector& a, const IntVector& b2) {
    Integer na = norm2(a), nb = norm2(b2);
    if (na != nb) return na < nb;
    return a < b2;
  });
  IntMatrix out(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t t = 0; t < c; ++t) out(i, t) = v[i][t];
  return out;
}

ExponentMatrix quotient_images(const WeightBasis& b) {
  const IntMatrix& rows = b.matrix();
  Integer idx = saturation_index(rows);
  if (idx != 1)
    throw NotPrimitiveError("weights are not primitive (saturation index " + idx.get_str() + ")",
                            idx);
  // B primitive: b |-> (W b) has kernel exactly ZB, and the rows of W form
  // a saturated lattice, so the columns of W generate Z^{m+n}.
  IntMatrix w = reduced_basis(kernel_basis(rows));
  Dims dims = b.dims();
  if (w.rows() != dims.torus_dim())
    throw Error(ErrorCode::InvalidInput, "weight dims inconsistent with quotient rank");
  return ExponentMatrix(dims, std::move(w));
}

}  // namespace galedual
