#include "conelab/linalg.hpp"

#include <boost/math/constants/constants.hpp>

namespace conelab {

BigFloat const& big_pi() {
  static const BigFloat pi = boost::math::constants::pi<BigFloat>();
  return pi;
}

int rank_of(const MatQ& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::FullPivLU<MatQ> lu(a);
  return static_cast<int>(lu.rank());
}

std::optional<VecQ> solve_exact(const MatQ& a, const VecQ& b) {
  if (a.cols() == 0) {
    if (b.isZero(Rat(0))) return VecQ(0);
    return std::nullopt;
  }
  Eigen::FullPivLU<MatQ> lu(a);
  VecQ x = lu.solve(b);
  if ((a * x - b).isZero(Rat(0))) return x;
  return std::nullopt;
}

MatQ kernel_basis(const MatQ& a) {
  if (a.cols() == 0) return MatQ(0, 0);
  Eigen::FullPivLU<MatQ> lu(a);
  if (lu.dimensionOfKernel() == 0) return MatQ(a.cols(), 0);
  return lu.kernel();
}

MatQ inverse_exact(const MatQ& a) {
  Eigen::FullPivLU<MatQ> lu(a);
  if (!lu.isInvertible()) throw std::runtime_error("matrix not invertible");
  return lu.inverse();
}

MatQ orth_projector(const MatQ& cols, const MatQ& gram) {
  const auto n = gram.rows();
  if (cols.cols() == 0) return MatQ::Zero(n, n);
  MatQ gramian = cols.transpose() * gram * cols;
  return cols * inverse_exact(gramian) * cols.transpose() * gram;
}

MatQ orth_complement(const MatQ& sub, const MatQ& whole, const MatQ& gram) {
  if (whole.cols() == 0) return MatQ(gram.rows(), 0);
  if (sub.cols() == 0) return whole;
  // x = whole*c with sub^T G whole c = 0
  MatQ cond = sub.transpose() * gram * whole;
  MatQ k = kernel_basis(cond);
  return whole * k;
}

bool contains_span(const MatQ& big, const MatQ& small) {
  for (int j = 0; j < small.cols(); ++j)
    if (!solve_exact(big, small.col(j))) return false;
  return true;
}

bool spans_same(const MatQ& a, const MatQ& b) {
  return contains_span(a, b) && contains_span(b, a);
}

MatZ integerize(const MatQ& a, Int& denom_out) {
  Int d = 1;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) d = lcm_int(d, a(i, j).get_den());
  MatZ m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      Rat v = a(i, j) * Rat(d);
      m(i, j) = v.get_num();
    }
  denom_out = d;
  return m;
}

MatQ to_ratmat(const MatZ& a) {
  MatQ m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = Rat(a(i, j));
  return m;
}

namespace {

void swap_rows(MatZ& m, int i, int j) { m.row(i).swap(m.row(j)); }
void swap_cols(MatZ& m, int i, int j) { m.col(i).swap(m.col(j)); }

} // namespace

SmithForm smith_form(const MatZ& a) {
  SmithForm s;
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  s.d = a;
  s.u = MatZ::Identity(m, m);
  s.u_inv = MatZ::Identity(m, m);
  s.v = MatZ::Identity(n, n);
  s.v_inv = MatZ::Identity(n, n);
  MatZ& d = s.d;

  auto row_op = [&](int dst, int src, const Int& q) {
    // row dst -= q*row src  (in u*a*v); keeps u_inv consistent
    d.row(dst) -= q * d.row(src);
    s.u.row(dst) -= q * s.u.row(src);
    s.u_inv.col(src) += q * s.u_inv.col(dst);
  };
  auto col_op = [&](int dst, int src, const Int& q) {
    d.col(dst) -= q * d.col(src);
    s.v.col(dst) -= q * s.v.col(src);
    s.v_inv.row(src) += q * s.v_inv.row(dst);
  };

  int t = 0;
  const int bound = std::min(m, n);
  while (t < bound) {
    // find smallest nonzero |entry| in d(t:, t:)
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (d(i, j) != 0) {
          Int av = abs(d(i, j));
          if (pi < 0 || av < best) { best = av; pi = i; pj = j; }
        }
    if (pi < 0) break;
    if (pi != t) { swap_rows(d, t, pi); swap_rows(s.u, t, pi); swap_cols(s.u_inv, t, pi); }
    if (pj != t) { swap_cols(d, t, pj); swap_cols(s.v, t, pj); swap_rows(s.v_inv, t, pj); }

    bool clean = true;
    for (int i = t + 1; i < m; ++i)
      if (d(i, t) != 0) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_op(i, t, q);
        if (d(i, t) != 0) clean = false;
      }
    for (int j = t + 1; j < n; ++j)
      if (d(t, j) != 0) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_op(j, t, q);
        if (d(t, j) != 0) clean = false;
      }
    if (!clean) continue;  // pivot shrank; repeat at same t

    // pivot must divide the remaining block for the divisibility chain
    bool divides = true;
    for (int i = t + 1; i < m && divides; ++i)
      for (int j = t + 1; j < n && divides; ++j)
        if (d(i, j) % d(t, t) != 0) {
          row_op(t, i, Int(-1));  // fold row i into row t, then restart
          divides = false;
        }
    if (!divides) continue;
    ++t;
  }
  for (int i = 0; i < bound; ++i) {
    if (d(i, i) < 0) {
      d.row(i) = (-d.row(i)).eval();
      s.u.row(i) = (-s.u.row(i)).eval();
      s.u_inv.col(i) = (-s.u_inv.col(i)).eval();
    }
    if (d(i, i) != 0) {
      s.diag.push_back(d(i, i));
      ++s.rank;
    }
  }
  return s;
}

MatZ int_kernel(const MatZ& a) {
  SmithForm s = smith_form(a);
  const int n = static_cast<int>(a.cols());
  const int r = s.rank;
  MatZ k(n, n - r);
  for (int j = r; j < n; ++j) k.col(j - r) = s.v.col(j);
  return k;
}

MatZ int_column_span(const MatZ& a) {
  SmithForm s = smith_form(a);
  // columns of u_inv * d span the same Z-module as columns of a
  MatZ gen = s.u_inv * s.d;
  MatZ out(a.rows(), s.rank);
  int c = 0;
  for (int j = 0; j < s.d.cols() && c < s.rank; ++j) {
    bool nz = false;
    for (int i = 0; i < a.rows(); ++i)
      if (gen(i, j) != 0) { nz = true; break; }
    if (nz) out.col(c++) = gen.col(j);
  }
  return out;
}

std::optional<VecZ> solve_int(const MatZ& a, const VecZ& b) {
  SmithForm s = smith_form(a);
  VecZ c = s.u * b;
  VecZ y = VecZ::Zero(a.cols());
  for (int i = 0; i < a.cols() && i < a.rows(); ++i) {
    if (i < static_cast<int>(s.rank)) {
      if (c(i) % s.d(i, i) != 0) return std::nullopt;
      y(i) = c(i) / s.d(i, i);
    }
  }
  for (int i = s.rank; i < a.rows(); ++i)
    if (c(i) != 0) return std::nullopt;
  return VecZ(s.v * y);
}

Int det_int(const MatZ& a) {
  SmithForm s = smith_form(a);
  if (s.rank < a.rows() || a.rows() != a.cols()) return 0;
  Int p = 1;
  for (auto& d : s.diag) p *= d;
  // sign is lost in SNF; recompute via rational determinant
  Rat dr = det_rat(to_ratmat(a));
  return dr < 0 ? Int(-p) : p;
}

Rat det_rat(const MatQ& a) {
  if (a.rows() == 0) return Rat(1);
  return a.determinant();
}

} // namespace conelab
