#include "conelab/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace conelab {

Lattice::Lattice(MatQ b, std::string lab) : ambient(static_cast<int>(b.rows())), basis(std::move(b)), label(std::move(lab)) {
  if (basis.cols() > 0 && rank_of(basis) != basis.cols())
    throw std::invalid_argument("lattice basis not of full column rank");
}

Lattice Lattice::standard(int n, std::string lab) {
  return Lattice(MatQ::Identity(n, n), std::move(lab));
}

Lattice Lattice::zero(int n) { return Lattice(MatQ(n, 0)); }

std::optional<VecQ> Lattice::span_coords(const VecQ& x) const {
  return solve_exact(basis, x);
}

bool Lattice::in_span(const VecQ& x) const { return span_coords(x).has_value(); }

bool Lattice::contains(const VecQ& x) const {
  auto c = span_coords(x);
  if (!c) return false;
  for (int i = 0; i < c->size(); ++i)
    if ((*c)(i).get_den() != 1) return false;
  return true;
}

VecQ Lattice::point(const VecZ& coords) const {
  VecQ c(coords.size());
  for (int i = 0; i < coords.size(); ++i) c(i) = Rat(coords(i));
  return basis * c;
}

bool Lattice::contains_lattice(const Lattice& other) const {
  for (int j = 0; j < other.basis.cols(); ++j)
    if (!contains(other.basis.col(j))) return false;
  return true;
}

bool Lattice::same_lattice(const Lattice& other) const {
  return contains_lattice(other) && other.contains_lattice(*this);
}

Rat Lattice::covolume_sq(const MatQ& gram) const {
  if (rank() == 0) return Rat(1);
  MatQ g = basis.transpose() * gram * basis;
  return det_rat(g);
}

Lattice image_lattice(const Lattice& l, const MatQ& map) {
  MatQ cols = map * l.basis;
  if (cols.cols() == 0) return Lattice(MatQ(map.rows(), 0), l.label);
  Int d;
  MatZ c = integerize(cols, d);
  MatZ span = int_column_span(c);
  return Lattice(to_ratmat(span) / Rat(d), l.label);
}

Lattice kernel_lattice(const Lattice& l, const MatQ& proj) {
  if (l.rank() == 0) return l;
  Int d;
  MatZ c = integerize(proj * l.basis, d);
  MatZ k = int_kernel(c);
  return Lattice(l.basis * to_ratmat(k));
}

Lattice intersect_lattices(const Lattice& l1, const Lattice& l2) {
  if (l1.rank() == 0 || l2.rank() == 0) return Lattice::zero(l1.ambient);
  MatQ joint(l1.ambient, l1.rank() + l2.rank());
  joint << l1.basis, -l2.basis;
  Int d;
  MatZ c = integerize(joint, d);
  MatZ k = int_kernel(c);
  MatZ top = k.topRows(l1.rank());
  return Lattice(l1.basis * to_ratmat(top));
}

Lattice sum_lattices(const Lattice& l1, const Lattice& l2) {
  MatQ joint(l1.ambient, l1.rank() + l2.rank());
  joint << l1.basis, l2.basis;
  if (joint.cols() == 0) return Lattice::zero(l1.ambient);
  Int d;
  MatZ c = integerize(joint, d);
  MatZ span = int_column_span(c);
  return Lattice(to_ratmat(span) / Rat(d));
}

Lattice refine(const Lattice& l, const Int& k) {
  if (k <= 0) throw std::invalid_argument("refine: k must be >= 1");
  Lattice out = l;
  out.basis = l.basis / Rat(k);
  return out;
}

Rat index_by_det(const Lattice& big, const Lattice& small) {
  if (big.rank() != small.rank()) throw std::invalid_argument("index_by_det: ranks differ");
  if (big.rank() == 0) return Rat(1);
  MatQ coords(big.rank(), small.rank());
  for (int j = 0; j < small.rank(); ++j) {
    auto c = big.span_coords(small.basis.col(j));
    if (!c) throw std::invalid_argument("index_by_det: not a sublattice of the span");
    coords.col(j) = *c;
  }
  Rat d = det_rat(coords);
  return d < 0 ? Rat(-d) : d;
}

std::pair<bool, std::pair<Int, Int>> commensurable(const Lattice& l1, const Lattice& l2) {
  Lattice m = intersect_lattices(l1, l2);
  if (m.rank() != l1.rank() || m.rank() != l2.rank()) return {false, {0, 0}};
  FiniteAbelianGroup q1 = quotient(l1, m);
  FiniteAbelianGroup q2 = quotient(l2, m);
  return {true, {q1.order(), q2.order()}};
}

FiniteAbelianGroup quotient(const Lattice& big, const Lattice& small) {
  FiniteAbelianGroup g;
  g.big = big;
  g.small = small;
  if (small.rank() != big.rank())
    throw std::invalid_argument("quotient: free part present (ranks differ)");
  if (big.rank() == 0) return g;
  MatQ coords(big.rank(), small.rank());
  for (int j = 0; j < small.rank(); ++j) {
    auto c = big.span_coords(small.basis.col(j));
    if (!c) throw std::invalid_argument("quotient: small not inside big's span");
    coords.col(j) = *c;
  }
  Int d;
  MatZ m = integerize(coords, d);
  if (d != 1) throw std::invalid_argument("quotient: small is not a sublattice of big");
  SmithForm s = smith_form(m);
  if (s.rank < small.rank()) throw std::invalid_argument("quotient: degenerate sublattice");
  g.u = s.u;
  g.u_inv = s.u_inv;
  for (int i = 0; i < s.rank; ++i) {
    if (s.d(i, i) > 1) {
      g.factors.push_back(s.d(i, i));
      g.factor_rows.push_back(i);
    }
  }
  return g;
}

Int FiniteAbelianGroup::order() const {
  Int o = 1;
  for (auto& f : factors) o *= f;
  return o;
}

std::vector<Int> FiniteAbelianGroup::project(const VecQ& x) const {
  auto c = big.span_coords(x);
  if (!c) throw std::invalid_argument("project: point outside lattice span");
  VecZ ci(c->size());
  for (int i = 0; i < c->size(); ++i) {
    if ((*c)(i).get_den() != 1) throw std::invalid_argument("project: point not in lattice");
    ci(i) = (*c)(i).get_num();
  }
  VecZ y = u * ci;
  std::vector<Int> out;
  for (size_t k = 0; k < factors.size(); ++k) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), y(factor_rows[k]).get_mpz_t(), factors[k].get_mpz_t());
    out.push_back(r);
  }
  return out;
}

VecQ FiniteAbelianGroup::lift(const std::vector<Int>& cls) const {
  VecZ y = VecZ::Zero(big.rank());
  for (size_t k = 0; k < factors.size(); ++k) y(factor_rows[k]) = cls[k];
  VecZ c = u_inv * y;
  return big.point(c);
}

std::vector<std::vector<Int>> FiniteAbelianGroup::elements() const {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(factors.size(), 0);
  if (factors.empty()) {
    out.push_back(cur);
    return out;
  }
  while (true) {
    out.push_back(cur);
    size_t i = 0;
    while (i < factors.size()) {
      cur[i] += 1;
      if (cur[i] < factors[i]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == factors.size()) break;
  }
  return out;
}

std::vector<CharacterAngle> dual_characters(const FiniteAbelianGroup& g) {
  std::vector<CharacterAngle> out;
  if (g.big.rank() == 0) {
    out.push_back(CharacterAngle{RowQ::Zero(g.big.ambient)});
    return out;
  }
  // coordinates functional on span(big): pinv = (B^T B)^{-1} B^T
  const MatQ& b = g.big.basis;
  MatQ pinv = inverse_exact(b.transpose() * b) * b.transpose();
  for (auto& cls : g.elements()) {
    RowQ ang = RowQ::Zero(g.big.ambient);
    for (size_t k = 0; k < g.factors.size(); ++k) {
      Rat coef(cls[k], g.factors[k]);
      coef.canonicalize();
      ang += coef * (to_ratmat(g.u).row(g.factor_rows[k]) * pinv);
    }
    out.push_back(CharacterAngle{ang});
  }
  return out;
}

namespace {

// crude rational upper bound for sqrt(r), r >= 0
Int sqrt_upper(const Rat& r) {
  if (r <= 0) return 0;
  Int c = ceil_int(r);
  Int s;
  mpz_sqrt(s.get_mpz_t(), c.get_mpz_t());
  return s + 1;
}

void enumerate_box(const Lattice& l, const VecQ& offset, const MatQ& gmat,
                   const VecQ& center, const Rat& bound_sq,
                   const std::function<void(const VecQ&, const VecQ&)>& emit) {
  const int r = l.rank();
  MatQ ginv = inverse_exact(gmat);
  std::vector<long> lo(r), hi(r);
  for (int i = 0; i < r; ++i) {
    Rat s2 = ginv(i, i) * bound_sq;
    Int ub = sqrt_upper(s2);
    lo[i] = to_long(ceil_int(center(i) - Rat(ub)));
    hi[i] = to_long(floor_int(center(i) + Rat(ub)));
  }
  VecZ m(r);
  std::function<void(int)> rec = [&](int i) {
    if (i == r) {
      VecQ mq(r);
      for (int j = 0; j < r; ++j) mq(j) = Rat(m(j));
      VecQ diff = mq - center;
      Rat q = (diff.transpose() * gmat * diff)(0, 0);
      if (q <= bound_sq) emit(offset + l.basis * mq, mq);
      return;
    }
    for (long v = lo[i]; v <= hi[i]; ++v) {
      m(i) = v;
      rec(i + 1);
    }
  };
  rec(0);
}

} // namespace

std::vector<VecQ> lattice_points_in_ball(const Lattice& l, const VecQ& offset,
                                         const Rat& radius_sq, const MatQ& gram) {
  std::vector<VecQ> out;
  if (radius_sq < 0) return out;
  if (l.rank() == 0) {
    Rat n = (offset.transpose() * gram * offset)(0, 0);
    if (n <= radius_sq) out.push_back(offset);
    return out;
  }
  MatQ gmat = l.basis.transpose() * gram * l.basis;
  // minimize (offset + B m)^T G (offset + B m) over real m
  VecQ rhs = -(l.basis.transpose() * gram * offset);
  VecQ center = inverse_exact(gmat) * rhs;
  VecQ xmin = offset + l.basis * center;
  Rat minval = (xmin.transpose() * gram * xmin)(0, 0);
  Rat bound_sq = radius_sq - minval;
  if (bound_sq < 0) return out;
  enumerate_box(l, offset, gmat, center, bound_sq,
                [&](const VecQ& x, const VecQ&) { out.push_back(x); });
  return out;
}

std::vector<VecQ> lattice_points_in_polytope(
    const Lattice& l, const VecQ& offset,
    const std::vector<std::pair<RowQ, Rat>>& ineqs, const MatQ& gram) {
  std::vector<VecQ> out;
  auto feasible = [&](const VecQ& x) {
    for (auto& [a, b] : ineqs)
      if ((a * x)(0, 0) > b) return false;
    return true;
  };
  const int r = l.rank();
  if (r == 0) {
    if (feasible(offset)) out.push_back(offset);
    return out;
  }
  // constraints in lattice coordinates: (a B) m <= b - a offset
  std::vector<RowQ> am;
  std::vector<Rat> bm;
  for (auto& [a, b] : ineqs) {
    am.push_back(a * l.basis);
    bm.push_back(b - (a * offset)(0, 0));
  }
  // vertex enumeration of the m-polytope
  const int k = static_cast<int>(am.size());
  std::vector<VecQ> verts;
  std::vector<int> idx(r);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == r) {
      MatQ a(r, r);
      VecQ b(r);
      for (int i = 0; i < r; ++i) {
        a.row(i) = am[idx[i]];
        b(i) = bm[idx[i]];
      }
      if (rank_of(a) < r) return;
      VecQ v = inverse_exact(a) * b;
      for (int i = 0; i < k; ++i)
        if ((am[i] * v)(0, 0) > bm[i]) return;
      verts.push_back(v);
      return;
    }
    for (int i = start; i < k; ++i) {
      idx[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
  if (verts.empty()) return out;
  std::vector<long> lo(r), hi(r);
  for (int i = 0; i < r; ++i) {
    Rat mn = verts[0](i), mx = verts[0](i);
    for (auto& v : verts) {
      if (v(i) < mn) mn = v(i);
      if (v(i) > mx) mx = v(i);
    }
    lo[i] = to_long(ceil_int(mn));
    hi[i] = to_long(floor_int(mx));
  }
  VecZ m(r);
  std::function<void(int)> rec = [&](int i) {
    if (i == r) {
      VecQ mq(r);
      for (int j = 0; j < r; ++j) mq(j) = Rat(m(j));
      VecQ x = offset + l.basis * mq;
      if (feasible(x)) out.push_back(x);
      return;
    }
    for (long v = lo[i]; v <= hi[i]; ++v) {
      m(i) = v;
      rec(i + 1);
    }
  };
  rec(0);
  (void)gram;
  return out;
}

} // namespace conelab
