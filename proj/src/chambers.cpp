#include "conelab/chambers.hpp"

#include <functional>

namespace conelab {

namespace {

// Fourier-Motzkin on strict homogeneous systems c.y > 0, y in Q^d.
// Returns a witness or nullopt.
std::optional<VecQ> fm_solve(std::vector<RowQ> rows, int d) {
  if (d == 0) return rows.empty() ? std::optional<VecQ>(VecQ(0)) : std::nullopt;
  // eliminate last variable
  std::vector<RowQ> pos, neg, zero;
  for (auto& r : rows) {
    const Rat& c = r(d - 1);
    if (c > 0) pos.push_back(r);
    else if (c < 0) neg.push_back(r);
    else {
      if (d == 1) return std::nullopt;  // constant row "0 > 0"
      zero.push_back(r);
    }
  }
  std::vector<RowQ> next;
  for (auto& z : zero) next.push_back(z.head(d - 1));
  for (auto& p : pos)
    for (auto& n : neg) {
      RowQ comb = p(d - 1) * n.head(d - 1) - n(d - 1) * p.head(d - 1);
      bool allzero = true;
      for (int i = 0; i < d - 1; ++i)
        if (comb(i) != 0) { allzero = false; break; }
      if (allzero) return std::nullopt;  // 0 > 0 after combination
      next.push_back(comb);
    }
  auto sub = fm_solve(next, d - 1);
  if (!sub) return std::nullopt;
  VecQ y(d);
  y.head(d - 1) = *sub;
  // bounds for y_{d-1}: p: y > lower, n: y < upper
  bool has_lo = false, has_hi = false;
  Rat lo(0), hi(0);
  for (auto& p : pos) {
    Rat v = 0;
    for (int i = 0; i < d - 1; ++i) v += p(i) * y(i);
    Rat bound = -v / p(d - 1);
    if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
  }
  for (auto& n : neg) {
    Rat v = 0;
    for (int i = 0; i < d - 1; ++i) v += n(i) * y(i);
    Rat bound = -v / n(d - 1);
    if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
  }
  if (has_lo && has_hi) {
    if (!(lo < hi)) return std::nullopt;  // paranoia; FM should have caught it
    y(d - 1) = (lo + hi) / 2;
  } else if (has_lo) {
    y(d - 1) = lo + 1;
  } else if (has_hi) {
    y(d - 1) = hi - 1;
  } else {
    y(d - 1) = 0;
  }
  return y;
}

} // namespace

std::optional<VecQ> strict_feasible(const std::vector<VecQ>& strict,
                                    const std::vector<VecQ>& zero,
                                    const MatQ& space) {
  // coordinates: x = W y where W spans {x in span(space): zero constraints}
  MatQ w = space;
  if (!zero.empty()) {
    MatQ cond(static_cast<int>(zero.size()), space.cols());
    for (size_t i = 0; i < zero.size(); ++i) cond.row(i) = zero[i].transpose() * space;
    MatQ k = kernel_basis(cond);
    w = space * k;
  }
  const int d = static_cast<int>(w.cols());
  std::vector<RowQ> rows;
  for (auto& s : strict) {
    RowQ r = s.transpose() * w;
    bool allzero = true;
    for (int i = 0; i < d; ++i)
      if (r(i) != 0) { allzero = false; break; }
    if (allzero) return std::nullopt;  // strict constraint vanishes identically
    rows.push_back(r);
  }
  auto y = fm_solve(rows, d);
  if (!y) return std::nullopt;
  return VecQ(w * *y);
}

std::vector<ArrangementFace> arrangement_faces(const std::vector<VecQ>& hyperplanes,
                                               const MatQ& space) {
  std::vector<VecQ> relevant;
  for (auto& h : hyperplanes) {
    RowQ r = h.transpose() * space;
    if (!r.isZero(Rat(0))) relevant.push_back(h);
  }
  const int m = static_cast<int>(relevant.size());

  // flats: closure of {space} under intersection with hyperplanes
  std::vector<MatQ> flats{space};
  for (size_t qi = 0; qi < flats.size(); ++qi) {
    MatQ f = flats[qi];
    for (auto& h : relevant) {
      RowQ r = h.transpose() * f;
      if (r.isZero(Rat(0))) continue;
      MatQ k = kernel_basis(r);
      MatQ sub = f * k;
      bool seen = false;
      for (auto& g : flats)
        if (g.cols() == sub.cols() && spans_same(g, sub)) { seen = true; break; }
      if (!seen) flats.push_back(sub);
    }
  }

  std::vector<ArrangementFace> out;
  for (auto& f : flats) {
    // hyperplanes cutting this flat, grouped into rays (proportional on f)
    std::vector<int> cut;
    std::vector<VecQ> zero_on_f;
    for (int i = 0; i < m; ++i) {
      RowQ r = relevant[i].transpose() * f;
      if (r.isZero(Rat(0))) zero_on_f.push_back(relevant[i]);
      else cut.push_back(i);
    }
    std::vector<int> ray_rep;  // representative index per proportionality class
    std::vector<int> ray_of(cut.size());
    std::vector<Rat> ray_factor(cut.size());  // relevant[i] = factor * rep on f
    for (size_t a = 0; a < cut.size(); ++a) {
      RowQ ra = relevant[cut[a]].transpose() * f;
      bool found = false;
      for (size_t k = 0; k < ray_rep.size() && !found; ++k) {
        RowQ rb = relevant[ray_rep[k]].transpose() * f;
        // proportional? ra = t rb
        int piv = -1;
        for (int j = 0; j < rb.cols(); ++j)
          if (rb(j) != 0) { piv = j; break; }
        Rat t = ra(piv) / rb(piv);
        if ((ra - t * rb).isZero(Rat(0))) {
          ray_of[a] = static_cast<int>(k);
          ray_factor[a] = t;
          found = true;
        }
      }
      if (!found) {
        ray_rep.push_back(cut[a]);
        ray_of[a] = static_cast<int>(ray_rep.size()) - 1;
        ray_factor[a] = 1;
      }
    }
    const int nrays = static_cast<int>(ray_rep.size());
    // enumerate chambers of the induced arrangement
    std::vector<int> s(nrays, 1);
    std::function<void(int)> rec = [&](int i) {
      if (i == nrays) {
        std::vector<VecQ> strict;
        for (int k = 0; k < nrays; ++k)
          strict.push_back(s[k] > 0 ? relevant[ray_rep[k]] : VecQ(-relevant[ray_rep[k]]));
        auto w = strict_feasible(strict, {}, f);
        if (!w) return;
        ArrangementFace face;
        face.flat = f;
        face.interior = *w;
        face.sign.assign(hyperplanes.size(), 0);
        for (size_t a = 0; a < hyperplanes.size(); ++a) {
          Rat v = hyperplanes[a].dot(face.interior);
          face.sign[a] = v > 0 ? 1 : (v < 0 ? -1 : 0);
        }
        out.push_back(std::move(face));
        return;
      }
      s[i] = 1;
      rec(i + 1);
      s[i] = -1;
      rec(i + 1);
    };
    if (nrays == 0) {
      ArrangementFace face;
      face.flat = f;
      face.interior = VecQ::Zero(space.rows());
      face.sign.assign(hyperplanes.size(), 0);
      out.push_back(std::move(face));
    } else {
      rec(0);
    }
  }
  return out;
}

} // namespace conelab
