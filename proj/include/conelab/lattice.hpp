#pragma once

// Lattices in rational vector spaces, finite quotients via Smith normal form,
// dual character groups and the finite Fourier transform.

#include "conelab/linalg.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace conelab {

struct Lattice {
  int ambient = 0;
  MatQ basis;          // ambient x rank, columns independent
  std::string label;

  Lattice() = default;
  Lattice(MatQ b, std::string lab = "");
  static Lattice standard(int n, std::string lab = "");
  static Lattice zero(int n);

  int rank() const { return static_cast<int>(basis.cols()); }
  bool is_zero() const { return rank() == 0; }

  // Rational coordinates w.r.t. the basis; nullopt if x is outside the span.
  std::optional<VecQ> span_coords(const VecQ& x) const;
  bool in_span(const VecQ& x) const;
  bool contains(const VecQ& x) const;  // integral coordinates
  VecQ point(const VecZ& coords) const;

  bool contains_lattice(const Lattice& other) const;
  bool same_lattice(const Lattice& other) const;

  // squared covolume w.r.t. a gram form: det(B^T G B)
  Rat covolume_sq(const MatQ& gram) const;
};

Lattice image_lattice(const Lattice& l, const MatQ& map);
Lattice kernel_lattice(const Lattice& l, const MatQ& proj);
Lattice intersect_lattices(const Lattice& l1, const Lattice& l2);
Lattice sum_lattices(const Lattice& l1, const Lattice& l2);
Lattice refine(const Lattice& l, const Int& k);

// (commensurable?, ([l1 : l1&l2], [l2 : l1&l2]))
std::pair<bool, std::pair<Int, Int>> commensurable(const Lattice& l1, const Lattice& l2);

// |big/small| for small <= big of equal rank, via determinant of the
// coordinate change (used as the cross-check against SNF orders).
Rat index_by_det(const Lattice& big, const Lattice& small);

struct FiniteAbelianGroup {
  Lattice big, small;
  std::vector<Int> factors;   // invariant factors > 1... includes 1s removed
  MatZ u;                     // SNF transform: coords in big -> pre-factor coords
  MatZ u_inv;
  std::vector<int> factor_rows;  // rows of u giving the nontrivial factors

  Int order() const;
  // factor coordinates of x in big (x must lie in big)
  std::vector<Int> project(const VecQ& x) const;
  // representative in big of the class with the given factor coordinates
  VecQ lift(const std::vector<Int>& cls) const;
  // all classes, as factor-coordinate tuples
  std::vector<std::vector<Int>> elements() const;
};

FiniteAbelianGroup quotient(const Lattice& big, const Lattice& small);

// A unitary character given as a rational angle functional: x -> e^{2 pi i <angle,x>}.
struct CharacterAngle {
  RowQ angle;  // ambient covector; only its values mod 1 on the lattice matter
  Rat eval_angle(const VecQ& x) const { return frac((angle * x)(0, 0)); }
};

// The |G| characters of big/small as angle functionals on `big` (trivial on small).
std::vector<CharacterAngle> dual_characters(const FiniteAbelianGroup& g);

// All lattice points x = offset + L*m with (x, x)_gram <= radius_sq.
std::vector<VecQ> lattice_points_in_ball(const Lattice& l, const VecQ& offset,
                                         const Rat& radius_sq, const MatQ& gram);

// All lattice points x = offset + L*m satisfying ineqs: a_i . x <= b_i
// (the polytope must be bounded inside the affine span).
std::vector<VecQ> lattice_points_in_polytope(
    const Lattice& l, const VecQ& offset,
    const std::vector<std::pair<RowQ, Rat>>& ineqs, const MatQ& gram);

} // namespace conelab
