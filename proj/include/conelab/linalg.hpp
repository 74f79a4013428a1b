#pragma once

// Exact linear algebra helpers: rational solve/kernel/projection on top of
// Eigen's FullPivLU, and Smith normal form over arbitrary-precision integers.

#include "conelab/numeric.hpp"

#include <optional>
#include <vector>

namespace Eigen {
template <> struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};
} // namespace Eigen

namespace conelab {

using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

int rank_of(const MatQ& a);

// Consistent solve of a*x = b; nullopt if inconsistent.
std::optional<VecQ> solve_exact(const MatQ& a, const VecQ& b);

// Basis of the rational kernel (columns).
MatQ kernel_basis(const MatQ& a);

MatQ inverse_exact(const MatQ& a);

// Gram-orthogonal projection matrix onto span(cols) inside the ambient space.
// For an empty basis returns the zero map.
MatQ orth_projector(const MatQ& cols, const MatQ& gram);

// Basis of the gram-orthogonal complement of span(sub) inside span(whole).
MatQ orth_complement(const MatQ& sub, const MatQ& whole, const MatQ& gram);

// Basis completion: columns of `cols` extended to a basis of span(whole).
bool spans_same(const MatQ& a, const MatQ& b);
bool contains_span(const MatQ& big, const MatQ& small);

inline Rat pair(const VecQ& covector, const VecQ& x) { return covector.dot(x); }

// Smith normal form: u * a * v = d with u, v unimodular and the nonzero
// diagonal of d the invariant factors d1 | d2 | ...
struct SmithForm {
  MatZ d;
  MatZ u, v;       // transforms
  MatZ u_inv, v_inv;
  std::vector<Int> diag;  // nonzero invariant factors, divisibility chain
  int rank = 0;
};

SmithForm smith_form(const MatZ& a);

// Scales a rational matrix to an integer one; returns the common denominator.
MatZ integerize(const MatQ& a, Int& denom_out);

MatQ to_ratmat(const MatZ& a);

// Basis (columns) of the integer kernel {x in Z^c : a x = 0}.
MatZ int_kernel(const MatZ& a);

// Basis of the Z-span of the columns of a (full column rank result).
MatZ int_column_span(const MatZ& a);

// One integer solution of a x = b, if it exists.
std::optional<VecZ> solve_int(const MatZ& a, const VecZ& b);

Int det_int(const MatZ& a);
Rat det_rat(const MatQ& a);

} // namespace conelab
