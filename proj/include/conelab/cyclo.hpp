#pragma once

// Exact arithmetic in cyclotomic fields: finite sums sum_q c_q e^{2 pi i q}
// with rational q and coefficients, reduced modulo the cyclotomic polynomial
// of the conductor so that the zero test is exact.

#include "conelab/numeric.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace conelab {

// dense univariate rational polynomial (internal helper, also used by the
// cyclotomic tables)
struct PolyQ {
  std::vector<Rat> c;  // c[i] * x^i

  int degree() const;  // -1 for zero
  void normalize();
  bool is_zero() const { return degree() < 0; }
  static PolyQ monomial(const Rat& coeff, int power);
};

PolyQ poly_add(const PolyQ& a, const PolyQ& b);
PolyQ poly_sub(const PolyQ& a, const PolyQ& b);
PolyQ poly_mul(const PolyQ& a, const PolyQ& b);
// division with remainder; b nonzero
std::pair<PolyQ, PolyQ> poly_divmod(const PolyQ& a, const PolyQ& b);

// n-th cyclotomic polynomial (cached)
const PolyQ& cyclotomic_poly(long n);

class ExpSum {
 public:
  ExpSum() = default;
  /*implicit*/ ExpSum(const Rat& r) { if (r != 0) terms_[Rat(0)] = r; }
  /*implicit*/ ExpSum(long v) : ExpSum(Rat(v)) {}

  static ExpSum unit(const Rat& angle);  // e^{2 pi i angle}
  static ExpSum term(const Rat& coeff, const Rat& angle);

  ExpSum& operator+=(const ExpSum& o);
  ExpSum& operator-=(const ExpSum& o);
  friend ExpSum operator+(ExpSum a, const ExpSum& b) { a += b; return a; }
  friend ExpSum operator-(ExpSum a, const ExpSum& b) { a -= b; return a; }
  friend ExpSum operator*(const ExpSum& a, const ExpSum& b);
  friend ExpSum operator*(const Rat& a, ExpSum b);
  ExpSum operator-() const;

  bool is_zero() const;
  friend bool operator==(const ExpSum& a, const ExpSum& b) { return (a - b).is_zero(); }

  // exact rational value if the element lies in Q
  std::optional<Rat> as_rational() const;

  ExpSum inverse() const;  // field inverse; throws on zero

  // lcm of the denominators of the angles in reduced form
  long conductor() const;

  void reduce() const;  // canonicalize in place (terms_ is mutable)

  BigComplex numeric() const;

  std::string str() const;

  const std::map<Rat, Rat>& raw_terms() const { return terms_; }
  std::map<Rat, Rat> reduced_terms() const;

 private:
  mutable std::map<Rat, Rat> terms_;  // angle in [0,1) -> coefficient
  void maybe_compact();
};

// Gaussian elimination over the cyclotomic field for small systems.
// Returns a solution of a x = b; nullopt if inconsistent or rank-deficient.
std::optional<std::vector<ExpSum>> solve_cyclo(
    std::vector<std::vector<ExpSum>> a, std::vector<ExpSum> b);

} // namespace conelab
