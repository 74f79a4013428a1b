#pragma once

// Exact scalar types shared by the whole library: GMP rationals as the Eigen
// scalar, plus the high-precision floating backend used by numeric oracles.

#include <gmpxx.h>
#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace conelab {

using Rat = mpq_class;
using Int = mpz_class;

} // namespace conelab

namespace Eigen {

template <> struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

namespace internal {
// Pivot scoring for FullPivLU: gmpxx abs() returns an expression template, so
// Eigen needs an explicit functor returning a plain value.
template <> struct scalar_score_coeff_op<mpq_class> {
  struct result_type : mpq_class {
    result_type() : mpq_class(0) {}
    result_type(const mpq_class& v) : mpq_class(::abs(v)) {}
  };
  result_type operator()(const mpq_class& a) const { return result_type(a); }
};
} // namespace internal

} // namespace Eigen

namespace conelab {

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RowQ = Eigen::Matrix<Rat, 1, Eigen::Dynamic>;

namespace mp = boost::multiprecision;
using BigFloat = mp::number<mp::cpp_bin_float<220>>;
using BigComplex = mp::cpp_complex<220>;

inline Rat rat_of(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "a/b" or "a".
inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline BigFloat to_bigfloat(const Rat& r) {
  return BigFloat(r.get_num().get_str()) / BigFloat(r.get_den().get_str());
}

BigFloat const& big_pi();

// Fractional part in [0,1).
inline Rat frac(const Rat& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  Rat r = q - Rat(fl);
  r.canonicalize();
  return r;
}

inline Int floor_int(const Rat& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return fl;
}

inline Int ceil_int(const Rat& q) {
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return c;
}

inline long to_long(const Int& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("integer too large for long");
  return n.get_si();
}

inline Int lcm_int(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Deterministic RNG used by all randomized suites; the sequence is part of the
// regression surface, so no std:: distributions here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545f4914f6cdd1dull;
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  Rat rat(long max_num, long max_den) {
    long den = range(1, max_den);
    long num = range(-max_num, max_num);
    return rat_of(num, den);
  }

 private:
  std::uint64_t state_;
};

} // namespace conelab
