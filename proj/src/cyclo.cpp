#include "conelab/cyclo.hpp"

#include <mutex>
#include <sstream>

namespace conelab {

int PolyQ::degree() const {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (c[i] != 0) return i;
  return -1;
}

void PolyQ::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

PolyQ PolyQ::monomial(const Rat& coeff, int power) {
  PolyQ p;
  p.c.assign(power + 1, Rat(0));
  p.c[power] = coeff;
  return p;
}

PolyQ poly_add(const PolyQ& a, const PolyQ& b) {
  PolyQ r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.normalize();
  return r;
}

PolyQ poly_sub(const PolyQ& a, const PolyQ& b) {
  PolyQ r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.normalize();
  return r;
}

PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
  PolyQ r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.normalize();
  return r;
}

std::pair<PolyQ, PolyQ> poly_divmod(const PolyQ& a, const PolyQ& b) {
  PolyQ rem = a, quot;
  rem.normalize();
  const int db = b.degree();
  if (db < 0) throw std::invalid_argument("poly division by zero");
  quot.c.assign(std::max<int>(0, a.degree() - db + 1), Rat(0));
  while (rem.degree() >= db) {
    int k = rem.degree() - db;
    Rat f = rem.c[rem.degree()] / b.c[db];
    quot.c[k] += f;
    for (int i = 0; i <= db; ++i) rem.c[i + k] -= f * b.c[i];
    rem.normalize();
  }
  quot.normalize();
  return {quot, rem};
}

const PolyQ& cyclotomic_poly(long n) {
  static std::map<long, PolyQ> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::function<PolyQ(long)> compute = [&](long m) -> PolyQ {
    auto c = cache.find(m);
    if (c != cache.end()) return c->second;
    PolyQ xm1;  // x^m - 1
    xm1.c.assign(m + 1, Rat(0));
    xm1.c[0] = -1;
    xm1.c[m] = 1;
    PolyQ phi = xm1;
    for (long d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      PolyQ pd = compute(d);
      auto [q, r] = poly_divmod(phi, pd);
      if (!r.is_zero()) throw std::logic_error("cyclotomic division failure");
      phi = q;
    }
    cache[m] = phi;
    return phi;
  };
  compute(n);
  return cache[n];
}

ExpSum ExpSum::unit(const Rat& angle) { return term(Rat(1), angle); }

ExpSum ExpSum::term(const Rat& coeff, const Rat& angle) {
  ExpSum s;
  if (coeff != 0) s.terms_[frac(angle)] = coeff;
  return s;
}

ExpSum& ExpSum::operator+=(const ExpSum& o) {
  for (auto& [q, c] : o.terms_) {
    auto [it, fresh] = terms_.try_emplace(q, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  maybe_compact();
  return *this;
}

ExpSum& ExpSum::operator-=(const ExpSum& o) {
  for (auto& [q, c] : o.terms_) {
    auto [it, fresh] = terms_.try_emplace(q, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  maybe_compact();
  return *this;
}

ExpSum operator*(const ExpSum& a, const ExpSum& b) {
  ExpSum r;
  for (auto& [qa, ca] : a.terms_)
    for (auto& [qb, cb] : b.terms_) {
      Rat q = frac(qa + qb);
      auto [it, fresh] = r.terms_.try_emplace(q, ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  r.maybe_compact();
  return r;
}

ExpSum operator*(const Rat& a, ExpSum b) {
  if (a == 0) return ExpSum();
  for (auto& [q, c] : b.terms_) c *= a;
  return b;
}

ExpSum ExpSum::operator-() const {
  ExpSum r = *this;
  for (auto& [q, c] : r.terms_) c = -c;
  return r;
}

void ExpSum::maybe_compact() {
  if (terms_.size() > 64) reduce();
}

long ExpSum::conductor() const {
  reduce();
  Int n = 1;
  for (auto& [q, c] : terms_) n = lcm_int(n, q.get_den());
  return terms_.empty() ? 1 : to_long(n);
}

void ExpSum::reduce() const {
  if (terms_.empty()) return;
  Int nn = 1;
  for (auto& [q, c] : terms_) nn = lcm_int(nn, q.get_den());
  long n = to_long(nn);
  PolyQ p;
  p.c.assign(n, Rat(0));
  for (auto& [q, c] : terms_) {
    Rat e = q * Rat(n);
    p.c[static_cast<size_t>(e.get_num().get_si())] += c;
  }
  p.normalize();
  const PolyQ& phi = cyclotomic_poly(n);
  if (p.degree() >= phi.degree()) p = poly_divmod(p, phi).second;
  terms_.clear();
  for (size_t i = 0; i < p.c.size(); ++i)
    if (p.c[i] != 0) {
      Rat q(static_cast<long>(i), n);
      q.canonicalize();
      terms_[q] = p.c[i];
    }
}

std::map<Rat, Rat> ExpSum::reduced_terms() const {
  reduce();
  return terms_;
}

bool ExpSum::is_zero() const {
  if (terms_.empty()) return true;
  reduce();
  return terms_.empty();
}

std::optional<Rat> ExpSum::as_rational() const {
  reduce();
  if (terms_.empty()) return Rat(0);
  if (terms_.size() == 1 && terms_.begin()->first == 0) return terms_.begin()->second;
  return std::nullopt;
}

ExpSum ExpSum::inverse() const {
  reduce();
  if (terms_.empty()) throw std::domain_error("ExpSum: inverse of zero");
  if (auto r = as_rational()) {
    ExpSum s;
    s.terms_[Rat(0)] = Rat(1) / *r;
    return s;
  }
  long n = conductor();
  const PolyQ& phi = cyclotomic_poly(n);
  PolyQ p;
  p.c.assign(phi.degree(), Rat(0));
  for (auto& [q, c] : terms_) {
    Rat e = q * Rat(n);
    p.c[static_cast<size_t>(e.get_num().get_si())] = c;
  }
  p.normalize();
  // extended euclid: s*p + t*phi = g (nonzero constant since phi irreducible)
  PolyQ r0 = phi, r1 = p;
  PolyQ s0, s1;
  s0.c = {};
  s1.c = {Rat(1)};
  while (r1.degree() > 0) {
    auto [q, r2] = poly_divmod(r0, r1);
    PolyQ s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r1.is_zero()) throw std::logic_error("ExpSum: non-invertible element");
  Rat g = r1.c[0];
  ExpSum out;
  for (size_t i = 0; i < s1.c.size(); ++i)
    if (s1.c[i] != 0) {
      Rat q(static_cast<long>(i), n);
      q.canonicalize();
      out.terms_[q] = s1.c[i] / g;
    }
  out.reduce();
  return out;
}

BigComplex ExpSum::numeric() const {
  BigComplex z(0, 0);
  const BigFloat two_pi = 2 * big_pi();
  for (auto& [q, c] : terms_) {
    BigFloat ang = two_pi * to_bigfloat(q);
    BigFloat cf = to_bigfloat(c);
    z += BigComplex(cf * cos(ang), cf * sin(ang));
  }
  return z;
}

std::string ExpSum::str() const {
  reduce();
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [q, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat ac = c > 0 ? c : Rat(-c);
    if (q == 0) {
      os << ac.get_str();
    } else {
      if (ac != 1) os << ac.get_str() << "*";
      os << "e(" << q.get_str() << ")";
    }
    first = false;
  }
  return os.str();
}

std::optional<std::vector<ExpSum>> solve_cyclo(
    std::vector<std::vector<ExpSum>> a, std::vector<ExpSum> b) {
  const size_t rows = a.size();
  if (rows == 0) return std::vector<ExpSum>{};
  const size_t cols = a[0].size();
  std::vector<size_t> pivot_col;
  size_t prow = 0;
  for (size_t col = 0; col < cols && prow < rows; ++col) {
    size_t sel = rows;
    for (size_t i = prow; i < rows; ++i)
      if (!a[i][col].is_zero()) { sel = i; break; }
    if (sel == rows) continue;
    std::swap(a[sel], a[prow]);
    std::swap(b[sel], b[prow]);
    ExpSum inv = a[prow][col].inverse();
    for (size_t j = col; j < cols; ++j) a[prow][j] = inv * a[prow][j];
    b[prow] = inv * b[prow];
    for (size_t i = 0; i < rows; ++i) {
      if (i == prow) continue;
      if (a[i][col].is_zero()) continue;
      ExpSum f = a[i][col];
      for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[prow][j];
      b[i] -= f * b[prow];
    }
    pivot_col.push_back(col);
    ++prow;
  }
  for (size_t i = prow; i < rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;  // inconsistent
  if (pivot_col.size() < cols) return std::nullopt;  // rank-deficient
  std::vector<ExpSum> x(cols);
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

} // namespace conelab
