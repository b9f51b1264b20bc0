#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bvs/errors.hpp"
#include "bvs/numeric.hpp"

namespace bvs {

template <class R>
class Poly;

// Ring glue. Coefficient rings are Integer or Poly<...> (recursively).
inline bool iszero(const Integer& a) { return sgn(a) == 0; }
template <class R>
bool iszero(const Poly<R>& p);

inline Integer exact_div(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (sgn(r) != 0) throw InternalError("inexact integer division");
  return q;
}
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b);

inline Integer times_int(const Integer& a, long k) { return a * k; }
template <class R>
Poly<R> times_int(const Poly<R>& p, long k);

inline void add_product(Integer& acc, const Integer& a, const Integer& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
template <class R>
void add_product(Poly<R>& acc, const Poly<R>& a, const Poly<R>& b);

template <class R>
struct RingOne;
template <>
struct RingOne<Integer> {
  static Integer get() { return Integer(1); }
};

// Dense univariate polynomial, c[i] is the coefficient of t^i. No trailing zeros.
template <class R>
class Poly {
 public:
  using coeff_type = R;

  Poly() = default;
  explicit Poly(std::vector<R> c) : c_(std::move(c)) { trim(); }
  explicit Poly(const R& constant) {
    if (!iszero(constant)) c_.push_back(constant);
  }
  static Poly monomial(const R& c, int k) {
    if (iszero(c)) return Poly();
    std::vector<R> v(static_cast<std::size_t>(k) + 1);
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly one() { return Poly(RingOne<R>::get()); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : R();
  }
  const R& lc() const { return c_.back(); }

  // drop every term of degree > d
  Poly truncated(int d) const {
    if (d < 0) return Poly();
    if (d >= degree()) return *this;
    return Poly(std::vector<R>(c_.begin(), c_.begin() + d + 1));
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (iszero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) add_product(r[i + j], a.c_[i], b.c_[j]);
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  // scalar multiplication by a coefficient
  friend Poly operator*(const Poly& a, const R& s) {
    if (iszero(s)) return Poly();
    Poly r = a;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }
  friend Poly operator*(const R& s, const Poly& a) { return a * s; }

  // exact division of every coefficient by a scalar
  Poly div_scalar(const R& s) const {
    Poly r = *this;
    for (auto& c : r.c_) c = exact_div(c, s);
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Horner at a value of a ring S that R converts into
  template <class S>
  S eval(const S& v) const {
    S acc{};
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + S(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && iszero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

template <class R>
bool iszero(const Poly<R>& p) {
  return p.is_zero();
}

template <class R>
struct RingOne<Poly<R>> {
  static Poly<R> get() { return Poly<R>::one(); }
};

template <class R>
R ring_one() {
  return RingOne<R>::get();
}

template <class R>
R ring_pow(const R& a, int e) {
  R r = ring_one<R>();
  R b = a;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

template <class R>
Poly<R> times_int(const Poly<R>& p, long k) {
  std::vector<R> c = p.coeffs();
  for (auto& x : c) x = times_int(x, k);
  return Poly<R>(std::move(c));
}

template <class R>
void add_product(Poly<R>& acc, const Poly<R>& a, const Poly<R>& b) {
  acc += a * b;
}

template <class R>
Poly<R> derivative(const Poly<R>& p) {
  if (p.degree() <= 0) return Poly<R>();
  std::vector<R> c(p.degree());
  for (int i = 1; i <= p.degree(); ++i) c[i - 1] = times_int(p.coeffs()[i], i);
  return Poly<R>(std::move(c));
}

// lc(b)^(deg a - deg b + 1) * a = q * b + r, deg r < deg b. Always the full power.
template <class R>
std::pair<Poly<R>, Poly<R>> pseudo_divide(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw InternalError("pseudo-division by zero");
  int da = a.degree(), db = b.degree();
  if (da < db) return {Poly<R>(), a};
  std::vector<R> r = a.coeffs();
  std::vector<R> q(static_cast<std::size_t>(da - db) + 1);
  const R& lb = b.lc();
  const std::vector<R>& bc = b.coeffs();
  for (int i = da; i >= db; --i) {
    R c = r[i];
    for (auto& x : q) x = x * lb;
    q[i - db] += c;
    for (int k = 0; k < i; ++k) r[k] = r[k] * lb;
    r[i] = R();
    if (!iszero(c))
      for (int k = 0; k < db; ++k) r[k + i - db] -= c * bc[k];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly<R>(std::move(q)), Poly<R>(std::move(r))};
}

template <class R>
Poly<R> prem(const Poly<R>& a, const Poly<R>& b) {
  return pseudo_divide(a, b).second;
}

template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw InternalError("division by the zero polynomial");
  if (a.is_zero()) return Poly<R>();
  int da = a.degree(), db = b.degree();
  if (da < db) throw InternalError("inexact polynomial division");
  std::vector<R> r = a.coeffs();
  std::vector<R> q(static_cast<std::size_t>(da - db) + 1);
  const std::vector<R>& bc = b.coeffs();
  for (int i = da; i >= db; --i) {
    if (iszero(r[i])) continue;
    R c = exact_div(r[i], b.lc());
    for (int k = 0; k <= db; ++k) r[k + i - db] -= c * bc[k];
    q[i - db] = std::move(c);
  }
  for (int k = 0; k < db; ++k)
    if (!iszero(r[k])) throw InternalError("inexact polynomial division");
  return Poly<R>(std::move(q));
}

using UniPoly = Poly<Integer>;
using RecPoly = Poly<UniPoly>;  // polynomial in a main variable over Z[other variable]

enum class Var { x, y };
inline Var other(Var v) { return v == Var::x ? Var::y : Var::x; }

// ---- univariate helpers ----

UniPoly make_uni(std::initializer_list<long> coeffs_low_to_high);
Integer content(const UniPoly& f);
// primitive part with positive leading coefficient (zero stays zero)
UniPoly primitive_part(const UniPoly& f);
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly squarefree_part(const UniPoly& f);
// Yun: f = c * prod g_i^i, result[i-1] = g_i (primitive, possibly constant 1)
std::vector<UniPoly> squarefree_factors(const UniPoly& f);
Rational eval_rational(const UniPoly& f, const Rational& a);
// sign of f(a) without forming rationals
int sign_at_rational(const UniPoly& f, const Rational& a);
// d^deg(f) * f(n/d) for a = n/d, an integer with the sign of f(a)
Integer eval_scaled(const UniPoly& f, const Rational& a);
// sign of the leading coefficient times (-1)^deg: the sign at -infinity
int sign_at_minus_inf(const UniPoly& f);
// the polynomial d*x - n vanishing at a = n/d
UniPoly linear_through(const Rational& a);
// 1 + max |c_i| / |lc|
Rational cauchy_bound(const UniPoly& f);
std::size_t bitsize(const UniPoly& f);
std::string to_string(const UniPoly& f, const std::string& var = "x");

// ---- bivariate ----

class BivPoly {
 public:
  using Exponent = std::pair<int, int>;  // (i, j) for x^i y^j

  BivPoly() = default;
  explicit BivPoly(std::map<Exponent, Integer> terms);
  static BivPoly constant(const Integer& c);
  static BivPoly variable(Var v);
  static BivPoly from_uni(const UniPoly& f, Var v);

  const std::map<Exponent, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int deg_x() const { return dx_; }
  int deg_y() const { return dy_; }
  int degree(Var v) const { return v == Var::x ? dx_ : dy_; }
  int total_degree() const;
  Integer coeff(int i, int j) const;
  std::size_t bitsize() const;

  BivPoly operator-() const;
  friend BivPoly operator+(const BivPoly& a, const BivPoly& b);
  friend BivPoly operator-(const BivPoly& a, const BivPoly& b);
  friend BivPoly operator*(const BivPoly& a, const BivPoly& b);
  friend bool operator==(const BivPoly& a, const BivPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BivPoly& a, const BivPoly& b) { return !(a == b); }

 private:
  void normalize();
  std::map<Exponent, Integer> terms_;
  int dx_ = -1;
  int dy_ = -1;
};

// view as a polynomial in `main` with coefficients in Z[other]
RecPoly to_rec(const BivPoly& f, Var main);
BivPoly from_rec(const RecPoly& f, Var main);
// the coefficient of main^k, a polynomial in the other variable
UniPoly coeff_in(const BivPoly& f, Var main, int k);

BivPoly derivative(const BivPoly& f, Var v);
// F(x + t*y, y)
BivPoly shear_substitute(const BivPoly& f, const Integer& t);
// F with `v` := a, scaled by den(a)^deg_v(F) > 0 so that it stays integral
UniPoly specialize(const BivPoly& f, Var v, const Rational& a);
// same for the recursive form: every coefficient evaluated at a, common positive scale
UniPoly specialize_coeffs(const RecPoly& f, const Rational& a);
// univariate polynomial in v when the other variable does not occur
UniPoly as_uni(const BivPoly& f, Var v);
// gcd of the coefficients w.r.t. `main`, a primitive polynomial in the other variable
UniPoly content_in(const BivPoly& f, Var main);

struct VarNames {
  std::string x = "x";
  std::string y = "y";
};

BivPoly parse_poly(std::string_view text, const VarNames& names = {});
// canonical graded-lex form, e.g. "x^2 + 2*x*y + 2*y^2 - 1"
std::string to_string(const BivPoly& f, const VarNames& names = {});

}  // namespace bvs
