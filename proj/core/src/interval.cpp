#include "bvs/interval.hpp"

#include <algorithm>

namespace bvs {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(const Interval& o) {
  if (this == &o) return *this;
  if (prec_ != o.prec_) {
    prec_ = o.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
  }
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::integer(const Integer& a, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, a.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, a.get_mpz_t(), MPFR_RNDU);
  return r;
}

int Interval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t p = std::max(a.prec_, b.prec_);
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  bool first = true;
  for (auto x : {a.lo_, a.hi_})
    for (auto y : {b.lo_, b.hi_}) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval eval(const UniPoly& f, const Interval& x) {
  Interval acc(x.precision());
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + Interval::integer(c[i], x.precision());
  return acc;
}

Interval eval(const RecPoly& f, const Interval& inner, const Interval& main) {
  Interval acc(main.precision());
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * main + eval(c[i], inner);
  return acc;
}

Interval eval(const BivPoly& f, const Interval& x, const Interval& y) {
  return eval(to_rec(f, Var::y), x, y);
}

}  // namespace bvs
