#pragma once

#include <mpfr.h>

#include "bvs/poly.hpp"

namespace bvs {

// Closed interval with MPFR endpoints, every operation rounded outward.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec);
  Interval(const Interval& o);
  Interval& operator=(const Interval& o);
  ~Interval();

  static Interval point(const Rational& a, mpfr_prec_t prec) { return Interval(a, a, prec); }
  static Interval integer(const Integer& a, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }
  // +1 / -1 when the interval excludes zero, 0 when undecided
  int sign() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);

  double lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
};

Interval eval(const UniPoly& f, const Interval& x);
Interval eval(const RecPoly& f, const Interval& inner, const Interval& main);
Interval eval(const BivPoly& f, const Interval& x, const Interval& y);

}  // namespace bvs
