#pragma once

#include <vector>

#include "bvs/subres.hpp"

namespace bvs {

// Isolating interval representation. For lo < hi the defining polynomial has exactly one
// root in (lo, hi) and opposite nonzero signs at the endpoints; lo == hi means a rational root.
struct RealAlgNum {
  UniPoly defining;  // square-free, primitive, positive leading coefficient
  Rational lo, hi;
  int sign_left = 0;  // sign of defining at lo, 0 for a point interval

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  static RealAlgNum rational(const Rational& a);
};

struct RootList {
  std::vector<RealAlgNum> roots;     // ascending, pairwise disjoint intervals
  std::vector<int> multiplicities;  // in the original polynomial
};

RootList isolate(const UniPoly& f);
// one bisection step (point intervals stay put)
RealAlgNum bisect(const RealAlgNum& a);
RealAlgNum refine(const RealAlgNum& a, const Rational& width);
// q_0 < root_1 < q_1 < ... < root_l < q_l
std::vector<Rational> intermediate_points(const RootList& roots);
// sign of g at every real root of f, ascending
std::vector<Sign> sign_over_all_roots(const UniPoly& f, const UniPoly& g);

// Exact sign of g at a root of A using the chain of (A, g mod A); the chain is built once
// and can be reused for every root of A (endpoints only change).
class RootSigner {
 public:
  RootSigner(const UniPoly& A, const UniPoly& g);
  Sign at(const RealAlgNum& a) const;

 private:
  UniPoly A_, g_;
  SturmData data_;
};

}  // namespace bvs
