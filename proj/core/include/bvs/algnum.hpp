#pragma once

#include <vector>

#include "bvs/interval.hpp"
#include "bvs/uniroot.hpp"

namespace bvs {

struct FilterConfig {
  std::vector<mpfr_prec_t> precision_ladder{53, 128, 256};
  bool enabled = true;
};

Sign sign_at(const UniPoly& g, const RealAlgNum& a, const FilterConfig& cfg = {});

enum class Ordering { less, equal, greater };
Ordering compare(const RealAlgNum& a, const RealAlgNum& b, const FilterConfig& cfg = {});

Sign sign_at_biv(const BivPoly& F, const RealAlgNum& a, const RealAlgNum& b, const FilterConfig& cfg = {});

// Interval-only attempt: the sign if some ladder precision decides it, 0 otherwise.
// Refines copies of a and b.
Sign filter_sign_biv(const BivPoly& F, const RealAlgNum& a, const RealAlgNum& b, const FilterConfig& cfg);

struct FiberRange {
  enum class Kind { all, above_rational, above_alg };
  Kind kind = Kind::all;
  Rational c;
  RealAlgNum beta;

  static FiberRange all() { return {}; }
  static FiberRange above(const Rational& c) { return {Kind::above_rational, c, {}}; }
  static FiberRange above(const RealAlgNum& b) { return {Kind::above_alg, {}, b}; }
};

enum class LeadingMode {
  strict,    // lc_y(F)(alpha) = 0 is an error
  truncate,  // drop leading coefficients that vanish at alpha
};

// number of distinct real roots of F(alpha, y) in the range ("above" is strict)
int count_fiber_roots(const BivPoly& F, const RealAlgNum& a, const FiberRange& range,
                      const FilterConfig& cfg = {}, LeadingMode mode = LeadingMode::strict);

// ---- helpers shared by the solvers ----

// evaluate the main variable at a rational, coefficients stay polynomials in the other
// variable; scaled by den(a)^deg so the result is integral and has the right sign
UniPoly eval_main(const RecPoly& f, const Rational& a);
// drop leading coefficients (in the main variable) that vanish at a
RecPoly truncate_at(const RecPoly& f, const RealAlgNum& a, const FilterConfig& cfg = {});

}  // namespace bvs
