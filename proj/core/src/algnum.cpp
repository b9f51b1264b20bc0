#include "bvs/algnum.hpp"

namespace bvs {

namespace {

Rational filter_width(mpfr_prec_t prec) { return pow2(-static_cast<long>(prec / 4)); }

RecPoly constant_coeffs(const UniPoly& a) {
  std::vector<UniPoly> c;
  for (const auto& x : a.coeffs()) c.push_back(UniPoly(x));
  return RecPoly(std::move(c));
}

}  // namespace

UniPoly eval_main(const RecPoly& f, const Rational& a) {
  if (f.is_zero()) return UniPoly();
  const Integer& n = a.get_num();
  const Integer& d = a.get_den();
  const auto& c = f.coeffs();
  UniPoly acc = c.back();
  Integer dp = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp *= d;
    acc = acc * n + c[i] * dp;
  }
  return acc;
}

RecPoly truncate_at(const RecPoly& f, const RealAlgNum& a, const FilterConfig& cfg) {
  int d = f.degree();
  while (d >= 0 && sign_at(f.coeff(d), a, cfg) == 0) --d;
  return f.truncated(d);
}

Sign sign_at(const UniPoly& g, const RealAlgNum& a, const FilterConfig& cfg) {
  if (g.is_zero()) return 0;
  if (g.degree() == 0) return sgn(g.lc());
  if (a.is_point()) return sign_at_rational(g, a.lo);
  if (cfg.enabled) {
    RealAlgNum r = a;
    for (mpfr_prec_t prec : cfg.precision_ladder) {
      r = refine(r, filter_width(prec));
      if (r.is_point()) return sign_at_rational(g, r.lo);
      int s = eval(g, Interval(r.lo, r.hi, prec)).sign();
      if (s != 0) return s;
    }
  }
  return RootSigner(a.defining, g).at(a);
}

Ordering compare(const RealAlgNum& a0, const RealAlgNum& b0, const FilterConfig& cfg) {
  auto disjoint = [](const RealAlgNum& a, const RealAlgNum& b) -> int {
    if (a.hi < b.lo) return -1;
    if (a.lo > b.hi) return 1;
    return 0;
  };
  auto to_ord = [](int s) { return s < 0 ? Ordering::less : Ordering::greater; };
  if (int s = disjoint(a0, b0)) return to_ord(s);
  if (a0.is_point() && b0.is_point()) return Ordering::equal;
  if (a0.is_point() || b0.is_point()) {
    const RealAlgNum& p = a0.is_point() ? a0 : b0;
    const RealAlgNum& q = a0.is_point() ? b0 : a0;
    int s = sign_at_rational(q.defining, p.lo);
    if (s == 0) return Ordering::equal;
    // q's root lies right of p exactly when q.defining still has its left sign at p
    int p_vs_q = (s == q.sign_left) ? -1 : 1;
    return to_ord(a0.is_point() ? p_vs_q : -p_vs_q);
  }
  RealAlgNum a = a0, b = b0;
  if (sign_at(b.defining, a, cfg) != 0) {
    while (true) {
      a = bisect(a);
      b = bisect(b);
      if (int s = disjoint(a, b)) return to_ord(s);
      if (a.is_point() || b.is_point()) return compare(a, b, cfg);
    }
  }
  // a is a root of b.defining, so a = b exactly when a lies inside b's interval
  while (true) {
    if (a.lo > b.lo && a.hi < b.hi) return Ordering::equal;
    if (int s = disjoint(a, b)) return to_ord(s);
    a = bisect(a);
  }
}

Sign filter_sign_biv(const BivPoly& F, const RealAlgNum& a, const RealAlgNum& b, const FilterConfig& cfg) {
  if (!cfg.enabled) return 0;
  RealAlgNum r = a, t = b;
  RecPoly Fy = to_rec(F, Var::y);
  for (mpfr_prec_t prec : cfg.precision_ladder) {
    r = refine(r, filter_width(prec));
    t = refine(t, filter_width(prec));
    int s = eval(Fy, Interval(r.lo, r.hi, prec), Interval(t.lo, t.hi, prec)).sign();
    if (s != 0) return s;
  }
  return 0;
}

Sign sign_at_biv(const BivPoly& F, const RealAlgNum& a, const RealAlgNum& b, const FilterConfig& cfg) {
  if (F.is_zero()) return 0;
  if (a.is_point()) return sign_at(specialize(F, Var::x, a.lo), b, cfg);
  if (b.is_point()) return sign_at(specialize(F, Var::y, b.lo), a, cfg);
  if (int s = filter_sign_biv(F, a, b, cfg)) return s;

  // chain of A(x) and F mod A over Z[y]; the reduction multiplies by a positive constant
  RecPoly A = constant_coeffs(a.defining);
  RecPoly Fx = to_rec(F, Var::x);
  if (Fx.degree() >= A.degree()) Fx = prem(Fx, A);
  Fx = truncate_at(Fx, b, cfg);
  if (Fx.is_zero()) return 0;
  if (Fx.degree() == 0) return sign_at(Fx.coeff(0), b, cfg);
  std::vector<RecPoly> S = bpr_chain(A, Fx);
  auto csign = [&](const UniPoly& c) { return sign_at(c, b, cfg); };
  ChainShape shape = chain_shape(S, csign);
  auto W = [&](const Rational& x0) {
    return shape.variations([&](int j) { return sign_at(eval_main(S[j], x0), b, cfg); });
  };
  int s = (W(a.lo) - W(a.hi)) * (-a.sign_left);
  if (s < -1 || s > 1) throw InternalError("sign_at_biv: interval holds more than one root");
  return s;
}

namespace {

int count_univariate(const UniPoly& f, const FiberRange& range, const FilterConfig& cfg) {
  if (f.degree() <= 0) return 0;
  SturmData sd = sturm_data(f, derivative(f));
  auto V = [&](const Rational& c) { return sturm_variations(sd, ExtRational::at(c)); };
  const int vinf = sturm_variations(sd, ExtRational::plus_infinity());
  if (range.kind == FiberRange::Kind::all) return sturm_variations(sd, ExtRational::minus_infinity()) - vinf;
  RealAlgNum beta = range.kind == FiberRange::Kind::above_rational ? RealAlgNum::rational(range.c) : range.beta;
  int on = beta.is_point() ? sign_at_rational(f, beta.lo) : sign_at(f, beta, cfg);
  if (beta.is_point() && on != 0) return V(beta.lo) - vinf;
  // bracket beta by nonroot endpoints enclosing no other root of f
  const int want = on == 0 ? 1 : 0;
  Rational lo = beta.lo, hi = beta.hi, delta = 1;
  while (true) {
    if (beta.is_point()) {
      lo = beta.lo - delta;
      hi = beta.lo + delta;
      delta /= 2;
    }
    if (sign_at_rational(f, lo) != 0 && sign_at_rational(f, hi) != 0 && V(lo) - V(hi) == want) return V(hi) - vinf;
    if (!beta.is_point()) {
      beta = bisect(beta);
      if (beta.is_point()) continue;
      lo = beta.lo;
      hi = beta.hi;
    }
  }
}

}  // namespace

int count_fiber_roots(const BivPoly& F, const RealAlgNum& a, const FiberRange& range, const FilterConfig& cfg,
                      LeadingMode mode) {
  if (a.is_point()) {
    UniPoly f = specialize(F, Var::x, a.lo);
    if (f.is_zero()) throw PreconditionError("count_fiber_roots: F vanishes on the whole fiber");
    return count_univariate(f, range, cfg);
  }
  RecPoly Fy = to_rec(F, Var::y);
  if (mode == LeadingMode::truncate) {
    Fy = truncate_at(Fy, a, cfg);
  } else if (!Fy.is_zero() && sign_at(Fy.lc(), a, cfg) == 0) {
    throw PreconditionError(
        "count_fiber_roots: leading coefficient in y vanishes at the abscissa; shear the input or use the "
        "truncating mode");
  }
  if (Fy.is_zero()) throw PreconditionError("count_fiber_roots: F vanishes on the whole fiber");
  if (Fy.degree() == 0) return 0;
  std::vector<RecPoly> S = bpr_chain(Fy, derivative(Fy));
  ChainShape shape = chain_shape(S, [&](const UniPoly& c) { return sign_at(c, a, cfg); });
  const int winf = shape.variations_at_infinity(true);
  if (range.kind == FiberRange::Kind::all) return shape.variations_at_infinity(false) - winf;

  auto W_rational = [&](const Rational& c) {
    return shape.variations([&](int j) { return sign_at(eval_main(S[j], c), a, cfg); });
  };
  auto root_at = [&](const Rational& c) { return sign_at(eval_main(Fy, c), a, cfg) == 0; };

  RealAlgNum beta = range.kind == FiberRange::Kind::above_rational ? RealAlgNum::rational(range.c) : range.beta;
  if (beta.is_point()) {
    const Rational c = beta.lo;
    if (!root_at(c)) return W_rational(c) - winf;
    Rational delta = 1;
    while (true) {
      Rational l = c - delta, r = c + delta;
      if (!root_at(l) && !root_at(r) && W_rational(l) - W_rational(r) == 1) return W_rational(r) - winf;
      delta /= 2;
    }
  }
  BivPoly Fb = from_rec(Fy, Var::y);
  if (sign_at_biv(Fb, a, beta, cfg) != 0) {
    int wb = shape.variations([&](int j) { return sign_at_biv(from_rec(S[j], Var::y), a, beta, cfg); });
    return wb - winf;
  }
  while (true) {
    if (!root_at(beta.lo) && !root_at(beta.hi) && W_rational(beta.lo) - W_rational(beta.hi) == 1)
      return W_rational(beta.hi) - winf;
    beta = bisect(beta);
    if (beta.is_point()) return count_fiber_roots(F, a, FiberRange::above(beta), cfg, mode);
  }
}

}  // namespace bvs
