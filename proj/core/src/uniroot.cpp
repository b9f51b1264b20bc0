#include "bvs/uniroot.hpp"

#include <algorithm>

namespace bvs {

RealAlgNum RealAlgNum::rational(const Rational& a) {
  RealAlgNum r;
  r.defining = primitive_part(linear_through(a));
  r.lo = r.hi = a;
  return r;
}

namespace {

Rational power_of_two_at_least(const Rational& b) {
  Rational k(1);
  while (k < b) k *= 2;
  return k;
}

struct Isolator {
  const UniPoly& f;
  SturmData sd;
  std::vector<RealAlgNum> out;

  int var(const Rational& a) const { return sturm_variations(sd, ExtRational::at(a)); }

  void push_interval(const Rational& a, const Rational& b) {
    RealAlgNum r;
    r.defining = f;
    r.lo = a;
    r.hi = b;
    r.sign_left = sign_at_rational(f, a);
    out.push_back(std::move(r));
  }

  // roots in (a, b]: V(a) - V(b); the open interval drops b when b is a root
  void run(const Rational& a, const Rational& b, int va, int vb) {
    const bool b_root = sign_at_rational(f, b) == 0;
    const int n = va - vb - (b_root ? 1 : 0);
    if (n <= 0) return;
    if (n == 1 && b - a <= 1 && !b_root && sign_at_rational(f, a) != 0) {
      push_interval(a, b);
      return;
    }
    Rational m = (a + b) / 2;
    int vm = var(m);
    run(a, m, va, vm);
    if (sign_at_rational(f, m) == 0) {
      out.push_back(RealAlgNum::rational(m));
      out.back().defining = f;
    }
    run(m, b, vm, vb);
  }
};

int mult_of(const std::vector<UniPoly>& factors, const RealAlgNum& a) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const UniPoly& g = factors[i];
    if (g.degree() <= 0) continue;
    if (a.is_point()) {
      if (sign_at_rational(g, a.lo) == 0) return static_cast<int>(i) + 1;
    } else if (sign_at_rational(g, a.lo) * sign_at_rational(g, a.hi) < 0) {
      return static_cast<int>(i) + 1;
    }
  }
  throw InternalError("root without a square-free factor");
}

}  // namespace

RootList isolate(const UniPoly& f) {
  if (f.is_zero()) throw PreconditionError("isolate: zero polynomial");
  RootList rl;
  if (f.degree() <= 0) return rl;
  UniPoly fr = squarefree_part(f);
  Isolator iso{fr, sturm_data(fr, derivative(fr)), {}};
  Rational K = power_of_two_at_least(cauchy_bound(fr));
  iso.run(-K, K, iso.var(-K), iso.var(K));
  rl.roots = std::move(iso.out);
  // neighbours may share an endpoint; make the closed intervals disjoint
  for (std::size_t i = 0; i + 1 < rl.roots.size(); ++i) {
    while (rl.roots[i].hi >= rl.roots[i + 1].lo) {
      rl.roots[i] = bisect(rl.roots[i]);
      rl.roots[i + 1] = bisect(rl.roots[i + 1]);
    }
  }
  std::vector<UniPoly> factors = squarefree_factors(f);
  for (const auto& r : rl.roots) rl.multiplicities.push_back(mult_of(factors, r));
  return rl;
}

RealAlgNum bisect(const RealAlgNum& a) {
  if (a.is_point()) return a;
  Rational m = a.midpoint();
  int s = sign_at_rational(a.defining, m);
  RealAlgNum r = a;
  if (s == 0) {
    r.lo = r.hi = m;
    r.sign_left = 0;
  } else if (s == a.sign_left) {
    r.lo = m;
  } else {
    r.hi = m;
  }
  return r;
}

RealAlgNum refine(const RealAlgNum& a, const Rational& width) {
  if (sgn(width) <= 0) throw PreconditionError("refine: width must be positive");
  RealAlgNum r = a;
  while (r.width() > width) r = bisect(r);
  return r;
}

std::vector<Rational> intermediate_points(const RootList& rl) {
  if (rl.roots.empty()) return {Rational(0)};
  Rational bound(0);
  for (const auto& r : rl.roots) bound = std::max(bound, cauchy_bound(r.defining));
  Rational outer(ceil_q(bound));
  std::vector<RealAlgNum> rs = rl.roots;
  for (auto& r : rs)
    while (r.lo <= -outer || r.hi >= outer) r = bisect(r);
  for (std::size_t i = 0; i + 1 < rs.size(); ++i)
    while (rs[i].hi >= rs[i + 1].lo) {
      rs[i] = bisect(rs[i]);
      rs[i + 1] = bisect(rs[i + 1]);
    }
  std::vector<Rational> q;
  q.push_back(-outer);
  for (std::size_t i = 0; i + 1 < rs.size(); ++i) q.push_back((rs[i].hi + rs[i + 1].lo) / 2);
  q.push_back(outer);
  return q;
}

RootSigner::RootSigner(const UniPoly& A, const UniPoly& g) : A_(A), g_(g) {
  if (A.degree() > 0) data_ = sturm_data(A, g);
}

Sign RootSigner::at(const RealAlgNum& a) const {
  if (a.is_point()) return sign_at_rational(g_, a.lo);
  if (data_.trivial) return 0;
  int wa = sturm_variations(data_, ExtRational::at(a.lo));
  int wb = sturm_variations(data_, ExtRational::at(a.hi));
  // the Cauchy index of g/A over (lo, hi) is sign(g(alpha) A'(alpha)); sign A' = -sign_left
  int s = (wa - wb) * (-a.sign_left);
  if (s < -1 || s > 1) throw InternalError("sign_at: more than one root in the interval");
  return s;
}

std::vector<Sign> sign_over_all_roots(const UniPoly& f, const UniPoly& g) {
  RootList rl = isolate(f);
  std::vector<Sign> out;
  if (rl.roots.empty()) return out;
  RootSigner signer(rl.roots.front().defining, g);
  for (const auto& r : rl.roots) out.push_back(signer.at(r));
  return out;
}

}  // namespace bvs
