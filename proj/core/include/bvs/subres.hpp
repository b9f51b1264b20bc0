#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bvs/poly.hpp"

namespace bvs {

// (-1)^(k(k-1)/2)
inline int eps_sign(int k) { return ((k / 2) % 2 == 0) ? 1 : -1; }

// Signed subresultants sRes_j(P, Q), j = p..0, for deg Q < deg P = p (Q may be zero).
// Q sits at formal degree p-1. Convention: sRes_p = P, sRes_{p-1} = Q and
// sRes_j = eps(p-j) * (classical determinantal subresultant S_j) below.
// Fraction-free: every division is exact.
template <class R>
std::vector<Poly<R>> bpr_chain(const Poly<R>& P, const Poly<R>& Q) {
  const int p = P.degree();
  if (p < 0) throw InternalError("bpr_chain: zero first argument");
  if (Q.degree() >= p) throw InternalError("bpr_chain: deg Q >= deg P");
  std::vector<Poly<R>> S(static_cast<std::size_t>(p) + 1);
  S[p] = P;
  if (p == 0) return S;
  S[p - 1] = Q;
  if (Q.is_zero()) return S;
  // s_j: principal coefficient, t_j: leading coefficient of S_j; index p+1 unused
  std::vector<R> s(static_cast<std::size_t>(p) + 2), t(static_cast<std::size_t>(p) + 2);
  s[p] = t[p] = ring_one<R>();
  t[p - 1] = Q.lc();
  int i = p + 1, j = p;
  while (true) {
    const Poly<R>& B = S[j - 1];
    if (B.is_zero()) break;
    const int k = B.degree();
    if (k < j - 1) {
      R num = ring_pow(t[j - 1], j - k);
      if (eps_sign(j - k) < 0) num = -num;
      s[k] = exact_div(num, ring_pow(s[j], j - k - 1));
      S[k] = (B * s[k]).div_scalar(t[j - 1]);
      s[j - 1] = R();
    } else {
      s[k] = t[j - 1];
    }
    if (k == 0) break;
    const Poly<R>& A = S[i - 1];
    // Rem over the fraction field times lc(B)^(deg A - k + 1) is the pseudo-remainder
    Poly<R> r = prem(A * (s[k] * t[j - 1]), B);
    R den = ring_pow(B.lc(), A.degree() - k + 1) * s[j] * t[i - 1];
    S[k - 1] = (-r).div_scalar(den);
    t[k - 1] = S[k - 1].is_zero() ? R() : S[k - 1].lc();
    i = j;
    j = k;
  }
  return S;
}

// Determinantal signed subresultants for arbitrary degrees.
//  p > q : the chain above.
//  p = q : P first, then sRes_j(P, Q2) / lc(P)^(k-j) with Q2 = lc(P) Q - lc(Q) P of degree k.
//  p < q : f, g, -f, ... i.e. (q+1, f) followed by the chain of (g, -f).
template <class R>
struct Chain {
  std::vector<int> index;
  std::vector<Poly<R>> poly;
  std::vector<R> principal;  // coefficient of degree index[i] in poly[i]

  const Poly<R>* at(int j) const {
    for (std::size_t i = 0; i < index.size(); ++i)
      if (index[i] == j) return &poly[i];
    return nullptr;
  }
  R principal_at(int j) const {
    for (std::size_t i = 0; i < index.size(); ++i)
      if (index[i] == j) return principal[i];
    return R();
  }
  // position in the lists of the last nonzero entry
  std::size_t last_nonzero() const {
    for (std::size_t i = poly.size(); i-- > 0;)
      if (!poly[i].is_zero()) return i;
    return 0;
  }
};

template <class R>
Chain<R> determinantal_chain(const Poly<R>& f, const Poly<R>& g) {
  if (f.is_zero() && g.is_zero()) throw PreconditionError("subresultants of two zero polynomials");
  Chain<R> out;
  auto push = [&](int j, Poly<R> e) {
    out.principal.push_back(e.coeff(j));
    out.index.push_back(j);
    out.poly.push_back(std::move(e));
  };
  if (f.is_zero() || g.is_zero()) {
    const Poly<R>& h = f.is_zero() ? g : f;
    push(h.degree(), h);
    return out;
  }
  const int p = f.degree(), q = g.degree();
  if (p > q) {
    auto S = bpr_chain(f, g);
    for (int j = p; j >= 0; --j) push(j, std::move(S[j]));
  } else if (p < q) {
    push(q + 1, f);
    auto S = bpr_chain(g, -f);
    for (int j = q; j >= 0; --j) push(j, std::move(S[j]));
  } else if (p == 0) {
    push(0, f);
  } else {
    Poly<R> q2 = g * f.lc() - f * g.lc();
    auto S = bpr_chain(f, q2);
    push(p, f);
    R lp = f.lc();
    // the chain treats q2 at its true degree k; the determinant wants formal degree p-1
    const int k = q2.degree();
    for (int j = p - 1; j >= 0; --j) {
      int e = std::max(0, k - j);
      push(j, e == 0 ? std::move(S[j]) : S[j].div_scalar(ring_pow(lp, e)));
    }
  }
  return out;
}

// Res(f, g), the Sylvester determinant (f rows first). res(f, c) = c^deg f, res of two constants is 1.
template <class R>
R resultant_generic(const Poly<R>& f, const Poly<R>& g) {
  if (f.is_zero() && g.is_zero()) throw PreconditionError("resultant of two zero polynomials");
  if (f.is_zero() || g.is_zero()) return R();
  const int p = f.degree(), q = g.degree();
  if (p == 0 && q == 0) return ring_one<R>();
  if (p == 0) return ring_pow(f.lc(), q);
  if (q == 0) return ring_pow(g.lc(), p);
  if (p >= q) {
    Chain<R> c = determinantal_chain(f, g);
    R s0 = c.poly.back().coeff(0);
    return eps_sign(p) > 0 ? s0 : R(-s0);
  }
  // Res(f,g) = (-1)^(pq) Res(g,f)
  R r = resultant_generic(g, f);
  return ((p * q) % 2 == 0) ? r : R(-r);
}

// ---- sign variations ----

struct SignList {
  std::vector<int> signs;
};

// variations after deleting zeros
int var_count(const SignList& l);

// Shape of a chain at a specialization: which entries start a block of the Euclidean
// remainder sequence, their specialized degrees, leading signs and the signs sigma
// such that sigma_i * (first entry of block i) is a positive multiple of the i-th
// signed remainder. This is the generalized variation rule for defective chains.
struct ChainShape {
  std::vector<int> index;
  std::vector<int> degree;
  std::vector<int> lead;
  std::vector<int> sigma;

  int gcd_index() const { return index.back(); }
  int gcd_degree() const { return degree.back(); }
  // entry_sign(chain index) -> sign of that entry at the evaluation point
  int variations(const std::function<int(int)>& entry_sign) const;
  int variations_at_infinity(bool plus) const;
};

// S as returned by bpr_chain; csign gives the sign of a coefficient at the specialization.
// The top entry must keep its degree under the specialization.
template <class R, class CoeffSign>
ChainShape chain_shape(const std::vector<Poly<R>>& S, CoeffSign&& csign) {
  ChainShape sh;
  const int p = static_cast<int>(S.size()) - 1;
  int top = csign(S[p].coeff(p));
  if (top == 0) throw InternalError("chain_shape: leading coefficient vanishes");
  sh.index.push_back(p);
  sh.degree.push_back(p);
  sh.lead.push_back(top);
  int idx = p - 1;
  while (idx >= 0) {
    const Poly<R>& E = S[idx];
    int d = -1, ls = 0;
    for (int i = std::min(idx, E.degree()); i >= 0; --i) {
      const R c = E.coeff(i);
      if (iszero(c)) continue;
      ls = csign(c);
      if (ls != 0) {
        d = i;
        break;
      }
    }
    if (d < 0) break;
    sh.index.push_back(idx);
    sh.degree.push_back(d);
    sh.lead.push_back(ls);
    if (d == 0) break;
    idx = d - 1;
  }
  // principal signs of the nondefective entry of each block
  const std::size_t n = sh.index.size();
  std::vector<int> ps(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sh.index[i] == sh.degree[i]) {
      ps[i] = sh.lead[i];
    } else {
      ps[i] = csign(S[sh.degree[i]].coeff(sh.degree[i]));
      if (ps[i] == 0) throw InternalError("chain_shape: vanishing principal coefficient");
    }
  }
  sh.sigma.assign(n, 1);
  for (std::size_t i = 0; i + 2 < n; ++i) {
    int left = (i == 0) ? 1 : sh.lead[i] * ps[i];
    int mu = left * sh.lead[i + 1] * ps[i + 1];
    sh.sigma[i + 2] = mu * sh.sigma[i];
  }
  return sh;
}

// Sturm sequence data for counting with f and g (any degrees): the chain of
// (f, g') where g' is a positive multiple of g mod f.
struct SturmData {
  std::vector<UniPoly> chain;
  ChainShape shape;
  bool trivial = false;  // f constant or g reduces to zero: every count is 0
};
SturmData sturm_data(const UniPoly& f, const UniPoly& g);

// a point of the extended real line
struct ExtRational {
  enum class Kind { minus_inf, finite, plus_inf };
  Kind kind = Kind::finite;
  Rational value;

  static ExtRational minus_infinity() { return {Kind::minus_inf, Rational()}; }
  static ExtRational plus_infinity() { return {Kind::plus_inf, Rational()}; }
  static ExtRational at(const Rational& v) { return {Kind::finite, v}; }
};

int sturm_variations(const SturmData& d, const ExtRational& a);
// VAR(SR(f,g;a)) - VAR(SR(f,g;b)); with g = f' the number of distinct real roots in (a, b)
int sturm_query(const UniPoly& f, const UniPoly& g, const ExtRational& a, const ExtRational& b);

// ---- public sequences ----

struct SubresSeq {
  std::vector<int> index;
  std::vector<UniPoly> entries;
  std::vector<Integer> principal;
};

struct BivSubresSeq {
  Var main = Var::y;
  std::vector<int> index;
  std::vector<RecPoly> entries;     // polynomials in `main` over Z[other]
  std::vector<UniPoly> principal;   // polynomials in the other variable
  BivPoly entry(std::size_t i) const { return from_rec(entries[i], main); }
};

SubresSeq subres_seq(const UniPoly& f, const UniPoly& g);
BivSubresSeq subres_seq(const BivPoly& f, const BivPoly& g, Var main);

Integer resultant(const UniPoly& f, const UniPoly& g);
// eliminates `v`; the result is a polynomial in the other variable
UniPoly resultant(const BivPoly& f, const BivPoly& g, Var v);

// every entry with the other variable := a, scaled by a positive power of den(a)
std::vector<UniPoly> subres_eval_at(const BivSubresSeq& seq, const Rational& a);

}  // namespace bvs
