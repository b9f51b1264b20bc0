#include "bvs/subres.hpp"

namespace bvs {

int var_count(const SignList& l) {
  int v = 0, last = 0;
  for (int s : l.signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int ChainShape::variations(const std::function<int(int)>& entry_sign) const {
  SignList l;
  l.signs.reserve(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) l.signs.push_back(sigma[i] * entry_sign(index[i]));
  return var_count(l);
}

int ChainShape::variations_at_infinity(bool plus) const {
  SignList l;
  for (std::size_t i = 0; i < index.size(); ++i) {
    int s = lead[i];
    if (!plus && degree[i] % 2 == 1) s = -s;
    l.signs.push_back(sigma[i] * s);
  }
  return var_count(l);
}

SturmData sturm_data(const UniPoly& f, const UniPoly& g) {
  SturmData d;
  if (f.degree() <= 0) {
    d.trivial = true;
    return d;
  }
  UniPoly r = g;
  if (g.degree() >= f.degree()) {
    r = prem(g, f);
    int e = g.degree() - f.degree() + 1;
    if (sgn(f.lc()) < 0 && e % 2 == 1) r = -r;
  }
  if (r.is_zero()) {
    d.trivial = true;
    return d;
  }
  d.chain = bpr_chain(f, r);
  d.shape = chain_shape(d.chain, [](const Integer& c) { return sgn(c); });
  return d;
}

int sturm_variations(const SturmData& d, const ExtRational& a) {
  if (d.trivial) return 0;
  switch (a.kind) {
    case ExtRational::Kind::minus_inf:
      return d.shape.variations_at_infinity(false);
    case ExtRational::Kind::plus_inf:
      return d.shape.variations_at_infinity(true);
    default:
      return d.shape.variations([&](int j) { return sign_at_rational(d.chain[j], a.value); });
  }
}

int sturm_query(const UniPoly& f, const UniPoly& g, const ExtRational& a, const ExtRational& b) {
  if (f.is_zero()) throw PreconditionError("sturm_query: zero polynomial");
  for (const ExtRational* e : {&a, &b})
    if (e->kind == ExtRational::Kind::finite && sign_at_rational(f, e->value) == 0)
      throw PreconditionError("sturm_query: endpoint " + to_string(e->value) + " is a root");
  SturmData d = sturm_data(f, g);
  return sturm_variations(d, a) - sturm_variations(d, b);
}

SubresSeq subres_seq(const UniPoly& f, const UniPoly& g) {
  Chain<Integer> c = determinantal_chain(f, g);
  return SubresSeq{std::move(c.index), std::move(c.poly), std::move(c.principal)};
}

BivSubresSeq subres_seq(const BivPoly& f, const BivPoly& g, Var main) {
  Chain<UniPoly> c = determinantal_chain(to_rec(f, main), to_rec(g, main));
  BivSubresSeq s;
  s.main = main;
  s.index = std::move(c.index);
  s.entries = std::move(c.poly);
  s.principal = std::move(c.principal);
  return s;
}

Integer resultant(const UniPoly& f, const UniPoly& g) { return resultant_generic(f, g); }

UniPoly resultant(const BivPoly& f, const BivPoly& g, Var v) {
  if (f.is_zero() && g.is_zero()) throw PreconditionError("resultant of two zero polynomials");
  return resultant_generic(to_rec(f, v), to_rec(g, v));
}

std::vector<UniPoly> subres_eval_at(const BivSubresSeq& seq, const Rational& a) {
  std::vector<UniPoly> out;
  out.reserve(seq.entries.size());
  for (const auto& e : seq.entries) out.push_back(specialize_coeffs(e, a));
  return out;
}

}  // namespace bvs
