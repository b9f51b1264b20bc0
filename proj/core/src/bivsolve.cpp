#include "bvs/bivsolve.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace bvs {

Rational canonical_width() { return pow2(-16); }

namespace {

// the filter decides most signs once the interval is this narrow
RealAlgNum prerefined(const RealAlgNum& a, const FilterConfig& cfg) {
  if (!cfg.enabled) return a;
  return refine(a, pow2(-static_cast<long>(cfg.precision_ladder.back() / 4)));
}

SolutionBox make_box(const RealAlgNum& a, const RealAlgNum& b) {
  return SolutionBox{refine(a, canonical_width()), refine(b, canonical_width()), std::nullopt};
}

struct Projection {
  UniPoly rx, ry;
  RootList xs, ys;
};

Projection project(const BivPoly& F, const BivPoly& G) {
  Projection p;
  std::tie(p.rx, p.ry) = check_coprime(F, G);
  p.xs = isolate(p.rx);
  p.ys = isolate(p.ry);
  return p;
}

UniPoly principal_or_zero(const Chain<UniPoly>& c, int j) { return c.principal_at(j); }

const RecPoly& entry_at(const Chain<UniPoly>& c, int j) {
  static const RecPoly zero;
  const RecPoly* p = c.at(j);
  return p ? *p : zero;
}

// k^k sr_k^(k-1) SR_k - (k sr_k y + sr_{k,k-1})^k; vanishes at a root exactly when the
// gcd fiber SR_k(alpha, y) is the k-th power of a linear form
RecPoly single_point_defect(const RecPoly& SRk, int k) {
  UniPoly srk = SRk.coeff(k), srk1 = SRk.coeff(k - 1);
  RecPoly lin(std::vector<UniPoly>{srk1, srk * Integer(k)});
  Integer kk = 1;
  for (int i = 0; i < k; ++i) kk *= k;
  return SRk * (ring_pow(srk, k - 1) * kk) - ring_pow(lin, k);
}

bool constant_lc_y(const BivPoly& f) { return f.is_zero() || to_rec(f, Var::y).lc().degree() == 0; }

}  // namespace

std::pair<UniPoly, UniPoly> check_coprime(const BivPoly& F, const BivPoly& G) {
  if (F.is_zero() || G.is_zero()) throw CoprimalityError("a zero polynomial shares every factor with the other");
  UniPoly rx = resultant(F, G, Var::y);
  UniPoly ry = resultant(F, G, Var::x);
  if (rx.is_zero() || ry.is_zero())
    throw CoprimalityError("the polynomials share a nonconstant common factor (a resultant vanishes identically)");
  return {rx, ry};
}

bool solution_less(const SolutionBox& a, const SolutionBox& b, const FilterConfig& cfg) {
  Ordering o = compare(a.alpha, b.alpha, cfg);
  if (o != Ordering::equal) return o == Ordering::less;
  return compare(a.beta, b.beta, cfg) == Ordering::less;
}

bool same_solutions(const std::vector<SolutionBox>& a, const std::vector<SolutionBox>& b, const FilterConfig& cfg) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (compare(a[i].alpha, b[i].alpha, cfg) != Ordering::equal || compare(a[i].beta, b[i].beta, cfg) != Ordering::equal)
      return false;
  return true;
}

std::vector<SolutionBox> solve_grid(const BivPoly& F, const BivPoly& G, const FilterConfig& cfg) {
  Projection p = project(F, G);
  std::vector<RealAlgNum> ys;
  for (const auto& b : p.ys.roots) ys.push_back(prerefined(b, cfg));
  std::vector<SolutionBox> out;
  for (const auto& a0 : p.xs.roots) {
    RealAlgNum a = prerefined(a0, cfg);
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (sign_at_biv(F, a, ys[j], cfg) != 0) continue;
      if (sign_at_biv(G, a, ys[j], cfg) != 0) continue;
      out.push_back(make_box(a0, p.ys.roots[j]));
    }
  }
  return out;
}

KDecomposition compute_k(const BivPoly& F, const BivPoly& G) {
  check_coprime(F, G);
  Chain<UniPoly> c = determinantal_chain(to_rec(F, Var::y), to_rec(G, Var::y));
  UniPoly sr0 = principal_or_zero(c, 0);
  if (sr0.is_zero()) throw CoprimalityError("compute_k: the resultant vanishes identically");
  KDecomposition kd;
  kd.phi0 = squarefree_part(sr0);
  UniPoly phi = kd.phi0;
  const int top = c.index.front();
  for (int j = 1; j <= top && phi.degree() > 0; ++j) {
    UniPoly s = principal_or_zero(c, j);
    UniPoly next = s.is_zero() ? phi : gcd(phi, s);
    UniPoly gamma = exact_div(phi, next);
    if (gamma.degree() > 0) kd.gammas.push_back({primitive_part(gamma), j});
    phi = next;
  }
  if (phi.degree() > 0) throw InternalError("compute_k: resultant roots left unclassified");
  return kd;
}

bool generic_position(const BivPoly& F, const BivPoly& G) {
  if (!constant_lc_y(F) || !constant_lc_y(G)) return false;
  Chain<UniPoly> c = determinantal_chain(to_rec(F, Var::y), to_rec(G, Var::y));
  KDecomposition kd = compute_k(F, G);
  for (const auto& part : kd.gammas) {
    if (part.k == 1) continue;
    RecPoly d = single_point_defect(entry_at(c, part.k), part.k);
    for (const auto& coef : d.coeffs())
      if (!coef.is_zero() && !prem(coef, part.gamma).is_zero()) return false;
  }
  return true;
}

ShearReport choose_shear(const BivPoly& F, const BivPoly& G, const FilterConfig&) {
  ShearReport rep;
  const int n = std::max(F.total_degree(), G.total_degree());
  const int limit = 4 * n * n * n * n + 8;
  for (int t = 0; t <= limit; ++t) {
    BivPoly Fs = shear_substitute(F, t), Gs = shear_substitute(G, t);
    if (generic_position(Fs, Gs)) {
      rep.t0 = t;
      rep.sheared_F = std::move(Fs);
      rep.sheared_G = std::move(Gs);
      return rep;
    }
    rep.tried.push_back(t);
  }
  throw InternalError("choose_shear: no generic shear among the candidates");
}

std::vector<SolutionBox> with_multiplicities(const BivPoly& F, const BivPoly& G,
                                             const std::vector<SolutionBox>& sols, const FilterConfig& cfg) {
  ShearReport sh = choose_shear(F, G, cfg);
  UniPoly rt = resultant(sh.sheared_F, sh.sheared_G, Var::y);
  RootList rl = isolate(rt);
  // sols may be a subset (filtered by sign conditions); each must match its own root
  if (sols.size() > rl.roots.size())
    throw InternalError("with_multiplicities: sheared resultant has " + std::to_string(rl.roots.size()) +
                        " real roots for " + std::to_string(sols.size()) + " solutions");
  const Rational t(sh.t0);
  std::vector<RealAlgNum> A, B, rho = rl.roots;
  for (const auto& s : sols) {
    A.push_back(s.alpha);
    B.push_back(s.beta);
  }
  std::vector<std::size_t> match(sols.size());
  while (true) {
    bool done = true;
    std::vector<bool> used(rho.size(), false);
    for (std::size_t i = 0; i < sols.size() && done; ++i) {
      // alpha - t beta lies in [a_lo - t b_hi, a_hi - t b_lo] since t >= 0
      Rational lo = A[i].lo - t * B[i].hi, hi = A[i].hi - t * B[i].lo;
      int hits = 0;
      for (std::size_t j = 0; j < rho.size(); ++j)
        if (rho[j].lo <= hi && rho[j].hi >= lo) {
          ++hits;
          match[i] = j;
        }
      if (hits != 1 || used[match[i]]) done = false;
      else used[match[i]] = true;
    }
    if (done) break;
    for (auto& a : A) a = bisect(a);
    for (auto& b : B) b = bisect(b);
    for (auto& r : rho) r = bisect(r);
  }
  std::vector<SolutionBox> out = sols;
  for (std::size_t i = 0; i < out.size(); ++i) out[i].multiplicity = rl.multiplicities[match[i]];
  return out;
}

MrurResult solve_mrur_detailed(const BivPoly& F, const BivPoly& G, const FilterConfig& cfg) {
  Projection p = project(F, G);
  MrurResult res;
  UniPoly lf = to_rec(F, Var::y).lc(), lg = to_rec(G, Var::y).lc();
  UniPoly h = gcd(lf, lg);
  if (h.degree() > 0 && !isolate(h).roots.empty())
    throw GenericityError("leading coefficients",
                          "the leading coefficients in y of both polynomials vanish at a common real abscissa");
  if (p.xs.roots.empty()) return res;

  Chain<UniPoly> c = determinantal_chain(to_rec(F, Var::y), to_rec(G, Var::y));
  KDecomposition kd = compute_k(F, G);
  const std::vector<Rational> q = intermediate_points(p.ys);
  const int kmax = std::max(F.deg_y(), G.deg_y());

  std::vector<std::size_t> part_of_root(p.xs.roots.size(), kd.gammas.size());
  std::vector<RealAlgNum> xs;
  for (const auto& a : p.xs.roots) xs.push_back(prerefined(a, cfg));
  for (std::size_t g = 0; g < kd.gammas.size(); ++g)
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (part_of_root[i] == kd.gammas.size() && sign_at(kd.gammas[g].gamma, xs[i], cfg) == 0) part_of_root[i] = g;

  for (const auto& part : kd.gammas) {
    const RecPoly& SRk = entry_at(c, part.k);
    res.rur.push_back({part.gamma, part.k, -SRk.coeff(part.k - 1), SRk.coeff(part.k) * Integer(part.k)});
  }

  for (std::size_t i = 0; i < xs.size(); ++i) {
    const std::size_t g = part_of_root[i];
    if (g == kd.gammas.size()) throw InternalError("solve_mrur: resultant root outside every gamma");
    const RealAlgNum& a = xs[i];
    const RurPart& rp = res.rur[g];
    if (rp.k > 1) {
      RecPoly d = single_point_defect(entry_at(c, rp.k), rp.k);
      for (const auto& coef : d.coeffs())
        if (sign_at(coef, a, cfg) != 0)
          throw GenericityError("distinct abscissae", "several solutions (complex or real) share the abscissa x ~ " +
                                                          to_decimal(refine(a, pow2(-24)).midpoint(), 6));
    }
    if (rp.k > kmax) throw InternalError("solve_mrur: k exceeds the y-degree of the inputs");
    const int s2 = sign_at(rp.a2, a, cfg);
    // +1 when the ordinate a1/a2 lies above q
    auto side = [&](const Rational& v) {
      UniPoly b = rp.a1 * Integer(v.get_den()) - rp.a2 * Integer(v.get_num());
      return sign_at(b, a, cfg) * s2;
    };
    std::size_t lo = 0, hi = q.size() - 1;
    if (side(q[lo]) <= 0 || side(q[hi]) >= 0) throw InternalError("solve_mrur: ordinate outside the root bound");
    while (hi - lo > 1) {
      std::size_t mid = (lo + hi) / 2;
      int s = side(q[mid]);
      if (s == 0) throw InternalError("solve_mrur: ordinate at an intermediate point");
      (s > 0 ? lo : hi) = mid;
    }
    res.solutions.push_back(make_box(p.xs.roots[i], p.ys.roots[lo]));
    res.part_of.push_back(g);
  }
  return res;
}

std::vector<SolutionBox> solve_mrur(const BivPoly& F, const BivPoly& G, const FilterConfig& cfg) {
  return solve_mrur_detailed(F, G, cfg).solutions;
}

std::vector<SolutionBox> solve_grur(const BivPoly& F, const BivPoly& G, const FilterConfig& cfg) {
  Projection p = project(F, G);
  std::vector<SolutionBox> out;
  if (p.xs.roots.empty() || p.ys.roots.empty()) return out;
  const std::vector<Rational> q = intermediate_points(p.ys);
  const RecPoly Fy = to_rec(F, Var::y), Gy = to_rec(G, Var::y);
  // chains depend only on how far each input is truncated
  std::map<std::pair<int, int>, Chain<UniPoly>> gcd_chains;
  std::map<std::tuple<int, int, int>, Chain<UniPoly>> sqfree_chains;

  auto least_surviving = [&](const Chain<UniPoly>& ch, const RealAlgNum& a) -> const RecPoly& {
    for (std::size_t i = ch.index.size(); i-- > 0;)
      if (sign_at(ch.principal[i], a, cfg) != 0) return ch.poly[i];
    throw InternalError("solve_grur: no surviving subresultant");
  };

  for (const auto& a0 : p.xs.roots) {
    RealAlgNum a = prerefined(a0, cfg);
    RecPoly Ft = truncate_at(Fy, a, cfg), Gt = truncate_at(Gy, a, cfg);
    if (Ft.is_zero() && Gt.is_zero()) throw InternalError("solve_grur: both fibers vanish identically");
    RecPoly D;
    if (Ft.is_zero()) D = Gt;
    else if (Gt.is_zero()) D = Ft;
    else {
      auto key = std::make_pair(Ft.degree(), Gt.degree());
      auto it = gcd_chains.find(key);
      if (it == gcd_chains.end()) it = gcd_chains.emplace(key, determinantal_chain(Ft, Gt)).first;
      D = least_surviving(it->second, a);
    }
    D = truncate_at(D, a, cfg);
    if (D.degree() <= 0) continue;
    RecPoly H = D;
    if (D.degree() >= 2) {
      auto key = std::make_tuple(Ft.degree(), Gt.degree(), D.degree());
      auto it = sqfree_chains.find(key);
      if (it == sqfree_chains.end()) it = sqfree_chains.emplace(key, determinantal_chain(D, derivative(D))).first;
      RecPoly E = truncate_at(least_surviving(it->second, a), a, cfg);
      if (E.degree() > 0) H = pseudo_divide(D, E).first;
    }
    std::vector<int> hs;
    for (const auto& qj : q) {
      int s = sign_at(eval_main(H, qj), a, cfg);
      if (s == 0) throw InternalError("solve_grur: gcd fiber vanishes at an intermediate point");
      hs.push_back(s);
    }
    for (std::size_t j = 0; j + 1 < hs.size(); ++j)
      if (hs[j] != hs[j + 1]) out.push_back(make_box(a0, p.ys.roots[j]));
  }
  return out;
}

std::vector<SolutionBox> solve(Solver s, const BivPoly& F, const BivPoly& G, const FilterConfig& cfg) {
  switch (s) {
    case Solver::grid:
      return solve_grid(F, G, cfg);
    case Solver::mrur:
      return solve_mrur(F, G, cfg);
    default:
      return solve_grur(F, G, cfg);
  }
}

}  // namespace bvs
