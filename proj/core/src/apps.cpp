#include "bvs/apps.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace bvs {

std::vector<SolutionBox> simultaneous_inequalities(const BivPoly& P, const BivPoly& Q,
                                                   const std::vector<SignCondition>& conditions,
                                                   const FilterConfig& cfg) {
  for (const auto& c : conditions)
    if (c.polynomial.is_zero()) throw PreconditionError("sign condition on the zero polynomial");
  std::vector<SolutionBox> out;
  for (const auto& s : solve_grur(P, Q, cfg)) {
    bool ok = true;
    for (const auto& c : conditions) {
      int sg = sign_at_biv(c.polynomial, s.alpha, s.beta, cfg);
      int want = c.relation == SignCondition::Relation::positive ? 1
                 : c.relation == SignCondition::Relation::negative ? -1
                                                                     : 0;
      if (sg != want) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

std::vector<std::size_t> TopologyGraph::degrees() const {
  std::vector<std::size_t> d(vertices.size(), 0);
  for (const auto& [a, b] : edges) {
    ++d[a];
    ++d[b];
  }
  return d;
}

std::size_t TopologyGraph::components() const {
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t n = vertices.size();
  for (const auto& [a, b] : edges) {
    std::size_t ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --n;
    }
  }
  return n;
}

namespace {

// Real roots of F(alpha, y) for an algebraic alpha, counted with the chain of (F, F_y)
// specialized at alpha. The leading coefficient of F in y must be a nonzero constant.
class AlgFiber {
 public:
  AlgFiber(const RecPoly& F, const RealAlgNum& a, const FilterConfig& cfg)
      : F_(F), a_(a), cfg_(cfg), S_(bpr_chain(F, derivative(F))) {
    shape_ = chain_shape(S_, [&](const UniPoly& c) { return sign_at(c, a_, cfg_); });
  }

  bool is_root(const Rational& c) const { return sign_at(eval_main(F_, c), a_, cfg_) == 0; }
  int var(const Rational& c) const {
    return shape_.variations([&](int j) { return sign_at(eval_main(S_[j], c), a_, cfg_); });
  }

  // disjoint intervals (lo, hi) with nonroot endpoints, one root each, ascending
  std::vector<std::pair<Rational, Rational>> isolate() const {
    const Integer lc = F_.lc().lc();
    Rational m(0);
    for (int i = 0; i < F_.degree(); ++i) {
      Interval v = eval(F_.coeff(i), Interval(a_.lo, a_.hi, 53));
      m = std::max(m, Rational(std::max(std::fabs(v.lower()), std::fabs(v.upper()))));
    }
    Rational bound = 1 + m / abs(Rational(lc)), K(1);
    while (K <= bound) K *= 2;
    std::vector<std::pair<Rational, Rational>> out;
    run(-K, K, var(-K), var(K), out);
    return out;
  }

  // shrink an isolating interval to the given width
  std::pair<Rational, Rational> refine(std::pair<Rational, Rational> iv, const Rational& w) const {
    int vlo = var(iv.first);
    while (iv.second - iv.first > w) {
      Rational m = (iv.first + iv.second) / 2;
      if (is_root(m)) return {m, m};
      int vm = var(m);
      if (vlo - vm == 1) iv.second = m;
      else {
        iv.first = m;
        vlo = vm;
      }
    }
    return iv;
  }

 private:
  void run(const Rational& a, const Rational& b, int va, int vb, std::vector<std::pair<Rational, Rational>>& out) const {
    const int n = va - vb;
    if (n <= 0) return;
    if (n == 1) {
      out.push_back({a, b});
      return;
    }
    Rational m = (a + b) / 2, step = (b - a) / 4;
    while (is_root(m)) {
      m = (a + b) / 2 + step;
      step /= 2;
    }
    int vm = var(m);
    run(a, m, va, vm, out);
    run(m, b, vm, vb, out);
  }

  RecPoly F_;
  RealAlgNum a_;
  FilterConfig cfg_;
  std::vector<RecPoly> S_;
  ChainShape shape_;
};

Rational display_width() { return pow2(-20); }

}  // namespace

TopologyGraph curve_topology(const BivPoly& F0, const FilterConfig& cfg) {
  if (F0.is_zero()) throw PreconditionError("curve_topology: the zero polynomial defines the whole plane");
  TopologyGraph g;
  if (F0.total_degree() == 0) return g;
  if (content_in(F0, Var::y).degree() > 0)
    throw PreconditionError("curve_topology: the curve contains vertical lines (a factor depending only on x)");
  if (resultant(F0, derivative(F0, Var::y), Var::y).is_zero())
    throw PreconditionError("curve_topology: F has a square factor; pass its square-free part");

  BivPoly F, Fy;
  for (int t = 0;; ++t) {
    F = shear_substitute(F0, t);
    Fy = derivative(F, Var::y);
    if (generic_position(F, Fy)) {
      g.shear = t;
      break;
    }
    const int n = F0.total_degree();
    if (t > 4 * n * n * n * n + 8) throw InternalError("curve_topology: no generic shear found");
  }

  MrurResult crit = solve_mrur_detailed(F, Fy, cfg);
  const RecPoly Frec = to_rec(F, Var::y);

  // fiber abscissae
  std::vector<Rational> q;
  if (crit.solutions.empty()) {
    q = {Rational(-1), Rational(1)};
  } else {
    RootList rl;
    for (const auto& s : crit.solutions) rl.roots.push_back(s.alpha);
    q = intermediate_points(rl);
  }
  std::vector<std::vector<std::size_t>> fiber_vertices;
  auto add_rational_fiber = [&](const Rational& x, bool outer) {
    const std::size_t f = g.fibers.size();
    g.fibers.push_back(RealAlgNum::rational(x));
    g.fiber_is_critical.push_back(false);
    fiber_vertices.emplace_back();
    RootList ys = isolate(specialize(F, Var::x, x));
    for (std::size_t i = 0; i < ys.roots.size(); ++i) {
      TopologyVertex v;
      v.fiber = f;
      v.kind = outer ? TopologyVertex::Kind::end : TopologyVertex::Kind::intermediate;
      v.x = g.fibers.back();
      v.y = refine(ys.roots[i], display_width());
      v.y_lo = v.y->lo;
      v.y_hi = v.y->hi;
      v.above = static_cast<int>(ys.roots.size() - 1 - i);
      fiber_vertices.back().push_back(g.vertices.size());
      g.vertices.push_back(std::move(v));
    }
  };
  auto add_critical_fiber = [&](std::size_t i) {
    const SolutionBox& s = crit.solutions[i];
    const RurPart& rp = crit.rur[crit.part_of[i]];
    const std::size_t f = g.fibers.size();
    g.fibers.push_back(s.alpha);
    g.fiber_is_critical.push_back(true);
    fiber_vertices.emplace_back();
    RealAlgNum a = cfg.enabled ? refine(s.alpha, pow2(-64)) : s.alpha;
    AlgFiber fib(Frec, a, cfg);
    auto ivs = fib.isolate();
    // the critical ordinate is a1(alpha)/a2(alpha); compare it with rational endpoints
    const int s2 = sign_at(rp.a2, a, cfg);
    auto above = [&](const Rational& c) {
      return sign_at(rp.a1 * Integer(c.get_den()) - rp.a2 * Integer(c.get_num()), a, cfg) * s2;
    };
    std::size_t at = ivs.size();
    for (std::size_t k = 0; k < ivs.size(); ++k)
      if (above(ivs[k].first) > 0 && above(ivs[k].second) < 0) {
        if (at != ivs.size()) throw InternalError("curve_topology: critical point in two fiber intervals");
        at = k;
      }
    if (at == ivs.size()) throw InternalError("curve_topology: critical point not found on its fiber");
    for (std::size_t k = 0; k < ivs.size(); ++k) {
      TopologyVertex v;
      v.fiber = f;
      v.kind = TopologyVertex::Kind::critical;
      v.x = s.alpha;
      v.above = static_cast<int>(ivs.size() - 1 - k);
      if (k == at) {
        v.critical_point = true;
        v.y = s.beta;
        v.y_lo = s.beta.lo;
        v.y_hi = s.beta.hi;
      } else {
        auto iv = fib.refine(ivs[k], display_width());
        v.y_lo = iv.first;
        v.y_hi = iv.second;
      }
      fiber_vertices.back().push_back(g.vertices.size());
      g.vertices.push_back(std::move(v));
    }
  };

  if (crit.solutions.empty()) {
    add_rational_fiber(q[0], true);
    add_rational_fiber(q[1], true);
  } else {
    for (std::size_t i = 0; i < crit.solutions.size(); ++i) {
      add_rational_fiber(q[i], i == 0);
      add_critical_fiber(i);
    }
    add_rational_fiber(q.back(), true);
  }

  auto connect = [&](std::size_t cf, std::size_t inf) {
    const auto& C = fiber_vertices[cf];
    const auto& I = fiber_vertices[inf];
    std::size_t c = C.size();
    for (std::size_t k = 0; k < C.size(); ++k)
      if (g.vertices[C[k]].critical_point) c = k;
    if (c == C.size()) throw InternalError("curve_topology: critical fiber without its critical point");
    const std::size_t below = c, above = C.size() - 1 - c;
    if (below + above > I.size()) throw InternalError("curve_topology: branch counts do not match");
    for (std::size_t k = 0; k < below; ++k) g.edges.push_back({C[k], I[k]});
    for (std::size_t k = below; k + above < I.size(); ++k) g.edges.push_back({C[c], I[k]});
    for (std::size_t k = 0; k < above; ++k) g.edges.push_back({C[C.size() - 1 - k], I[I.size() - 1 - k]});
  };
  for (std::size_t f = 0; f + 1 < fiber_vertices.size(); ++f) {
    if (g.fiber_is_critical[f]) connect(f, f + 1);
    else if (g.fiber_is_critical[f + 1]) connect(f + 1, f);
    else {
      if (fiber_vertices[f].size() != fiber_vertices[f + 1].size())
        throw InternalError("curve_topology: branch counts differ without a critical fiber");
      for (std::size_t k = 0; k < fiber_vertices[f].size(); ++k)
        g.edges.push_back({fiber_vertices[f][k], fiber_vertices[f + 1][k]});
    }
  }
  return g;
}

std::string to_dot(const TopologyGraph& g) {
  std::ostringstream os;
  os << "graph topology {\n";
  if (g.sheared()) os << "  // coordinates refer to F(x + " << to_string(g.shear) << "*y, y)\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    const char* kind = v.kind == TopologyVertex::Kind::critical ? "critical"
                       : v.kind == TopologyVertex::Kind::end    ? "end"
                                                                : "intermediate";
    RealAlgNum x = refine(v.x, display_width());
    os << "  v" << i << " [fiber=" << v.fiber << ", kind=" << kind << (v.critical_point ? ", critical_point=true" : "")
       << ", label=\"(" << to_decimal(x.midpoint(), 4) << ", " << to_decimal((v.y_lo + v.y_hi) / 2, 4) << ")\"];\n";
  }
  for (const auto& [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace bvs
