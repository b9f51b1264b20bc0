#include <gtest/gtest.h>

#include <random>

#include "bvs/bivsolve.hpp"
#include "oracle.hpp"

using namespace bvs;

namespace {
BivPoly B(const char* s) { return parse_poly(s); }
UniPoly P(const char* s) { return as_uni(parse_poly(s), Var::x); }

// expected solutions as rational points
void expect_points(const std::vector<SolutionBox>& sols, std::vector<std::pair<Rational, Rational>> pts) {
  ASSERT_EQ(sols.size(), pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_EQ(compare(sols[i].alpha, RealAlgNum::rational(pts[i].first)), Ordering::equal) << i;
    EXPECT_EQ(compare(sols[i].beta, RealAlgNum::rational(pts[i].second)), Ordering::equal) << i;
  }
}

std::vector<Solver> all_solvers() { return {Solver::grid, Solver::mrur, Solver::grur}; }
}  // namespace

TEST(Solve, DiagonalCircle) {
  for (Solver s : all_solvers()) expect_points(solve(s, B("x^2 + y^2 - 2"), B("x - y")), {{-1, -1}, {1, 1}});
}

TEST(Solve, EmptyVariety) {
  for (Solver s : all_solvers()) EXPECT_TRUE(solve(s, B("x^2 + y^2 + 1"), B("x - y")).empty());
  EXPECT_TRUE(solve_grid(B("x^2 + y^2 + 1"), B("x")).empty());
  EXPECT_TRUE(solve_grur(B("x^2 + y^2 + 1"), B("x")).empty());
  // the two complex roots (0, +-i) share an abscissa
  EXPECT_THROW(solve_mrur(B("x^2 + y^2 + 1"), B("x")), GenericityError);
}

TEST(Solve, ParabolaAndLine) {
  for (Solver s : all_solvers()) expect_points(solve(s, B("y - x^2"), B("y - x")), {{0, 0}, {1, 1}});
}

TEST(Solve, SharedAbscissa) {
  expect_points(solve_grid(B("x^2 + y^2 - 1"), B("x")), {{0, -1}, {0, 1}});
  expect_points(solve_grur(B("x^2 + y^2 - 1"), B("x")), {{0, -1}, {0, 1}});
  try {
    solve_mrur(B("x^2 + y^2 - 1"), B("x"));
    FAIL() << "expected a genericity error";
  } catch (const GenericityError& e) {
    EXPECT_EQ(e.condition(), "distinct abscissae");
  }
}

TEST(Solve, CommonFactorIsRejected) {
  for (Solver s : all_solvers()) {
    EXPECT_THROW(solve(s, B("x*y"), B("x*y + x")), CoprimalityError);
    EXPECT_THROW(solve(s, B("x*y"), B("0")), CoprimalityError);
  }
}

TEST(Solve, IrrationalCoordinates) {
  // circle and hyperbola: x^2 + y^2 = 3, x y = 1
  auto g = solve_grid(B("x^2 + y^2 - 3"), B("x*y - 1"));
  auto r = solve_grur(B("x^2 + y^2 - 3"), B("x*y - 1"));
  auto m = solve_mrur(B("x^2 + y^2 - 3"), B("x*y - 1"));
  EXPECT_EQ(g.size(), 4u);
  EXPECT_TRUE(same_solutions(g, r));
  EXPECT_TRUE(same_solutions(g, m));
  for (const auto& s : g) {
    EXPECT_EQ(sign_at_biv(B("x^2 + y^2 - 3"), s.alpha, s.beta), 0);
    EXPECT_EQ(sign_at_biv(B("x*y - 1"), s.alpha, s.beta), 0);
    EXPECT_LE(s.alpha.width(), canonical_width());
  }
}

TEST(Solve, LeadingCoefficientsShareRoot) {
  // lc_y of both vanish at x = 0
  EXPECT_THROW(solve_mrur(B("x*y^2 - 1 + y"), B("x*y - 2 + y^2*x")), GenericityError);
}

TEST(ChooseShear, Examples) {
  EXPECT_EQ(choose_shear(B("x^2 + y^2 - 2"), B("x - y")).t0, 0);
  ShearReport r = choose_shear(B("x^2 + y^2 - 1"), B("x"));
  EXPECT_EQ(r.t0, 1);
  EXPECT_EQ(r.tried, (std::vector<Integer>{0}));
  EXPECT_EQ(r.sheared_G, B("x + y"));
  EXPECT_EQ(choose_shear(B("y - x"), B("y + x")).t0, 0);
}

// t0 must maximize the number of distinct complex projections; rejected candidates with
// constant leading coefficients must lose some
TEST(ChooseShear, AgreesWithDiscriminantOracle) {
  const char* systems[][2] = {{"x^2 + y^2 - 1", "x"},
                              {"x^2 + y^2 - 1", "x^2 - 4*x + 3 + y^2"},
                              {"y^2 - x^3", "y - x^2 + x"},
                              {"x^2 - y^2", "x^2 + y^2 - 2"},
                              {"x*y - 1", "x^2 - y^2"},
                              {"y^2 - x", "y^2 + y - x"}};
  for (auto& s : systems) {
    BivPoly F, G;
    try {
      F = B(s[0]);
      G = B(s[1]);
    } catch (const ParseError&) {
      continue;  // parentheses are not part of the grammar
    }
    ShearReport rep = choose_shear(F, G);
    int best = 0;
    std::vector<int> deg;
    for (int t = 0; t <= 12; ++t) {
      UniPoly r = resultant(shear_substitute(F, t), shear_substitute(G, t), Var::y);
      deg.push_back(squarefree_part(r).degree());
      best = std::max(best, deg.back());
    }
    EXPECT_EQ(deg[rep.t0.get_si()], best) << s[0] << " ; " << s[1];
    for (const auto& t : rep.tried) {
      BivPoly Fs = shear_substitute(F, t), Gs = shear_substitute(G, t);
      if (to_rec(Fs, Var::y).lc().degree() == 0 && to_rec(Gs, Var::y).lc().degree() == 0) EXPECT_LT(deg[t.get_si()], best);
    }
  }
}

TEST(Multiplicities, Examples) {
  auto m1 = with_multiplicities(B("y - x^2"), B("y"), solve_grur(B("y - x^2"), B("y")));
  ASSERT_EQ(m1.size(), 1u);
  EXPECT_EQ(*m1[0].multiplicity, 2);

  BivPoly c1 = B("x^2 + y^2 - 1"), c2 = B("x^2 - 4*x + 4 + y^2 - 1");
  EXPECT_EQ(resultant(c1, c2, Var::y), P("16*x^2 - 32*x + 16"));
  auto m2 = with_multiplicities(c1, c2, solve_grur(c1, c2));
  ASSERT_EQ(m2.size(), 1u);
  expect_points(m2, {{1, 0}});
  EXPECT_EQ(*m2[0].multiplicity, 2);

  auto m3 = with_multiplicities(B("x^2 + y^2 - 2"), B("x - y"), solve_grur(B("x^2 + y^2 - 2"), B("x - y")));
  ASSERT_EQ(m3.size(), 2u);
  EXPECT_EQ(*m3[0].multiplicity, 1);
  EXPECT_EQ(*m3[1].multiplicity, 1);
}

TEST(ComputeK, Examples) {
  KDecomposition a = compute_k(B("x^2 + y^2 - 2"), B("x - y"));
  ASSERT_EQ(a.gammas.size(), 1u);
  EXPECT_EQ(a.gammas[0].k, 1);
  EXPECT_EQ(a.gammas[0].gamma, P("x^2 - 1"));

  // y^2 - x and y^2 + y - x meet only at the origin, after a shear the fiber gcd is linear
  ShearReport sh = choose_shear(B("y^2 - x"), B("y^2 + y - x"));
  KDecomposition b = compute_k(sh.sheared_F, sh.sheared_G);
  for (const auto& part : b.gammas)
    if (!isolate(part.gamma).roots.empty()) EXPECT_EQ(part.k, 1);

  KDecomposition c = compute_k(B("x^2 + y^2 + 1"), B("x - y + 3"));
  for (const auto& part : c.gammas) EXPECT_TRUE(isolate(part.gamma).roots.empty());
  // product of the gammas is phi0, pairwise coprime
  KDecomposition d = compute_k(B("x^2 + y^2 - 1"), B("x"));
  UniPoly prod = UniPoly::one();
  for (const auto& part : d.gammas) prod = prod * part.gamma;
  EXPECT_EQ(primitive_part(prod), d.phi0);
  EXPECT_THROW(compute_k(B("x*y"), B("x*y + x")), CoprimalityError);
}

TEST(Solve, RandomCrossSolverAndOracle) {
  std::mt19937 rng(31);
  FilterConfig off;
  off.enabled = false;
  int done = 0;
  while (done < 25) {
    BivPoly F = oracle::random_biv(rng, 2, 2, -4, 4, 0.6), G = oracle::random_biv(rng, 2, 1, -4, 4, 0.7);
    if (F.total_degree() < 1 || G.total_degree() < 1) continue;
    std::vector<SolutionBox> g;
    try {
      g = solve_grid(F, G);
    } catch (const CoprimalityError&) {
      continue;
    }
    ++done;
    auto r = solve_grur(F, G);
    EXPECT_TRUE(same_solutions(g, r)) << to_string(F) << " ; " << to_string(G);
    auto g_off = solve_grid(F, G, off);
    ASSERT_EQ(g.size(), g_off.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      EXPECT_EQ(g[i].alpha.lo, g_off[i].alpha.lo);
      EXPECT_EQ(g[i].beta.hi, g_off[i].beta.hi);
    }
    try {
      auto m = solve_mrur(F, G);
      EXPECT_TRUE(same_solutions(g, m)) << to_string(F) << " ; " << to_string(G);
    } catch (const GenericityError&) {
    }
    auto gm = with_multiplicities(F, G, g);
    for (const auto& s : gm) EXPECT_GE(*s.multiplicity, 1);
  }
}
