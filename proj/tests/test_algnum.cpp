#include <gtest/gtest.h>

#include <random>

#include "bvs/algnum.hpp"
#include "oracle.hpp"

using namespace bvs;

namespace {
UniPoly P(const char* s) { return as_uni(parse_poly(s), Var::x); }
BivPoly B(const char* s) { return parse_poly(s); }
RealAlgNum sqrt2() { return RealAlgNum{P("x^2 - 2"), 1, 2, -1}; }
RealAlgNum msqrt2() { return RealAlgNum{P("x^2 - 2"), -2, -1, 1}; }
FilterConfig nofilter() {
  FilterConfig c;
  c.enabled = false;
  return c;
}
}  // namespace

TEST(SignAt, Examples) {
  for (const auto& cfg : {FilterConfig{}, nofilter()}) {
    EXPECT_EQ(sign_at(P("x^2 - 3"), sqrt2(), cfg), -1);
    EXPECT_EQ(sign_at(P("x^2 - 2"), sqrt2(), cfg), 0);
    EXPECT_EQ(sign_at(P("x"), sqrt2(), cfg), 1);
  }
}

TEST(Compare, Examples) {
  EXPECT_EQ(compare(sqrt2(), RealAlgNum::rational(3)), Ordering::less);
  EXPECT_EQ(compare(sqrt2(), sqrt2()), Ordering::equal);
  RealAlgNum sqrt3{P("x^2 - 3"), 1, 2, -1};
  EXPECT_EQ(compare(sqrt2(), sqrt3), Ordering::less);
  EXPECT_EQ(compare(sqrt3, sqrt2()), Ordering::greater);
  // same number, different defining polynomials
  RealAlgNum other{P("x^3 - x^2 - 2*x + 2"), 1, 2, -1};
  EXPECT_EQ(compare(other, sqrt2()), Ordering::equal);
  EXPECT_EQ(compare(RealAlgNum::rational(1), RealAlgNum{P("x^2 - 1"), 0, 2, -1}), Ordering::equal);
}

TEST(SignAtBiv, Examples) {
  for (const auto& cfg : {FilterConfig{}, nofilter()}) {
    EXPECT_EQ(sign_at_biv(B("x*y - 1"), RealAlgNum::rational(1), RealAlgNum::rational(1), cfg), 0);
    EXPECT_EQ(sign_at_biv(B("x + y"), sqrt2(), msqrt2(), cfg), 0);
    EXPECT_EQ(sign_at_biv(B("x^2 + y^2 - 1"), sqrt2(), sqrt2(), cfg), 1);
    EXPECT_EQ(sign_at_biv(B("x*y - 2"), sqrt2(), sqrt2(), cfg), 0);
    EXPECT_EQ(sign_at_biv(B("x*y - 3"), sqrt2(), sqrt2(), cfg), -1);
    EXPECT_EQ(sign_at_biv(B("x*y + 2"), sqrt2(), msqrt2(), cfg), 0);
  }
}

// sign_at_biv against exact sign at random rational-free pairs, filter on vs off,
// and refinement invariance
TEST(SignAtBiv, FilterAndRefinementInvariance) {
  std::mt19937 rng(3);
  std::vector<RealAlgNum> nums;
  for (const char* s : {"x^2 - 2", "x^2 - 3", "x^3 - 2", "x^2 - x - 1", "5*x^2 - 1"})
    for (const auto& r : isolate(P(s)).roots) nums.push_back(r);
  for (int t = 0; t < 60; ++t) {
    BivPoly F = oracle::random_biv(rng, 2, 2, -3, 3);
    const RealAlgNum& a = nums[rng() % nums.size()];
    const RealAlgNum& b = nums[rng() % nums.size()];
    Sign s1 = sign_at_biv(F, a, b);
    Sign s2 = sign_at_biv(F, a, b, nofilter());
    Sign s3 = sign_at_biv(F, refine(a, a.width() / 4), refine(b, b.width() / 4), nofilter());
    EXPECT_EQ(s1, s2) << to_string(F);
    EXPECT_EQ(s2, s3) << to_string(F);
    // numeric check with long doubles where the value is clearly away from zero
    long double x = 0, y = 0;
    for (int k = 0; k < 80; ++k) {}
    RealAlgNum ra = refine(a, pow2(-50)), rb = refine(b, pow2(-50));
    x = ra.lo.get_d();
    y = rb.lo.get_d();
    long double v = 0;
    for (const auto& [e, c] : F.terms()) v += c.get_d() * std::pow(x, e.first) * std::pow(y, e.second);
    if (std::fabs(static_cast<double>(v)) > 1e-6) EXPECT_EQ(s2, v > 0 ? 1 : -1) << to_string(F);
  }
  // planted zeros: F = (x*y - c) with c chosen on the grid
  EXPECT_EQ(sign_at_biv(B("x^2*y^2 - 6"), nums[1 + 0], nums[3]), 0);
}

TEST(SignAtBiv, PointMatchesUnivariate) {
  std::mt19937 rng(4);
  auto roots = isolate(P("x^3 - 3*x + 1")).roots;
  for (int t = 0; t < 40; ++t) {
    BivPoly F = oracle::random_biv(rng, 3, 3, -4, 4);
    Rational a(static_cast<int>(rng() % 7) - 3, 1 + rng() % 3);
    a.canonicalize();
    for (const auto& b : roots)
      EXPECT_EQ(sign_at_biv(F, RealAlgNum::rational(a), b), sign_at(specialize(F, Var::x, a), b));
  }
}

TEST(CountFiberRoots, Examples) {
  EXPECT_EQ(count_fiber_roots(B("y^2 - x"), sqrt2(), FiberRange::all()), 2);
  EXPECT_EQ(count_fiber_roots(B("y^2 - x"), sqrt2(), FiberRange::above(Rational(0))), 1);
  EXPECT_EQ(count_fiber_roots(B("y^2 + x"), sqrt2(), FiberRange::all()), 0);
  // y^2 = sqrt2 has roots +-2^(1/4); above -2^(1/4) there is exactly one
  RootList r4 = isolate(P("x^4 - 2"));
  EXPECT_EQ(count_fiber_roots(B("y^2 - x"), sqrt2(), FiberRange::above(r4.roots[0])), 1);
  EXPECT_EQ(count_fiber_roots(B("y^2 - x"), sqrt2(), FiberRange::above(r4.roots[1])), 0);
  EXPECT_EQ(count_fiber_roots(B("y^2 - x"), sqrt2(), FiberRange::above(msqrt2())), 2);
  // leading coefficient vanishing
  EXPECT_THROW(count_fiber_roots(B("x^2*y^2 - 2*y^2 + y - 1"), sqrt2(), FiberRange::all()), PreconditionError);
}

TEST(CountFiberRoots, RationalAbscissaMatchesIsolation) {
  std::mt19937 rng(8);
  int done = 0;
  while (done < 50) {
    BivPoly F = oracle::random_biv(rng, 3, 4, -5, 5);
    Rational a(static_cast<int>(rng() % 9) - 4, 1 + rng() % 2);
    a.canonicalize();
    UniPoly f = specialize(F, Var::x, a);
    if (f.degree() <= 0) continue;
    ++done;
    auto rl = isolate(f);
    EXPECT_EQ(count_fiber_roots(F, RealAlgNum::rational(a), FiberRange::all()), static_cast<int>(rl.roots.size()));
    int above0 = 0;
    for (const auto& r : rl.roots) above0 += compare(r, RealAlgNum::rational(0)) == Ordering::greater;
    EXPECT_EQ(count_fiber_roots(F, RealAlgNum::rational(a), FiberRange::above(Rational(0))), above0);
  }
}

// partition consistency at an algebraic abscissa, cross-checked against a rational neighbour
TEST(CountFiberRoots, AlgebraicAbscissaPartition) {
  std::mt19937 rng(12);
  for (int t = 0; t < 25; ++t) {
    BivPoly F = oracle::random_biv(rng, 2, 3, -4, 4) + B("y^3");
    if (F.deg_y() != 3) continue;
    RealAlgNum a = sqrt2();
    int all = count_fiber_roots(F, a, FiberRange::all());
    int above = count_fiber_roots(F, a, FiberRange::above(Rational(1, 3)));
    int below = count_fiber_roots(-F, a, FiberRange::all()) - above;  // same roots
    EXPECT_GE(below, 0);
    EXPECT_LE(above, all);
    // brute force: roots of F(sqrt2, y) = roots of res_x(F, x^2 - 2) restricted
    BivPoly A = B("x^2 - 2");
    UniPoly r = resultant(F, A, Var::x);
    if (r.is_zero()) continue;
    int count = 0, count_above = 0;
    for (const auto& b : isolate(r).roots)
      if (sign_at_biv(F, a, b) == 0) {
        ++count;
        count_above += compare(b, RealAlgNum::rational(Rational(1, 3))) == Ordering::greater;
      }
    EXPECT_EQ(all, count) << to_string(F);
    EXPECT_EQ(above, count_above) << to_string(F);
  }
}
