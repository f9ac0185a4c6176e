#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace verona;
using verona::oracle::Rng;

namespace {

GrassCurve example_curve() {
  // <(1 - t) e2 + t e1>
  return GrassCurve(2, {{UniPoly::linear(0, 1), UniPoly::linear(1, -1)}}, 1);
}

GrassCurve random_curve(Rng& rng, std::size_t n, std::size_t gens, std::size_t q) {
  std::vector<PolyVector> g(gens, PolyVector(n));
  for (auto& v : g)
    for (auto& entry : v) {
      std::vector<Scalar> coeffs(q + 1);
      for (auto& c : coeffs) c = rng.integer(-3, 3);
      entry = UniPoly(coeffs);
    }
  return GrassCurve(n, std::move(g), q);
}

}  // namespace

TEST(UniPoly, ArithmeticAndGcd) {
  const UniPoly a({Scalar(-1), Scalar(0), Scalar(1)});  // t^2 - 1
  const UniPoly b = UniPoly::linear(-1, 1);             // t - 1
  EXPECT_EQ(a(Scalar(3)), Scalar(8));
  auto [q, r] = divmod(a, b);
  EXPECT_EQ(q, UniPoly::linear(1, 1));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(a, b * UniPoly::linear(2, 1)), b);
  EXPECT_EQ(a.to_string(), "t^2 - 1");
}

TEST(EvalCurve, Examples) {
  const GrassCurve c = example_curve();
  EXPECT_EQ(eval_curve(c, ProjParam(0)), span_of({{0, 1}}, 2));
  // Homogenized: x e1 + (y - x) e2, at [1:0] gives e1 - e2.
  EXPECT_EQ(eval_curve(c, ProjParam::infinity()), span_of({{1, -1}}, 2));
  const GrassCurve constant(2, {{UniPoly(1), UniPoly()}}, 0);
  for (const ProjParam& s : {ProjParam(0), ProjParam(7), ProjParam::infinity()})
    EXPECT_EQ(eval_curve(constant, s), span_of({{1, 0}}, 2));
}

TEST(EvalCurve, InfinityUsesDeclaredDegree) {
  // Declared degree 2 with actual degree 1: the t^2 coefficients vanish, so evaluation at infinity degenerates.
  const GrassCurve c(2, {{UniPoly::linear(0, 1), UniPoly(1)}}, 2);
  try {
    eval_curve(c, ProjParam::infinity());
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::DegenerateEvaluation);
  }
}

TEST(EvalCurve, DependentGenerators) {
  const GrassCurve c(2, {{UniPoly::t(), UniPoly(0)}, {UniPoly(1), UniPoly(0)}}, 1);
  EXPECT_THROW(eval_curve(c, ProjParam(1)), Error);
}

TEST(GrassCurve, RejectsDegreeOverflow) {
  EXPECT_THROW(GrassCurve(1, {{UniPoly::t().pow(2)}}, 1), Error);
}

TEST(Mobius, ThreePointExamples) {
  const ProjParam inf = ProjParam::infinity();
  EXPECT_EQ(mobius_three_point(0, 1, inf, 0, 1, inf), MobiusMap());
  const MobiusMap m = mobius_three_point(1, 2, 3, 0, 1, inf);
  EXPECT_EQ(m, MobiusMap(1, -1, -1, 3));
  EXPECT_EQ(m(ProjParam(1)), ProjParam(0));
  EXPECT_EQ(m(ProjParam(2)), ProjParam(1));
  EXPECT_EQ(m(ProjParam(3)), inf);
  EXPECT_EQ(mobius_three_point(0, 1, inf, inf, 1, 0), MobiusMap(0, 1, 1, 0));
}

TEST(Mobius, FixingZeroOneInfinityForcesIdentity) {
  // Constraints M(0)=0 => b=0, M(inf)=inf => c=0, M(1)=1 => a=d.
  const ProjParam inf = ProjParam::infinity();
  const MobiusMap m = mobius_three_point(0, 1, inf, 0, 1, inf);
  EXPECT_EQ(m, MobiusMap(1, 0, 0, 1));
  EXPECT_EQ(mobius_apply(m, ProjParam(2)), ProjParam(2));
}

TEST(Mobius, ErrorsAndNormalization) {
  try {
    MobiusMap(1, 2, 2, 4);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::SingularMap);
  }
  try {
    mobius_three_point(0, 0, 1, 0, 1, 2);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::DuplicateParameter);
  }
  EXPECT_EQ(MobiusMap(2, 4, 6, 2), MobiusMap(1, 2, 3, 1));
  EXPECT_EQ(MobiusMap(0, 3, 3, 0), MobiusMap(0, 1, 1, 0));
}

TEST(Mobius, ReparamIdentityLeavesCurve) {
  const GrassCurve c = example_curve();
  const GrassCurve r = mobius_reparam(MobiusMap(), c);
  EXPECT_EQ(r.generators(), c.generators());
}

TEST(Mobius, ReparamCommutesWithEvaluation) {
  Rng rng(17);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t q = static_cast<std::size_t>(rng.integer(0, 3));
    const GrassCurve c = random_curve(rng, 4, 2, q);
    const Scalar a = rng.rational(), b = rng.rational(), cc = rng.rational(), d = rng.rational();
    if (is_zero(a * d - b * cc)) continue;
    const MobiusMap m(a, b, cc, d);
    const GrassCurve r = mobius_reparam(m, c);
    EXPECT_EQ(r.degree(), c.degree());
    std::vector<ProjParam> samples{ProjParam::infinity(), ProjParam(0), ProjParam(1), ProjParam(Scalar(-5, 2))};
    samples.push_back(m.inverse()(ProjParam::infinity()));
    for (const auto& s : samples) {
      bool lhs_ok = true, rhs_ok = true;
      Subspace lhs, rhs;
      try { lhs = eval_curve(r, s); } catch (const Error&) { lhs_ok = false; }
      try { rhs = eval_curve(c, m(s)); } catch (const Error&) { rhs_ok = false; }
      EXPECT_EQ(lhs_ok, rhs_ok);
      if (lhs_ok && rhs_ok) {
        EXPECT_EQ(lhs, rhs);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(EvalCurve, InfinityIsTheLimit) {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const GrassCurve c = random_curve(rng, 5, 2, 2);
    Subspace at_inf;
    try { at_inf = eval_curve(c, ProjParam::infinity()); } catch (const Error&) { continue; }
    // s^q g(1/s) at s = 0 is the t^q coefficient.
    const GrassCurve flipped = mobius_reparam(MobiusMap(0, 1, 1, 0), c);
    EXPECT_EQ(eval_curve(flipped, ProjParam(0)), at_inf);
  }
  // When the lower-order coefficients already lie in the span of the leading ones,
  // every large finite T gives the subspace at infinity.
  for (int trial = 0; trial < 20; ++trial) {
    const QMatrix lead = rng.integer_matrix(2, 5);
    if (rank(lead) != 2) continue;
    std::vector<PolyVector> gens(2, PolyVector(5));
    for (std::size_t g = 0; g < 2; ++g) {
      const Scalar mix0 = rng.integer(-2, 2), mix1 = rng.integer(-2, 2);
      for (std::size_t k = 0; k < 5; ++k)
        gens[g][k] = UniPoly({Scalar(mix0 * lead(1 - g, k)), Scalar(mix1 * lead(g, k)), lead(g, k)});
    }
    const GrassCurve c(5, gens, 2);
    const Subspace limit = eval_curve(c, ProjParam::infinity());
    EXPECT_EQ(limit, canonicalize(lead));
    for (long big : {1000L, 123457L}) EXPECT_EQ(eval_curve(c, ProjParam(Scalar(big))), limit);
  }
}

TEST(CurveMembership, FindsParameters) {
  const GrassCurve c = example_curve();
  const auto hits = curve_parameters_of(c, eval_curve(c, ProjParam(Scalar(3, 7))));
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0], ProjParam(Scalar(3, 7)));
  // (t, 1 - t) is proportional to (1, 1) exactly at t = 1/2.
  ASSERT_EQ(curve_parameters_of(c, span_of({{1, 1}}, 2)).size(), 1u);
  EXPECT_EQ(curve_parameters_of(c, span_of({{1, 1}}, 2))[0], ProjParam(Scalar(1, 2)));
  EXPECT_TRUE(curve_contains(c, span_of({{1, -1}}, 2)));
  // Quadratic curve: rational root search.
  const GrassCurve moment(3, {{UniPoly(1), UniPoly::t(), UniPoly::t().pow(2)}}, 2);
  const auto q_hits = curve_parameters_of(moment, span_of({{4, -6, 9}}, 3));
  ASSERT_EQ(q_hits.size(), 1u);
  EXPECT_EQ(q_hits[0], ProjParam(Scalar(-3, 2)));
  EXPECT_FALSE(curve_contains(moment, span_of({{1, 1, 2}}, 3)));
}
