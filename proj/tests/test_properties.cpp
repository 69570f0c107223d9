#include <gtest/gtest.h>

#include <qnull/qnull.hpp>

using namespace qnull;

namespace {

void expect_ok(const SuiteResult& s) {
  EXPECT_TRUE(s.ok()) << s.name << " " << s.passed << "/" << s.total
                      << (s.failures.empty() ? "" : ": " + s.failures.front());
}

}  // namespace

TEST(Properties, ProductFormula) {
  RandomSource rs(21);
  expect_ok(suite_product_formula(rs, 300));
}

TEST(Properties, RemainderLaw) {
  RandomSource rs(22);
  expect_ok(suite_remainder_law(rs, 300));
}

TEST(Properties, RootClassInequality) {
  RandomSource rs(23);
  expect_ok(suite_root_inequality(rs, 100));
}

TEST(Properties, WedderburnDimension) {
  RandomSource rs(24);
  expect_ok(suite_wedderburn(rs, 100));
}

TEST(Properties, IndependenceViaL) {
  RandomSource rs(25);
  expect_ok(suite_independence(rs, 300));
}

TEST(Properties, DegreeViaF) {
  RandomSource rs(26);
  expect_ok(suite_degree_via_F(rs, 300));
}

TEST(Properties, DegreeSymmetry) {
  RandomSource rs(27);
  expect_ok(suite_degree_symmetry(rs, 300));
}

TEST(Properties, EigenTuples) {
  RandomSource rs(28);
  expect_ok(suite_eigen(rs, 50));
}

TEST(Properties, PointReduction) {
  RandomSource rs(29);
  expect_ok(suite_point_reduction(rs, 300));
}

TEST(Properties, Certificates) {
  RandomSource rs(30);
  expect_ok(suite_certificates(rs, 50));
}

TEST(Properties, CompanionIsMultiplicative) {
  RandomSource rs(31);
  for (int n = 0; n < 100; ++n) {
    UPoly p = rs.upoly(static_cast<int>(rs.integer(0, 3))), q = rs.upoly(static_cast<int>(rs.integer(0, 3)));
    ASSERT_EQ(companion(p * q), companion(p) * companion(q));
    ASSERT_TRUE(coefficients_in(companion(p), CentralizerDesc::center()));
  }
}

TEST(Properties, DivisionIdentities) {
  RandomSource rs(32);
  for (int n = 0; n < 100; ++n) {
    UPoly p = rs.upoly(static_cast<int>(rs.integer(0, 5))), d = rs.upoly(static_cast<int>(rs.integer(0, 3)));
    auto [qr, rr] = divide_right(p, d);
    ASSERT_EQ(qr * d + rr, p);
    ASSERT_LT(rr.degree(), d.degree());
    auto [ql, rl] = divide_left(p, d);
    ASSERT_EQ(d * ql + rl, p);
    ASSERT_LT(rl.degree(), d.degree());
  }
}

TEST(Properties, GcrdAndLclmDivide) {
  RandomSource rs(33);
  for (int n = 0; n < 40; ++n) {
    Quat a = rs.quat(4), b = rs.quat(4), c = rs.quat(4);
    UPoly p = UPoly::linear(a) * UPoly::linear(b), q = UPoly::linear(c) * UPoly::linear(b);
    UPoly g = gcrd(p, q), l = lclm(p, q);
    ASSERT_TRUE(g.is_monic());
    ASSERT_TRUE(divide_right(p, g).remainder.is_zero());
    ASSERT_TRUE(divide_right(q, g).remainder.is_zero());
    ASSERT_TRUE(divide_right(l, p).remainder.is_zero());
    ASSERT_TRUE(divide_right(l, q).remainder.is_zero());
    ASSERT_EQ(l.degree() + g.degree(), p.degree() + q.degree());
  }
}

TEST(Properties, LeftEvaluationIsRightEvaluationOfConjugate) {
  RandomSource rs(34);
  for (int n = 0; n < 100; ++n) {
    UPoly p = rs.upoly(3);
    Quat a = rs.quat();
    ASSERT_EQ(eval_left(p, a).conj(), eval_right(conj_poly(p), a.conj()));
  }
}
