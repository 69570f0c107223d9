#include <gtest/gtest.h>

#include <qnull/qnull.hpp>

using namespace qnull;

namespace {

UPoly P(const char* text) { return parse_upoly(text); }
Quat q(const char* text) { return parse_quat(text); }

}  // namespace

TEST(UPoly, Products) {
  EXPECT_EQ(P("x - i") * P("x - j"), P("x^2 - (i + j)x + k"));
  UPoly p = P("(1 + i)x^2 - 2/3jx + k");
  EXPECT_EQ(p * P("1"), p);
  EXPECT_EQ(P("x - i") * P("x + i"), P("x^2 + 1"));
  EXPECT_EQ(P("i x") * P("j x"), P("k x^2"));
}

TEST(UPoly, Printing) {
  EXPECT_EQ(P("(1+i)x^2 - 2/3jx + k").str(), "(1 + i)x^2 - 2/3jx + k");
  EXPECT_EQ(P("x^2 - (i+j)x + k").str(), "x^2 + (-i - j)x + k");
  EXPECT_EQ(P("0").str(), "0");
  EXPECT_EQ(P("0").degree(), -1);
}

TEST(UPoly, Evaluation) {
  UPoly p = P("x^2 - (i + j)x + k");
  EXPECT_TRUE(eval_left(p, Quat::j()).is_zero());
  EXPECT_EQ(eval_left(p, Quat::i()), Quat(0, 0, 0, 2));
  EXPECT_EQ(eval_left(P("3 - k"), q("1 + i")), q("3 - k"));
  EXPECT_TRUE(eval_left(P("x^2 + 1"), Quat::i()).is_zero());
  // Right evaluation keeps coefficients on the right.
  EXPECT_TRUE(eval_right(p, Quat::i()).is_zero());
  EXPECT_EQ(eval_left(P("i x"), Quat::j()), Quat::k());
  EXPECT_EQ(eval_right(P("i x"), Quat::j()), -Quat::k());
}

TEST(UPoly, RightDivision) {
  auto [q1, r1] = divide_right(P("x^2 + 1"), P("x - i"));
  EXPECT_EQ(q1, P("x + i"));
  EXPECT_TRUE(r1.is_zero());

  Quat a1 = q("2 - j"), a0 = q("1/3 + k"), a = q("i + 2j");
  auto [q2, r2] = divide_right(UPoly({a0, a1}), UPoly::linear(a));
  EXPECT_EQ(q2, UPoly::constant(a1));
  EXPECT_EQ(r2, UPoly::constant(a1 * a + a0));

  EXPECT_THROW(divide_right(P("x"), P("0")), DivisionByZero);
}

TEST(UPoly, LeftDivision) {
  UPoly p = P("x^2 - (i + j)x + k");
  auto [quo, rem] = divide_left(p, P("x - i"));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(P("x - i") * quo, p);
  EXPECT_THROW(divide_left(p, P("0")), DivisionByZero);
}

TEST(UPoly, GcrdAndLclm) {
  EXPECT_EQ(gcrd(P("x - i"), P("x - i")), P("x - i"));
  EXPECT_EQ(gcrd(P("x^2 + 1"), P("x - i")), P("x - i"));
  EXPECT_EQ(gcrd(P("x - i"), P("x - j")), P("1"));
  // Oracle: the monic quadratic killing i and j on the right is x^2 + 1.
  UPoly l = lclm(P("x - i"), P("x - j"));
  EXPECT_EQ(l, P("x^2 + 1"));
  EXPECT_TRUE(eval_left(l, Quat::i()).is_zero());
  EXPECT_TRUE(eval_left(l, Quat::j()).is_zero());
  EXPECT_EQ(lclm(P("x - 1"), P("x - 2")), P("x^2 - 3x + 2"));
}

TEST(UPoly, Companion) {
  EXPECT_EQ(companion(P("x - i")), P("x^2 + 1"));
  EXPECT_EQ(companion(P("x - 2")), P("x^2 - 4x + 4"));
  EXPECT_EQ(companion(P("x^2 + 1")), P("x^4 + 2x^2 + 1"));
  UPoly a = P("(1 + i)x - j"), b = P("x^2 + kx + 1/2");
  EXPECT_EQ(companion(a * b), companion(a) * companion(b));
  EXPECT_TRUE(coefficients_in(companion(P("(2 - i)x^3 + jx - k")), CentralizerDesc::center()));
}

TEST(Roots, SphereOfXSquaredPlusOne) {
  auto rep = right_roots(P("x^2 + 1"));
  ASSERT_EQ(rep.classes.size(), 1u);
  EXPECT_EQ(rep.classes[0], RootClass::sphere(0, 1));
  EXPECT_EQ(rep.status, RootStatus::Complete);
  auto rep_point = representative(rep.classes[0]);
  ASSERT_TRUE(rep_point);
  EXPECT_TRUE(eval_left(P("x^2 + 1"), *rep_point).is_zero());
}

TEST(Roots, ConjugateRootsShareOneClass) {
  // i and j are conjugate and i is not a root, so only Isolated(j) remains.
  auto rep = right_roots(P("x^2 - (i + j)x + k"));
  ASSERT_EQ(rep.classes.size(), 1u);
  EXPECT_EQ(rep.classes[0], RootClass::isolated(Quat::j()));
  EXPECT_EQ(rep.status, RootStatus::Complete);
}

TEST(Roots, IrrationalRootsAreReportedIncomplete) {
  auto rep = right_roots(P("x^2 - 2"));
  EXPECT_TRUE(rep.classes.empty());
  EXPECT_EQ(rep.status, RootStatus::PossiblyIncomplete);
}

TEST(Roots, MixedFactors) {
  UPoly p = P("x - 3") * P("x - (1 + j)") * P("x^2 + 2x + 5");
  auto rep = right_roots(p);
  EXPECT_EQ(rep.status, RootStatus::Complete);
  EXPECT_EQ(rep.classes.size(), 3u);
  for (const auto& rc : rep.classes) {
    auto r = representative(rc);
    ASSERT_TRUE(r) << rc.str();
    EXPECT_TRUE(eval_left(p, *r).is_zero()) << rc.str();
  }
  EXPECT_THROW(right_roots(P("5")), InvalidInput);
}

TEST(Roots, SphereWithoutRationalPoint) {
  // x^2 + 7 has roots of norm 7, and 7 is not a sum of three rational squares.
  auto rep = right_roots(P("x^2 + 7"));
  ASSERT_EQ(rep.classes.size(), 1u);
  EXPECT_EQ(rep.classes[0], RootClass::sphere(0, 7));
  EXPECT_FALSE(representative(rep.classes[0]));
}

TEST(ESpace, Examples) {
  auto e1 = e_space(P("x^2 + 1"), Quat::i());
  EXPECT_EQ(e1.dim(), 2u);
  EXPECT_EQ(e1.over, CentralizerDesc::quadratic_field(Quat::i()));

  // Oracle: the solution space of -2r - 2iri = 0 is Q + Qi = C(i).
  auto e2 = e_space(P("(x - i)^2"), Quat::i());
  EXPECT_EQ(e2.dim(), 1u);
  ASSERT_EQ(e2.basis.size(), 1u);
  EXPECT_TRUE(e2.over.contains(e2.basis[0]));

  Quat a = q("1 + 2i - k");
  auto e3 = e_space(UPoly::linear(a), a);
  EXPECT_EQ(e3.dim(), 1u);

  EXPECT_THROW(e_space(P("x^2 + 1"), Quat(1)), InvalidInput);
}

TEST(MinPoly, Examples) {
  auto ci = centralizer_of(Quat::i());
  EXPECT_EQ(min_left_poly(Quat::j(), ci), P("x^2 + 1"));
  EXPECT_EQ(min_left_poly(Quat::i(), ci), P("x - i"));
  EXPECT_EQ(min_left_poly(q("1 + j"), CentralizerDesc::center()), P("x^2 - 2x + 2"));
  EXPECT_EQ(min_left_poly(Quat::k(), CentralizerDesc::full_ring()), P("x - k"));
}

TEST(Wedderburn, Examples) {
  std::vector<Quat> gi{Quat::i()}, g1{Quat(1)}, bad{Quat()};
  UPoly w = wedderburn_lclm(Quat::j(), gi);
  EXPECT_EQ(w, P("x^2 + 1"));
  EXPECT_TRUE(coefficients_in(w, centralizer_of(Quat::i())));
  EXPECT_EQ(wedderburn_lclm(Quat::i(), gi), P("x - i"));
  EXPECT_EQ(wedderburn_lclm(Quat::j(), g1), P("x - j"));
  EXPECT_THROW(wedderburn_lclm(Quat::j(), bad), InvalidInput);
  EXPECT_EQ(e_space(w, Quat::j()).dim(), 2u);
}

TEST(LeftRoots, InsideCentralizer) {
  auto ci = centralizer_of(Quat::i());
  auto a = left_root_in(P("x^2 + 1"), ci);
  ASSERT_TRUE(a);
  EXPECT_TRUE(ci.contains(*a));
  EXPECT_TRUE(eval_right(P("x^2 + 1"), *a).is_zero());
  EXPECT_FALSE(left_root_in(P("x^2 - 2"), CentralizerDesc::full_ring()));
}
