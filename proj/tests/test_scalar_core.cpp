#include <gtest/gtest.h>

#include <qnull/qnull.hpp>

using namespace qnull;

namespace {

Quat q(const char* text) { return parse_quat(text); }

}  // namespace

TEST(Rat, CanonicalFormAndParse) {
  EXPECT_EQ(Rat(mpz_class(4), mpz_class(-6)).str(), "-2/3");
  EXPECT_EQ(Rat::parse("10/4"), Rat(mpz_class(5), mpz_class(2)));
  EXPECT_EQ(Rat::parse("-7").str(), "-7");
  EXPECT_THROW(Rat::parse("1/0"), DivisionByZero);
  EXPECT_THROW(Rat::parse("abc"), InvalidInput);
  EXPECT_THROW(Rat().inverse(), DivisionByZero);
}

TEST(Quat, DefiningRelations) {
  EXPECT_EQ(Quat::i() * Quat::j(), Quat::k());
  EXPECT_EQ(Quat::j() * Quat::k(), Quat::i());
  EXPECT_EQ(Quat::k() * Quat::i(), Quat::j());
  EXPECT_EQ(Quat::i() * Quat::i(), Quat(-1));
  EXPECT_EQ(Quat::j() * Quat::i(), -Quat::k());
}

TEST(Quat, InverseOfOnePlusI) {
  EXPECT_EQ(q("1 + i").inv(), Quat(Rat(mpz_class(1), mpz_class(2)), Rat(mpz_class(-1), mpz_class(2)), 0, 0));
  EXPECT_THROW(Quat().inv(), DivisionByZero);
}

TEST(Quat, ConjugateReversesProducts) {
  EXPECT_EQ((Quat::i() * Quat::j()).conj(), Quat::j().conj() * Quat::i().conj());
  EXPECT_EQ((Quat::i() * Quat::j()).conj(), -Quat::k());
}

TEST(Quat, NormAndParts) {
  Quat a = q("1 - 2/3i + j - k");
  EXPECT_EQ(a.norm(), Rat(mpz_class(31), mpz_class(9)));
  EXPECT_EQ(a.re(), Rat(1));
  EXPECT_TRUE(a.im().is_pure());
  EXPECT_EQ(a * a.inv(), Quat(1));
}

TEST(Quat, Printing) {
  EXPECT_EQ(q("1 - 2/3i + k").str(), "1 - 2/3i + k");
  EXPECT_EQ(Quat().str(), "0");
  EXPECT_EQ(q("-j").str(), "-j");
}

TEST(Commutator, Examples) {
  EXPECT_EQ(commutator(Quat::i(), Quat::j()), Quat(0, 0, 0, 2));
  Quat a = q("1/2 + 3i - j");
  EXPECT_TRUE(commutator(a, a).is_zero());
  EXPECT_TRUE(commutator(Quat::i(), q("3/2")).is_zero());
}

TEST(Centralizer, Kinds) {
  EXPECT_EQ(centralizer_of(q("3/2")).kind(), CentralizerDesc::Kind::FullRing);
  auto ci = centralizer_of(Quat::i());
  EXPECT_EQ(ci.kind(), CentralizerDesc::Kind::QuadraticField);
  EXPECT_EQ(ci, CentralizerDesc::quadratic_field(Quat::i()));
  std::vector<Quat> ij{Quat::i(), Quat::j()};
  EXPECT_EQ(centralizer_of_set(ij).kind(), CentralizerDesc::Kind::Center);
  std::vector<Quat> none;
  EXPECT_EQ(centralizer_of_set(none).kind(), CentralizerDesc::Kind::FullRing);
  EXPECT_EQ(centralizer_of(q("2 + 3i")), ci);
  EXPECT_THROW(CentralizerDesc::quadratic_field(q("1")), InvalidInput);
}

TEST(Centralizer, Coordinates) {
  auto ci = CentralizerDesc::quadratic_field(Quat::i());
  auto c = ci.coords(q("1 + 2i"));
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (std::vector<Rat>{1, 2}));
  EXPECT_FALSE(ci.coords(Quat::j()));
  auto full = CentralizerDesc::full_ring().coords(Quat::k());
  ASSERT_TRUE(full);
  EXPECT_EQ(*full, (std::vector<Rat>{0, 0, 0, 1}));
  EXPECT_FALSE(CentralizerDesc::center().contains(Quat::i()));
}

TEST(LinearAlgebra, Solve) {
  RatMatrix id{{1, 0}, {0, 1}};
  auto s = linear_solve_rat(id, {Rat(3), Rat(-4)});
  ASSERT_TRUE(s.particular);
  EXPECT_EQ(*s.particular, (RatVector{3, -4}));
  EXPECT_TRUE(s.nullspace.empty());

  RatMatrix zero(2, 2);
  EXPECT_FALSE(linear_solve_rat(zero, {Rat(1), Rat(0)}).particular);

  RatMatrix m{{1, 1}, {2, 2}};
  auto t = linear_solve_rat(m, {Rat(3), Rat(6)});
  ASSERT_TRUE(t.particular);
  EXPECT_EQ(m.apply(*t.particular), (RatVector{3, 6}));
  ASSERT_EQ(t.nullspace.size(), 1u);
  EXPECT_EQ(m.apply(t.nullspace[0]), (RatVector{0, 0}));
  EXPECT_EQ(rank(m), 1u);
}

TEST(LinearAlgebra, LeftSolveOverCentralizer) {
  auto ci = CentralizerDesc::quadratic_field(Quat::i());
  std::vector<Quat> one{Quat(1)};
  EXPECT_FALSE(left_linear_solve_over_C(std::span<const Quat>(one), Quat::j(), ci));

  std::vector<Quat> one_j{Quat(1), Quat::j()};
  auto sol = left_linear_solve_over_C(std::span<const Quat>(one_j), Quat::k(), ci);
  ASSERT_TRUE(sol);
  EXPECT_EQ(*sol, (QVector{Quat(), Quat::i()}));

  auto z = left_linear_solve_over_C(std::span<const Quat>(one), Quat(), CentralizerDesc::center());
  ASSERT_TRUE(z);
  EXPECT_EQ(*z, (QVector{Quat()}));
}

TEST(LinearAlgebra, LeftIndependence) {
  auto ci = CentralizerDesc::quadratic_field(Quat::i());
  std::vector<Quat> a{Quat(1), Quat::j()}, b{Quat(1), q("2 + 3i")}, c{Quat(1), Quat::i(), Quat::j(), Quat::k()};
  EXPECT_TRUE(left_independent_over(a, ci));
  EXPECT_FALSE(left_independent_over(b, ci));
  EXPECT_FALSE(left_independent_over(c, CentralizerDesc::full_ring()));
  EXPECT_TRUE(left_independent_over(c, CentralizerDesc::center()));
}

TEST(Conjugator, Examples) {
  auto same = find_conjugator(Quat::i(), Quat::i());
  ASSERT_TRUE(same);
  EXPECT_EQ(*same * Quat::i() * same->inv(), Quat::i());

  // Oracle: every r with r i = j r is r3 (1 + k) + r2 (i + j).
  auto r = find_conjugator(Quat::i(), Quat::j());
  ASSERT_TRUE(r);
  EXPECT_EQ(*r * Quat::i() * r->inv(), Quat::j());
  EXPECT_EQ((*r)[0], (*r)[3]);
  EXPECT_EQ((*r)[1], (*r)[2]);
  EXPECT_EQ(q("i + j") * Quat::i(), Quat::j() * q("i + j"));

  EXPECT_FALSE(find_conjugator(Quat::i(), q("1 + i")));
  EXPECT_FALSE(find_conjugator(Quat::i(), q("2i")));
}
