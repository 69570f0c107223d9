#include <gtest/gtest.h>

#include <qnull/qnull.hpp>

using namespace qnull;

namespace {

Quat q(const char* text) { return parse_quat(text); }
MPoly M(const char* text, std::size_t n) { return parse_mpoly(text, n); }

QMatrix mat(std::vector<std::vector<Quat>> rows) { return QMatrix(rows); }

}  // namespace

TEST(MPoly, Products) {
  EXPECT_EQ(M("(x1 - i)(x1 + i)", 1), M("x1^2 + 1", 1));
  MPoly p = M("(1 + j)x1x2^2 - kx2 + 3", 2);
  EXPECT_EQ(p * MPoly::constant(2, 1), p);
  EXPECT_EQ(M("i x1", 2) * M("j x2", 2), M("k x1x2", 2));
  EXPECT_THROW(M("x1", 1) * M("x1", 2), InvalidInput);
  EXPECT_EQ(M("x1x2 - k", 2).terms().size(), 2u);
}

TEST(EvalC, Examples) {
  CommutingPoint pt({Quat::i(), q("1 + i")});
  EXPECT_TRUE(eval_c(M("x1x2 - (i - 1)", 2), pt).is_zero());
  EXPECT_EQ(eval_c(M("2 - k", 2), pt), q("2 - k"));
  CommutingPoint same({Quat::i(), Quat::i()});
  EXPECT_TRUE(eval_c(M("x1 - x2", 2), same).is_zero());
  EXPECT_THROW(eval_c(M("x1", 1), pt), InvalidInput);
  EXPECT_THROW(CommutingPoint({Quat::i(), Quat::j()}), InvalidInput);
}

TEST(PointReduction, Examples) {
  CommutingPoint pt({Quat::i(), q("1 + i")});
  auto r1 = reduce_mod_point(point_generator(pt, 0), pt);
  EXPECT_TRUE(r1.remainder.is_zero());
  EXPECT_EQ(r1.quotients[0], MPoly::constant(2, 1));

  MPoly p = M("x1x2", 2);
  auto r2 = reduce_mod_point(p, pt);
  EXPECT_EQ(r2.remainder, q("i - 1"));
  EXPECT_EQ(r2.quotients[0] * point_generator(pt, 0) + r2.quotients[1] * point_generator(pt, 1) +
                MPoly::constant(2, r2.remainder),
            p);

  CommutingPoint one({Quat::i()});
  auto r3 = reduce_mod_point(M("x1^2 + 1", 1), one);
  EXPECT_TRUE(r3.remainder.is_zero());
  EXPECT_EQ(r3.quotients[0], M("x1 + i", 1));
  EXPECT_TRUE(in_point_ideal(M("x1^2 + 1", 1), one));
  EXPECT_FALSE(in_point_ideal(M("x1^2 - 1", 1), one));
}

TEST(PointIdeal, Generators) {
  auto g1 = point_ideal(CommutingPoint({Quat::i()}));
  ASSERT_EQ(g1.gens.size(), 1u);
  EXPECT_EQ(g1.gens[0], M("x1 - i", 1));
  auto g2 = point_ideal(CommutingPoint({Quat::i(), q("1 + i")}));
  EXPECT_EQ(g2.gens, (std::vector<MPoly>{M("x1 - i", 2), M("x2 - 1 - i", 2)}));
  EXPECT_THROW(point_ideal(CommutingPoint(std::vector<Quat>{})), InvalidInput);
}

TEST(Presentation, Checks) {
  ModulePresentation diag{2, {QMatrix::diagonal({Quat::i(), Quat(2)}), QMatrix::diagonal({q("1 + i"), Quat(1)})}};
  EXPECT_TRUE(check_presentation(diag).ok);
  QMatrix a = mat({{Quat::i(), Quat::j()}, {Quat(1), Quat::k()}});
  EXPECT_TRUE(check_presentation({2, {a, a * a}}).ok);
  auto bad = check_presentation({1, {mat({{Quat::i()}}), mat({{Quat::j()}})}});
  EXPECT_FALSE(bad.ok);
  EXPECT_FALSE(bad.violation.empty());
  EXPECT_FALSE(check_presentation({2, {mat({{Quat(1), Quat(0)}})}}).ok);
}

TEST(Annihilator, Examples) {
  ModulePresentation m1{1, {mat({{Quat::i()}})}};
  EXPECT_EQ(annihilator_minpoly(m1, {Quat(1)}, 0), UPoly::linear(Quat::i()));

  // Oracle: rows v, vA, vA^2 = (1,1), (i,j), (-1,-1) give the same system as lclm(x-i, x-j).
  ModulePresentation m2{2, {QMatrix::diagonal({Quat::i(), Quat::j()})}};
  EXPECT_EQ(annihilator_minpoly(m2, {Quat(1), Quat(1)}, 0), parse_upoly("x^2 + 1"));

  ModulePresentation rot{2, {mat({{Quat(0), Quat(-1)}, {Quat(1), Quat(0)}})}};
  EXPECT_EQ(annihilator_minpoly(rot, {Quat(1), Quat(0)}, 0), parse_upoly("x^2 + 1"));
  EXPECT_THROW(annihilator_minpoly(rot, {Quat(), Quat()}, 0), InvalidInput);
}

TEST(Eigen, AlreadyAnEigenvector) {
  ModulePresentation m{2, {QMatrix::diagonal({Quat::i(), Quat::j()})}};
  auto out = find_eigen_tuple(m, {Quat(1), Quat(0)});
  ASSERT_TRUE(out.found());
  EXPECT_EQ(out.tuple->v, (QVector{Quat(1), Quat(0)}));
  EXPECT_EQ(out.tuple->point.components(), (std::vector<Quat>{Quat::i()}));
}

TEST(Eigen, Rotation) {
  ModulePresentation rot{2, {mat({{Quat(0), Quat(-1)}, {Quat(1), Quat(0)}})}};
  auto out = find_eigen_tuple(rot, {Quat(1), Quat(0)});
  ASSERT_TRUE(out.found());
  const Quat& a = out.tuple->point[0];
  EXPECT_EQ(a * a, Quat(-1));
  EXPECT_TRUE(is_eigen_tuple(rot, out.tuple->v, out.tuple->point.components()));
  // Hand check: (1, -i) A = (-i, -1) = -i (1, -i).
  EXPECT_EQ(apply_right({Quat(1), -Quat::i()}, rot.mats[0]), scale_left(-Quat::i(), {Quat(1), -Quat::i()}));
}

TEST(Eigen, RootNotFound) {
  ModulePresentation m{2, {mat({{Quat(0), Quat(2)}, {Quat(1), Quat(0)}})}};
  auto out = find_eigen_tuple(m, {Quat(1), Quat(0)});
  EXPECT_FALSE(out.found());
  ASSERT_TRUE(out.unsolved);
  EXPECT_EQ(*out.unsolved, parse_upoly("x^2 - 2"));
  EXPECT_THROW(find_eigen_tuple(m, {Quat(), Quat()}), InvalidInput);
  EXPECT_THROW(find_eigen_tuple(m, {Quat(1)}), InvalidInput);
}

TEST(Eigen, TwoCommutingOperators) {
  QMatrix a = mat({{Quat(0), Quat(-1)}, {Quat(1), Quat(0)}});
  ModulePresentation m{2, {a, a * a * QMatrix::diagonal({Quat(-2), Quat(-2)})}};
  ASSERT_TRUE(check_presentation(m).ok);
  auto out = find_eigen_tuple(m, {Quat(0), Quat(1)});
  ASSERT_TRUE(out.found());
  EXPECT_TRUE(is_eigen_tuple(m, out.tuple->v, out.tuple->point.components()));
  EXPECT_EQ(out.tuple->point[1], Quat(2));
}

TEST(Simplicity, Reports) {
  ModulePresentation one{1, {mat({{Quat::i()}}), mat({{q("1 + i")}})}};
  auto r1 = verify_simple_1dim(one);
  EXPECT_EQ(r1.kind, SimplicityReport::Kind::Simple);
  ASSERT_TRUE(r1.annihilator);
  EXPECT_EQ(*r1.annihilator, point_ideal(CommutingPoint({Quat::i(), q("1 + i")})));

  ModulePresentation diag{2, {QMatrix::diagonal({Quat::i(), Quat::j()})}};
  auto r2 = verify_simple_1dim(diag);
  EXPECT_EQ(r2.kind, SimplicityReport::Kind::NonSimple);
  ASSERT_TRUE(r2.witness);

  ModulePresentation irr{2, {mat({{Quat(0), Quat(2)}, {Quat(1), Quat(0)}})}};
  auto r3 = verify_simple_1dim(irr);
  EXPECT_EQ(r3.kind, SimplicityReport::Kind::Inconclusive);
  ASSERT_TRUE(r3.unsolved);
}

TEST(Simplicity, RoundTripFromPoint) {
  RandomSource rs(11);
  for (int n = 0; n < 50; ++n) {
    CommutingPoint pt = rs.commuting_point(static_cast<std::size_t>(rs.integer(1, 3)));
    ModulePresentation mod{1, {}};
    for (const auto& c : pt.components()) mod.mats.push_back(mat({{c}}));
    auto rep = verify_simple_1dim(mod);
    ASSERT_EQ(rep.kind, SimplicityReport::Kind::Simple);
    EXPECT_EQ(*rep.annihilator, point_ideal(pt));
  }
}

TEST(Rabinowitsch, MembershipAtNOne) {
  MPoly g = M("x - i", 1);
  LeftIdealGens ideal({g}, 1);
  auto cert = rabinowitsch_check(ideal, g, Quat(1), 1, 0);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->cofactors[0][0], MPoly::constant(1, 1));
  EXPECT_TRUE(verify_certificate(ideal, g, Quat(1), *cert));
  auto found = find_certificate(ideal, g, Quat(1), 3, 0);
  ASSERT_TRUE(found);
  EXPECT_EQ(found->N, 1u);
  EXPECT_THROW(rabinowitsch_check(ideal, g, Quat(1), 0, 1), InvalidInput);
}

TEST(Rabinowitsch, SquareOfLinearIdeal) {
  MPoly g = M("x - i", 1);
  LeftIdealGens ideal({g * g}, 1);
  // Oracle: membership holds for N = 1, 2, 3 from degbound 1 on, never at degbound 0.
  for (unsigned N = 1; N <= 3; ++N) {
    EXPECT_FALSE(rabinowitsch_check(ideal, g, Quat::j(), N, 0)) << N;
    for (unsigned d = 1; d <= 3; ++d) {
      auto cert = rabinowitsch_check(ideal, g, Quat::j(), N, d);
      ASSERT_TRUE(cert) << N << " " << d;
      EXPECT_TRUE(verify_certificate(ideal, g, Quat::j(), *cert));
    }
  }
  auto found = find_certificate(ideal, g, Quat::j(), 5, 2);
  ASSERT_TRUE(found);
  EXPECT_EQ(found->N, 1u);
}

TEST(Rabinowitsch, HandDerivedCertificates) {
  MPoly g = M("x - i", 1);
  LeftIdealGens ideal({g * g}, 1);
  auto frac = [](long n, long d) { return Rat(mpz_class(n), mpz_class(d)); };
  RabinowitschCertificate one{1, {{frac(1, 4) * M("jx - 3k", 1)}, {MPoly::constant(1, frac(-1, 4))}}};
  EXPECT_TRUE(verify_certificate(ideal, g, Quat::j(), one));
  RabinowitschCertificate two{2,
                              {{frac(-1, 2) * M("ix - 1", 1)}, {MPoly::constant(1, frac(-1, 2) * Quat::k())}, {MPoly(1)}}};
  EXPECT_TRUE(verify_certificate(ideal, g, Quat::j(), two));
  // (j(x - i))^3 = -j(x + i)(x - i)^2.
  RabinowitschCertificate three{3, {{M("-jx + k", 1)}, {MPoly(1)}, {MPoly(1)}, {MPoly(1)}}};
  EXPECT_TRUE(verify_certificate(ideal, g, Quat::j(), three));
  RabinowitschCertificate wrong{3, {{M("x + i", 1)}, {MPoly(1)}, {MPoly(1)}, {MPoly(1)}}};
  EXPECT_FALSE(verify_certificate(ideal, g, Quat::j(), wrong));
}

TEST(Rabinowitsch, TwoVariablePointIdeal) {
  LeftIdealGens ideal = point_ideal(CommutingPoint({Quat::i(), q("1 + i")}));
  MPoly p = M("x1 - i", 2);
  auto cert = find_certificate(ideal, p, Quat::k(), 3, 1);
  ASSERT_TRUE(cert);
  EXPECT_LE(cert->N, 3u);
  EXPECT_TRUE(verify_certificate(ideal, p, Quat::k(), *cert));
}

TEST(Rabinowitsch, NotFoundWithinBounds) {
  // A proper left ideal never contains a nonzero constant.
  LeftIdealGens ideal({M("x - i", 1)}, 1);
  EXPECT_FALSE(find_certificate(ideal, MPoly::constant(1, 1), Quat(1), 3, 2));
  MPoly g = M("x - i", 1);
  LeftIdealGens square({g * g}, 1);
  EXPECT_FALSE(find_certificate(square, g, Quat::j(), 3, 0));
}
