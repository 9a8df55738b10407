#include <gtest/gtest.h>

#include <cmath>

#include "kobgeo/ball.hpp"
#include "kobgeo/errors.hpp"
#include "support/random.hpp"

namespace kobgeo {
namespace {

using testing::Sampler;

const CVec kE1 = make_cvec({1.0, 0.0});

TEST(BallDistance, Examples) {
  const CVec zero = CVec::Zero(2);
  EXPECT_EQ(kobayashi_ball_distance(zero, zero), 0.0);
  EXPECT_NEAR(kobayashi_ball_distance(zero, make_cvec({0.5, 0.0})), std::atanh(0.5), 1e-15);
  EXPECT_THROW(kobayashi_ball_distance(zero, kE1), InputError);
}

TEST(BallDistance, HorizontalSliceMatchesDisc) {
  Sampler s(31);
  for (int i = 0; i < 500; ++i) {
    const Cpx z = s.disc(), w = s.disc();
    EXPECT_NEAR(kobayashi_ball_distance(make_cvec({z, 0.0}), make_cvec({w, 0.0})),
                poincare_distance(z, w), 1e-12);
  }
}

TEST(BallDistance, AutomorphismInvariance) {
  Sampler s(32);
  for (int i = 0; i < 2000; ++i) {
    const int n = s.integer(2, 3);
    const BallAutomorphism m(s.ball(n, 0.9), s.unitary(n));
    const CVec z = s.ball(n), w = s.ball(n);
    EXPECT_NEAR(kobayashi_ball_distance(m(z), m(w)), kobayashi_ball_distance(z, w), 1e-11);
  }
}

TEST(BallAutomorphism, Examples) {
  const CVec z = make_cvec({Cpx(0.1, 0.2), Cpx(-0.3, 0.1)});
  EXPECT_LT((ball_automorphism_apply(BallAutomorphism::identity(2), z) - z).norm(), 1e-16);
  const CVec a = make_cvec({0.5, 0.0});
  EXPECT_LT(involution_apply(a, a).norm(), 1e-15);
  EXPECT_LT((involution_apply(a, CVec::Zero(2)) - a).norm(), 1e-15);
}

TEST(BallAutomorphism, InvolutionAndInverse) {
  Sampler s(33);
  for (int i = 0; i < 100; ++i) {
    const CVec a = s.ball(2, 0.9);
    const CVec z = s.ball(2);
    EXPECT_LT((involution_apply(a, involution_apply(a, z)) - z).norm(), 1e-11);
    const BallAutomorphism m(a, s.unitary(2));
    EXPECT_LT((m.inverse()(m(z)) - z).norm(), 1e-11);
  }
}

TEST(BallAutomorphism, SphereToSphere) {
  Sampler s(34);
  for (int i = 0; i < 100; ++i) {
    const BallAutomorphism m(s.ball(3, 0.9), s.unitary(3));
    EXPECT_NEAR(m(s.sphere(3)).norm(), 1.0, 1e-12);
  }
}

TEST(BallAutomorphism, Rejects) {
  EXPECT_THROW(BallAutomorphism(CVec::Zero(2), CMat::Identity(2, 2) * 2.0), InputError);
  EXPECT_THROW(BallAutomorphism::identity(2)(make_cvec({1.5, 0.0})), DomainViolation);
}

TEST(PhiAlpha, Examples) {
  const Cpx z(0.3, -0.1);
  EXPECT_LT((phi_alpha_embed(0.0, z) - make_cvec({z, 0.0})).norm(), 1e-16);
  EXPECT_LT((phi_alpha_embed(0.5, 0.0) - make_cvec({0.25, 0.5 * std::sqrt(0.75)})).norm(), 1e-15);
  EXPECT_NEAR(phi_alpha_embed(0.5, 0.0)(1).real(), 0.4330127, 1e-7);
  for (double alpha : {-0.7, 0.0, 0.3, 0.9}) {
    EXPECT_LT((phi_alpha_embed(alpha, 1.0) - kE1).norm(), 1e-15);
  }
  EXPECT_THROW(phi_alpha_embed(1.0, 0.0), InputError);
}

TEST(PhiAlpha, InverseAndIsometricSlice) {
  Sampler s(35);
  for (int i = 0; i < 100; ++i) {
    const double alpha = s.uniform(-0.95, 0.95);
    const Cpx z = s.disc(), w = s.disc();
    const CVec pz = phi_alpha_embed(alpha, z);
    EXPECT_LT(pz.norm(), 1.0);
    EXPECT_LT(std::abs(phi_alpha_inverse(alpha, pz)(0) - z), 1e-12);
    EXPECT_NEAR(kobayashi_ball_distance(pz, phi_alpha_embed(alpha, w)), poincare_distance(z, w), 1e-10);
  }
}

TEST(CayleyBall, Examples) {
  EXPECT_LT((cayley_ball(CVec::Zero(2)) - make_cvec({Cpx(0, 1), 0.0})).norm(), 1e-16);
  EXPECT_LT(cayley_ball_inverse(make_cvec({Cpx(0, 1), 0.0})).norm(), 1e-16);
  EXPECT_THROW(cayley_ball(kE1), NumericError);
  EXPECT_THROW(cayley_ball_inverse(make_cvec({Cpx(0, -1), 0.0})), NumericError);
}

TEST(CayleyBall, ComplexGeodesicThroughE1) {
  Sampler s(36);
  for (int i = 0; i < 50; ++i) {
    const Cpx slope = s.disc(0.6);
    const Cpx z = s.disc(0.9);
    const CVec p = make_cvec({z, slope * (z - 1.0)});
    if (p.norm() >= 1.0) continue;
    const CVec c = cayley_ball(p);
    EXPECT_LT(std::abs(c(0) - Cpx(0, 1) * (1.0 + z) / (1.0 - z)), 1e-12);
    EXPECT_LT(std::abs(c(1) + Cpx(0, 1) * slope), 1e-12);
  }
}

TEST(CayleyBall, MembershipAndRoundTrip) {
  Sampler s(37);
  for (int i = 0; i < 1000; ++i) {
    const CVec z = s.ball(2);
    EXPECT_EQ(siegel_contains(cayley_ball(z)), SiegelRegion::interior);
    EXPECT_LT((cayley_ball_inverse(cayley_ball(z)) - z).norm(), 1e-12);
    const Cpx w = s.disc(2.0);
    const SiegelPoint sp(Cpx(s.uniform(-5, 5), std::norm(w) + s.uniform(1e-3, 3.0)), make_cvec({w}));
    EXPECT_LT(cayley_ball_inverse(sp.packed()).norm(), 1.0);
  }
}

TEST(CayleyBall, NearE1MatchesDirect) {
  Sampler s(38);
  for (int i = 0; i < 100; ++i) {
    const CVec z = s.ball(2, 0.9);
    EXPECT_LT((cayley_ball_near_e1(z - kE1) - cayley_ball(z)).norm(), 1e-10 * cayley_ball(z).norm());
  }
}

TEST(Siegel, Contains) {
  const CVec one = make_cvec({1.0});
  EXPECT_EQ(siegel_contains(Cpx(0, 2), one), SiegelRegion::interior);
  EXPECT_EQ(siegel_contains(Cpx(0, 1), one), SiegelRegion::boundary);
  EXPECT_EQ(siegel_contains(Cpx(0, 0), one), SiegelRegion::outside);
  EXPECT_THROW(SiegelPoint(Cpx(0, 1), one), InputError);
}

TEST(Siegel, GeodesicSample) {
  const SiegelGeodesic g{1.0, make_cvec({0.0})};
  const auto pts = siegel_geodesic_sample(g, 3, 4.0);
  ASSERT_EQ(pts.size(), 3u);
  for (const SiegelPoint& p : pts) {
    EXPECT_EQ(p.z1().real(), 1.0);
    EXPECT_EQ(siegel_contains(p.packed()), SiegelRegion::interior);
  }
  EXPECT_NEAR(pts.back().z1().imag(), 4.0, 1e-15);
  EXPECT_THROW(siegel_geodesic_sample(SiegelGeodesic{0.0, make_cvec({2.0})}, 4, 3.0), InputError);
}

TEST(Siegel, GeodesicPullBackInsideBall) {
  Sampler s(39);
  for (int i = 0; i < 20; ++i) {
    const SiegelGeodesic g{s.uniform(-3, 3), make_cvec({s.disc(1.5)})};
    for (const SiegelPoint& p : siegel_geodesic_sample(g, 16, g.alpha.squaredNorm() + 10.0)) {
      EXPECT_EQ(siegel_contains(p.packed()), SiegelRegion::interior);
      EXPECT_LT(cayley_ball_inverse(p.packed()).norm(), 1.0);
      EXPECT_LT(std::abs(p.zp()(0) - Cpx(0, 1) * g.alpha(0)), 1e-15);
    }
  }
}

TEST(UnitaryTo, Examples) {
  const BallAutomorphism id = unitary_to(kE1);
  EXPECT_LT((id.unitary() - CMat::Identity(2, 2)).norm(), 1e-15);
  const CVec e2 = make_cvec({0.0, 1.0});
  const BallAutomorphism u = unitary_to(e2);
  EXPECT_LT((u(kE1) - e2).norm(), 1e-15);
  EXPECT_LT((u.unitary().adjoint() * u.unitary() - CMat::Identity(2, 2)).norm(), 1e-14);
  EXPECT_THROW(unitary_to(make_cvec({0.5, 0.0})), InputError);
}

TEST(UnitaryTo, RandomSpherePointsAndIsometry) {
  Sampler s(40);
  for (int i = 0; i < 100; ++i) {
    const int n = s.integer(2, 4);
    const CVec zeta = s.sphere(n);
    const BallAutomorphism u = unitary_to(zeta);
    CVec e1 = CVec::Zero(n);
    e1(0) = 1.0;
    EXPECT_LT((u(e1) - zeta).norm(), 1e-14);
    const CVec z = s.ball(n), w = s.ball(n);
    EXPECT_NEAR(kobayashi_ball_distance(u(z), u(w)), kobayashi_ball_distance(z, w), 1e-12);
  }
}

TEST(BallGeodesic, Examples) {
  const BallGeodesic through0 = ball_geodesic_through(CVec::Zero(2), kE1);
  for (double t : {-2.0, 0.0, 1.5}) {
    EXPECT_LT((through0.at(t) - make_cvec({std::tanh(t), 0.0})).norm(), 1e-15);
  }
  const BallGeodesic fromE1 = ball_geodesic_through_boundary(kE1, make_cvec({0.0}), kPi);
  for (double t : {-2.0, 0.0, 1.5}) {
    const CVec x = fromE1.at(t);
    EXPECT_LT(std::abs(x(1)), 1e-15);
    EXPECT_LT(std::abs(x(0).imag()), 1e-15);
  }
  EXPECT_LT((fromE1.p() - kE1).norm(), 1e-15);
  EXPECT_THROW(ball_geodesic_through(CVec::Zero(2), CVec::Zero(2)), InputError);
}

TEST(BallGeodesic, UnitSpeed) {
  Sampler s(41);
  for (int i = 0; i < 40; ++i) {
    const int n = s.integer(2, 3);
    const BallGeodesic g = i % 2 == 0
                               ? ball_geodesic_through(s.ball(n, 0.9), s.sphere(n))
                               : ball_geodesic_through_boundary(s.sphere(n), s.ball(n - 1, 1.5), s.uniform(0.5, 5.5));
    for (int j = 0; j < 20; ++j) {
      const double a = s.uniform(-5, 5), b = s.uniform(-5, 5);
      EXPECT_NEAR(kobayashi_ball_distance(g.at(a), g.at(b)), std::abs(a - b), 1e-9);
    }
  }
}

TEST(BallGeodesic, CayleyImagesAreVertical) {
  const BallFamily family(kE1);
  for (int i = 0; i < 32; ++i) {
    const BallGeodesic g = family.geodesic(i, 32);
    double lo = 1e300, hi = -1e300;
    Cpx first_rest;
    double rest_spread = 0.0;
    for (int j = 0; j <= 100; ++j) {
      const CVec c = cayley_ball_near_e1(*g.offset_from_p(-5.0 + 0.1 * j));
      lo = std::min(lo, c(0).real());
      hi = std::max(hi, c(0).real());
      if (j == 0) first_rest = c(1);
      rest_spread = std::max(rest_spread, std::abs(c(1) - first_rest));
    }
    EXPECT_LT(hi - lo, 1e-8) << "geodesic " << i;
    EXPECT_LT(rest_spread, 1e-8) << "geodesic " << i;
  }
}

TEST(LiftedGeodesic, ReproducesGeodesic) {
  Sampler s(42);
  for (int i = 0; i < 50; ++i) {
    const int n = s.integer(1, 3);
    const CVec u = s.ball(n), v = s.ball(n);
    const LiftedGeodesic g = LiftedGeodesic::through(u, v);
    EXPECT_LT(g.deviation(u), 1e-12);
    EXPECT_LT(g.deviation(v), 1e-12);
    EXPECT_NEAR(g.start().norm(), 1.0, 1e-12);
    EXPECT_NEAR(g.end().norm(), 1.0, 1e-12);
    for (int j = 0; j < 10; ++j) {
      const double a = s.uniform(-5, 5), b = s.uniform(-5, 5);
      EXPECT_LT(g.deviation(g.at(a)), 1e-10);
      EXPECT_NEAR(kobayashi_ball_distance(g.at(a), g.at(b)), std::abs(a - b), 1e-9);
    }
  }
}

TEST(LiftedGeodesic, DeviationMatchesDiscExample) {
  const LiftedGeodesic g = LiftedGeodesic::through(make_cvec({-0.5}), make_cvec({0.5}));
  EXPECT_NEAR(g.deviation(make_cvec({Cpx(0, 0.5)})), std::atanh(0.5), 1e-14);
}

}  // namespace
}  // namespace kobgeo
