#include <gtest/gtest.h>

#include <cmath>

#include "kobgeo/disc.hpp"
#include "kobgeo/errors.hpp"
#include "support/random.hpp"

namespace kobgeo {
namespace {

using testing::Sampler;

const double kHalfDistance = std::atanh(0.5);

void expect_close(Cpx a, Cpx b, double tol) { EXPECT_LT(std::abs(a - b), tol) << a << " vs " << b; }

TEST(PoincareDistance, Examples) {
  EXPECT_EQ(poincare_distance(0.0, 0.0), 0.0);
  EXPECT_NEAR(poincare_distance(0.0, 0.5), 0.5493061443, 1e-10);
  EXPECT_NEAR(poincare_distance(0.0, 0.5), kHalfDistance, 1e-15);
}

TEST(PoincareDistance, RejectsBoundary) {
  EXPECT_THROW(poincare_distance(0.0, 1.0), InputError);
}

TEST(PoincareDistance, SymmetricAndPositive) {
  Sampler s(21);
  for (int i = 0; i < 200; ++i) {
    const Cpx z = s.disc(), w = s.disc();
    EXPECT_DOUBLE_EQ(poincare_distance(z, w), poincare_distance(w, z));
    EXPECT_GT(poincare_distance(z, w), 0.0);
  }
}

TEST(Mobius, Examples) {
  const Cpx z(0.3, -0.2);
  expect_close(mobius_apply(DiscMobius::identity(), z), z, 0.0 + 1e-16);
  expect_close(mobius_apply(DiscMobius(0.5, 0.0), 0.5), 0.0, 1e-16);
  const DiscMobius inv = mobius_invert(DiscMobius::identity());
  expect_close(inv.center(), 0.0, 1e-16);
  EXPECT_NEAR(inv.theta(), 0.0, 1e-16);
  expect_close(mobius_to(0.0)(z), z, 1e-16);
  expect_close(mobius_to(0.5)(0.0), 0.5, 1e-16);
}

TEST(Mobius, RejectsOutsideClosedDisc) {
  EXPECT_THROW(DiscMobius(0.2, 0.0)(Cpx(1.1, 0.0)), DomainViolation);
}

TEST(Mobius, InverseRoundTrip) {
  Sampler s(22);
  for (int i = 0; i < 200; ++i) {
    const DiscMobius m(s.disc(0.9), s.angle());
    const DiscMobius inv = mobius_invert(m);
    const Cpx z = s.disc();
    expect_close(inv(m(z)), z, 1e-12);
    expect_close(m.after(inv)(z), z, 1e-12);
  }
}

TEST(Mobius, Isometry) {
  Sampler s(23);
  for (int i = 0; i < 2000; ++i) {
    const DiscMobius m(s.disc(0.9), s.angle());
    const Cpx z = s.disc(), w = s.disc();
    EXPECT_NEAR(poincare_distance(m(z), m(w)), poincare_distance(z, w), 1e-12);
  }
}

TEST(BoundaryNormalizer, Examples) {
  const Cpx p(0.3, 0.2);
  const BoundaryNormalizer n = boundary_normalizer(p);
  expect_close(n(p), 0.0, 1e-15);
  expect_close(n(1.0), 1.0, 1e-15);
  Sampler s(24);
  for (int i = 0; i < 100; ++i) {
    const Cpx z = s.disc();
    expect_close(n.inverse(n(z)), z, 1e-12);
    expect_close(n.as_mobius()(z), n(z), 1e-12);
  }
}

TEST(GeodesicThrough, Diameters) {
  const DiscGeodesic real = geodesic_through(0.0, 0.0);
  expect_close(real.p().value(), -1.0, 1e-15);
  expect_close(real.q().value(), 1.0, 1e-15);
  const DiscGeodesic imag = geodesic_through(0.0, kPi / 2);
  expect_close(imag.p().value(), Cpx(0, -1), 1e-15);
  expect_close(imag.q().value(), Cpx(0, 1), 1e-15);
}

TEST(GeodesicThrough, BoundaryBase) {
  const DiscGeodesic g = geodesic_through(1.0, kPi);
  expect_close(g.p().value(), 1.0, 1e-15);
  expect_close(g.q().value(), -1.0, 1e-15);
  EXPECT_LT(point_deviation(0.0, g), 1e-14);
}

TEST(GeodesicBetween, Examples) {
  const DiscGeodesic a = geodesic_between(-0.5, 0.5);
  expect_close(a.p().value(), -1.0, 1e-14);
  expect_close(a.q().value(), 1.0, 1e-14);
  const DiscGeodesic b = geodesic_between(0.0, Cpx(0, 0.5));
  expect_close(b.p().value(), Cpx(0, -1), 1e-14);
  expect_close(b.q().value(), Cpx(0, 1), 1e-14);
  const Cpx z(0.2, 0.1), w(-0.3, 0.4);
  const DiscGeodesic c = geodesic_between(z, w);
  EXPECT_NEAR(std::abs(c.p().value()), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(c.q().value()), 1.0, 1e-15);
  EXPECT_LT(point_deviation(z, c), 1e-12);
  EXPECT_LT(point_deviation(w, c), 1e-12);
}

TEST(GeodesicSample, RealDiameter) {
  const auto pts = geodesic_sample(geodesic_through(0.0, 0.0), 3, kHalfDistance);
  ASSERT_EQ(pts.size(), 3u);
  expect_close(pts[0], -0.5, 1e-15);
  expect_close(pts[1], 0.0, 1e-15);
  expect_close(pts[2], 0.5, 1e-15);
  const auto ends = geodesic_sample(geodesic_through(0.0, 0.0), 2, kHalfDistance);
  ASSERT_EQ(ends.size(), 2u);
  expect_close(ends[0], -0.5, 1e-15);
  expect_close(ends[1], 0.5, 1e-15);
}

TEST(GeodesicSample, EvenSpacing) {
  Sampler s(25);
  for (int i = 0; i < 20; ++i) {
    const DiscGeodesic g = geodesic_between(s.disc(), s.disc());
    const int k = 33;
    const double range = 3.0;
    const auto pts = geodesic_sample(g, k, range);
    for (int j = 0; j + 1 < k; ++j) {
      EXPECT_NEAR(poincare_distance(pts[j], pts[j + 1]), 2 * range / (k - 1), 1e-10);
    }
  }
}

TEST(PointDeviation, Examples) {
  const DiscGeodesic real = geodesic_through(0.0, 0.0);
  EXPECT_LT(point_deviation(0.3, real), 1e-12);
  EXPECT_NEAR(point_deviation(Cpx(0, 0.5), real), kHalfDistance, 1e-12);
}

TEST(PointDeviation, MobiusInvariant) {
  Sampler s(26);
  for (int i = 0; i < 200; ++i) {
    const DiscGeodesic g = geodesic_between(s.disc(0.8), s.disc(0.8));
    const DiscMobius m(s.disc(0.8), s.angle());
    const DiscGeodesic moved(BoundaryPoint::normalized(m(g.p().value())),
                             BoundaryPoint::normalized(m(g.q().value())));
    const Cpx z = s.disc(0.8);
    EXPECT_NEAR(point_deviation(m(z), moved), point_deviation(z, g), 1e-10);
  }
}

TEST(Cayley, Examples) {
  expect_close(cayley_disc(0.0), 1.0, 1e-16);
  expect_close(cayley_disc(Cpx(0, 1)), Cpx(0, 1), 1e-15);
  EXPECT_THROW(cayley_disc(1.0), NumericError);
  EXPECT_THROW(cayley_disc_inverse(-1.0), NumericError);
}

TEST(Cayley, RoundTripAndHalfPlane) {
  Sampler s(27);
  for (int i = 0; i < 200; ++i) {
    const Cpx z = s.disc();
    expect_close(cayley_disc_inverse(cayley_disc(z)), z, 1e-13);
    EXPECT_GT(cayley_disc(z).real(), 0.0);
    const Cpx outside = std::polar(1.0 + s.uniform(0.01, 1.0), s.angle());
    EXPECT_LT(cayley_disc(outside).real(), 0.0);
  }
}

TEST(Cayley, GeodesicsEndingAtOneBecomeHorizontal) {
  const DiscFamily family(1.0);
  for (int i = 0; i < 16; ++i) {
    const DiscGeodesic g = family.geodesic(i, 16);
    double lo = 1e300, hi = -1e300;
    for (int j = 0; j <= 100; ++j) {
      const double t = -5.0 + 0.1 * j;
      const double im = cayley_disc_near_one(g.offset_from_p(t)).imag();
      lo = std::min(lo, im);
      hi = std::max(hi, im);
    }
    EXPECT_LT(hi - lo, 1e-8) << "geodesic " << i;
  }
}

TEST(DiscGeodesic, UnitSpeedAndAdditivity) {
  Sampler s(28);
  for (int i = 0; i < 50; ++i) {
    const DiscGeodesic g = geodesic_between(s.disc(), s.disc());
    for (int j = 0; j < 20; ++j) {
      double a = s.uniform(-5, 5), b = s.uniform(-5, 5), c = s.uniform(-5, 5);
      if (a > b) std::swap(a, b);
      if (b > c) std::swap(b, c);
      if (a > b) std::swap(a, b);
      const double ab = poincare_distance(g.at(a), g.at(b));
      const double bc = poincare_distance(g.at(b), g.at(c));
      const double ac = poincare_distance(g.at(a), g.at(c));
      EXPECT_NEAR(ab, b - a, 1e-9);
      EXPECT_NEAR(ac, ab + bc, 1e-9);
    }
  }
}

TEST(DiscFamily, Coherence) {
  Sampler s(29);
  for (int i = 0; i < 10; ++i) {
    const Cpx a = s.disc(0.9);
    for (const DiscGeodesic& g : DiscFamily(a).geodesics(16)) EXPECT_LT(point_deviation(a, g), 1e-10);
    const Cpx b = s.unit();
    for (const DiscGeodesic& g : DiscFamily(b).geodesics(16)) expect_close(g.p().value(), b, 1e-10);
  }
}

TEST(DiscFamily, RejectsOutsidePoint) { EXPECT_THROW(DiscFamily(Cpx(1.5, 0.0)), InputError); }

}  // namespace
}  // namespace kobgeo
