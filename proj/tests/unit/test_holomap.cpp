#include <gtest/gtest.h>

#include <cmath>
#include <thread>

#include "kobgeo/errors.hpp"
#include "kobgeo/holomap.hpp"
#include "support/random.hpp"

namespace kobgeo {
namespace {

using testing::Sampler;

TEST(HoloMap, KindNamesRoundTrip) {
  for (int k = 0; k <= static_cast<int>(NodeKind::compose); ++k) {
    const auto kind = static_cast<NodeKind>(k);
    EXPECT_EQ(kind_from_name(kind_name(kind)), kind);
  }
  EXPECT_FALSE(kind_from_name("powr").has_value());
}

TEST(HoloMap, PowerOneIsIdentity) {
  const HoloMap f = HoloMap::power(1.0, 1);
  Sampler s(51);
  for (int i = 0; i < 50; ++i) {
    const Cpx z = s.disc();
    EXPECT_EQ(f(z), z);
  }
}

TEST(HoloMap, PowerZeroIsConstant) {
  EXPECT_EQ(HoloMap::power(Cpx(0.2, 0.1), 0)(Cpx(0.5, 0.5)), Cpx(0.2, 0.1));
}

TEST(HoloMap, Constant) {
  const HoloMap f = HoloMap::constant(0.3);
  EXPECT_EQ(f(0.0), Cpx(0.3));
  EXPECT_EQ(f(Cpx(-0.4, 0.8)), Cpx(0.3));
}

TEST(HoloMap, CayleyRoundTrip) {
  const HoloMap f = HoloMap::compose({HoloMap::cayley_disc(), HoloMap::cayley_disc_inv()});
  Sampler s(52);
  for (int i = 0; i < 100; ++i) {
    const Cpx z = s.disc();
    EXPECT_LT(std::abs(f(z) - z), 1e-13);
  }
}

TEST(HoloMap, ComposeAppliesInOrder) {
  const HoloMap f = HoloMap::compose({HoloMap::mobius(DiscMobius(0.5, 0.0)), HoloMap::power(1.0, 2)});
  EXPECT_LT(std::abs(f(0.0) - Cpx(0.25)), 1e-16);
}

TEST(HoloMap, SumAndPolynomial) {
  const HoloMap f = HoloMap::sum({HoloMap::power(0.4, 1), HoloMap::power(0.4, 2)});
  const HoloMap g = HoloMap::polynomial(PolyMap(1, 1, {{0, {1}, 0.4}, {0, {2}, 0.4}}));
  Sampler s(53);
  for (int i = 0; i < 50; ++i) {
    const Cpx z = s.disc();
    EXPECT_LT(std::abs(f(z) - (0.4 * z + 0.4 * z * z)), 1e-15);
    EXPECT_LT(std::abs(g(z) - f(z)), 1e-15);
  }
}

TEST(HoloMap, ParameterValidation) {
  EXPECT_THROW(HoloMap::power(1.5, 2), InputError);
  EXPECT_THROW(HoloMap::power(1.0, -1), InputError);
  EXPECT_THROW(HoloMap::boundary_contraction(0.0), InputError);
  EXPECT_THROW(HoloMap::boundary_contraction(1.5), InputError);
  EXPECT_THROW(HoloMap::exp_family(0.0, 0.0), InputError);
  EXPECT_THROW(HoloMap::exp_family(-1.0, Cpx(-0.1, 0.0)), InputError);
  EXPECT_THROW(HoloMap::siegel_affine(0.0, PolyMap::zero(1, 1), PolyMap::identity(1)), InputError);
  EXPECT_THROW(HoloMap::compose({}), InputError);
  EXPECT_THROW(HoloMap::sum({}), InputError);
}

TEST(HoloMap, BoundaryContractionClosedForm) {
  const HoloMap h = HoloMap::boundary_contraction(0.5);
  EXPECT_LT(std::abs(h(0.5) - Cpx(1.0 / 3.0)), 1e-15);
  EXPECT_EQ(h(0.0), Cpx(0.0));
  EXPECT_LT(std::abs(h(1.0) - Cpx(1.0)), 1e-15);
}

TEST(HoloMap, ExpFamilyAtOrigin) {
  EXPECT_LT(std::abs(HoloMap::exp_family(-1.0, 0.0)(0.0) - Cpx(std::exp(-1.0))), 1e-15);
  EXPECT_NEAR(std::abs(HoloMap::exp_family(-1.0, 0.0)(0.0)), 0.367879, 1e-6);
}

TEST(HoloMap, DomainViolationCarriesPath) {
  const HoloMap f = HoloMap::compose({HoloMap::cayley_disc(), HoloMap::mobius(DiscMobius())});
  try {
    f(0.5);
    FAIL() << "expected a domain violation";
  } catch (const DomainViolation& e) {
    EXPECT_EQ(std::string(e.what()).rfind("compose/children[1]/", 0), 0u) << e.what();
  }
}

TEST(HoloMap, PoleIsNumericError) {
  EXPECT_THROW(HoloMap::cayley_disc()(1.0), NumericError);
  EXPECT_THROW(HoloMap::exp_family(-1.0, 0.0)(1.0), NumericError);
}

TEST(HoloMap, DimensionMismatchIsInputError) {
  EXPECT_THROW(HoloMap::power(1.0, 2)(make_cvec({0.1, 0.2})), InputError);
}

TEST(HoloMap, StructuralInference) {
  EXPECT_EQ(HoloMap::power(1.0, 3).output_space(Space::disc()), Space::disc());
  EXPECT_EQ(HoloMap::cayley_disc().output_space(Space::disc()).region, Region::half_plane);
  EXPECT_EQ(HoloMap::compose({HoloMap::cayley_disc(), HoloMap::cayley_disc_inv()}).output_space(Space::disc()),
            Space::disc());
  EXPECT_EQ(HoloMap::cayley_ball().output_space(Space::ball(2)).region, Region::siegel);
  EXPECT_THROW(HoloMap::cayley_disc_inv().output_space(Space::disc()), InputError);
  EXPECT_THROW(HoloMap::power(1.0, 2).output_space(Space::ball(2)), InputError);
  EXPECT_EQ(HoloMap::polynomial(PolyMap::identity(1)).output_space(Space::disc()).region, Region::plane);
  EXPECT_EQ(describe(Space::ball(3)), "ball(3)");
  EXPECT_EQ(describe(Space::disc()), "disc");
}

TEST(SiegelConstraint, IdentityAndTranslations) {
  EXPECT_TRUE(check_siegel_constraint(1.0, PolyMap::zero(1, 1), PolyMap::identity(1)).ok);
  EXPECT_TRUE(check_siegel_constraint(2.0, PolyMap::zero(1, 1), PolyMap::identity(1)).ok);
  const PolyMap lift(1, 1, {{0, {0}, Cpx(0, 0.7)}});
  EXPECT_TRUE(check_siegel_constraint(1.0, lift, PolyMap::zero(1, 1)).ok);
}

TEST(SiegelConstraint, ViolationReportsWitness) {
  const SiegelConstraintCheck c = check_siegel_constraint(1.0, PolyMap::zero(1, 1), PolyMap::identity(1).scaled(2.0));
  EXPECT_FALSE(c.ok);
  EXPECT_LT(c.worst_margin, 0.0);
  EXPECT_EQ(c.witness.size(), 1);
  EXPECT_THROW(HoloMap::siegel_affine(1.0, PolyMap::zero(1, 1), PolyMap::identity(1).scaled(2.0)), InputError);
}

TEST(HoloMap, ConcurrentEvaluationIsConsistent) {
  const HoloMap f = HoloMap::compose({HoloMap::mobius(DiscMobius(Cpx(0.2, 0.1), 0.3)), HoloMap::power(0.9, 3)});
  std::vector<Cpx> serial(1000), parallel(1000);
  Sampler s(54);
  std::vector<Cpx> pts(1000);
  for (Cpx& z : pts) z = s.disc();
  for (int i = 0; i < 1000; ++i) serial[i] = f(pts[i]);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] {
      for (int i = t; i < 1000; i += 4) parallel[i] = f(pts[i]);
    });
  }
  for (auto& w : workers) w.join();
  EXPECT_EQ(serial, parallel);
}

}  // namespace
}  // namespace kobgeo
