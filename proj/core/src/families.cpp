#include "kobgeo/families.hpp"

#include <cmath>
#include <sstream>

#include "kobgeo/errors.hpp"

namespace kobgeo {

namespace {

constexpr double kFixTol = 1e-10;
constexpr double kSphereTol = 1e-12;

CVec on_sphere(const CVec& x, const char* what) {
  if (x.size() < 2) throw InputError(std::string(what) + ": boundary family needs dimension >= 2");
  if (!all_finite(x) || !(std::abs(x.norm() - 1.0) < kSphereTol)) {
    throw InputError(std::string(what) + ": point is not on the unit sphere");
  }
  return x / x.norm();
}

}  // namespace

DiscMobius rotation_to(BoundaryPoint x) { return DiscMobius::rotation(std::arg(x.value())); }

HoloMap gp_disc_interior(DiscPoint a, DiscPoint b, Cpx alpha, int n) {
  if (!(std::abs(alpha) <= 1.0 + 1e-12)) throw InputError("gp_disc_interior: |alpha| exceeds 1");
  return HoloMap::compose({
      HoloMap::mobius(mobius_invert(mobius_to(a))),
      HoloMap::power(alpha, n),
      HoloMap::mobius(mobius_to(b)),
  });
}

HoloMap gp_disc_boundary(BoundaryPoint a, BoundaryPoint b, double c, const DiscMobius& fix) {
  if (!(c > 0.0 && c <= 1.0)) throw InputError("gp_disc_boundary: C outside (0,1]");
  const Cpx one(1.0, 0.0);
  if (!(std::abs(fix(one) - one) <= kFixTol)) {
    throw InputError("gp_disc_boundary: the automorphism does not fix 1");
  }
  return HoloMap::compose({
      HoloMap::mobius(mobius_invert(rotation_to(a))),
      HoloMap::boundary_contraction(c),
      HoloMap::mobius(fix),
      HoloMap::mobius(rotation_to(b)),
  });
}

HoloMap gp_disc_boundary_to_interior(double a, Cpx beta) { return HoloMap::exp_family(a, beta); }

HoloMap gp_ball_interior(const CVec& a, const CVec& b, const HomPoly& p) {
  const int n = static_cast<int>(a.size());
  if (b.size() != n || p.dim_in() != n || p.dim_out() != n) {
    throw InputError("gp_ball_interior: dimensions of a, b and P differ");
  }
  const RangeCheck rc = hom_ball_range_check(p, 4096);
  if (!rc.ok) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "gp_ball_interior: P does not map the ball into itself (sup |P| ~ " << rc.max_norm
        << ")";
    throw InputError(msg.str());
  }
  return HoloMap::compose({
      HoloMap::ball_automorphism(BallAutomorphism::involution(BallPoint(a).value())),
      HoloMap::hom_poly(p),
      HoloMap::ball_automorphism(BallAutomorphism::involution(BallPoint(b).value())),
  });
}

HoloMap gp_ball_boundary(const CVec& zeta, const CVec& xi, double m, const PolyMap& b,
                         const PolyMap& fp) {
  const CVec z = on_sphere(zeta, "gp_ball_boundary");
  const CVec x = on_sphere(xi, "gp_ball_boundary");
  if (z.size() != x.size() || fp.dim_in() + 1 != z.size()) {
    throw InputError("gp_ball_boundary: dimensions of zeta, xi and F' differ");
  }
  return HoloMap::compose({
      HoloMap::ball_automorphism(unitary_to(z).inverse()),
      HoloMap::cayley_ball(),
      HoloMap::siegel_affine(m, b, fp),
      HoloMap::cayley_ball_inv(),
      HoloMap::ball_automorphism(unitary_to(x)),
  });
}

}  // namespace kobgeo
