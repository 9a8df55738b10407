#pragma once

#include "kobgeo/ball.hpp"
#include "kobgeo/disc.hpp"
#include "kobgeo/holomap.hpp"
#include "kobgeo/numerics.hpp"

namespace kobgeo {

/// The rotation z -> x z, which sends 1 to the boundary point x.
DiscMobius rotation_to(BoundaryPoint x);

/// M_b o (alpha z^n) o M_a^{-1}: sends the geodesics through a into
/// geodesics through b.
HoloMap gp_disc_interior(DiscPoint a, DiscPoint b, Cpx alpha, int n);

/// rho_b o fix o h_C o rho_a^{-1} with h_C(z) = C z / (1 - (1-C) z), rho_x the
/// rotation sending 1 to x, and `fix` a disc automorphism fixing 1.
HoloMap gp_disc_boundary(BoundaryPoint a, BoundaryPoint b, double c,
                         const DiscMobius& fix = DiscMobius::identity());

/// exp(a (1+z)/(1-z) - beta) with a < 0 and Re beta >= 0: sends geodesics
/// ending at 1 onto radii.
HoloMap gp_disc_boundary_to_interior(double a, Cpx beta);

/// phi_b o P o phi_a for a homogeneous polynomial self-map P of the ball.
HoloMap gp_ball_interior(const CVec& a, const CVec& b, const HomPoly& p);

/// Phi_xi o C^{-1} o (m z1 + b(w), F'(w)) o C o Phi_zeta^{-1}, where
/// Phi_x = unitary_to(x) and C is the Cayley transform.
HoloMap gp_ball_boundary(const CVec& zeta, const CVec& xi, double m, const PolyMap& b,
                         const PolyMap& fp);

}  // namespace kobgeo
