#pragma once

#include <cmath>
#include <vector>

#include "kobgeo/families.hpp"
#include "kobgeo/holomap.hpp"
#include "support/random.hpp"

namespace kobgeo::testing {

/// All monomials of the given degree in two variables, on each of two
/// outputs, with Gaussian coefficients scaled so that |P| <= 0.99 on the ball.
inline HomPoly random_ball_hom_poly(Sampler& s, int degree) {
  std::vector<PolyTerm> terms;
  for (int out = 0; out < 2; ++out) {
    for (int a = 0; a <= degree; ++a) terms.push_back({out, {a, degree - a}, Cpx(s.gaussian(), s.gaussian())});
  }
  const PolyMap raw(2, 2, terms);
  return HomPoly(raw.scaled(0.99 / raw.coefficient_bound()), degree);
}

/// Parameters of a Siegel self-map (m z1 + b(w), Fp(w)) on the Siegel domain
/// of C^2 satisfying |Fp(w)|^2 <= m |w|^2 + Im b(w) everywhere:
/// Fp = c w with |c|^2 <= 0.9 m, b = b0 + l w + q w^2 with |q| <= 0.3 (m - |c|^2)
/// and Im b0 large enough to absorb the linear term.
struct SiegelParams {
  double m;
  PolyMap b;
  PolyMap fp;
};

inline SiegelParams random_siegel_params(Sampler& s) {
  const double m = s.uniform(0.5, 3.0);
  const Cpx c = std::polar(std::sqrt(0.9 * m) * s.uniform(0.0, 1.0), s.angle());
  const double slack = m - std::norm(c);
  const Cpx q = std::polar(0.3 * slack * s.uniform(0.0, 1.0), s.angle());
  const Cpx l = std::polar(s.uniform(0.0, 1.0), s.angle());
  const double reserve = slack - std::abs(q);
  const double im_b0 = 1.1 * std::norm(l) / (4.0 * reserve) + s.uniform(0.0, 0.5);
  const Cpx b0(s.uniform(-1.0, 1.0), im_b0);
  PolyMap b(1, 1, {{0, {0}, b0}, {0, {1}, l}, {0, {2}, q}});
  PolyMap fp(1, 1, {{0, {1}, c}});
  return {m, std::move(b), std::move(fp)};
}

/// (f + eps z^k) / (1 + eps): stays a self-map of the disc.
inline HoloMap perturb_disc(const HoloMap& f, double eps = 0.05, int k = 2) {
  const HoloMap bump = HoloMap::polynomial(PolyMap(1, 1, {{0, {k}, eps}}));
  const HoloMap shrink = HoloMap::polynomial(PolyMap(1, 1, {{0, {1}, 1.0 / (1.0 + eps)}}));
  return HoloMap::compose({HoloMap::sum({f, bump}), shrink});
}

/// (f + eps (0, z1)) / (1 + eps) on the ball of C^2.
inline HoloMap perturb_ball_second(const HoloMap& f, double eps = 0.05) {
  const HoloMap bump = HoloMap::polynomial(PolyMap(2, 2, {{1, {1, 0}, eps}}));
  const HoloMap shrink = HoloMap::polynomial(PolyMap::identity(2).scaled(1.0 / (1.0 + eps)));
  return HoloMap::compose({HoloMap::sum({f, bump}), shrink});
}

/// Adds eps z1^(deg+1) to the first output of P (non-homogeneous) and
/// renormalizes into the ball.
inline HoloMap perturb_hom_poly(const HomPoly& p, double eps = 0.05) {
  PolyMap bumped = p.as_polymap() + PolyMap(2, 2, {{0, {p.degree() + 1, 0}, eps}});
  return HoloMap::polynomial(bumped.scaled(1.0 / (1.0 + eps)));
}

}  // namespace kobgeo::testing
