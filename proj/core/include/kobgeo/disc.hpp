#pragma once

#include <vector>

#include "kobgeo/numerics.hpp"

namespace kobgeo {

/// A point of the open unit disc. Construction rejects |z| >= 1.
class DiscPoint {
 public:
  DiscPoint(Cpx value);  // NOLINT(google-explicit-constructor): validating conversion
  DiscPoint(double value) : DiscPoint(Cpx(value, 0.0)) {}  // NOLINT(google-explicit-constructor)
  Cpx value() const { return value_; }

 private:
  Cpx value_;
};

/// A point of the unit circle, renormalized to modulus one on construction.
class BoundaryPoint {
 public:
  explicit BoundaryPoint(Cpx value);
  /// Projects a nonzero finite value onto the circle without the tolerance
  /// check; for points that lie on the circle up to rounding.
  static BoundaryPoint normalized(Cpx value);
  Cpx value() const { return value_; }

 private:
  BoundaryPoint() = default;
  Cpx value_;
};

/// z -> e^{i theta} (z - a) / (1 - conj(a) z), an automorphism of the disc.
class DiscMobius {
 public:
  DiscMobius() = default;
  DiscMobius(DiscPoint center, double theta);

  static DiscMobius identity() { return {}; }
  static DiscMobius rotation(double theta) { return DiscMobius(Cpx(0.0, 0.0), theta); }

  Cpx center() const { return a_; }
  double theta() const { return theta_; }
  Cpx phase() const { return std::polar(1.0, theta_); }

  /// Defined on the closed disc; throws DomainViolation for |z| > 1 + 1e-12.
  Cpx operator()(Cpx z) const;

  /// Composition (*this) o (inner).
  DiscMobius after(const DiscMobius& inner) const;

 private:
  Cpx a_{0.0, 0.0};
  double theta_ = 0.0;
};

/// Poincare (Kobayashi) distance atanh |(z - w) / (1 - conj(w) z)|.
double poincare_distance(DiscPoint z, DiscPoint w);

Cpx mobius_apply(const DiscMobius& m, Cpx z);
DiscMobius mobius_invert(const DiscMobius& m);

/// The automorphism z -> (z + a) / (1 + conj(a) z) sending 0 to a.
DiscMobius mobius_to(DiscPoint a);

/// M_p(z) = (1 - conj p)/(1 - p) * (z - p)/(1 - conj(p) z): sends p to 0 and
/// fixes 1. The inverse uses its own closed form rather than a generic
/// Mobius inversion.
class BoundaryNormalizer {
 public:
  explicit BoundaryNormalizer(DiscPoint p);

  Cpx point() const { return p_; }
  Cpx operator()(Cpx z) const;
  Cpx inverse(Cpx z) const;
  DiscMobius as_mobius() const;

 private:
  Cpx p_;
};

BoundaryNormalizer boundary_normalizer(DiscPoint p);

/// A geodesic of the disc with endpoints p (t -> -inf) and q (t -> +inf),
/// parametrized by arclength as gamma(t) = M(tanh t). M is the canonical
/// frame sending -1, 0, 1 to p, the point of the trace closest to the
/// origin, and q.
class DiscGeodesic {
 public:
  DiscGeodesic(BoundaryPoint p, BoundaryPoint q);

  BoundaryPoint p() const { return p_; }
  BoundaryPoint q() const { return q_; }
  const DiscMobius& frame() const { return frame_; }
  const DiscMobius& frame_inverse() const { return frame_inv_; }

  Cpx at(double t) const;

  /// gamma(t) - p and gamma(t) - q, evaluated without cancellation so that
  /// points very close to an endpoint keep full relative accuracy.
  Cpx offset_from_p(double t) const;
  Cpx offset_from_q(double t) const;

 private:
  BoundaryPoint p_;
  BoundaryPoint q_;
  DiscMobius frame_;
  DiscMobius frame_inv_;
};

/// Geodesic through `base` (closed disc). For an interior base it is the image
/// under mobius_to(base) of the diameter at angle phi; for a boundary base it
/// joins base to e^{i phi}.
DiscGeodesic geodesic_through(Cpx base, double phi);

DiscGeodesic geodesic_between(DiscPoint z, DiscPoint w);

std::vector<Cpx> geodesic_sample(const DiscGeodesic& g, int count, double range);

/// Hyperbolic distance from z to the axis after normalizing g to the real
/// diameter. Zero iff z lies on g.
double point_deviation(DiscPoint z, const DiscGeodesic& g);

Cpx cayley_disc(Cpx z);
Cpx cayley_disc_inverse(Cpx w);

/// Cayley image of 1 + offset, i.e. (2 + offset) / (-offset). Lets points very
/// close to 1 be transformed from their offset without losing precision.
Cpx cayley_disc_near_one(Cpx offset);

/// The geodesics whose closure contains `base`.
class DiscFamily {
 public:
  explicit DiscFamily(Cpx base);

  Cpx base() const { return base_; }
  bool on_boundary() const { return boundary_; }

  /// i-th of `count` geodesics: diameters at angle pi*i/count (moved to the
  /// base) for an interior base; for a boundary base the far endpoint is
  /// arg(base) + pi*(2i+1)/count.
  DiscGeodesic geodesic(int i, int count) const;
  std::vector<DiscGeodesic> geodesics(int count) const;

 private:
  Cpx base_;
  bool boundary_;
};

}  // namespace kobgeo
