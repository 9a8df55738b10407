#pragma once

#include <optional>
#include <vector>

#include "kobgeo/disc.hpp"
#include "kobgeo/numerics.hpp"

namespace kobgeo {

/// A point of the open unit ball of C^n.
class BallPoint {
 public:
  BallPoint(CVec value);  // NOLINT(google-explicit-constructor): validating conversion
  const CVec& value() const { return value_; }
  int dim() const { return static_cast<int>(value_.size()); }

 private:
  CVec value_;
};

/// phi_a, the involution of the ball exchanging 0 and a:
///   phi_a(z) = (a - P_a z - s_a Q_a z) / (1 - <z, a>),  s_a = sqrt(1 - |a|^2).
/// phi_0 is the identity. Defined on the closed ball.
CVec involution_apply(const CVec& a, const CVec& z);

/// z -> U phi_a(z).
class BallAutomorphism {
 public:
  BallAutomorphism(CVec center, CMat unitary);

  static BallAutomorphism identity(int n);
  static BallAutomorphism involution(const CVec& a);
  static BallAutomorphism linear(CMat unitary);

  const CVec& center() const { return a_; }
  const CMat& unitary() const { return u_; }
  int dim() const { return static_cast<int>(a_.size()); }
  bool is_linear() const { return a_.isZero(0.0); }

  CVec operator()(const CVec& z) const;
  BallAutomorphism inverse() const;

 private:
  CVec a_;
  CMat u_;
};

CVec ball_automorphism_apply(const BallAutomorphism& m, const CVec& z);

/// Kobayashi distance of the ball,
///   atanh sqrt(1 - (1-|z|^2)(1-|w|^2) / |1 - <z,w>|^2).
double kobayashi_ball_distance(const BallPoint& z, const BallPoint& w);

/// The horizontal disc moved onto the complex geodesic phi_alpha of B^2:
///   z -> ((1-alpha^2) z + alpha^2, alpha sqrt(1-alpha^2) (1-z)).
CVec phi_alpha_embed(double alpha, Cpx z);
/// Inverse of the map above on its image.
CVec phi_alpha_inverse(double alpha, const CVec& zw);

/// C(z) = i (e1 + z) / (1 - z1), from the ball to the Siegel domain.
CVec cayley_ball(const CVec& z);
/// C^{-1}(s) = 2 s / (i + s1) - e1.
CVec cayley_ball_inverse(const CVec& s);
/// C(e1 + offset) computed from the offset, for points very close to e1.
CVec cayley_ball_near_e1(const CVec& offset);

/// A point (z1, z') with Im z1 > |z'|^2.
class SiegelPoint {
 public:
  SiegelPoint(Cpx z1, CVec zp);
  static SiegelPoint from_packed(const CVec& s);

  Cpx z1() const { return z1_; }
  const CVec& zp() const { return zp_; }
  CVec packed() const;

 private:
  Cpx z1_;
  CVec zp_;
};

enum class SiegelRegion { interior, boundary, outside };

/// interior iff Im z1 - |z'|^2 > 1e-12, boundary iff within 1e-12 of zero.
SiegelRegion siegel_contains(Cpx z1, const CVec& zp);
SiegelRegion siegel_contains(const CVec& packed);

/// The vertical half-line {(a + i t, i alpha) : t > |alpha|^2}.
struct SiegelGeodesic {
  double a = 0.0;
  CVec alpha;
};

/// `count` points with t log-spaced over (|alpha|^2, t_max]; the offsets
/// t - |alpha|^2 run from 1e-3 (t_max - |alpha|^2) to t_max - |alpha|^2.
std::vector<SiegelPoint> siegel_geodesic_sample(const SiegelGeodesic& g, int count, double t_max);

/// Linear automorphism (Householder reflection with a phase fix) with
/// U e1 = zeta.
BallAutomorphism unitary_to(const CVec& zeta);

/// A holomorphic isometric embedding of the disc into the ball: either the
/// linear slice zeta -> zeta sigma, or the slice of the complex line through
/// e1 with slope alpha, zeta -> e1 - r (1 - zeta) (1, alpha) with
/// r = 1 / (1 + |alpha|^2).
class ComplexGeodesic {
 public:
  static ComplexGeodesic linear(const CVec& direction);
  static ComplexGeodesic through_e1(const CVec& slope);

  bool is_linear() const { return linear_; }
  int dim() const { return static_cast<int>(axis_.size()); }
  /// sigma for a linear slice, the slope alpha otherwise.
  const CVec& parameter() const { return param_; }

  CVec embed(Cpx zeta) const;
  /// embed(zeta) - embed(zeta0) for zeta - zeta0 = offset; the embedding is
  /// affine so this depends on the offset only.
  CVec embed_offset(Cpx offset) const { return axis_ * offset; }

 private:
  ComplexGeodesic(bool linear, CVec param, CVec axis);

  bool linear_;
  CVec param_;
  CVec axis_;
};

/// outer o carrier o inner: a real geodesic of the ball, unit speed in the
/// Kobayashi distance.
class BallGeodesic {
 public:
  BallGeodesic(BallAutomorphism outer, ComplexGeodesic carrier, DiscGeodesic inner);

  const BallAutomorphism& outer() const { return outer_; }
  const ComplexGeodesic& carrier() const { return carrier_; }
  const DiscGeodesic& inner() const { return inner_; }
  int dim() const { return outer_.dim(); }

  CVec at(double t) const;
  CVec p() const;
  CVec q() const;

  /// gamma(t) - p without cancellation; only available when the outer
  /// automorphism is linear.
  std::optional<CVec> offset_from_p(double t) const;

  /// Automorphism sending this geodesic onto the real diameter of the
  /// horizontal disc.
  const BallAutomorphism& normalizer() const { return normalizer_; }

 private:
  BallAutomorphism outer_;
  ComplexGeodesic carrier_;
  DiscGeodesic inner_;
  BallAutomorphism normalizer_;
};

/// {phi_base(t sigma)} for an interior base.
BallGeodesic ball_geodesic_through(const CVec& base, const CVec& direction);
/// unitary_to(base) applied to the slope-alpha slice of the disc geodesic
/// joining 1 and e^{i angle}; base must lie on the sphere.
BallGeodesic ball_geodesic_through_boundary(const CVec& base, const CVec& slope, double angle);
BallGeodesic ball_geodesic_between(const CVec& u, const CVec& v);
/// Kobayashi distance from x to the geodesic g.
double point_deviation(const CVec& x, const BallGeodesic& g);

/// A real geodesic of the disc or ball held as lifts to C^{n,1} with the form
/// <X,Y> = sum_{i<n} X_i conj(Y_i) - X_n conj(Y_n). Points are the
/// projections of cosh(t) M + sinh(t) W, where <M,M> = -1, <W,W> = 1 and
/// <M,W> = 0. Distances to the geodesic are computed from these lifts as
/// small quantities, so points close to the sphere keep full accuracy.
class LiftedGeodesic {
 public:
  /// The geodesic through two distinct points of the open ball (or disc, for
  /// dimension one), with M the midpoint of the segment from u to v.
  static LiftedGeodesic through(const CVec& u, const CVec& v);

  int dim() const { return static_cast<int>(m_.size()) - 1; }
  CVec at(double t) const;
  CVec start() const;  ///< t -> -inf
  CVec end() const;    ///< t -> +inf

  /// Kobayashi distance from x to the geodesic.
  double deviation(const CVec& x) const;

 private:
  LiftedGeodesic(CVec m, CVec w) : m_(std::move(m)), w_(std::move(w)) {}

  CVec m_;
  CVec w_;
};

/// Geodesics whose closure contains `base` (closed ball).
class BallFamily {
 public:
  explicit BallFamily(CVec base);

  const CVec& base() const { return base_; }
  bool on_boundary() const { return boundary_; }
  int dim() const { return static_cast<int>(base_.size()); }

  /// Interior base: directions from sphere_points(n, count). Boundary base:
  /// slopes of radius 1.5 * radical_inverse(i, 2) in directions from
  /// sphere_points(n - 1, count), far endpoint angle pi (2i+1) / count.
  BallGeodesic geodesic(int i, int count) const;
  std::vector<BallGeodesic> geodesics(int count) const;

 private:
  CVec base_;
  bool boundary_;
};

}  // namespace kobgeo
