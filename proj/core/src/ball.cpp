#include "kobgeo/ball.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kobgeo/errors.hpp"

namespace kobgeo {

namespace {

constexpr double kBoundaryTol = 1e-12;
const Cpx kI(0.0, 1.0);

double one_minus_norm2(const CVec& z) {
  const double r = z.norm();
  return (1.0 - r) * (1.0 + r);
}

void require_same_dim(const CVec& a, const CVec& b, const char* what) {
  if (a.size() != b.size()) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (" << a.size() << " vs " << b.size() << ")";
    throw InputError(msg.str());
  }
}

void require_closed_ball(const CVec& z, const char* what) {
  if (!all_finite(z) || !(z.norm() <= 1.0 + kBoundaryTol)) {
    throw DomainViolation(std::string(what) + ": argument outside the closed ball");
  }
}

}  // namespace

BallPoint::BallPoint(CVec value) : value_(std::move(value)) {
  if (value_.size() < 1) throw InputError("ball point: empty vector");
  if (!all_finite(value_) || !(value_.norm() < 1.0)) {
    throw InputError("ball point is not inside the unit ball");
  }
}

CVec involution_apply(const CVec& a, const CVec& z) {
  require_same_dim(a, z, "involution");
  require_closed_ball(z, "involution");
  const double a2 = a.squaredNorm();
  if (a2 == 0.0) return z;
  const Cpx za = inner(z, a);
  const CVec proj = (za / a2) * a;
  const double s = std::sqrt(one_minus_norm2(a));
  const CVec out = (a - proj - s * (z - proj)) / (1.0 - za);
  if (!all_finite(out)) throw NumericError("involution: non-finite value");
  return out;
}

BallAutomorphism::BallAutomorphism(CVec center, CMat unitary)
    : a_(std::move(center)), u_(std::move(unitary)) {
  const auto n = a_.size();
  if (n < 1) throw InputError("ball automorphism: empty center");
  if (u_.rows() != n || u_.cols() != n) {
    throw InputError("ball automorphism: unitary has the wrong shape");
  }
  if (!all_finite(a_) || !(a_.norm() < 1.0)) {
    throw InputError("ball automorphism: center outside the open ball");
  }
  const double err = (u_.adjoint() * u_ - CMat::Identity(n, n)).cwiseAbs().maxCoeff();
  if (!(err < 1e-12)) throw InputError("ball automorphism: matrix is not unitary");
}

BallAutomorphism BallAutomorphism::identity(int n) {
  return BallAutomorphism(CVec::Zero(n), CMat::Identity(n, n));
}

BallAutomorphism BallAutomorphism::involution(const CVec& a) {
  return BallAutomorphism(a, CMat::Identity(a.size(), a.size()));
}

BallAutomorphism BallAutomorphism::linear(CMat unitary) {
  const auto n = unitary.rows();
  return BallAutomorphism(CVec::Zero(n), std::move(unitary));
}

CVec BallAutomorphism::operator()(const CVec& z) const { return u_ * involution_apply(a_, z); }

BallAutomorphism BallAutomorphism::inverse() const {
  // (U phi_a)^{-1} = phi_a U^* = U^* phi_{U a}.
  return BallAutomorphism(u_ * a_, u_.adjoint());
}

CVec ball_automorphism_apply(const BallAutomorphism& m, const CVec& z) { return m(z); }

double kobayashi_ball_distance(const BallPoint& zp, const BallPoint& wp) {
  const CVec& z = zp.value();
  const CVec& w = wp.value();
  require_same_dim(z, w, "kobayashi_ball_distance");
  // |1-<z,w>|^2 - (1-|z|^2)(1-|w|^2) = |w-z|^2 - |z ^ (w-z)|^2, so the
  // closed form becomes asinh(sqrt(that / ((1-|z|^2)(1-|w|^2)))) and keeps
  // its accuracy for nearby points and near the sphere.
  const CVec d = w - z;
  double wedge = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    for (Eigen::Index j = i + 1; j < z.size(); ++j) {
      wedge += std::norm(z(i) * d(j) - z(j) * d(i));
    }
  }
  const double num = std::max(d.squaredNorm() - wedge, 0.0);
  return std::asinh(std::sqrt(num / (one_minus_norm2(z) * one_minus_norm2(w))));
}

CVec phi_alpha_embed(double alpha, Cpx z) {
  if (!(alpha > -1.0 && alpha < 1.0)) throw InputError("phi_alpha: alpha outside (-1,1)");
  if (!(std::abs(z) <= 1.0 + kBoundaryTol)) {
    throw InputError("phi_alpha: argument outside the closed disc");
  }
  const double a2 = alpha * alpha;
  return make_cvec({(1.0 - a2) * z + a2, alpha * std::sqrt(1.0 - a2) * (1.0 - z)});
}

CVec phi_alpha_inverse(double alpha, const CVec& zw) {
  if (!(alpha > -1.0 && alpha < 1.0)) throw InputError("phi_alpha: alpha outside (-1,1)");
  if (zw.size() != 2) throw InputError("phi_alpha: expects a point of C^2");
  const double a2 = alpha * alpha;
  const double s = std::sqrt(1.0 - a2);
  const Cpx z = zw(0);
  const Cpx w = zw(1);
  const Cpx den = 1.0 - alpha * s * w - a2 * z;
  if (den == Cpx(0.0, 0.0)) throw NumericError("phi_alpha inverse: pole");
  return make_cvec({((1.0 - a2) * z - alpha * s * w) / den, (s * w + alpha * z - alpha) / den});
}

CVec cayley_ball(const CVec& z) {
  if (z.size() < 1) throw InputError("cayley_ball: empty vector");
  const Cpx den = 1.0 - z(0);
  if (den == Cpx(0.0, 0.0)) throw NumericError("cayley_ball: pole at z1 = 1");
  CVec s = (kI / den) * z;
  s(0) = kI * (1.0 + z(0)) / den;
  if (!all_finite(s)) throw NumericError("cayley_ball: overflow near the pole");
  return s;
}

CVec cayley_ball_inverse(const CVec& s) {
  if (s.size() < 1) throw InputError("cayley_ball_inverse: empty vector");
  const Cpx den = kI + s(0);
  if (den == Cpx(0.0, 0.0)) throw NumericError("cayley_ball_inverse: pole at z1 = -i");
  CVec z = (2.0 / den) * s;
  z(0) -= 1.0;
  if (!all_finite(z)) throw NumericError("cayley_ball_inverse: overflow near the pole");
  return z;
}

CVec cayley_ball_near_e1(const CVec& offset) {
  if (offset.size() < 1) throw InputError("cayley_ball: empty vector");
  const Cpx den = -offset(0);
  if (den == Cpx(0.0, 0.0)) throw NumericError("cayley_ball: pole at z1 = 1");
  CVec s = (kI / den) * offset;
  s(0) = kI * (2.0 + offset(0)) / den;
  return s;
}

SiegelPoint::SiegelPoint(Cpx z1, CVec zp) : z1_(z1), zp_(std::move(zp)) {
  if (!(z1.imag() - zp_.squaredNorm() > 0.0)) {
    throw InputError("siegel point: Im z1 must exceed |z'|^2");
  }
}

SiegelPoint SiegelPoint::from_packed(const CVec& s) {
  if (s.size() < 1) throw InputError("siegel point: empty vector");
  return SiegelPoint(s(0), s.tail(s.size() - 1));
}

CVec SiegelPoint::packed() const {
  CVec s(zp_.size() + 1);
  s(0) = z1_;
  s.tail(zp_.size()) = zp_;
  return s;
}

SiegelRegion siegel_contains(Cpx z1, const CVec& zp) {
  const double margin = z1.imag() - zp.squaredNorm();
  if (margin > 1e-12) return SiegelRegion::interior;
  if (std::abs(margin) <= 1e-12) return SiegelRegion::boundary;
  return SiegelRegion::outside;
}

SiegelRegion siegel_contains(const CVec& packed) {
  if (packed.size() < 1) throw InputError("siegel_contains: empty vector");
  return siegel_contains(packed(0), packed.tail(packed.size() - 1));
}

std::vector<SiegelPoint> siegel_geodesic_sample(const SiegelGeodesic& g, int count, double t_max) {
  if (count < 2) throw InputError("siegel_geodesic_sample: need at least two samples");
  const double floor = g.alpha.squaredNorm();
  if (!(t_max > floor)) throw InputError("siegel_geodesic_sample: t_max must exceed |alpha|^2");
  const double span = t_max - floor;
  const CVec rest = kI * g.alpha;
  std::vector<SiegelPoint> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    const double frac = static_cast<double>(count - 1 - j) / (count - 1);
    const double t = j == count - 1 ? t_max : floor + span * std::exp(std::log(1e-3) * frac);
    pts.emplace_back(Cpx(g.a, t), rest);
  }
  return pts;
}

BallAutomorphism unitary_to(const CVec& zeta) {
  const auto n = zeta.size();
  if (n < 1) throw InputError("unitary_to: empty vector");
  if (!all_finite(zeta) || !(std::abs(zeta.norm() - 1.0) < 1e-12)) {
    throw InputError("unitary_to: point is not on the unit sphere");
  }
  const CVec target = zeta / zeta.norm();
  // Phase lambda makes <lambda e1, zeta> real so the reflection
  // H = I - 2 v v^* / |v|^2 with v = lambda e1 - zeta swaps the two vectors.
  const double r1 = std::abs(target(0));
  const Cpx lambda = r1 > 0.0 ? target(0) / r1 : Cpx(1.0, 0.0);
  CVec v = -target;
  v(0) += lambda;
  CMat h = CMat::Identity(n, n);
  const double v2 = v.squaredNorm();
  if (v2 > 0.0) h -= (2.0 / v2) * v * v.adjoint();
  CMat d = CMat::Identity(n, n);
  d(0, 0) = lambda;
  return BallAutomorphism::linear(h * d);
}

ComplexGeodesic::ComplexGeodesic(bool linear, CVec param, CVec axis)
    : linear_(linear), param_(std::move(param)), axis_(std::move(axis)) {}

ComplexGeodesic ComplexGeodesic::linear(const CVec& direction) {
  const double n = direction.norm();
  if (direction.size() < 1 || !all_finite(direction) || !(n > 1e-12)) {
    throw InputError("complex geodesic: degenerate direction");
  }
  const CVec sigma = direction / n;
  return ComplexGeodesic(true, sigma, sigma);
}

ComplexGeodesic ComplexGeodesic::through_e1(const CVec& slope) {
  if (!all_finite(slope)) throw InputError("complex geodesic: non-finite slope");
  const double r = 1.0 / (1.0 + slope.squaredNorm());
  CVec axis(slope.size() + 1);
  axis(0) = r;
  axis.tail(slope.size()) = r * slope;
  return ComplexGeodesic(false, slope, axis);
}

CVec ComplexGeodesic::embed(Cpx zeta) const {
  if (linear_) return axis_ * zeta;
  // e1 - r (1 - zeta)(1, alpha)
  CVec out = -axis_ * (1.0 - zeta);
  out(0) += 1.0;
  return out;
}

BallGeodesic::BallGeodesic(BallAutomorphism outer, ComplexGeodesic carrier, DiscGeodesic inner)
    : outer_(std::move(outer)),
      carrier_(std::move(carrier)),
      inner_(std::move(inner)),
      normalizer_(BallAutomorphism::identity(outer_.dim())) {
  if (carrier_.dim() != outer_.dim()) {
    throw InputError("ball geodesic: carrier and automorphism dimensions differ");
  }
  // phi_u sends the anchor u = gamma(0) to 0 and gamma(1) onto the complex
  // line spanned by sigma; rotating sigma to e1 finishes the normalization.
  const CVec u = at(0.0);
  const CVec v0 = involution_apply(u, at(1.0));
  const CVec sigma = v0 / v0.norm();
  normalizer_ = BallAutomorphism(u, unitary_to(sigma).unitary().adjoint());
}

CVec BallGeodesic::at(double t) const { return outer_(carrier_.embed(inner_.at(t))); }
CVec BallGeodesic::p() const { return outer_(carrier_.embed(inner_.p().value())); }
CVec BallGeodesic::q() const { return outer_(carrier_.embed(inner_.q().value())); }

std::optional<CVec> BallGeodesic::offset_from_p(double t) const {
  if (!outer_.is_linear()) return std::nullopt;
  return outer_.unitary() * carrier_.embed_offset(inner_.offset_from_p(t));
}

BallGeodesic ball_geodesic_through(const CVec& base, const CVec& direction) {
  require_same_dim(base, direction, "ball_geodesic_through");
  const BallPoint b(base);
  return BallGeodesic(BallAutomorphism::involution(b.value()), ComplexGeodesic::linear(direction),
                      DiscGeodesic(BoundaryPoint(-1.0), BoundaryPoint(1.0)));
}

BallGeodesic ball_geodesic_through_boundary(const CVec& base, const CVec& slope, double angle) {
  if (slope.size() + 1 != base.size()) {
    throw InputError("ball_geodesic_through: slope must have dimension n - 1");
  }
  return BallGeodesic(unitary_to(base), ComplexGeodesic::through_e1(slope),
                      geodesic_through(Cpx(1.0, 0.0), angle));
}

BallGeodesic ball_geodesic_between(const CVec& u, const CVec& v) {
  require_same_dim(u, v, "ball_geodesic_between");
  if (!(kobayashi_ball_distance(u, v) >= 1e-10)) {
    throw InputError("ball_geodesic_between: coincident points");
  }
  const CVec v0 = involution_apply(u, v);
  return BallGeodesic(BallAutomorphism::involution(u), ComplexGeodesic::linear(v0),
                      DiscGeodesic(BoundaryPoint(-1.0), BoundaryPoint(1.0)));
}

double point_deviation(const CVec& x, const BallGeodesic& g) {
  return LiftedGeodesic::through(g.at(-1.0), g.at(1.0)).deviation(BallPoint(x).value());
}

namespace {

// <X,Y> with signature (n,1).
Cpx lorentz(const CVec& x, const CVec& y) {
  const Eigen::Index n = x.size() - 1;
  return y.head(n).dot(x.head(n)) - x(n) * std::conj(y(n));
}

// (x, 1) / sqrt(1 - |x|^2), so that <X,X> = -1.
CVec unit_lift(const CVec& x) {
  CVec out(x.size() + 1);
  out.head(x.size()) = x;
  out(x.size()) = 1.0;
  return out / std::sqrt(one_minus_norm2(x));
}

CVec project(const CVec& y) {
  const Eigen::Index n = y.size() - 1;
  return y.head(n) / y(n);
}

}  // namespace

LiftedGeodesic LiftedGeodesic::through(const CVec& u, const CVec& v) {
  require_same_dim(u, v, "lifted geodesic");
  const BallPoint up(u);
  const BallPoint vp(v);
  const CVec lu = unit_lift(up.value());
  CVec lv = unit_lift(vp.value());
  // Rotate the phase of the second lift so that <lu, lv> is real and
  // negative; then both lifts lie on one real geodesic plane.
  const Cpx g = lorentz(lv, lu);
  if (std::abs(g) == 0.0) throw NumericError("lifted geodesic: degenerate lifts");
  lv *= -std::conj(g) / std::abs(g);
  const CVec sum = lu + lv;
  const CVec diff = lv - lu;
  const double ns = std::sqrt(std::max(-lorentz(sum, sum).real(), 0.0));
  const double nd = std::sqrt(std::max(lorentz(diff, diff).real(), 0.0));
  if (!(nd > 0.0) || !(ns > 0.0)) {
    throw InputError("lifted geodesic: coincident points");
  }
  return LiftedGeodesic(sum / ns, diff / nd);
}

CVec LiftedGeodesic::at(double t) const { return project(std::cosh(t) * m_ + std::sinh(t) * w_); }
CVec LiftedGeodesic::start() const { return project(m_ - w_); }
CVec LiftedGeodesic::end() const { return project(m_ + w_); }

double LiftedGeodesic::deviation(const CVec& x) const {
  if (x.size() + 1 != m_.size()) throw InputError("lifted geodesic: dimension mismatch");
  const CVec xl = unit_lift(BallPoint(x).value());
  const Cpx a = lorentz(xl, m_);
  const Cpx b = lorentz(xl, w_);
  // xl = -a M + b W + R with R in the positive definite complement. With
  // rho = <R,R> and J = Im(a conj b):
  //   sinh^2 d = rho + J^2 / (h + sqrt(h^2 + J^2)),  h = (1 + rho) / 2.
  const CVec r = xl + a * m_ - b * w_;
  const double rho = std::max(lorentz(r, r).real(), 0.0);
  const double j = (a * std::conj(b)).imag();
  const double h = 0.5 * (1.0 + rho);
  const double s2 = rho + j * j / (h + std::hypot(h, j));
  return std::asinh(std::sqrt(s2));
}

BallFamily::BallFamily(CVec base) : base_(std::move(base)) {
  if (base_.size() < 1) throw InputError("ball family: empty base");
  const double r = base_.norm();
  if (!all_finite(base_) || r > 1.0 + kBoundaryTol) {
    throw InputError("ball family: base outside the closed ball");
  }
  boundary_ = std::abs(r - 1.0) < kBoundaryTol;
  if (boundary_) base_ /= r;
}

BallGeodesic BallFamily::geodesic(int i, int count) const {
  if (count < 1) throw InputError("family: geodesic count must be positive");
  const int n = dim();
  if (!boundary_) return ball_geodesic_through(base_, sphere_points(n, 1, i).front());
  CVec slope = CVec::Zero(n - 1);
  if (n > 1) {
    slope = 1.5 * radical_inverse(static_cast<unsigned>(i), 2) * sphere_points(n - 1, 1, i).front();
  }
  return ball_geodesic_through_boundary(base_, slope, kPi * (2.0 * i + 1.0) / count);
}

std::vector<BallGeodesic> BallFamily::geodesics(int count) const {
  std::vector<BallGeodesic> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(geodesic(i, count));
  return out;
}

}  // namespace kobgeo
