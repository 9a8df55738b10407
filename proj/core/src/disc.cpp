#include "kobgeo/disc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kobgeo/errors.hpp"

namespace kobgeo {

namespace {

constexpr double kBoundaryTol = 1e-12;

double normalize_angle(double theta) {
  double t = std::fmod(theta, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  if (t >= 2.0 * kPi) t = 0.0;
  return t;
}

bool finite(Cpx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// 1 - |z|^2 without cancellation near the circle.
double one_minus_abs2(Cpx z) {
  const double r = std::abs(z);
  return (1.0 - r) * (1.0 + r);
}

// 1 + tanh t and 1 - tanh t with full relative accuracy.
double one_plus_tanh(double t) { return 2.0 / (1.0 + std::exp(-2.0 * t)); }
double one_minus_tanh(double t) { return 2.0 / (1.0 + std::exp(2.0 * t)); }

std::string fmt_cpx(Cpx z) {
  std::ostringstream s;
  s.precision(17);
  s << "(" << z.real() << "," << z.imag() << ")";
  return s.str();
}

}  // namespace

DiscPoint::DiscPoint(Cpx value) : value_(value) {
  if (!finite(value) || !(std::abs(value) < 1.0)) {
    throw InputError("disc point " + fmt_cpx(value) + " is not inside the unit disc");
  }
}

BoundaryPoint::BoundaryPoint(Cpx value) {
  const double r = std::abs(value);
  if (!finite(value) || !(std::abs(r - 1.0) < kBoundaryTol)) {
    throw InputError("boundary point " + fmt_cpx(value) + " is not on the unit circle");
  }
  value_ = value / r;
}

BoundaryPoint BoundaryPoint::normalized(Cpx value) {
  const double r = std::abs(value);
  if (!finite(value) || !(r > 0.0)) throw NumericError("boundary point: cannot normalize");
  BoundaryPoint b;
  b.value_ = value / r;
  return b;
}

DiscMobius::DiscMobius(DiscPoint center, double theta)
    : a_(center.value()), theta_(normalize_angle(theta)) {
  if (!std::isfinite(theta)) throw InputError("mobius: non-finite phase");
}

Cpx DiscMobius::operator()(Cpx z) const {
  if (!(std::abs(z) <= 1.0 + kBoundaryTol)) {
    throw DomainViolation("mobius: argument " + fmt_cpx(z) + " outside the closed disc");
  }
  return phase() * (z - a_) / (1.0 - std::conj(a_) * z);
}

DiscMobius DiscMobius::after(const DiscMobius& inner) const {
  // The composite sends c = inner^{-1}(a_) to 0; its phase follows from the
  // derivative at c.
  const Cpx c = mobius_invert(inner)(a_);
  const double phase_angle =
      theta_ + inner.theta_ - 2.0 * std::arg(1.0 - std::conj(inner.a_) * c);
  return DiscMobius(c, phase_angle);
}

double poincare_distance(DiscPoint z, DiscPoint w) {
  // atanh|(z-w)/(1-conj(w)z)| rewritten as asinh(|z-w| / sqrt((1-|z|^2)(1-|w|^2)))
  // which stays accurate for points near the circle and for nearby points.
  const Cpx a = z.value();
  const Cpx b = w.value();
  return std::asinh(std::abs(a - b) / std::sqrt(one_minus_abs2(a) * one_minus_abs2(b)));
}

Cpx mobius_apply(const DiscMobius& m, Cpx z) { return m(z); }

DiscMobius mobius_invert(const DiscMobius& m) {
  return DiscMobius(-m.center() * m.phase(), -m.theta());
}

DiscMobius mobius_to(DiscPoint a) { return DiscMobius(-a.value(), 0.0); }

BoundaryNormalizer::BoundaryNormalizer(DiscPoint p) : p_(p.value()) {}

Cpx BoundaryNormalizer::operator()(Cpx z) const {
  const Cpx pc = std::conj(p_);
  return (1.0 - pc) / (1.0 - p_) * (z - p_) / (1.0 - pc * z);
}

Cpx BoundaryNormalizer::inverse(Cpx z) const {
  const Cpx pc = std::conj(p_);
  return ((1.0 - p_) * z + p_ * (1.0 - pc)) / ((1.0 - p_) * pc * z + (1.0 - pc));
}

DiscMobius BoundaryNormalizer::as_mobius() const {
  return DiscMobius(p_, std::arg((1.0 - std::conj(p_)) / (1.0 - p_)));
}

BoundaryNormalizer boundary_normalizer(DiscPoint p) { return BoundaryNormalizer(p); }

DiscGeodesic::DiscGeodesic(BoundaryPoint p, BoundaryPoint q) : p_(p), q_(q) {
  const Cpx pv = p.value();
  const Cpx qv = q.value();
  const double chord = std::abs(pv - qv);
  if (!(chord > kBoundaryTol)) throw InputError("geodesic: endpoints coincide");
  // Closest point of the trace to 0: (p+q)/|p+q| * (2-|p-q|)/|p+q|, which
  // simplifies to (p+q)/(2+|p-q|) on the circle.
  const Cpx mid = (pv + qv) / (2.0 + chord);
  Cpx q_centered = (qv - mid) / (1.0 - std::conj(mid) * qv);
  q_centered /= std::abs(q_centered);
  // M(z) = (q' z + m) / (1 + conj(m) q' z) sends -1, 0, 1 to p, m, q.
  frame_ = DiscMobius(-mid * std::conj(q_centered), std::arg(q_centered));
  frame_inv_ = mobius_invert(frame_);
}

Cpx DiscGeodesic::at(double t) const { return frame_(std::tanh(t)); }

Cpx DiscGeodesic::offset_from_p(double t) const {
  // M(x) - M(-1) = e^{i theta} (1-|a|^2) (x+1) / ((1 - conj(a) x)(1 + conj(a)))
  const Cpx a = frame_.center();
  const Cpx ac = std::conj(a);
  const double x = std::tanh(t);
  return frame_.phase() * one_minus_abs2(a) * one_plus_tanh(t) / ((1.0 - ac * x) * (1.0 + ac));
}

Cpx DiscGeodesic::offset_from_q(double t) const {
  const Cpx a = frame_.center();
  const Cpx ac = std::conj(a);
  const double x = std::tanh(t);
  return -frame_.phase() * one_minus_abs2(a) * one_minus_tanh(t) / ((1.0 - ac * x) * (1.0 - ac));
}

DiscGeodesic geodesic_through(Cpx base, double phi) {
  const double r = std::abs(base);
  const Cpx dir = std::polar(1.0, phi);
  if (finite(base) && std::abs(r - 1.0) < kBoundaryTol) {
    const BoundaryPoint b(base);
    if (std::abs(dir - b.value()) <= kBoundaryTol) {
      throw InputError("geodesic_through: direction coincides with the boundary base");
    }
    return DiscGeodesic(b, BoundaryPoint(dir));
  }
  const DiscMobius to_base = mobius_to(DiscPoint(base));
  return DiscGeodesic(BoundaryPoint::normalized(to_base(-dir)),
                      BoundaryPoint::normalized(to_base(dir)));
}

DiscGeodesic geodesic_between(DiscPoint z, DiscPoint w) {
  if (!(poincare_distance(z, w) >= 1e-10)) throw InputError("geodesic_between: coincident points");
  const DiscMobius to_z = mobius_to(z);
  const Cpx w0 = mobius_invert(to_z)(w.value());
  const Cpx u = w0 / std::abs(w0);
  return DiscGeodesic(BoundaryPoint::normalized(to_z(-u)), BoundaryPoint::normalized(to_z(u)));
}

std::vector<Cpx> geodesic_sample(const DiscGeodesic& g, int count, double range) {
  if (count < 2) throw InputError("geodesic_sample: need at least two samples");
  if (!(range > 0.0)) throw InputError("geodesic_sample: range must be positive");
  std::vector<Cpx> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    const double t = -range + 2.0 * range * j / (count - 1);
    pts.push_back(g.at(t));
  }
  return pts;
}

double point_deviation(DiscPoint z, const DiscGeodesic& g) {
  // Distance to the real diameter: sinh(2d) = 2 |Im w| / (1 - |w|^2).
  const Cpx w = g.frame_inverse()(z.value());
  const double r = std::abs(w);
  return 0.5 * std::asinh(2.0 * std::abs(w.imag()) / ((1.0 - r) * (1.0 + r)));
}

Cpx cayley_disc(Cpx z) {
  if (z == Cpx(1.0, 0.0)) throw NumericError("cayley_disc: pole at z = 1");
  const Cpx w = (1.0 + z) / (1.0 - z);
  if (!finite(w)) throw NumericError("cayley_disc: overflow near the pole");
  return w;
}

Cpx cayley_disc_inverse(Cpx w) {
  if (w == Cpx(-1.0, 0.0)) throw NumericError("cayley_disc_inverse: pole at w = -1");
  const Cpx z = (w - 1.0) / (w + 1.0);
  if (!finite(z)) throw NumericError("cayley_disc_inverse: overflow near the pole");
  return z;
}

Cpx cayley_disc_near_one(Cpx offset) {
  if (offset == Cpx(0.0, 0.0)) throw NumericError("cayley_disc: pole at z = 1");
  return (2.0 + offset) / (-offset);
}

DiscFamily::DiscFamily(Cpx base) : base_(base) {
  const double r = std::abs(base);
  if (!finite(base) || r > 1.0 + kBoundaryTol) {
    throw InputError("family base " + fmt_cpx(base) + " outside the closed disc");
  }
  boundary_ = std::abs(r - 1.0) < kBoundaryTol;
  if (boundary_) base_ = BoundaryPoint(base).value();
}

DiscGeodesic DiscFamily::geodesic(int i, int count) const {
  if (count < 1) throw InputError("family: geodesic count must be positive");
  if (boundary_) {
    return geodesic_through(base_, std::arg(base_) + kPi * (2.0 * i + 1.0) / count);
  }
  return geodesic_through(base_, kPi * i / count);
}

std::vector<DiscGeodesic> DiscFamily::geodesics(int count) const {
  std::vector<DiscGeodesic> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(geodesic(i, count));
  return out;
}

}  // namespace kobgeo
