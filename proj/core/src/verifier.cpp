#include "kobgeo/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "kobgeo/errors.hpp"

namespace kobgeo {

namespace {

constexpr double kEndpointTol = 1e-6;
constexpr double kOntoTol = 1e-3;
constexpr double kLimitTol = 1e-4;
constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

CVec scalar(Cpx z) {
  CVec v(1);
  v(0) = z;
  return v;
}

bool inside_open(const CVec& w) { return all_finite(w) && w.norm() < 1.0; }

double arclength(int j, int count, double range) {
  return -range + 2.0 * range * j / (count - 1);
}

// Point at hyperbolic height h above x on the real diameter, measured along
// the geodesic orthogonal to the diameter at x.
Cpx orthogonal_offset(double x, double h) {
  const Cpx up(0.0, std::tanh(h));
  return (up + x) / (1.0 + x * up);
}

CVec from_normalized(const Geodesic& g, Cpx z) {
  return std::visit(Overloaded{
                        [&](const DiscGeodesic& d) -> CVec { return scalar(d.frame()(z)); },
                        [&](const BallGeodesic& b) -> CVec {
                          CVec y = CVec::Zero(b.dim());
                          y(0) = z;
                          return b.normalizer().inverse()(y);
                        },
                    },
                    g);
}

struct Worst {
  int index = 0;
  CVec image;
};

struct Outcome {
  GeodesicResult result;
  Worst worst;
};

Outcome analyze(const HoloMap& f, const Geodesic& g, int id, const FamilySpec& dst,
                const SamplingConfig& cfg) {
  const int k = cfg.points_per_geodesic;
  std::vector<CVec> images;
  images.reserve(static_cast<std::size_t>(k));
  Outcome out;
  out.result.id = id;
  for (int j = 0; j < k; ++j) {
    CVec w = f(geodesic_point(g, arclength(j, k, cfg.range)));
    if (!inside_open(w)) {
      out.result.escaped = true;
      out.result.in_target = false;
      out.result.deviation = kInf;
      out.worst = {j, std::move(w)};
      return out;
    }
    images.push_back(std::move(w));
  }

  const Collinearity c = collinearity_deviation(images, dst.domain(), cfg.degenerate_tol);
  if (c.degenerate) {
    out.result.degenerate = true;
    out.worst = {0, images.front()};
    return out;
  }
  const LiftedGeodesic& fit = *c.fitted;
  out.result.fitted = fit;
  out.result.deviation = c.deviation;
  out.worst = {c.worst_index, images[static_cast<std::size_t>(c.worst_index)]};

  const CVec start = fit.start();
  const CVec end = fit.end();
  if (dst.on_boundary()) {
    out.result.in_target = std::min((start - dst.base()).norm(), (end - dst.base()).norm()) <
                           kEndpointTol;
  } else {
    out.result.in_target = fit.deviation(dst.base()) < cfg.pass_tol;
  }
  const CVec& first = images.front();
  const CVec& last = images.back();
  out.result.onto = ((first - start).norm() < kOntoTol && (last - end).norm() < kOntoTol) ||
                    ((first - end).norm() < kOntoTol && (last - start).norm() < kOntoTol);
  return out;
}

}  // namespace

void SamplingConfig::validate() const {
  if (num_geodesics < 1) throw InputError("sampling: num_geodesics must be positive");
  if (points_per_geodesic < 2) throw InputError("sampling: need at least two points per geodesic");
  if (!(range > 0.0) || !std::isfinite(range)) throw InputError("sampling: range must be positive");
  if (!(degenerate_tol > 0.0)) throw InputError("sampling: degenerate_tol must be positive");
  if (!(pass_tol > degenerate_tol)) {
    throw InputError("sampling: pass_tol must exceed degenerate_tol");
  }
  if (threads < 1) throw InputError("sampling: threads must be positive");
}

FamilySpec::FamilySpec(DomainKind d, CVec base, bool boundary)
    : domain_(d), base_(std::move(base)), boundary_(boundary) {}

FamilySpec FamilySpec::disc(Cpx base) {
  const DiscFamily fam(base);
  return FamilySpec(DomainKind::disc, scalar(fam.base()), fam.on_boundary());
}

FamilySpec FamilySpec::ball(CVec base) {
  if (base.size() == 1) return disc(base(0));
  const BallFamily fam(std::move(base));
  return FamilySpec(DomainKind::ball, fam.base(), fam.on_boundary());
}

CVec geodesic_point(const Geodesic& g, double t) {
  return std::visit(Overloaded{
                        [&](const DiscGeodesic& d) { return scalar(d.at(t)); },
                        [&](const BallGeodesic& b) { return b.at(t); },
                    },
                    g);
}

CVec geodesic_start(const Geodesic& g) {
  return std::visit(Overloaded{
                        [](const DiscGeodesic& d) { return scalar(d.p().value()); },
                        [](const BallGeodesic& b) { return b.p(); },
                    },
                    g);
}

CVec geodesic_end(const Geodesic& g) {
  return std::visit(Overloaded{
                        [](const DiscGeodesic& d) { return scalar(d.q().value()); },
                        [](const BallGeodesic& b) { return b.q(); },
                    },
                    g);
}

double geodesic_deviation(const CVec& x, const Geodesic& g) {
  return std::visit(Overloaded{
                        [&](const DiscGeodesic& d) {
                          if (x.size() != 1) throw InputError("deviation: expected a disc point");
                          return point_deviation(DiscPoint(x(0)), d);
                        },
                        [&](const BallGeodesic& b) { return point_deviation(x, b); },
                    },
                    g);
}

double kobayashi_distance(const CVec& z, const CVec& w) {
  if (z.size() == 1 && w.size() == 1) return poincare_distance(z(0), w(0));
  return kobayashi_ball_distance(z, w);
}

Geodesic family_geodesic(const FamilySpec& f, int i, int count) {
  if (f.domain() == DomainKind::disc) return DiscFamily(f.base()(0)).geodesic(i, count);
  return BallFamily(f.base()).geodesic(i, count);
}

Collinearity collinearity_deviation(std::span<const CVec> points, DomainKind domain,
                                    double degenerate_tol) {
  if (points.size() < 2) throw InputError("collinearity: need at least two points");
  Collinearity c;
  double diameter = -1.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double d = kobayashi_distance(points[i], points[j]);
      if (d > diameter) {
        diameter = d;
        c.anchor_first = static_cast<int>(i);
        c.anchor_second = static_cast<int>(j);
      }
    }
  }
  if (!(diameter >= degenerate_tol) || diameter < 1e-10) {
    c.degenerate = true;
    return c;
  }
  const CVec& u = points[static_cast<std::size_t>(c.anchor_first)];
  const CVec& v = points[static_cast<std::size_t>(c.anchor_second)];
  if (domain == DomainKind::disc && u.size() != 1) {
    throw InputError("collinearity: expected disc points");
  }
  c.fitted = LiftedGeodesic::through(u, v);
  c.deviation = -1.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double d = c.fitted->deviation(points[i]);
    if (d > c.deviation) {
      c.deviation = d;
      c.worst_index = static_cast<int>(i);
    }
  }
  return c;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::degenerate_pass:
      return "degenerate-pass";
  }
  return "?";
}

VerificationReport verify_preservation(const HoloMap& f, const FamilySpec& src,
                                       const FamilySpec& dst, const SamplingConfig& cfg) {
  cfg.validate();
  const Space out = f.output_space(src.space());
  const bool compatible = out.dim == dst.dim() &&
                          (out.region == Region::ball || out.region == Region::plane);
  if (!compatible) {
    throw InputError("verify: map sends " + describe(src.space()) + " into " + describe(out) +
                     " but the target family lives in " + describe(dst.space()));
  }

  const int count = cfg.num_geodesics;
  std::vector<Geodesic> geodesics;
  geodesics.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) geodesics.push_back(family_geodesic(src, i, count));

  std::vector<std::optional<Outcome>> outcomes(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  auto work = [&](int i) {
    try {
      outcomes[static_cast<std::size_t>(i)] = analyze(f, geodesics[static_cast<std::size_t>(i)], i, dst, cfg);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  };
  const int workers = std::min(cfg.threads, count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int i = w; i < count; i += workers) work(i);
      });
    }
    for (std::thread& t : pool) t.join();
  }

  VerificationReport report;
  report.config = cfg;
  report.max_deviation = -1.0;
  bool all_in_target = true;
  bool any_degenerate = false;
  for (int i = 0; i < count; ++i) {
    if (errors[static_cast<std::size_t>(i)]) std::rethrow_exception(errors[static_cast<std::size_t>(i)]);
    Outcome& o = *outcomes[static_cast<std::size_t>(i)];
    if (o.result.deviation > report.max_deviation) {
      report.max_deviation = o.result.deviation;
      report.witness = {i, arclength(o.worst.index, cfg.points_per_geodesic, cfg.range),
                        o.worst.image};
    }
    all_in_target = all_in_target && o.result.in_target;
    any_degenerate = any_degenerate || o.result.degenerate;
    report.per_geodesic.push_back(std::move(o.result));
  }
  if (!all_in_target || !(report.max_deviation < cfg.pass_tol)) {
    report.verdict = Verdict::fail;
  } else if (any_degenerate) {
    report.verdict = Verdict::degenerate_pass;
  } else {
    report.verdict = Verdict::pass;
  }
  return report;
}

bool onto_check(const HoloMap& f, const Geodesic& gamma, const LiftedGeodesic& delta,
                const SamplingConfig& cfg) {
  const CVec a = f(geodesic_point(gamma, -cfg.range));
  const CVec b = f(geodesic_point(gamma, cfg.range));
  const CVec p = delta.start();
  const CVec q = delta.end();
  return ((a - p).norm() < kOntoTol && (b - q).norm() < kOntoTol) ||
         ((a - q).norm() < kOntoTol && (b - p).norm() < kOntoTol);
}

FitSamples sample_for_fit(const HoloMap& f, double radius, int circle_count, int generic_count) {
  if (!(radius > 0.0 && radius < 1.0)) throw InputError("fit: radius outside (0,1)");
  FitSamples s;
  for (int j = 0; j < circle_count; ++j) {
    const Cpx z = std::polar(radius, 2.0 * kPi * j / circle_count);
    s.circle.emplace_back(z, f(z));
  }
  for (int j = 0; j < generic_count; ++j) {
    const auto idx = static_cast<unsigned>(j + 1);
    const Cpx z = std::polar(0.15 + 0.7 * radical_inverse(idx, 2), 2.0 * kPi * radical_inverse(idx, 3));
    s.generic.emplace_back(z, f(z));
  }
  return s;
}

FitResult fit_power_map(const FitSamples& samples) {
  std::vector<Cpx> loop;
  loop.reserve(samples.circle.size());
  for (const auto& [z, w] : samples.circle) loop.push_back(w);
  FitResult r;
  r.n = winding_number_of_samples(loop);

  Cpx sum(0.0, 0.0);
  int used = 0;
  for (const auto& [z, w] : samples.generic) {
    if (std::abs(z) > 0.1) {
      sum += w / std::pow(z, r.n);
      ++used;
    }
  }
  if (used < 8) throw InputError("fit: need at least 8 generic samples with |z| > 0.1");
  r.alpha = sum / static_cast<double>(used);

  r.residual = 0.0;
  for (const auto* set : {&samples.circle, &samples.generic}) {
    for (const auto& [z, w] : *set) {
      r.residual = std::max(r.residual, std::abs(w - r.alpha * std::pow(z, r.n)));
    }
  }
  return r;
}

ConstancyResult constancy_invariant(const HoloMap& f, std::span<const Cpx> probes) {
  if (!(std::abs(f(Cpx(0.0, 0.0))) <= 1e-10)) throw InputError("constancy: f(0) must be 0");
  const ScalarMap g = [&f](Cpx z) { return f(z); };
  ConstancyResult out;
  for (const Cpx p : probes) {
    const Cpx fp = f(p);
    const Cpx gap = 1.0 - fp;
    if (!(std::abs(gap) > 1e-14)) throw NumericError("constancy: f(p) = 1 at a probe");
    const Cpx d = complex_derivative(g, p);
    out.values.push_back((1.0 - p) * (1.0 - p) / (gap * gap) * d);
  }
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    for (std::size_t j = i + 1; j < out.values.size(); ++j) {
      out.spread = std::max(out.spread, std::abs(out.values[i] - out.values[j]));
    }
  }
  return out;
}

SchwarzPickResult schwarz_pick_check(const HoloMap& f,
                                     std::span<const std::pair<Cpx, Cpx>> pairs) {
  SchwarzPickResult r;
  for (const auto& [z, w] : pairs) {
    const Cpx fz = f(z);
    const Cpx fw = f(w);
    if (!(std::abs(fz) < 1.0) || !(std::abs(fw) < 1.0)) {
      ++r.range_violations;
      continue;
    }
    const double excess = poincare_distance(fz, fw) - poincare_distance(z, w);
    r.max_excess = std::max(r.max_excess, excess);
    if (excess > 1e-10) ++r.violations;
  }
  return r;
}

LengthComparison length_minimality_oracle(const Geodesic& g, double epsilon, int segments,
                                          double range) {
  if (segments < 16) throw InputError("length oracle: need at least 16 segments");
  if (!(epsilon >= 0.0)) throw InputError("length oracle: epsilon must be non-negative");
  if (!(range > 0.0)) throw InputError("length oracle: range must be positive");
  std::vector<CVec> straight;
  std::vector<CVec> bent;
  for (int j = 0; j <= segments; ++j) {
    const double x = std::tanh(-range + 2.0 * range * j / segments);
    const double s = std::sin(kPi * j / segments);
    const double h = epsilon * s * s;
    straight.push_back(from_normalized(g, Cpx(x, 0.0)));
    CVec p = from_normalized(g, orthogonal_offset(x, h));
    if (!inside_open(p)) throw NumericError("length oracle: perturbed node left the domain");
    bent.push_back(std::move(p));
  }
  LengthComparison out;
  for (int j = 0; j < segments; ++j) {
    out.geodesic_length += kobayashi_distance(straight[static_cast<std::size_t>(j)],
                                              straight[static_cast<std::size_t>(j + 1)]);
    out.perturbed_length += kobayashi_distance(bent[static_cast<std::size_t>(j)],
                                               bent[static_cast<std::size_t>(j + 1)]);
  }
  return out;
}

bool boundary_limit_check(const HoloMap& f, Cpx base, double depth) {
  const DiscFamily fam(base);
  const double delta = std::exp(-depth);
  std::vector<Cpx> limits;
  for (int i : {0, 1}) {
    const DiscGeodesic g = fam.geodesic(i, 4);
    double t = -depth;
    if (!fam.on_boundary()) {
      t = std::atanh(g.frame_inverse()(fam.base()).real()) + delta;
    }
    limits.push_back(f(g.at(t)));
  }
  const Cpx a = fam.base();
  return std::abs(limits[0] - limits[1]) < kLimitTol && std::abs(limits[0] - a) < kLimitTol &&
         std::abs(limits[1] - a) < kLimitTol;
}

}  // namespace kobgeo
