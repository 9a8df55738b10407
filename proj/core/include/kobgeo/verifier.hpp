#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "kobgeo/ball.hpp"
#include "kobgeo/disc.hpp"
#include "kobgeo/holomap.hpp"
#include "kobgeo/numerics.hpp"

namespace kobgeo {

struct SamplingConfig {
  int num_geodesics = 32;
  int points_per_geodesic = 64;
  double range = 5.0;  ///< samples at arclength t in [-range, range]
  double pass_tol = 1e-8;
  double degenerate_tol = 1e-10;
  int threads = 1;

  /// Throws InputError unless counts are positive, range > 0 and
  /// pass_tol > degenerate_tol > 0.
  void validate() const;
};

enum class DomainKind { disc, ball };

/// The geodesics whose closure contains `base`, in the disc or in B^n.
class FamilySpec {
 public:
  static FamilySpec disc(Cpx base);
  static FamilySpec ball(CVec base);

  DomainKind domain() const { return domain_; }
  const CVec& base() const { return base_; }
  int dim() const { return static_cast<int>(base_.size()); }
  bool on_boundary() const { return boundary_; }
  Space space() const { return Space::ball(dim()); }

 private:
  FamilySpec(DomainKind d, CVec base, bool boundary);

  DomainKind domain_;
  CVec base_;
  bool boundary_;
};

/// A disc geodesic or a ball geodesic.
using Geodesic = std::variant<DiscGeodesic, BallGeodesic>;

CVec geodesic_point(const Geodesic& g, double t);
CVec geodesic_start(const Geodesic& g);  ///< endpoint at t -> -inf
CVec geodesic_end(const Geodesic& g);    ///< endpoint at t -> +inf
double geodesic_deviation(const CVec& x, const Geodesic& g);
double kobayashi_distance(const CVec& z, const CVec& w);

/// i-th of `count` geodesics of the family.
Geodesic family_geodesic(const FamilySpec& f, int i, int count);

struct Collinearity {
  bool degenerate = false;
  double deviation = 0.0;
  std::optional<LiftedGeodesic> fitted;
  int anchor_first = 0;
  int anchor_second = 0;
  int worst_index = 0;
};

/// Fits the geodesic through the two hyperbolically farthest points (first
/// such pair by index) and returns the largest point deviation from it.
/// Points must lie in the open disc/ball; all points within degenerate_tol
/// of each other give degenerate = true.
Collinearity collinearity_deviation(std::span<const CVec> points, DomainKind domain,
                                    double degenerate_tol = 1e-10);

enum class Verdict { pass, fail, degenerate_pass };
std::string verdict_name(Verdict v);

struct GeodesicResult {
  int id = 0;
  std::optional<LiftedGeodesic> fitted;
  double deviation = 0.0;
  bool in_target = true;
  bool onto = false;
  bool degenerate = false;
  bool escaped = false;  ///< an image left the target domain
};

struct Witness {
  int geodesic = 0;
  double t = 0.0;
  CVec image;
};

struct VerificationReport {
  Verdict verdict = Verdict::pass;
  double max_deviation = 0.0;
  Witness witness;
  std::vector<GeodesicResult> per_geodesic;
  SamplingConfig config;
};

/// Samples the source family, maps each geodesic, fits a target geodesic and
/// measures how far the image strays from it. Deterministic given cfg; with
/// cfg.threads > 1 geodesics are processed concurrently and folded in order.
VerificationReport verify_preservation(const HoloMap& f, const FamilySpec& src,
                                       const FamilySpec& dst, const SamplingConfig& cfg = {});

/// True iff f(gamma(-T)) and f(gamma(T)) are within 1e-3 of the two distinct
/// endpoints of delta, in either order.
bool onto_check(const HoloMap& f, const Geodesic& gamma, const LiftedGeodesic& delta,
                const SamplingConfig& cfg = {});

struct FitResult {
  Cpx alpha;
  int n = 0;
  double residual = 0.0;
};

struct FitSamples {
  std::vector<std::pair<Cpx, Cpx>> circle;   ///< ordered around |z| = r
  std::vector<std::pair<Cpx, Cpx>> generic;
};

/// Samples f on the circle of the given radius and at deterministic generic
/// points of the disc.
FitSamples sample_for_fit(const HoloMap& f, double radius = 0.5, int circle_count = 256,
                          int generic_count = 16);

/// n from the winding number of the circle samples, alpha as the mean of
/// f(z)/z^n over generic samples with |z| > 0.1, residual = max |f(z) - alpha z^n|
/// over all samples.
FitResult fit_power_map(const FitSamples& samples);

struct ConstancyResult {
  std::vector<Cpx> values;
  double spread = 0.0;
};

/// (1-p)^2 / (1-f(p))^2 f'(p) at each probe; spread is the largest pairwise
/// modulus difference.
ConstancyResult constancy_invariant(const HoloMap& f, std::span<const Cpx> probes);

struct SchwarzPickResult {
  int violations = 0;
  double max_excess = 0.0;
  int range_violations = 0;
};

/// Counts pairs with d(f(z), f(w)) > d(z, w) + 1e-10. Images outside the open
/// disc are counted separately as range violations.
SchwarzPickResult schwarz_pick_check(const HoloMap& f,
                                     std::span<const std::pair<Cpx, Cpx>> pairs);

struct LengthComparison {
  double geodesic_length = 0.0;
  double perturbed_length = 0.0;
};

/// Discrete lengths over `segments` segments between gamma(-range) and
/// gamma(range): of the geodesic itself and of a curve whose interior nodes
/// are pushed off it by a smooth bump of hyperbolic height epsilon.
LengthComparison length_minimality_oracle(const Geodesic& g, double epsilon, int segments,
                                          double range);

/// Lemma-style limit check for a self-map of the family at `base`: images of
/// two geodesics of the family, at arclength `depth` towards the base, must
/// agree with each other and with the base within 1e-4.
bool boundary_limit_check(const HoloMap& f, Cpx base, double depth = 12.0);

}  // namespace kobgeo
