#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kobgeo/ball.hpp"
#include "kobgeo/disc.hpp"
#include "kobgeo/numerics.hpp"

namespace kobgeo {

enum class NodeKind {
  constant,
  power,
  mobius,
  boundary_contraction,
  cayley_disc,
  cayley_disc_inv,
  exp_family,
  hom_poly,
  ball_automorphism,
  cayley_ball,
  cayley_ball_inv,
  siegel_affine,
  polynomial,
  sum,
  compose,
};

std::string_view kind_name(NodeKind kind);
std::optional<NodeKind> kind_from_name(std::string_view name);

/// Where the values of a map live. A disc is a ball of dimension one; `plane`
/// means no constraint is known statically and is checked when evaluating.
enum class Region { ball, half_plane, siegel, plane };

struct Space {
  Region region = Region::ball;
  int dim = 1;

  static Space disc() { return {Region::ball, 1}; }
  static Space ball(int n) { return {Region::ball, n}; }
  friend bool operator==(const Space&, const Space&) = default;
};

std::string describe(const Space& s);

/// Worst point found while checking |F'(w)|^2 <= m Im z1 + Im b(w).
struct SiegelConstraintCheck {
  double worst_margin = 0.0;
  CVec witness;
  bool ok = false;
};

/// Checks the Siegel self-map constraint on the envelope Im z1 = |w|^2 (where
/// it is tightest) over a deterministic grid of radii and directions plus
/// seeded random points.
SiegelConstraintCheck check_siegel_constraint(double m, const PolyMap& b, const PolyMap& fp,
                                              unsigned seed = 20240611u);

/// An immutable composition tree of closed-form holomorphic primitives.
/// Subtrees are shared, so copies are cheap and evaluation is thread-safe.
class HoloMap {
 public:
  struct Constant {
    CVec value;
  };
  struct Power {
    Cpx alpha;
    int n = 1;
  };
  struct BoundaryContraction {
    double c = 1.0;
  };
  struct CayleyDisc {};
  struct CayleyDiscInv {};
  struct ExpFamily {
    double a = -1.0;
    Cpx beta;
  };
  struct HomPolyNode {
    HomPoly poly;
    bool ball_self_map = false;
  };
  struct CayleyBall {};
  struct CayleyBallInv {};
  struct SiegelAffine {
    double m = 1.0;
    PolyMap b;   ///< C^{n-1} -> C
    PolyMap fp;  ///< C^{n-1} -> C^{n-1}
  };
  struct Polynomial {
    PolyMap map;
  };
  struct Sum {
    std::vector<HoloMap> terms;
  };
  struct Compose {
    std::vector<HoloMap> stages;  ///< applied first to last
  };

  // Alternative order matches NodeKind.
  using Node = std::variant<Constant, Power, DiscMobius, BoundaryContraction, CayleyDisc,
                            CayleyDiscInv, ExpFamily, HomPolyNode, BallAutomorphism, CayleyBall,
                            CayleyBallInv, SiegelAffine, Polynomial, Sum, Compose>;

  static HoloMap constant(CVec value);
  static HoloMap constant(Cpx value);
  static HoloMap power(Cpx alpha, int n);
  static HoloMap mobius(const DiscMobius& m);
  static HoloMap boundary_contraction(double c);
  static HoloMap cayley_disc();
  static HoloMap cayley_disc_inv();
  static HoloMap exp_family(double a, Cpx beta);
  static HoloMap hom_poly(HomPoly p);
  static HoloMap ball_automorphism(BallAutomorphism m);
  static HoloMap cayley_ball();
  static HoloMap cayley_ball_inv();
  static HoloMap siegel_affine(double m, PolyMap b, PolyMap fp);
  static HoloMap polynomial(PolyMap p);
  static HoloMap sum(std::vector<HoloMap> terms);
  static HoloMap compose(std::vector<HoloMap> stages);

  NodeKind kind() const { return static_cast<NodeKind>(node_->index()); }
  const Node& node() const { return *node_; }

  CVec operator()(const CVec& z) const;
  /// Scalar convenience for maps between one-dimensional spaces.
  Cpx operator()(Cpx z) const;

  /// Structural type check: the space the map lands in for inputs from `in`.
  /// Throws InputError naming the offending node path.
  Space output_space(const Space& in) const;

 private:
  explicit HoloMap(Node node);

  CVec eval(const CVec& z) const;
  Space infer(const Space& in, const std::string& path) const;

  std::shared_ptr<const Node> node_;
};

/// eval_map(f, z): recursive evaluation, compositions applied left to right.
CVec eval_map(const HoloMap& f, const CVec& z);

}  // namespace kobgeo
