#include "kobgeo/holomap.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "kobgeo/errors.hpp"

namespace kobgeo {

namespace {

constexpr std::array<std::string_view, 15> kKindNames = {
    "constant",   "power",           "mobius",        "boundary_contraction",
    "cayley_disc", "cayley_disc_inv", "exp_family",    "hom_poly",
    "ball_automorphism", "cayley_ball", "cayley_ball_inv", "siegel_affine",
    "polynomial", "sum",             "compose",
};

constexpr double kSlack = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool finite(Cpx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Rethrows the active library error with `prefix` prepended, keeping its type.
[[noreturn]] void rethrow_prefixed(const std::string& prefix) {
  try {
    throw;
  } catch (const DomainViolation& e) {
    throw DomainViolation(prefix + e.what());
  } catch (const NumericError& e) {
    throw NumericError(prefix + e.what());
  } catch (const InputError& e) {
    throw InputError(prefix + e.what());
  }
}

void require_dim(const CVec& z, int n, std::string_view kind) {
  if (z.size() != n) {
    throw InputError(std::string(kind) + ": expected an argument of dimension " +
                     std::to_string(n) + ", got " + std::to_string(z.size()));
  }
}

CVec scalar(Cpx z) {
  CVec v(1);
  v(0) = z;
  return v;
}

}  // namespace

std::string_view kind_name(NodeKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

std::optional<NodeKind> kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<NodeKind>(i);
  }
  return std::nullopt;
}

std::string describe(const Space& s) {
  switch (s.region) {
    case Region::ball:
      return s.dim == 1 ? std::string("disc") : "ball(" + std::to_string(s.dim) + ")";
    case Region::half_plane:
      return "half-plane";
    case Region::siegel:
      return "siegel(" + std::to_string(s.dim) + ")";
    case Region::plane:
      return "C^" + std::to_string(s.dim);
  }
  return "?";
}

SiegelConstraintCheck check_siegel_constraint(double m, const PolyMap& b, const PolyMap& fp,
                                              unsigned seed) {
  const int k = fp.dim_in();
  SiegelConstraintCheck out;
  out.worst_margin = std::numeric_limits<double>::infinity();
  out.ok = true;
  // margin(w) = m|w|^2 + Im b(w) - |F'(w)|^2 at the envelope Im z1 = |w|^2;
  // raising Im z1 only adds m (Im z1 - |w|^2) > 0.
  auto probe = [&](const CVec& w) {
    const double w2 = w.squaredNorm();
    const double im_b = b(w)(0).imag();
    const double f2 = fp(w).squaredNorm();
    const double margin = m * w2 + im_b - f2;
    const double scale = 1.0 + m * w2 + std::abs(im_b) + f2;
    if (!std::isfinite(margin)) {
      out.ok = false;
      if (out.witness.size() == 0) out.witness = w;
      out.worst_margin = -std::numeric_limits<double>::infinity();
      return;
    }
    if (margin < out.worst_margin) {
      out.worst_margin = margin;
      out.witness = w;
    }
    if (margin < -kSlack * scale) out.ok = false;
  };

  probe(CVec::Zero(k));
  const auto dirs = sphere_points(k, 64);
  for (int e = -3; e <= 3; ++e) {
    for (double mant : {1.0, 3.0}) {
      const double r = mant * std::pow(10.0, e);
      for (const CVec& d : dirs) probe(r * d);
    }
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> log_r(std::log(1e-3), std::log(1e3));
  for (int i = 0; i < 256; ++i) {
    CVec w(k);
    for (int j = 0; j < k; ++j) w(j) = Cpx(normal(rng), normal(rng));
    const double nrm = w.norm();
    if (nrm == 0.0) continue;
    probe(w * (std::exp(log_r(rng)) / nrm));
  }
  return out;
}

HoloMap::HoloMap(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

HoloMap HoloMap::constant(CVec value) {
  if (value.size() < 1) throw InputError("constant: empty value");
  if (!all_finite(value)) throw InputError("constant: non-finite value");
  return HoloMap(Constant{std::move(value)});
}

HoloMap HoloMap::constant(Cpx value) { return constant(scalar(value)); }

HoloMap HoloMap::power(Cpx alpha, int n) {
  if (!finite(alpha)) throw InputError("power: non-finite alpha");
  if (n < 0) throw InputError("power: negative exponent");
  if (!(std::abs(alpha) <= 1.0 + kSlack)) throw InputError("power: |alpha| exceeds 1");
  return HoloMap(Power{alpha, n});
}

HoloMap HoloMap::mobius(const DiscMobius& m) { return HoloMap(m); }

HoloMap HoloMap::boundary_contraction(double c) {
  if (!(c > 0.0 && c <= 1.0)) throw InputError("boundary_contraction: C outside (0,1]");
  return HoloMap(BoundaryContraction{c});
}

HoloMap HoloMap::cayley_disc() { return HoloMap(CayleyDisc{}); }
HoloMap HoloMap::cayley_disc_inv() { return HoloMap(CayleyDiscInv{}); }

HoloMap HoloMap::exp_family(double a, Cpx beta) {
  if (!std::isfinite(a) || !finite(beta)) throw InputError("exp_family: non-finite parameter");
  if (!(a < 0.0)) throw InputError("exp_family: a must be negative");
  if (!(beta.real() >= 0.0)) throw InputError("exp_family: Re(beta) must be non-negative");
  return HoloMap(ExpFamily{a, beta});
}

HoloMap HoloMap::hom_poly(HomPoly p) {
  bool self_map = false;
  if (p.dim_in() == p.dim_out()) self_map = hom_ball_range_check(p, 4096).ok;
  return HoloMap(HomPolyNode{std::move(p), self_map});
}

HoloMap HoloMap::ball_automorphism(BallAutomorphism m) { return HoloMap(std::move(m)); }
HoloMap HoloMap::cayley_ball() { return HoloMap(CayleyBall{}); }
HoloMap HoloMap::cayley_ball_inv() { return HoloMap(CayleyBallInv{}); }

HoloMap HoloMap::siegel_affine(double m, PolyMap b, PolyMap fp) {
  if (!std::isfinite(m) || !(m > 0.0)) throw InputError("siegel_affine: m must be positive");
  if (b.dim_out() != 1) throw InputError("siegel_affine: b must be scalar valued");
  if (fp.dim_in() != fp.dim_out()) throw InputError("siegel_affine: Fp must map C^k to C^k");
  if (b.dim_in() != fp.dim_in()) throw InputError("siegel_affine: b and Fp take different inputs");
  const SiegelConstraintCheck check = check_siegel_constraint(m, b, fp);
  if (!check.ok) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "siegel_affine: constraint |Fp(w)|^2 <= m Im z1 + Im b(w) violated, margin "
        << check.worst_margin << " at w = (";
    for (Eigen::Index i = 0; i < check.witness.size(); ++i) {
      msg << (i ? "; " : "") << check.witness(i).real() << "," << check.witness(i).imag();
    }
    msg << ")";
    throw InputError(msg.str());
  }
  return HoloMap(SiegelAffine{m, std::move(b), std::move(fp)});
}

HoloMap HoloMap::polynomial(PolyMap p) { return HoloMap(Polynomial{std::move(p)}); }

HoloMap HoloMap::sum(std::vector<HoloMap> terms) {
  if (terms.empty()) throw InputError("sum: needs at least one term");
  return HoloMap(Sum{std::move(terms)});
}

HoloMap HoloMap::compose(std::vector<HoloMap> stages) {
  if (stages.empty()) throw InputError("compose: needs at least one stage");
  return HoloMap(Compose{std::move(stages)});
}

CVec HoloMap::operator()(const CVec& z) const { return eval(z); }

Cpx HoloMap::operator()(Cpx z) const {
  const CVec w = eval(scalar(z));
  if (w.size() != 1) throw InputError("scalar evaluation of a vector-valued map");
  return w(0);
}

CVec eval_map(const HoloMap& f, const CVec& z) { return f(z); }

CVec HoloMap::eval(const CVec& z) const {
  const std::string_view kind = kind_name(this->kind());
  CVec out = std::visit(
      Overloaded{
          [&](const Constant& c) -> CVec { return c.value; },
          [&](const Power& p) -> CVec {
            require_dim(z, 1, kind);
            return scalar(p.alpha * std::pow(z(0), p.n));
          },
          [&](const DiscMobius& m) -> CVec {
            require_dim(z, 1, kind);
            return scalar(m(z(0)));
          },
          [&](const BoundaryContraction& h) -> CVec {
            require_dim(z, 1, kind);
            const Cpx den = 1.0 - (1.0 - h.c) * z(0);
            if (den == Cpx(0.0, 0.0)) throw NumericError("boundary_contraction: pole");
            return scalar(h.c * z(0) / den);
          },
          [&](const CayleyDisc&) -> CVec {
            require_dim(z, 1, kind);
            return scalar(kobgeo::cayley_disc(z(0)));
          },
          [&](const CayleyDiscInv&) -> CVec {
            require_dim(z, 1, kind);
            return scalar(cayley_disc_inverse(z(0)));
          },
          [&](const ExpFamily& e) -> CVec {
            require_dim(z, 1, kind);
            if (z(0) == Cpx(1.0, 0.0)) throw NumericError("exp_family: pole at z = 1");
            return scalar(std::exp(e.a * (1.0 + z(0)) / (1.0 - z(0)) - e.beta));
          },
          [&](const HomPolyNode& h) -> CVec {
            require_dim(z, h.poly.dim_in(), kind);
            return eval_hom_poly(h.poly, z);
          },
          [&](const BallAutomorphism& m) -> CVec {
            require_dim(z, m.dim(), kind);
            return m(z);
          },
          [&](const CayleyBall&) -> CVec { return kobgeo::cayley_ball(z); },
          [&](const CayleyBallInv&) -> CVec { return cayley_ball_inverse(z); },
          [&](const SiegelAffine& s) -> CVec {
            const int k = s.fp.dim_in();
            require_dim(z, k + 1, kind);
            const CVec w = z.tail(k);
            CVec r(k + 1);
            r(0) = s.m * z(0) + s.b(w)(0);
            r.tail(k) = s.fp(w);
            return r;
          },
          [&](const Polynomial& p) -> CVec {
            require_dim(z, p.map.dim_in(), kind);
            return p.map(z);
          },
          [&](const Sum& s) -> CVec {
            CVec acc;
            for (std::size_t i = 0; i < s.terms.size(); ++i) {
              CVec term;
              try {
                term = s.terms[i].eval(z);
              } catch (const Error&) {
                rethrow_prefixed("sum/children[" + std::to_string(i) + "]/");
              }
              if (i == 0) {
                acc = std::move(term);
              } else if (term.size() != acc.size()) {
                throw InputError("sum: terms have different dimensions");
              } else {
                acc += term;
              }
            }
            return acc;
          },
          [&](const Compose& c) -> CVec {
            CVec cur = z;
            for (std::size_t i = 0; i < c.stages.size(); ++i) {
              try {
                cur = c.stages[i].eval(cur);
              } catch (const Error&) {
                rethrow_prefixed("compose/children[" + std::to_string(i) + "]/");
              }
            }
            return cur;
          },
      },
      *node_);
  if (!all_finite(out)) throw NumericError(std::string(kind) + ": non-finite value");
  return out;
}

Space HoloMap::output_space(const Space& in) const { return infer(in, std::string(kind_name(kind()))); }

Space HoloMap::infer(const Space& in, const std::string& path) const {
  auto fail = [&](const std::string& what) -> Space {
    throw InputError(path + ": " + what + " (input is " + describe(in) + ")");
  };
  auto need_dim = [&](int n) {
    if (in.dim != n) fail("expects dimension " + std::to_string(n));
  };
  const bool from_ball = in.region == Region::ball;
  const bool from_plane = in.region == Region::plane;

  return std::visit(
      Overloaded{
          [&](const Constant& c) -> Space {
            const int n = static_cast<int>(c.value.size());
            return {c.value.norm() < 1.0 ? Region::ball : Region::plane, n};
          },
          [&](const Power&) -> Space {
            need_dim(1);
            return {from_ball ? Region::ball : Region::plane, 1};
          },
          [&](const DiscMobius&) -> Space {
            need_dim(1);
            if (!from_ball && !from_plane) fail("acts on the disc");
            return Space::disc();
          },
          [&](const BoundaryContraction&) -> Space {
            need_dim(1);
            if (!from_ball && !from_plane) fail("acts on the disc");
            return {from_ball ? Region::ball : Region::plane, 1};
          },
          [&](const CayleyDisc&) -> Space {
            need_dim(1);
            if (!from_ball && !from_plane) fail("acts on the disc");
            return {from_ball ? Region::half_plane : Region::plane, 1};
          },
          [&](const CayleyDiscInv&) -> Space {
            need_dim(1);
            if (in.region != Region::half_plane && !from_plane) fail("acts on the half-plane");
            return {from_plane ? Region::plane : Region::ball, 1};
          },
          [&](const ExpFamily&) -> Space {
            need_dim(1);
            if (!from_ball && !from_plane) fail("acts on the disc");
            return {from_ball ? Region::ball : Region::plane, 1};
          },
          [&](const HomPolyNode& h) -> Space {
            need_dim(h.poly.dim_in());
            const bool ball = from_ball && h.ball_self_map;
            return {ball ? Region::ball : Region::plane, h.poly.dim_out()};
          },
          [&](const BallAutomorphism& m) -> Space {
            need_dim(m.dim());
            if (!from_ball && !from_plane) fail("acts on the ball");
            return Space::ball(m.dim());
          },
          [&](const CayleyBall&) -> Space {
            if (!from_ball && !from_plane) fail("acts on the ball");
            if (in.dim == 1) return {from_ball ? Region::half_plane : Region::plane, 1};
            return {from_ball ? Region::siegel : Region::plane, in.dim};
          },
          [&](const CayleyBallInv&) -> Space {
            const Region expected = in.dim == 1 ? Region::half_plane : Region::siegel;
            if (in.region != expected && !from_plane) fail("acts on the Siegel domain");
            return {from_plane ? Region::plane : Region::ball, in.dim};
          },
          [&](const SiegelAffine& s) -> Space {
            need_dim(s.fp.dim_in() + 1);
            if (in.region != Region::siegel && !from_plane) fail("acts on the Siegel domain");
            return in;
          },
          [&](const Polynomial& p) -> Space {
            need_dim(p.map.dim_in());
            return {Region::plane, p.map.dim_out()};
          },
          [&](const Sum& s) -> Space {
            int dim = -1;
            for (std::size_t i = 0; i < s.terms.size(); ++i) {
              const HoloMap& t = s.terms[i];
              const Space o = t.infer(in, path + "/children[" + std::to_string(i) + "]/" +
                                              std::string(kind_name(t.kind())));
              if (dim >= 0 && o.dim != dim) fail("terms have different dimensions");
              dim = o.dim;
            }
            return {Region::plane, dim};
          },
          [&](const Compose& c) -> Space {
            Space cur = in;
            for (std::size_t i = 0; i < c.stages.size(); ++i) {
              const HoloMap& st = c.stages[i];
              cur = st.infer(cur, path + "/children[" + std::to_string(i) + "]/" +
                                      std::string(kind_name(st.kind())));
            }
            return cur;
          },
      },
      *node_);
}

}  // namespace kobgeo
