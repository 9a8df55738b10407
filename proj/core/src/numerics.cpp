#include "kobgeo/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "kobgeo/errors.hpp"

namespace kobgeo {

CVec make_cvec(std::initializer_list<Cpx> entries) {
  CVec v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const Cpx& e : entries) v(i++) = e;
  return v;
}

Cpx inner(const CVec& z, const CVec& w) {
  // Eigen's dot() conjugates its left operand.
  return w.dot(z);
}

bool all_finite(const CVec& z) {
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    if (!std::isfinite(z(i).real()) || !std::isfinite(z(i).imag())) return false;
  }
  return true;
}

Cpx complex_derivative(const ScalarMap& f, Cpx p, double h) {
  if (!(h > 0.0)) throw InputError("complex_derivative: step must be positive");
  const Cpx d = (f(p + h) - f(p - h)) / (2.0 * h);
  if (!std::isfinite(d.real()) || !std::isfinite(d.imag())) {
    throw NumericError("complex_derivative: non-finite result");
  }
  return d;
}

// ---------------------------------------------------------------------------

int PolyTerm::total_degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

namespace {

Cpx monomial(const std::vector<int>& exps, const CVec& z) {
  Cpx m(1.0, 0.0);
  for (std::size_t j = 0; j < exps.size(); ++j) {
    for (int k = 0; k < exps[j]; ++k) m *= z(static_cast<Eigen::Index>(j));
  }
  return m;
}

}  // namespace

PolyMap::PolyMap(int dim_in, int dim_out, std::vector<PolyTerm> terms)
    : dim_in_(dim_in), dim_out_(dim_out) {
  if (dim_in < 1 || dim_out < 1) throw InputError("polynomial: dimensions must be positive");
  std::map<std::pair<int, std::vector<int>>, Cpx> merged;
  for (auto& t : terms) {
    if (t.out < 0 || t.out >= dim_out) {
      std::ostringstream msg;
      msg << "polynomial: output index " << t.out << " outside [0," << dim_out << ")";
      throw InputError(msg.str());
    }
    if (static_cast<int>(t.exps.size()) != dim_in) {
      throw InputError("polynomial: exponent list length differs from dim_in");
    }
    if (std::any_of(t.exps.begin(), t.exps.end(), [](int k) { return k < 0; })) {
      throw InputError("polynomial: negative exponent");
    }
    if (!std::isfinite(t.coef.real()) || !std::isfinite(t.coef.imag())) {
      throw InputError("polynomial: non-finite coefficient");
    }
    merged[{t.out, t.exps}] += t.coef;
  }
  for (auto& [key, coef] : merged) {
    if (coef == Cpx(0.0, 0.0)) continue;
    terms_.push_back(PolyTerm{key.first, key.second, coef});
  }
}

PolyMap PolyMap::zero(int dim_in, int dim_out) { return PolyMap(dim_in, dim_out, {}); }

PolyMap PolyMap::identity(int n) {
  std::vector<PolyTerm> terms;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    terms.push_back({i, e, 1.0});
  }
  return PolyMap(n, n, std::move(terms));
}

CVec PolyMap::operator()(const CVec& z) const {
  if (z.size() != dim_in_) {
    std::ostringstream msg;
    msg << "polynomial: input dimension " << z.size() << " != " << dim_in_;
    throw InputError(msg.str());
  }
  CVec out = CVec::Zero(dim_out_);
  for (const auto& t : terms_) out(t.out) += t.coef * monomial(t.exps, z);
  return out;
}

std::optional<int> PolyMap::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.front().total_degree();
  for (const auto& t : terms_) {
    if (t.total_degree() != d) return std::nullopt;
  }
  return d;
}

int PolyMap::max_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.total_degree());
  return d;
}

double PolyMap::coefficient_bound() const {
  std::vector<double> row(static_cast<std::size_t>(dim_out_), 0.0);
  for (const auto& t : terms_) row[static_cast<std::size_t>(t.out)] += std::abs(t.coef);
  double s = 0.0;
  for (double r : row) s += r * r;
  return std::sqrt(s);
}

PolyMap PolyMap::scaled(Cpx factor) const {
  std::vector<PolyTerm> t = terms_;
  for (auto& term : t) term.coef *= factor;
  return PolyMap(dim_in_, dim_out_, std::move(t));
}

PolyMap PolyMap::operator+(const PolyMap& other) const {
  if (other.dim_in_ != dim_in_ || other.dim_out_ != dim_out_) {
    throw InputError("polynomial: sum of maps with different dimensions");
  }
  std::vector<PolyTerm> t = terms_;
  t.insert(t.end(), other.terms_.begin(), other.terms_.end());
  return PolyMap(dim_in_, dim_out_, std::move(t));
}

HomPoly::HomPoly(int dim_in, int dim_out, int degree, std::vector<PolyTerm> terms)
    : map_(dim_in, dim_out, std::move(terms)), degree_(degree) {
  if (degree < 0) throw InputError("hom_poly: negative degree");
  for (const auto& t : map_.terms()) {
    if (t.total_degree() != degree) {
      std::ostringstream msg;
      msg << "hom_poly: term of total degree " << t.total_degree() << " in a degree-" << degree
          << " homogeneous map";
      throw InputError(msg.str());
    }
  }
}

HomPoly::HomPoly(const PolyMap& map, int degree)
    : HomPoly(map.dim_in(), map.dim_out(), degree, map.terms()) {}

HomPoly HomPoly::identity(int n) { return HomPoly(PolyMap::identity(n), 1); }

CVec eval_hom_poly(const HomPoly& p, const CVec& z) { return p.as_polymap()(z); }

// ---------------------------------------------------------------------------

double radical_inverse(unsigned index, unsigned base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * (index % base);
    index /= base;
    f /= base;
  }
  return result;
}

namespace {

constexpr unsigned kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79};

}  // namespace

std::vector<CVec> sphere_points(int dim, int count, int skip) {
  if (dim < 1) throw InputError("sphere_points: dimension must be positive");
  if (2 * dim > static_cast<int>(std::size(kPrimes))) {
    throw InputError("sphere_points: dimension too large for the Halton table");
  }
  std::vector<CVec> pts;
  pts.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    const auto idx = static_cast<unsigned>(i + skip + 1);
    CVec v(dim);
    for (int k = 0; k < dim; ++k) {
      // Box-Muller on two Halton coordinates gives two normal variates.
      const double u1 = std::max(radical_inverse(idx, kPrimes[2 * k]), 1e-300);
      const double u2 = radical_inverse(idx, kPrimes[2 * k + 1]);
      const double rad = std::sqrt(-2.0 * std::log(u1));
      v(k) = Cpx(rad * std::cos(2.0 * kPi * u2), rad * std::sin(2.0 * kPi * u2));
    }
    const double n = v.norm();
    if (n == 0.0) {
      v = CVec::Zero(dim);
      v(0) = 1.0;
    } else {
      v /= n;
    }
    pts.push_back(std::move(v));
  }
  return pts;
}

namespace {

// Local pattern search for max |P| on the sphere starting from `start`.
double refine_sup(const PolyMap& p, CVec start) {
  const Eigen::Index n = start.size();
  double best = p(start).norm();
  double step = 0.1;
  for (int iter = 0; iter < 400 && step > 1e-13; ++iter) {
    bool improved = false;
    for (Eigen::Index k = 0; k < n && !improved; ++k) {
      for (const Cpx dir : {Cpx(1, 0), Cpx(-1, 0), Cpx(0, 1), Cpx(0, -1)}) {
        CVec trial = start;
        trial(k) += step * dir;
        trial /= trial.norm();
        const double v = p(trial).norm();
        if (v > best) {
          best = v;
          start = std::move(trial);
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace

RangeCheck hom_ball_range_check(const HomPoly& p, int samples) {
  if (samples <= 0) throw InputError("hom_ball_range_check: samples must be positive");
  if (p.dim_in() != p.dim_out()) {
    throw InputError("hom_ball_range_check: P must map C^n to C^n");
  }
  const PolyMap& map = p.as_polymap();
  const int n = p.dim_in();

  std::vector<CVec> candidates;
  for (int k = 0; k < n; ++k) {
    CVec e = CVec::Zero(n);
    e(k) = 1.0;
    candidates.push_back(std::move(e));
  }
  auto halton = sphere_points(n, samples);
  candidates.insert(candidates.end(), halton.begin(), halton.end());

  std::vector<std::pair<double, std::size_t>> scored;
  scored.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    scored.emplace_back(map(candidates[i]).norm(), i);
  }
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });

  double best = scored.front().first;
  const std::size_t refine = std::min<std::size_t>(4, scored.size());
  for (std::size_t r = 0; r < refine; ++r) {
    best = std::max(best, refine_sup(map, candidates[scored[r].second]));
  }
  return RangeCheck{best, best <= 1.0 + 1e-12};
}

// ---------------------------------------------------------------------------

int winding_number_of_samples(std::span<const Cpx> values) {
  if (values.size() < 16) throw InputError("winding_number: need at least 16 samples");
  for (const Cpx& v : values) {
    if (!(std::abs(v) >= 1e-12)) throw NumericError("winding_number: zero on contour");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) {
    const Cpx a = values[j];
    const Cpx b = values[(j + 1) % values.size()];
    const double step = std::arg(b / a);
    // A principal-value step this close to pi cannot be told apart from a
    // jump the other way round.
    if (std::abs(step) > 0.75 * kPi) throw NumericError("winding_number: contour undersampled");
    total += step;
  }
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

int winding_number(const ScalarMap& f, double radius, int samples) {
  if (!(radius > 0.0 && radius < 1.0)) throw InputError("winding_number: radius outside (0,1)");
  if (samples < 16) throw InputError("winding_number: need at least 16 samples");
  std::vector<Cpx> values;
  values.reserve(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const double theta = 2.0 * kPi * j / samples;
    values.push_back(f(std::polar(radius, theta)));
  }
  return winding_number_of_samples(values);
}

}  // namespace kobgeo
