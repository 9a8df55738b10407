#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace kobgeo {

using Cpx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

using ScalarMap = std::function<Cpx(Cpx)>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDefaultDerivativeStep = 1e-6;

/// Builds a vector from an initializer list of complex entries.
CVec make_cvec(std::initializer_list<Cpx> entries);

/// Hermitian inner product <z, w> = sum z_i conj(w_i).
Cpx inner(const CVec& z, const CVec& w);

bool all_finite(const CVec& z);

/// Central real-step difference (f(p+h) - f(p-h)) / 2h.
Cpx complex_derivative(const ScalarMap& f, Cpx p, double h = kDefaultDerivativeStep);

// ---------------------------------------------------------------------------
// Sparse polynomial maps C^n -> C^m.

struct PolyTerm {
  int out = 0;             ///< output component
  std::vector<int> exps;   ///< exponent of each input variable
  Cpx coef;

  int total_degree() const;
  friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

/// A polynomial map with terms of arbitrary (mixed) degree. Terms are kept
/// sorted by (out, exps) lexicographically, duplicates merged and exact
/// zeros dropped, so equal maps have equal term lists.
class PolyMap {
 public:
  PolyMap() = default;
  PolyMap(int dim_in, int dim_out, std::vector<PolyTerm> terms);

  static PolyMap zero(int dim_in, int dim_out);
  static PolyMap identity(int n);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }

  CVec operator()(const CVec& z) const;

  /// Returns the common degree if every term has the same total degree.
  std::optional<int> homogeneous_degree() const;
  int max_degree() const;

  /// sqrt(sum_i (sum_{terms of i} |c|)^2): an upper bound of |P| on the
  /// closed unit polydisc and hence on the closed ball.
  double coefficient_bound() const;

  PolyMap scaled(Cpx factor) const;
  PolyMap operator+(const PolyMap& other) const;

  friend bool operator==(const PolyMap&, const PolyMap&) = default;

 private:
  int dim_in_ = 1;
  int dim_out_ = 1;
  std::vector<PolyTerm> terms_;
};

/// Homogeneous polynomial map: every term has total degree exactly `degree`.
class HomPoly {
 public:
  HomPoly(int dim_in, int dim_out, int degree, std::vector<PolyTerm> terms);
  HomPoly(const PolyMap& map, int degree);

  static HomPoly identity(int n);

  int dim_in() const { return map_.dim_in(); }
  int dim_out() const { return map_.dim_out(); }
  int degree() const { return degree_; }
  const std::vector<PolyTerm>& terms() const { return map_.terms(); }
  const PolyMap& as_polymap() const { return map_; }

  friend bool operator==(const HomPoly&, const HomPoly&) = default;

 private:
  PolyMap map_;
  int degree_;
};

CVec eval_hom_poly(const HomPoly& p, const CVec& z);

struct RangeCheck {
  double max_norm = 0.0;
  bool ok = false;
};

/// Estimates sup |P| over the unit sphere from `samples` deterministic
/// quasi-uniform points (plus the coordinate axes), refined by a local
/// pattern search around the best sample.
RangeCheck hom_ball_range_check(const HomPoly& p, int samples);

/// Deterministic quasi-uniform points on the unit sphere of C^dim: Halton
/// points pushed through Box-Muller and normalized. `skip` offsets the
/// sequence so independent streams can be drawn.
std::vector<CVec> sphere_points(int dim, int count, int skip = 0);

/// Radical inverse of `index` in `base` (one Halton coordinate).
double radical_inverse(unsigned index, unsigned base);

// ---------------------------------------------------------------------------
// Winding numbers.

/// Winding number of closed-loop samples around 0 (the last sample connects
/// back to the first). Throws NumericError on a zero or an ambiguous jump.
int winding_number_of_samples(std::span<const Cpx> values);

/// Winding number of f(radius e^{i theta}) about 0.
int winding_number(const ScalarMap& f, double radius, int samples);

}  // namespace kobgeo
