#pragma once

#include <cmath>
#include <random>

#include <Eigen/QR>

#include "kobgeo/numerics.hpp"

namespace kobgeo::testing {

/// Seeded source of random points for property tests.
class Sampler {
 public:
  explicit Sampler(unsigned long long seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double gaussian() { return std::normal_distribution<double>()(rng_); }
  double angle() { return uniform(0.0, 2.0 * kPi); }

  /// Uniform in the disc of the given radius.
  Cpx disc(double radius = 0.95) { return std::polar(radius * std::sqrt(uniform(0.0, 1.0)), angle()); }

  Cpx unit() { return std::polar(1.0, angle()); }

  CVec sphere(int n) {
    CVec v(n);
    for (int i = 0; i < n; ++i) v(i) = Cpx(gaussian(), gaussian());
    return v / v.norm();
  }

  /// Uniform direction with norm uniform in [0, radius).
  CVec ball(int n, double radius = 0.95) { return sphere(n) * (radius * uniform(0.0, 1.0)); }

  CMat unitary(int n) {
    CMat a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = Cpx(gaussian(), gaussian());
    }
    Eigen::HouseholderQR<CMat> qr(a);
    return qr.householderQ() * CMat::Identity(n, n);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline CVec vec1(Cpx z) { return make_cvec({z}); }

}  // namespace kobgeo::testing
