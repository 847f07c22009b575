#pragma once

#include <random>
#include <vector>

#include "sliceq/quaternion.hpp"
#include "sliceq/series.hpp"

// Hand-rolled generators for property tests. They use the standard library
// engine on purpose, so they share nothing with the library's own sampler.
namespace testsupport {

using sliceq::Quaternion;
using sliceq::RegularSeries;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(eng_);
  }
  Quaternion quat(double scale = 1.0) {
    std::normal_distribution<double> n(0.0, scale);
    return {n(eng_), n(eng_), n(eng_), n(eng_)};
  }
  Quaternion unit() {
    Quaternion q = quat();
    return q / q.norm();
  }
  Quaternion imaginary_unit() {
    Quaternion q = quat().im();
    return q / q.norm();
  }
  /// Uniform in the ball of the given radius.
  Quaternion in_ball(double radius = 1.0) {
    const double r = radius * std::pow(uniform(0.0, 1.0), 0.25);
    return unit() * r;
  }
  /// Non-real point with |Im| >= min_im and |q| <= max_norm.
  Quaternion non_real(double min_im, double max_norm) {
    for (;;) {
      Quaternion q = in_ball(max_norm);
      if (q.im_norm() >= min_im) return q;
    }
  }
  RegularSeries polynomial(std::size_t degree, double scale = 1.0) {
    std::vector<Quaternion> c(degree + 1);
    for (auto& x : c) x = quat(scale);
    return RegularSeries(std::move(c));
  }
  /// Polynomial with real coefficients.
  RegularSeries real_polynomial(std::size_t degree) {
    std::vector<Quaternion> c(degree + 1);
    for (auto& x : c) x = Quaternion{uniform(-1.0, 1.0)};
    return RegularSeries(std::move(c));
  }

 private:
  std::mt19937_64 eng_;
};

inline double rel_err(const Quaternion& got, const Quaternion& want) {
  return (got - want).norm() / std::max(1.0, want.norm());
}

}  // namespace testsupport
