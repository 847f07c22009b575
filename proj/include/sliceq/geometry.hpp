#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sliceq/quaternion.hpp"

namespace sliceq {

/// S(p, k) = {q ∈ 𝔹 : |p - q|² < k(1 - |q|²)}, the Euclidean ball with
/// center p/(1+k) and radius k/(1+k), tangent to ∂𝔹 at p.
class Orisphere {
 public:
  Orisphere(const Quaternion& p, double k);

  const Quaternion& point() const { return p_; }
  double k() const { return k_; }
  Quaternion center() const { return p_ / (1.0 + k_); }
  double radius() const { return k_ / (1.0 + k_); }

 private:
  Quaternion p_;
  double k_;
};

/// R(1, k) = {q ∈ 𝔹 : |q - 1| < k(1 - |q|)}, k > 1.
class NTRegion {
 public:
  explicit NTRegion(double k);
  double k() const { return k_; }

 private:
  double k_;
};

/// S_γ = {q ∈ ℍ⁺ : Re q > γ|q|}, γ ∈ (0, 1).
class Cone {
 public:
  explicit Cone(double gamma);
  double gamma() const { return gamma_; }

 private:
  double gamma_;
};

/// k(1 - |q|²) - |p - q|², positive iff q ∈ S(p, k).
double orisphere_margin(const Orisphere& s, const Quaternion& q);
/// k(1 - |q|) - |q - 1|.
double nt_margin(const NTRegion& r, const Quaternion& q);
/// Re q - γ|q|.
double cone_margin(const Cone& c, const Quaternion& q);

/// φ(q) = (1 + q)⁻¹(1 - q). Exchanges ℍ⁺ and 𝔹, an involution. Throws
/// PoleAtMinusOne within eps of -1.
Quaternion cayley(const Quaternion& q, double eps = 1e-14);

/// Stateless counter-based generator: every draw is a pure function of
/// (seed, index, lane), so parallel fills are schedule independent.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t index, std::uint64_t lane) const;
  /// Uniform on [0, 1).
  double uniform(std::uint64_t index, std::uint64_t lane) const;
  /// Uniform on [lo, hi).
  double uniform(std::uint64_t index, std::uint64_t lane, double lo, double hi) const {
    return lo + (hi - lo) * uniform(index, lane);
  }
  /// Standard normal via Box-Muller on two lanes.
  double normal(std::uint64_t index, std::uint64_t lane) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

inline constexpr std::size_t kRejectionBudget = 100000;

/// Point i of the uniform distribution on 𝔹 (rejection from the 4-cube).
Quaternion ball_point(const CounterRng& rng, std::uint64_t index);
/// Point i of the uniform distribution on the unit 3-sphere.
Quaternion sphere_point(const CounterRng& rng, std::uint64_t index);

std::vector<Quaternion> sample_ball(std::uint64_t seed, std::size_t n);
std::vector<Quaternion> sample_orisphere(const Orisphere& s, std::uint64_t seed, std::size_t n);
/// Uniform directions inside the cone by rejection, radii log-spaced over
/// [r_min, r_max]. Throws RejectionBudgetExceeded when γ is too close to 1.
std::vector<Quaternion> sample_cone(const Cone& c, std::uint64_t seed, std::size_t n,
                                    double r_min = 1.0, double r_max = 1048576.0);
/// r_m = 1 - 2^{-m}, m = 4..K.
std::vector<double> radial_path(int K);

}  // namespace sliceq
