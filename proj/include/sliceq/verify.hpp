#pragma once

#include <cstddef>
#include <optional>

#include "sliceq/quaternion.hpp"
#include "sliceq/report.hpp"
#include "sliceq/series.hpp"
#include "sliceq/slice_map.hpp"

namespace sliceq {

// ---------------------------------------------------------------------------
// Unit ball

/// Schwarz-Pick margin
///   |(1 - q q̄0)^{-*} * (q - q0)|(q) - |(1 - f conj(f(q0)))^{-*} * (f - f(q0))|(q),
/// both sides through the pointwise quotient formula. Nonnegative for
/// self-maps of 𝔹, zero for regular Möbius maps.
double check_schwarz_pick_ball(const RegularSeries& f, const Quaternion& q0,
                               const Quaternion& q);

/// Angular data at the boundary point 1, estimated along r_m = 1 - 2^{-m}.
struct BoundaryData {
  double alpha = 0.0;      // extrapolated limit of (1 - |f(r)|)/(1 - r)
  double alpha_raw = 0.0;  // minimum of the quotient over the tail of the path
  Quaternion eta;          // extrapolated f(1), normalised
  Quaternion eta_raw;      // f(r_K) normalised
  Quaternion value_at_one; // extrapolated f(1) before normalisation
  Quaternion fprime1;      // extrapolated limit of (r - 1)⁻¹(f(r) - η)
  Quaternion fprime1_raw;
  double alpha_nt = 0.0;   // the same quotient along an off-axis non-tangential path
  bool divergent = false;  // α = ∞ regime
  bool angular_consistent = false;  // |f'(1) - αη| <= 1e-4(1 + α)
  bool nt_consistent = false;       // |alpha_nt - α| <= 1e-4(1 + α)
};

BoundaryData estimate_boundary_data(const RegularSeries& f, const SampleConfig& cfg);

/// Orisphere mapping f(S(1, k)) ⊆ S(η, αk) and the equivalent inequality
/// α|1 - q|²/(1 - |q|²) >= |η - f(q)|²/(1 - |f(q)|²) on samples of S(1, k).
Report check_julia(const RegularSeries& f, double k, const BoundaryData& bd,
                   const SampleConfig& cfg);

/// Hopf bounds at a boundary fixed point f(1) = 1. With expect_weak_equality
/// the weak bound n + |1 - aₙ|²/(1 - |aₙ|²) must be attained within 1e-6.
Report check_hopf(const RegularSeries& f, std::size_t n, const SampleConfig& cfg,
                  bool expect_weak_equality = false);

struct LindelofExpect {
  bool equality_21 = false;  // f is a regular Möbius map
  bool equality_24 = false;  // f = qⁿ u with |u| = 1
};

/// Lindelöf distortion margins at ball samples: the centred disc bound, the
/// two-sided modulus bound, the |f(q) - f(0)| bound, the sharper bound using
/// |f'(0)|, and the order-n bounds when a₀..aₙ₋₁ vanish.
Report check_lindelof(const RegularSeries& f, const SampleConfig& cfg, LindelofExpect expect = {});

/// Boundary Schwarz checks at a non-real ξ with |f(ξ)| = 1: realness, the
/// lower bound, positivity, |f'(ξ)| >= Λ and agreement with the radial
/// derivative of |f|. With a boundary fixed point the fixed-point variants
/// are checked too.
Report check_boundary_schwarz(const RegularSeries& f, const Quaternion& xi,
                              const SampleConfig& cfg);

/// lim (1 - |f(rξ)|)/(1 - r) along the dyadic radial path.
double radial_modulus_derivative(const RegularSeries& f, const Quaternion& xi, int K);

// ---------------------------------------------------------------------------
// Right half-space

/// Margin |(q + q̄0)^{-*} * (q - q0)|(q) - |(f + conj(f(q0)))^{-*} * (f - f(q0))|(q).
double check_schwarz_pick_halfspace(const SliceMap& f, const Quaternion& q0,
                                    const Quaternion& q);

/// Fixed ray direction inside the cone S_γ: cos θ + I sin θ, cos θ = (1 + γ)/2.
Quaternion cone_ray_direction(double gamma);

struct HalfSpaceEstimate {
  double c = 0.0;                // min of Re f(q)/Re q over cone samples
  Quaternion quotient_limit;     // q⁻¹ f(q) at |q| = 2^20 on the ray
  double re_ratio_limit = 0.0;   // Re f(q)/Re q at |q| = 2^20 on the ray
  Quaternion derivative_limit;   // f'(q) at |q| = 2^20 on the ray
  Report report;                 // Re f >= c Re q on independent samples; limits ≈ c
};

HalfSpaceEstimate estimate_c_halfspace(const SliceMap& f, double gamma, const SampleConfig& cfg);

enum class RigidityMode { BurnsKrantz, FixedPoint, DecayToZero };

struct RigidityParams {
  Quaternion fixed_point{1.0};          // FixedPoint mode
  Quaternion unit = Quaternion::i();    // DecayToZero ray slice
  double theta = 0.0;                   // DecayToZero ray angle in (-π/2, π/2)
};

struct RigidityResult {
  bool criterion = false;  // the theorem's hypothesis was detected
  bool confirmed = false;  // samples agree with the rigid conclusion
  bool rigid = false;      // criterion && confirmed
  double c = 0.0;
  Quaternion limit;        // q(f(q) - q), or liminf r|f(r e^{Iθ})|
  Report report;
};

/// Rigidity detectors. A report violation means the detected hypothesis and
/// the sampled conclusion disagree. Throws ModeHypothesisViolated when the
/// mode's hypothesis fails.
RigidityResult check_rigidity(const SliceMap& f, double gamma, RigidityMode mode,
                              const RigidityParams& params, const SampleConfig& cfg);

/// Ball version through the Cayley transform: f∘φ on ℍ⁺ with the
/// decay-to-zero detector. Throws RangeHypothesisViolated when Re f < -1e-9 on samples.
RigidityResult check_ball_decay_rigidity(const RegularSeries& f, const SampleConfig& cfg);

/// Both readings of the asymptotic product along the cone ray at |q| = 2^20:
/// q f(q) and f(q) q.
std::pair<Quaternion, Quaternion> asymptotic_products(const SliceMap& f, double gamma);

}  // namespace sliceq
