#pragma once

#include <cstddef>
#include <vector>

#include "sliceq/quaternion.hpp"
#include "sliceq/series.hpp"

namespace sliceq {

inline constexpr double kRealnessTol = 1e-8;
inline constexpr double kJetTol = 1e-8;

/// Spherical expansion data at a non-real point q0:
///   f(q) = Σ ((q - x0)² + y0²)ⁿ (A₂ₙ + (q - q0) A₂ₙ₊₁).
struct SphericalJet {
  Quaternion q0;
  std::vector<Quaternion> A;

  /// Partial sum of the expansion using A₀..A_order.
  Quaternion reconstruct(const Quaternion& q, std::size_t order) const;
};

/// (q0 - q̄0)⁻¹ (f(q0) - f(q̄0)). Throws RealPoint when |Im q0| < eps_real.
Quaternion spherical_derivative(const RegularSeries& f, const Quaternion& q0);

/// A₀..A_order by alternating linear division; A₁ and A₂ are cross-checked
/// against their closed forms to 1e-8·scale (ResidualTooLarge on mismatch).
SphericalJet spherical_jet(const RegularSeries& f, const Quaternion& q0, std::size_t order = 2);

/// (A₁, A₂) from the closed forms A₁ = ∂ₛf(q0), A₂ = (2 Im q0)⁻¹ (f'(q0) - A₁).
std::pair<Quaternion, Quaternion> closed_form_A1_A2(const RegularSeries& f, const Quaternion& q0);

/// ∂f/∂v(q0) = v A₁ + (q0 v - v q̄0) A₂ for a unit v.
Quaternion directional_derivative(const RegularSeries& f, const Quaternion& q0,
                                  const Quaternion& v);

/// Complex-valued Λ before the realness assertion.
Quaternion boundary_schwarz_raw(const RegularSeries& f, const Quaternion& xi);

/// Re Λ with Λ = ξ̄ (f(ξ) conj(f'(ξ)) + [ξ̄, f(ξ) conj(A₂)]).
/// Throws NotReal when |Im Λ| > 1e-8·scale.
double boundary_schwarz_quantity(const RegularSeries& f, const Quaternion& xi);

/// Index of the first coefficient that does not vanish (to 1e-12·scale).
std::size_t vanishing_order(const RegularSeries& f);

/// Right-hand side of the boundary Schwarz bound at order n:
///   n + 2(1 - |aₙ|)² / (1 - |aₙ|² + |aₙ₊₁|).
/// Throws VanishingHypothesisViolated when a₀..aₙ₋₁ do not vanish.
double hopf_bound(const RegularSeries& f, std::size_t n);

/// Boundary-fixed-point (f(1) = 1) version: n + 2|1 - aₙ|² / (1 - |aₙ|² + |aₙ₊₁|).
double hopf_bound_at_one(const RegularSeries& f, std::size_t n);

/// Weaker form n + |1 - aₙ|² / (1 - |aₙ|²), attained by the Möbius family.
double hopf_weak_bound_at_one(const RegularSeries& f, std::size_t n);

/// f'(ξ) - [ξ, A₂], asserted real. Requires f(0) = 0 and f(ξ) = ξ within 1e-10.
double fixed_point_boundary_derivative(const RegularSeries& f, const Quaternion& xi);

/// Numerical convergence on the closed ball: a polynomial, or a truncated
/// series with tail_mass(f) <= 1e-10·scale.
bool regular_on_closed_ball(const RegularSeries& f);

}  // namespace sliceq
