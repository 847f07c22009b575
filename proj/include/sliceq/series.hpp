#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sliceq/quaternion.hpp"

namespace sliceq {

inline constexpr std::size_t kDefaultTruncation = 128;
inline constexpr std::size_t kDefaultStarCap = 256;
inline constexpr double kEpsDen = 1e-12;
inline constexpr double kDivisionTol = 1e-9;

/// Truncated power series f(q) = Σ qⁿ aₙ, n = 0..N, with coefficients on the
/// right. Immutable after construction.
///
/// `truncated()` is set when a *-product (or a constructor of an infinite
/// series) dropped nonzero tail terms; downstream checks read it to decide how
/// much the tail may matter.
class RegularSeries {
 public:
  RegularSeries() : coeffs_{Quaternion{}} {}
  explicit RegularSeries(std::vector<Quaternion> coeffs, bool truncated = false);

  static RegularSeries constant(const Quaternion& c) { return RegularSeries({c}); }
  static RegularSeries identity() { return RegularSeries({Quaternion{}, Quaternion{1.0}}); }
  /// qⁿ
  static RegularSeries power(std::size_t n);
  /// q - c, as a degree-one series.
  static RegularSeries linear(const Quaternion& c) { return RegularSeries({-c, Quaternion{1.0}}); }

  std::size_t truncation() const { return coeffs_.size() - 1; }
  std::span<const Quaternion> coeffs() const { return coeffs_; }
  const Quaternion& operator[](std::size_t n) const { return coeffs_[n]; }
  /// aₙ, or zero beyond the truncation order.
  Quaternion coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Quaternion{}; }
  bool truncated() const { return truncated_; }

  /// max |aₖ|, floored at the smallest positive double so it can divide.
  double scale() const;

  /// Horner evaluation a₀ + q(a₁ + q(a₂ + ...)).
  Quaternion operator()(const Quaternion& q) const { return eval(q); }
  Quaternion eval(const Quaternion& q) const;

  /// Copy with order raised (zero padded) or lowered (tail dropped, flag set
  /// if a dropped term is nonzero).
  RegularSeries with_truncation(std::size_t n) const;

  friend RegularSeries operator+(const RegularSeries& f, const RegularSeries& g);
  friend RegularSeries operator-(const RegularSeries& f, const RegularSeries& g);
  friend RegularSeries operator-(const RegularSeries& f);
  /// Σ qⁿ aₙ c
  friend RegularSeries operator*(const RegularSeries& f, const Quaternion& c);
  /// Σ qⁿ r aₙ for a real r.
  friend RegularSeries operator*(double r, const RegularSeries& f);

 private:
  std::vector<Quaternion> coeffs_;
  bool truncated_ = false;
};

/// qᵐ·f, a shift of the coefficients (qᵐ is slice preserving, so this is both
/// the *-product and the pointwise product).
RegularSeries shift(const RegularSeries& f, std::size_t m);

/// Regular product: cₙ = Σₖ aₖ b₍ₙ₋ₖ₎. The result order is
/// min(N_f + N_g, max(N_f, N_g, cap)).
RegularSeries star(const RegularSeries& f, const RegularSeries& g,
                   std::size_t cap = kDefaultStarCap);

/// f(q) g(f(q)⁻¹ q f(q)), or 0 when f(q) = 0.
Quaternion pointwise_star(const RegularSeries& f, const RegularSeries& g, const Quaternion& q);

/// Regular conjugate Σ qⁿ āₙ.
RegularSeries conj_regular(const RegularSeries& f);

/// Symmetrisation f * f^c. Its coefficients are real up to rounding.
RegularSeries symmetrize(const RegularSeries& f);

/// Formal inverse of a real-coefficient series (only the real parts are
/// read), to order n. Throws ZeroConstantTerm when s₀ vanishes.
std::vector<double> real_series_inverse(std::span<const double> s, std::size_t n);

/// Regular reciprocal f^{-*} = (f^s)⁻¹ f^c to the given order.
RegularSeries reciprocal(const RegularSeries& f, std::size_t truncation = kDefaultTruncation);

/// T_f(q) = f^c(q)⁻¹ q f^c(q).
Quaternion T_map(const RegularSeries& f, const Quaternion& q);

/// f^{-*} * g evaluated at q as f(T_f(q))⁻¹ g(T_f(q)). Throws NearZeroSet when
/// |f^s(q)| <= eps·scale(f)².
Quaternion quotient_eval(const RegularSeries& f, const RegularSeries& g, const Quaternion& q,
                         double eps = kEpsDen);

/// |f^s(q)|, computed pointwise as |f^c(q)|·|f(T_f(q))|.
double symmetrization_modulus(const RegularSeries& f, const Quaternion& q);

/// Slice derivative: Σ qⁿ⁻¹ n aₙ.
RegularSeries derivative(const RegularSeries& f);

/// g with (q - q0) * g = f - f(q0), by top-down synthetic division.
/// Throws ResidualTooLarge when the constant-term residual exceeds tol·scale.
RegularSeries divide_linear(const RegularSeries& f, const Quaternion& q0,
                            double tol = kDivisionTol);

/// Regular Möbius map (1 - qū)^{-*} * (q - u): c₀ = -u, cₙ = ūⁿ⁻¹(1 - |u|²).
/// Throws ParameterOutOfBall when |u| >= 1.
RegularSeries moebius(const Quaternion& u, std::size_t truncation = kDefaultTruncation);

/// The boundary-normalised Möbius map moebius(u)·(1 - ū)(1 - u)⁻¹, which fixes 1.
RegularSeries moebius_fixing_one(const Quaternion& u,
                                 std::size_t truncation = kDefaultTruncation);

/// Σ_{n > N/2} |aₙ|: the numerical convergence criterion on the closed ball.
double tail_mass(const RegularSeries& f);

using PointMap = std::function<Quaternion(const Quaternion&)>;

/// max over samples z = x + yI of |½(∂x + I ∂y) f(x + yI)|, by central
/// differences with step h.
double holomorphy_check(const PointMap& f, const UnitImaginary& unit,
                        std::span<const std::complex<double>> samples, double h = 1e-5);
double holomorphy_check(const RegularSeries& f, const UnitImaginary& unit,
                        std::span<const std::complex<double>> samples, double h = 1e-5);

}  // namespace sliceq
