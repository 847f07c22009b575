#pragma once

#include <functional>
#include <memory>
#include <string>

#include "sliceq/quaternion.hpp"
#include "sliceq/series.hpp"

namespace sliceq {

/// A slice regular function known only pointwise, together with its regular
/// conjugate. Used wherever a power series at 0 is unavailable (functions on
/// the half-space ℍ⁺). The *-algebra is carried through the pointwise product
/// and quotient formulas, so compositions stay regular.
class SliceMap {
 public:
  using Fn = std::function<Quaternion(const Quaternion&)>;

  SliceMap(Fn value, Fn conj_value, std::string name = "map");

  static SliceMap identity();
  static SliceMap constant(const Quaternion& c);
  /// q a + b.
  static SliceMap affine(const Quaternion& a, const Quaternion& b);
  /// qⁿ.
  static SliceMap power(std::size_t n);
  /// A function with real coefficients on every slice; it is its own conjugate.
  static SliceMap slice_preserving(Fn value, std::string name);
  /// Pointwise evaluation of a power series (valid where it converges).
  static SliceMap from_series(const RegularSeries& f, std::string name = "series");
  /// F∘φ with φ the Cayley transform. Regular because φ preserves slices.
  static SliceMap compose_cayley(const RegularSeries& f);
  /// Half-space map (1 + F∘φ)^{-*} * (1 - F∘φ) for a ball self-map F.
  static SliceMap cayley_conjugate(const RegularSeries& f);

  Quaternion operator()(const Quaternion& q) const { return (*value_)(q); }
  Quaternion conj_at(const Quaternion& q) const { return (*conj_)(q); }
  SliceMap conj() const { return SliceMap(*conj_, *value_, name_ + "^c"); }
  const std::string& name() const { return name_; }

  /// Slice derivative ∂f/∂x by central differences with step h·max(1, |q|).
  Quaternion derivative(const Quaternion& q, double h = 1e-5) const;

  friend SliceMap operator+(const SliceMap& f, const SliceMap& g);
  friend SliceMap operator-(const SliceMap& f, const SliceMap& g);

 private:
  std::shared_ptr<const Fn> value_;
  std::shared_ptr<const Fn> conj_;
  std::string name_;
};

/// f * g through f(q) g(f(q)⁻¹ q f(q)).
SliceMap star(const SliceMap& f, const SliceMap& g);
/// f * c for a constant c.
SliceMap rmul(const SliceMap& f, const Quaternion& c);
/// f^{-*} * g, evaluated with the T_f map. Throws NearZeroSet near the zero
/// set of f^s.
SliceMap quotient(const SliceMap& den, const SliceMap& num);
/// f^{-*}.
SliceMap reciprocal(const SliceMap& f);

/// |f^s(q)| = |f^c(q)|·|f(T_f(q))|.
double symmetrization_modulus(const SliceMap& f, const Quaternion& q);

/// f^{-*} * g at q, evaluated directly.
Quaternion quotient_eval(const SliceMap& den, const SliceMap& num, const Quaternion& q,
                         double eps = kEpsDen);

}  // namespace sliceq
