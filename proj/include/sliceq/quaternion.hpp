#pragma once

#include <array>
#include <cmath>
#include <iosfwd>
#include <string>

namespace sliceq {

inline constexpr double kEpsZero = 1e-300;
inline constexpr double kEpsReal = 1e-12;
inline constexpr double kSphereTol = 1e-10;

/// Element of the real quaternion algebra, q = x0 + x1 i + x2 j + x3 k.
struct Quaternion {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double r) : x0(r) {}  // NOLINT: reals embed implicitly
  constexpr Quaternion(double a, double b, double c, double d) : x0(a), x1(b), x2(c), x3(d) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr double re() const { return x0; }
  constexpr Quaternion im() const { return {0.0, x1, x2, x3}; }
  constexpr Quaternion conj() const { return {x0, -x1, -x2, -x3}; }
  constexpr double norm2() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
  double norm() const { return std::hypot(std::hypot(x0, x1), std::hypot(x2, x3)); }
  double im_norm() const { return std::hypot(x1, std::hypot(x2, x3)); }
  bool finite() const {
    return std::isfinite(x0) && std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3);
  }

  std::array<double, 4> to_array() const { return {x0, x1, x2, x3}; }
  static constexpr Quaternion from_array(const std::array<double, 4>& a) {
    return {a[0], a[1], a[2], a[3]};
  }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    x0 += o.x0; x1 += o.x1; x2 += o.x2; x3 += o.x3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    x0 -= o.x0; x1 -= o.x1; x2 -= o.x2; x3 -= o.x3;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    x0 *= s; x1 *= s; x2 *= s; x3 *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.x0, -a.x1, -a.x2, -a.x3}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

// Hamilton product.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.x0 * q.x0 - p.x1 * q.x1 - p.x2 * q.x2 - p.x3 * q.x3,
          p.x0 * q.x1 + p.x1 * q.x0 + p.x2 * q.x3 - p.x3 * q.x2,
          p.x0 * q.x2 - p.x1 * q.x3 + p.x2 * q.x0 + p.x3 * q.x1,
          p.x0 * q.x3 + p.x1 * q.x2 - p.x2 * q.x1 + p.x3 * q.x0};
}

inline Quaternion conj(const Quaternion& q) { return q.conj(); }
inline double abs(const Quaternion& q) { return q.norm(); }
inline double re(const Quaternion& q) { return q.x0; }
inline Quaternion im(const Quaternion& q) { return q.im(); }

/// Multiplicative inverse q̄/|q|². Throws ZeroDivision when |q| <= eps.
Quaternion inverse(const Quaternion& q, double eps = kEpsZero);

/// [p, q] = pq - qp. Always purely imaginary.
constexpr Quaternion lie_bracket(const Quaternion& p, const Quaternion& q) {
  return p * q - q * p;
}

/// Euclidean distance |p - q|.
inline double distance(const Quaternion& p, const Quaternion& q) { return (p - q).norm(); }

/// A point of the sphere of imaginary units, I² = -1.
class UnitImaginary {
 public:
  /// Validates Re = 0 and |I| = 1 to 1e-12; throws InvalidArgument otherwise.
  explicit UnitImaginary(const Quaternion& q);

  /// Normalises the imaginary part of q. Throws InvalidArgument if it vanishes.
  static UnitImaginary from_direction(const Quaternion& q);

  static UnitImaginary i() { return UnitImaginary(Quaternion::i()); }
  static UnitImaginary j() { return UnitImaginary(Quaternion::j()); }
  static UnitImaginary k() { return UnitImaginary(Quaternion::k()); }

  const Quaternion& value() const { return value_; }
  operator const Quaternion&() const { return value_; }  // NOLINT

 private:
  Quaternion value_;
};

/// q = x + y I with y >= 0.
struct SliceCoords {
  double x = 0.0;
  double y = 0.0;
  UnitImaginary unit = UnitImaginary::i();

  Quaternion reconstruct() const { return Quaternion(x) + unit.value() * y; }
};

/// Real points get I = i by convention.
SliceCoords slice_decompose(const Quaternion& q, double eps_real = kEpsReal);

/// Point x + y I of the slice C_I.
inline Quaternion on_slice(double x, double y, const Quaternion& unit) {
  return Quaternion(x) + unit * y;
}

/// True iff q lies on the 2-sphere [p]: same real part and same modulus.
bool same_sphere(const Quaternion& p, const Quaternion& q, double tol = kSphereTol);

/// Relative closeness |a - b| <= tol * max(1, |a|, |b|).
bool approx_equal(const Quaternion& a, const Quaternion& b, double tol);

std::string to_string(const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace sliceq
