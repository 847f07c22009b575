#include "sliceq/quaternion.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "sliceq/error.hpp"

namespace sliceq {

Quaternion inverse(const Quaternion& q, double eps) {
  const double n = q.norm();
  if (!(n > eps)) {
    throw SliceError(ErrorKind::ZeroDivision, "inverse of " + to_string(q));
  }
  // Scale first so that |q|² cannot underflow for tiny but admissible q.
  const Quaternion s = q / n;
  return s.conj() / n;
}

UnitImaginary::UnitImaginary(const Quaternion& q) : value_(q) {
  if (std::abs(q.x0) > 1e-12 || std::abs(q.norm() - 1.0) > 1e-12) {
    throw SliceError(ErrorKind::InvalidArgument, "not a unit imaginary: " + to_string(q));
  }
}

UnitImaginary UnitImaginary::from_direction(const Quaternion& q) {
  const double n = q.im_norm();
  if (!(n > 0.0)) {
    throw SliceError(ErrorKind::InvalidArgument, "direction has no imaginary part");
  }
  return UnitImaginary(q.im() / n);
}

SliceCoords slice_decompose(const Quaternion& q, double eps_real) {
  const double y = q.im_norm();
  if (y < eps_real) {
    return {q.x0, y, UnitImaginary::i()};
  }
  return {q.x0, y, UnitImaginary(q.im() / y)};
}

bool same_sphere(const Quaternion& p, const Quaternion& q, double tol) {
  return std::abs(p.x0 - q.x0) <= tol && std::abs(p.norm() - q.norm()) <= tol;
}

bool approx_equal(const Quaternion& a, const Quaternion& b, double tol) {
  const double scale = std::max({1.0, a.norm(), b.norm()});
  return (a - b).norm() <= tol * scale;
}

std::string to_string(const Quaternion& q) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "[%.17g, %.17g, %.17g, %.17g]", q.x0, q.x1, q.x2, q.x3);
  return buf;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << to_string(q); }

}  // namespace sliceq
