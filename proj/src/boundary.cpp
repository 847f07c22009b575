#include "sliceq/boundary.hpp"

#include <algorithm>

#include "sliceq/error.hpp"

namespace sliceq {

namespace {

void require_non_real(const Quaternion& q0) {
  if (q0.im_norm() < kEpsReal) {
    throw SliceError(ErrorKind::RealPoint, "spherical data needs a non-real point, got " +
                                               to_string(q0));
  }
}

}  // namespace

Quaternion SphericalJet::reconstruct(const Quaternion& q, std::size_t order) const {
  const double x0 = q0.x0;
  const double y0 = q0.im_norm();
  const Quaternion d = q - x0;
  const Quaternion delta = d * d + y0 * y0;
  const Quaternion lin = q - q0;
  Quaternion acc;
  Quaternion pw{1.0};
  const std::size_t top = std::min(order, A.size() - 1);
  for (std::size_t n = 0; 2 * n <= top; ++n) {
    Quaternion term = A[2 * n];
    if (2 * n + 1 <= top) term += lin * A[2 * n + 1];
    acc += pw * term;
    pw = pw * delta;
  }
  return acc;
}

Quaternion spherical_derivative(const RegularSeries& f, const Quaternion& q0) {
  require_non_real(q0);
  const Quaternion qb = q0.conj();
  return inverse(q0 - qb) * (f(q0) - f(qb));
}

std::pair<Quaternion, Quaternion> closed_form_A1_A2(const RegularSeries& f,
                                                    const Quaternion& q0) {
  const Quaternion a1 = spherical_derivative(f, q0);
  const Quaternion fp = derivative(f)(q0);
  const Quaternion a2 = inverse(q0.im() * 2.0) * (fp - a1);
  return {a1, a2};
}

SphericalJet spherical_jet(const RegularSeries& f, const Quaternion& q0, std::size_t order) {
  require_non_real(q0);
  if (order < 2) throw SliceError(ErrorKind::InvalidArgument, "jet order must be >= 2");
  const Quaternion qb = q0.conj();
  SphericalJet jet{q0, {f(q0)}};
  RegularSeries g = f;
  for (std::size_t n = 1; n <= order; ++n) {
    // Odd steps divide by (q - q0) and read at q̄0; even steps the reverse.
    const bool odd = n % 2 == 1;
    g = divide_linear(g, odd ? q0 : qb);
    jet.A.push_back(g(odd ? qb : q0));
  }
  const auto [a1, a2] = closed_form_A1_A2(f, q0);
  const double scale = std::max({1.0, f.scale(), a1.norm(), a2.norm()});
  if ((a1 - jet.A[1]).norm() > kJetTol * scale || (a2 - jet.A[2]).norm() > kJetTol * scale) {
    throw SliceError(ErrorKind::ResidualTooLarge,
                     "closed-form and division-path jet disagree at " + to_string(q0));
  }
  return jet;
}

Quaternion directional_derivative(const RegularSeries& f, const Quaternion& q0,
                                  const Quaternion& v) {
  if (std::abs(v.norm() - 1.0) > 1e-12) {
    throw SliceError(ErrorKind::InvalidArgument, "direction must be a unit quaternion");
  }
  const auto [a1, a2] = closed_form_A1_A2(f, q0);
  return v * a1 + (q0 * v - v * q0.conj()) * a2;
}

Quaternion boundary_schwarz_raw(const RegularSeries& f, const Quaternion& xi) {
  require_non_real(xi);
  const Quaternion fx = f(xi);
  const Quaternion fp = derivative(f)(xi);
  const Quaternion a2 = closed_form_A1_A2(f, xi).second;
  const Quaternion xb = xi.conj();
  return xb * (fx * fp.conj() + lie_bracket(xb, fx * a2.conj()));
}

double boundary_schwarz_quantity(const RegularSeries& f, const Quaternion& xi) {
  if (std::abs(xi.norm() - 1.0) > 1e-10) {
    throw SliceError(ErrorKind::InvalidArgument, "boundary point must have modulus one");
  }
  const Quaternion lambda = boundary_schwarz_raw(f, xi);
  const double scale = std::max(1.0, derivative(f)(xi).norm());
  if (lambda.im_norm() > kRealnessTol * scale) {
    throw SliceError(ErrorKind::NotReal, "boundary Schwarz quantity " + to_string(lambda));
  }
  return lambda.x0;
}

std::size_t vanishing_order(const RegularSeries& f) {
  const double tol = 1e-12 * f.scale();
  std::size_t n = 0;
  while (n <= f.truncation() && f[n].norm() <= tol) ++n;
  return n;
}

namespace {

void require_vanishing(const RegularSeries& f, std::size_t n) {
  const double tol = 1e-12 * f.scale();
  for (std::size_t k = 0; k < n; ++k) {
    if (f.coeff(k).norm() > tol) {
      throw SliceError(ErrorKind::VanishingHypothesisViolated,
                       "coefficient " + std::to_string(k) + " does not vanish");
    }
  }
}

// num / den with the 0/0 case (|aₙ| = 1, aₙ₊₁ = 0, i.e. f = qⁿu) read as 0.
double bound_fraction(double num, double den) {
  if (num <= 1e-15) return 0.0;
  return num / den;
}

}  // namespace

double hopf_bound(const RegularSeries& f, std::size_t n) {
  require_vanishing(f, n);
  const double an = f.coeff(n).norm();
  const double an1 = f.coeff(n + 1).norm();
  const double num = 2.0 * (1.0 - an) * (1.0 - an);
  return static_cast<double>(n) + bound_fraction(num, 1.0 - an * an + an1);
}

double hopf_bound_at_one(const RegularSeries& f, std::size_t n) {
  require_vanishing(f, n);
  const Quaternion an = f.coeff(n);
  const double an1 = f.coeff(n + 1).norm();
  const double num = 2.0 * (Quaternion{1.0} - an).norm2();
  return static_cast<double>(n) + bound_fraction(num, 1.0 - an.norm2() + an1);
}

double hopf_weak_bound_at_one(const RegularSeries& f, std::size_t n) {
  require_vanishing(f, n);
  const Quaternion an = f.coeff(n);
  const double num = (Quaternion{1.0} - an).norm2();
  return static_cast<double>(n) + bound_fraction(num, 1.0 - an.norm2());
}

double fixed_point_boundary_derivative(const RegularSeries& f, const Quaternion& xi) {
  const double sc = std::max(1.0, f.scale());
  if (f[0].norm() > 1e-10 * sc || (f(xi) - xi).norm() > 1e-10 * sc) {
    throw SliceError(ErrorKind::FixedPointViolated, "needs f(0) = 0 and f(xi) = xi");
  }
  const SphericalJet jet = spherical_jet(f, xi, 2);
  const Quaternion fp = derivative(f)(xi);
  const Quaternion value = fp - lie_bracket(xi, jet.A[2]);
  if (value.im_norm() > kRealnessTol * std::max(1.0, fp.norm())) {
    throw SliceError(ErrorKind::NotReal, "fixed-point derivative " + to_string(value));
  }
  return value.x0;
}

bool regular_on_closed_ball(const RegularSeries& f) {
  // An untruncated series is a polynomial and converges everywhere.
  return !f.truncated() || tail_mass(f) <= 1e-10 * f.scale();
}

}  // namespace sliceq
