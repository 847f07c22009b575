#include "sliceq/geometry.hpp"

#include <numbers>

#include "sliceq/error.hpp"

namespace sliceq {

Orisphere::Orisphere(const Quaternion& p, double k) : p_(p), k_(k) {
  if (std::abs(p.norm() - 1.0) > 1e-12 || !(k > 0.0)) {
    throw SliceError(ErrorKind::InvalidArgument, "orisphere needs |p| = 1 and k > 0");
  }
}

NTRegion::NTRegion(double k) : k_(k) {
  if (!(k > 1.0)) throw SliceError(ErrorKind::InvalidArgument, "NT region needs k > 1");
}

Cone::Cone(double gamma) : gamma_(gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw SliceError(ErrorKind::InvalidArgument, "cone aperture must lie in (0, 1)");
  }
}

double orisphere_margin(const Orisphere& s, const Quaternion& q) {
  return s.k() * (1.0 - q.norm2()) - (s.point() - q).norm2();
}

double nt_margin(const NTRegion& r, const Quaternion& q) {
  return r.k() * (1.0 - q.norm()) - (q - Quaternion{1.0}).norm();
}

double cone_margin(const Cone& c, const Quaternion& q) { return q.x0 - c.gamma() * q.norm(); }

Quaternion cayley(const Quaternion& q, double eps) {
  const Quaternion one{1.0};
  const Quaternion den = one + q;
  if (!(den.norm() > eps)) {
    throw SliceError(ErrorKind::PoleAtMinusOne, "Cayley transform at " + to_string(q));
  }
  return inverse(den) * (one - q);
}

std::uint64_t CounterRng::bits(std::uint64_t index, std::uint64_t lane) const {
  // splitmix64 finaliser over a mix of the three keys.
  std::uint64_t z = seed_ * 0x9E3779B97F4A7C15ULL + index * 0xD1B54A32D192ED03ULL +
                    lane * 0x8CB92BA72F3D8DD7ULL + 0x632BE59BD9B4E019ULL;
  for (int round = 0; round < 2; ++round) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
  }
  return z;
}

double CounterRng::uniform(std::uint64_t index, std::uint64_t lane) const {
  return static_cast<double>(bits(index, lane) >> 11) * 0x1.0p-53;
}

double CounterRng::normal(std::uint64_t index, std::uint64_t lane) const {
  const double u1 = 1.0 - uniform(index, 2 * lane);  // (0, 1]
  const double u2 = uniform(index, 2 * lane + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Quaternion ball_point(const CounterRng& rng, std::uint64_t index) {
  for (std::uint64_t attempt = 0; attempt < kRejectionBudget; ++attempt) {
    const std::uint64_t lane = attempt * 4;
    const Quaternion q{rng.uniform(index, lane, -1.0, 1.0), rng.uniform(index, lane + 1, -1.0, 1.0),
                       rng.uniform(index, lane + 2, -1.0, 1.0),
                       rng.uniform(index, lane + 3, -1.0, 1.0)};
    if (q.norm2() < 1.0) return q;
  }
  throw SliceError(ErrorKind::RejectionBudgetExceeded, "ball sampling");
}

Quaternion sphere_point(const CounterRng& rng, std::uint64_t index) {
  for (std::uint64_t attempt = 0; attempt < kRejectionBudget; ++attempt) {
    const std::uint64_t lane = attempt * 4;
    const Quaternion g{rng.normal(index, lane), rng.normal(index, lane + 1),
                       rng.normal(index, lane + 2), rng.normal(index, lane + 3)};
    const double n = g.norm();
    if (n > 1e-8) return g / n;
  }
  throw SliceError(ErrorKind::RejectionBudgetExceeded, "sphere sampling");
}

std::vector<Quaternion> sample_ball(std::uint64_t seed, std::size_t n) {
  if (n < 1) throw SliceError(ErrorKind::InvalidArgument, "sample count must be >= 1");
  const CounterRng rng(seed);
  std::vector<Quaternion> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = ball_point(rng, i);
  return out;
}

std::vector<Quaternion> sample_orisphere(const Orisphere& s, std::uint64_t seed, std::size_t n) {
  if (n < 1) throw SliceError(ErrorKind::InvalidArgument, "sample count must be >= 1");
  const CounterRng rng(seed);
  std::vector<Quaternion> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    // Points within rounding of the tangent sphere are redrawn so that the
    // margin is strictly positive.
    for (std::uint64_t attempt = 0; attempt < kRejectionBudget && !placed; ++attempt) {
      const Quaternion q = s.center() + ball_point(rng, i * 1024 + attempt) * s.radius();
      if (orisphere_margin(s, q) > 0.0) {
        out[i] = q;
        placed = true;
      }
    }
    if (!placed) throw SliceError(ErrorKind::RejectionBudgetExceeded, "orisphere sampling");
  }
  return out;
}

std::vector<Quaternion> sample_cone(const Cone& c, std::uint64_t seed, std::size_t n,
                                    double r_min, double r_max) {
  if (n < 1) throw SliceError(ErrorKind::InvalidArgument, "sample count must be >= 1");
  if (!(r_min > 0.0 && r_max >= r_min)) {
    throw SliceError(ErrorKind::InvalidArgument, "cone radii must satisfy 0 < r_min <= r_max");
  }
  const CounterRng rng(seed);
  const std::size_t budget = 10000;
  std::vector<Quaternion> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    const double r = r_min * std::pow(r_max / r_min, t);
    bool placed = false;
    for (std::uint64_t attempt = 0; attempt < budget && !placed; ++attempt) {
      const Quaternion d = sphere_point(rng, i * budget + attempt);
      if (cone_margin(c, d) > 0.0) {
        out[i] = d * r;
        placed = true;
      }
    }
    if (!placed) throw SliceError(ErrorKind::RejectionBudgetExceeded, "cone sampling");
  }
  return out;
}

std::vector<double> radial_path(int K) {
  std::vector<double> out;
  for (int m = 4; m <= K; ++m) out.push_back(1.0 - std::ldexp(1.0, -m));
  return out;
}

}  // namespace sliceq
