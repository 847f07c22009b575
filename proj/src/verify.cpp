#include "sliceq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "sliceq/boundary.hpp"
#include "sliceq/error.hpp"
#include "sliceq/extrapolation.hpp"
#include "sliceq/geometry.hpp"

namespace sliceq {

namespace {

constexpr double kLimitTol = 1e-4;
constexpr double kFarRadius = 1048576.0;  // 2^20
constexpr double kDivergentQuotient = 1e6;
// Convergent quotients settle to ratios 1 + O(2^-m); a blow-up like
// const/(1 - r) doubles per step.
constexpr double kDivergentGrowth = 1.25;
constexpr double kSpotTol = 1e-6;
constexpr double kRangeTol = 1e-9;

Quaternion normalised(const Quaternion& q) {
  const double n = q.norm();
  return n > 0.0 ? q / n : Quaternion{};
}

std::size_t tail_start(std::size_t n) { return n / 2; }

// Points of ℍ⁺ that are not confined to a cone: Cayley images of ball samples.
std::vector<Quaternion> halfspace_points(std::uint64_t seed, std::size_t n) {
  std::vector<Quaternion> out;
  out.reserve(n);
  for (const auto& p : sample_ball(seed, n)) out.push_back(cayley(p));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Unit ball

double check_schwarz_pick_ball(const RegularSeries& f, const Quaternion& q0,
                               const Quaternion& q) {
  const RegularSeries lhs_den({Quaternion{1.0}, -q0.conj()});
  const RegularSeries lhs_num = RegularSeries::linear(q0);
  const Quaternion w0 = f(q0);
  const RegularSeries rhs_den = RegularSeries::constant(1.0) - f * w0.conj();
  const RegularSeries rhs_num = f - RegularSeries::constant(w0);
  return quotient_eval(lhs_den, lhs_num, q).norm() - quotient_eval(rhs_den, rhs_num, q).norm();
}

BoundaryData estimate_boundary_data(const RegularSeries& f, const SampleConfig& cfg) {
  const std::vector<double> path = radial_path(cfg.K_radial);
  std::vector<Quaternion> values;
  std::vector<double> quotients;
  for (double r : path) {
    const Quaternion v = f(r);
    values.push_back(v);
    quotients.push_back((1.0 - v.norm()) / (1.0 - r));
  }

  BoundaryData bd;
  bd.alpha_raw = *std::min_element(quotients.begin() + tail_start(quotients.size()),
                                   quotients.end());
  const double last = quotients.back();
  const double prev = quotients[quotients.size() - 2];
  bd.divergent = last > kDivergentQuotient || (last > 1.0 && last > kDivergentGrowth * prev);
  bd.alpha = bd.divergent ? std::numeric_limits<double>::infinity()
                          : richardson<double>(quotients).extrapolated;

  bd.eta_raw = normalised(values.back());
  bd.value_at_one = richardson<Quaternion>(values).extrapolated;
  bd.eta = normalised(bd.value_at_one);

  std::vector<Quaternion> diff;
  for (std::size_t m = 0; m < path.size(); ++m) {
    diff.push_back((values[m] - bd.eta) / (path[m] - 1.0));
  }
  const auto fp = richardson<Quaternion>(diff);
  bd.fprime1 = fp.extrapolated;
  bd.fprime1_raw = fp.raw;

  // Off-axis approach q = 1 - h(1 + i/2), inside R(1, k) for k > √5/2.
  std::vector<double> nt;
  for (int m = 4; m <= cfg.K_radial; ++m) {
    const double h = std::ldexp(1.0, -m);
    const Quaternion q{1.0 - h, -0.5 * h, 0.0, 0.0};
    const double one_minus_q2 = 2.0 * h - 1.25 * h * h;
    const double one_minus_q = one_minus_q2 / (1.0 + q.norm());
    nt.push_back((1.0 - f(q).norm()) / one_minus_q);
  }
  bd.alpha_nt = bd.divergent ? std::numeric_limits<double>::infinity()
                             : richardson<double>(nt).extrapolated;

  if (!bd.divergent) {
    const double tol = kLimitTol * (1.0 + bd.alpha);
    bd.angular_consistent = (bd.fprime1 - bd.eta * bd.alpha).norm() <= tol;
    bd.nt_consistent = std::abs(bd.alpha_nt - bd.alpha) <= tol;
  }
  return bd;
}

Report check_julia(const RegularSeries& f, double k, const BoundaryData& bd,
                   const SampleConfig& cfg) {
  ReportBuilder b("julia", cfg);
  // With α = ∞ the orisphere statement is vacuous.
  if (bd.divergent) return b.finish();
  const Orisphere source(Quaternion{1.0}, k);
  const Orisphere image(bd.eta, bd.alpha * k);
  for (const auto& q : sample_orisphere(source, cfg.seed, cfg.count)) {
    const Quaternion w = f(q);
    b.inequality("julia_orisphere", q, orisphere_margin(image, w), w);
    const double lhs = bd.alpha * (Quaternion{1.0} - q).norm2() / (1.0 - q.norm2());
    const double rhs = (bd.eta - w).norm2() / (1.0 - w.norm2());
    b.inequality("julia_ratio", q, lhs - rhs, w);
  }
  return b.finish();
}

Report check_hopf(const RegularSeries& f, std::size_t n, const SampleConfig& cfg,
                  bool expect_weak_equality) {
  const BoundaryData bd = estimate_boundary_data(f, cfg);
  if (bd.divergent || (bd.value_at_one - Quaternion{1.0}).norm() > kSpotTol) {
    throw SliceError(ErrorKind::HypothesisViolated,
                     "Hopf check needs f(1) = 1, radial estimate " + to_string(bd.value_at_one));
  }
  const double strong = hopf_bound_at_one(f, n);
  const double general = hopf_bound(f, n);

  ReportBuilder b("hopf", cfg);
  const Quaternion one{1.0};
  const Quaternion fp = bd.fprime1;
  b.flag("hopf_real_derivative", one, fp.im_norm() <= kSpotTol, kSpotTol - fp.im_norm(), fp);
  b.flag("hopf_angular_consistency", one, bd.angular_consistent,
         kLimitTol * (1.0 + bd.alpha) - (fp - bd.eta * bd.alpha).norm(), fp);
  b.flag("hopf_bound_fixed_point", one, fp.x0 >= strong - cfg.tol_eq,
         fp.x0 - strong + cfg.tol_eq, fp);
  b.flag("hopf_bound", one, fp.x0 >= general - cfg.tol_eq, fp.x0 - general + cfg.tol_eq, fp);
  if (expect_weak_equality) {
    const double dev = std::abs(fp.x0 - hopf_weak_bound_at_one(f, n));
    b.flag("hopf_weak_equality", one, dev <= kSpotTol, kSpotTol - dev, fp);
  }
  return b.finish();
}

Report check_lindelof(const RegularSeries& f, const SampleConfig& cfg, LindelofExpect expect) {
  ReportBuilder b("lindelof", cfg);
  const Quaternion c = f.coeff(0);
  const double a = c.norm();
  const double a2 = a * a;
  const double d1 = f.coeff(1).norm();
  const std::size_t n = vanishing_order(f);
  const double an = f.coeff(n).norm();

  for (const auto& q : sample_ball(cfg.seed, cfg.count)) {
    const Quaternion w = f(q);
    const double r = q.norm();
    const double r2 = r * r;
    const double fw = w.norm();

    // Centred-disc form.
    const double den = 1.0 - r2 * a2;
    const double m21 = r * (1.0 - a2) / den - (w - c * ((1.0 - r2) / den)).norm();
    if (expect.equality_21) {
      b.equality("lindelof_disc_equality", q, m21, w);
    } else {
      b.inequality("lindelof_disc", q, m21, w);
    }

    b.inequality("lindelof_modulus_lower", q, fw - (a - r) / (1.0 - r * a), w);
    b.inequality("lindelof_modulus_upper", q, (r + a) / (1.0 + r * a) - fw, w);
    b.inequality("lindelof_increment", q, r * (1.0 - a2) / (1.0 - r * a) - (w - c).norm(), w);

    // Sharper bound through |f'(0)|; only meaningful when |f(0)| < 1.
    if (1.0 - a2 > 1e-12) {
      const double mu = (r * (1.0 - a2) + d1) / (1.0 - a2 + r * d1);
      b.inequality("lindelof_refined", q, (a + r * mu) / (1.0 + a * r * mu) - fw, w);
    }

    if (n >= 1 && n <= f.truncation()) {
      const double rn = std::pow(r, static_cast<double>(n));
      const double lower = (an - r) / (1.0 - r * an) * rn;
      const double upper = (r + an) / (1.0 + r * an) * rn;
      if (expect.equality_24) {
        b.equality("lindelof_order_lower_equality", q, fw - lower, w);
        b.equality("lindelof_order_upper_equality", q, upper - fw, w);
      } else {
        b.inequality("lindelof_order_lower", q, fw - lower, w);
        b.inequality("lindelof_order_upper", q, upper - fw, w);
      }
    }
  }
  return b.finish();
}

double radial_modulus_derivative(const RegularSeries& f, const Quaternion& xi, int K) {
  std::vector<double> quotients;
  for (double r : radial_path(K)) quotients.push_back((1.0 - f(xi * r).norm()) / (1.0 - r));
  return richardson<double>(quotients).extrapolated;
}

Report check_boundary_schwarz(const RegularSeries& f, const Quaternion& xi,
                              const SampleConfig& cfg) {
  const double sc = std::max(1.0, f.scale());
  const Quaternion fx = f(xi);
  if (std::abs(fx.norm() - 1.0) > 1e-10 * sc) {
    throw SliceError(ErrorKind::HypothesisViolated, "|f(xi)| must be 1, got " + to_string(fx));
  }
  if (!regular_on_closed_ball(f)) {
    throw SliceError(ErrorKind::HypothesisViolated, "series does not converge on the closed ball");
  }

  ReportBuilder b("boundary_schwarz", cfg);
  const Quaternion fp = derivative(f)(xi);
  const Quaternion lambda = boundary_schwarz_raw(f, xi);
  const double lam = lambda.x0;
  const double real_tol = kRealnessTol * std::max(1.0, fp.norm());
  b.flag("boundary_schwarz_real", xi, lambda.im_norm() <= real_tol,
         real_tol - lambda.im_norm(), lambda);

  const std::size_t n = vanishing_order(f);
  b.inequality("boundary_schwarz_bound", xi, lam - hopf_bound(f, n), lambda);
  b.flag("boundary_schwarz_positive", xi, lam > 0.0, lam, lambda);
  b.flag("boundary_schwarz_derivative_modulus", xi, fp.norm() >= lam - kRealnessTol,
         fp.norm() - lam + kRealnessTol, fp);

  const double radial = radial_modulus_derivative(f, xi, cfg.K_radial);
  const double dev = std::abs(radial - lam);
  b.flag("boundary_schwarz_radial", xi, dev <= kLimitTol * (1.0 + lam),
         kLimitTol * (1.0 + lam) - dev, Quaternion{radial});

  const bool fixed = f.coeff(0).norm() <= 1e-10 * sc && (fx - xi).norm() <= 1e-10 * sc;
  if (fixed) {
    const bool is_identity = (f - RegularSeries::identity()).scale() <= 1e-12;
    if (!is_identity) {
      b.flag("fixed_point_derivative", xi, fp.norm() > 1.0 + kSpotTol,
             fp.norm() - 1.0 - kSpotTol, fp);
    }
    const Quaternion a2 = closed_form_A1_A2(f, xi).second;
    const Quaternion cq = fp - lie_bracket(xi, a2);
    b.flag("fixed_point_corrected_real", xi, cq.im_norm() <= real_tol, real_tol - cq.im_norm(),
           cq);
    if (!is_identity) {
      b.flag("fixed_point_corrected_above_one", xi, cq.x0 > 1.0, cq.x0 - 1.0, cq);
    }
  }
  return b.finish();
}

// ---------------------------------------------------------------------------
// Right half-space

double check_schwarz_pick_halfspace(const SliceMap& f, const Quaternion& q0,
                                    const Quaternion& q) {
  const SliceMap id = SliceMap::identity();
  const SliceMap lhs_den = id + SliceMap::constant(q0.conj());
  const SliceMap lhs_num = id - SliceMap::constant(q0);
  const Quaternion w0 = f(q0);
  const SliceMap rhs_den = f + SliceMap::constant(w0.conj());
  const SliceMap rhs_num = f - SliceMap::constant(w0);
  return quotient_eval(lhs_den, lhs_num, q).norm() - quotient_eval(rhs_den, rhs_num, q).norm();
}

Quaternion cone_ray_direction(double gamma) {
  const Cone cone(gamma);  // validates γ
  const double c = (1.0 + cone.gamma()) / 2.0;
  const double s = std::sqrt(1.0 - c * c);
  const Quaternion unit = Quaternion{0.0, 1.0, 1.0, 1.0} / std::sqrt(3.0);
  return Quaternion{c} + unit * s;
}

HalfSpaceEstimate estimate_c_halfspace(const SliceMap& f, double gamma, const SampleConfig& cfg) {
  const Cone cone(gamma);
  HalfSpaceEstimate est;
  est.c = std::numeric_limits<double>::infinity();
  for (const auto& q : sample_cone(cone, cfg.seed, cfg.count)) {
    est.c = std::min(est.c, f(q).x0 / q.x0);
  }

  const Quaternion far = cone_ray_direction(gamma) * kFarRadius;
  const Quaternion w = f(far);
  est.quotient_limit = inverse(far) * w;
  est.re_ratio_limit = w.x0 / far.x0;
  est.derivative_limit = f.derivative(far);

  ReportBuilder b("halfspace_c", cfg);
  // c is estimated from above, so the pointwise bound gets a relative band.
  const double band = kSpotTol * std::max(1.0, est.c);
  auto check_point = [&](const Quaternion& q) {
    const double ratio = f(q).x0 / q.x0;
    b.flag("halfspace_re_bound", q, ratio >= est.c - band, ratio - est.c + band, f(q));
  };
  for (const auto& q : sample_cone(cone, cfg.seed + 1, cfg.count)) check_point(q);
  for (const auto& q : halfspace_points(cfg.seed + 2, cfg.count)) check_point(q);

  const double dq = (est.quotient_limit - Quaternion{est.c}).norm();
  b.flag("halfspace_quotient_limit", far, dq <= kLimitTol, kLimitTol - dq, est.quotient_limit);
  const double dr = std::abs(est.re_ratio_limit - est.c);
  b.flag("halfspace_re_ratio_limit", far, dr <= kLimitTol, kLimitTol - dr,
         Quaternion{est.re_ratio_limit});
  const double dd = (est.derivative_limit - Quaternion{est.c}).norm();
  b.flag("halfspace_derivative_limit", far, dd <= kLimitTol, kLimitTol - dd,
         est.derivative_limit);
  est.report = b.finish();
  return est;
}

namespace {

// Cone samples at moderate radii plus Cayley images of ball samples.
std::vector<Quaternion> spot_points(double gamma, const SampleConfig& cfg) {
  std::vector<Quaternion> pts = sample_cone(Cone(gamma), cfg.seed + 3, cfg.count, 1.0, 1024.0);
  const auto more = halfspace_points(cfg.seed + 4, cfg.count);
  pts.insert(pts.end(), more.begin(), more.end());
  return pts;
}

RigidityResult burns_krantz(const SliceMap& f, double gamma, const SampleConfig& cfg) {
  RigidityResult res;
  const HalfSpaceEstimate est = estimate_c_halfspace(f, gamma, cfg);
  res.c = est.c;
  const Quaternion dir = cone_ray_direction(gamma);
  // Radii 2^4..2^12 only: beyond that q(f(q) - q) loses digits to cancellation.
  std::vector<Quaternion> seq;
  for (int m = 4; m <= 12; ++m) {
    const Quaternion q = dir * std::ldexp(1.0, m);
    seq.push_back(q * (f(q) - q));
  }
  res.limit = richardson<Quaternion>(seq).extrapolated;
  res.criterion = std::abs(res.c - 1.0) <= kLimitTol && res.limit.norm() <= kLimitTol;

  double worst = 0.0;
  for (const auto& q : spot_points(gamma, cfg)) {
    worst = std::max(worst, (f(q) - q).norm() / std::max(1.0, q.norm()));
  }
  res.confirmed = worst <= kSpotTol;

  ReportBuilder b("rigidity", cfg);
  const bool ok = res.criterion == res.confirmed;
  b.flag("burns_krantz_consistent", dir, ok, ok ? 0.0 : -1.0, res.limit);
  res.rigid = res.criterion && res.confirmed;
  res.report = b.finish();
  return res;
}

RigidityResult fixed_point_mode(const SliceMap& f, double gamma, const RigidityParams& p,
                                const SampleConfig& cfg) {
  const Quaternion fp = p.fixed_point;
  if (!(fp.x0 > 0.0) || (f(fp) - fp).norm() > 1e-8 * std::max(1.0, fp.norm())) {
    throw SliceError(ErrorKind::ModeHypothesisViolated,
                     "no interior fixed point at " + to_string(fp));
  }
  RigidityResult res;
  const HalfSpaceEstimate est = estimate_c_halfspace(f, gamma, cfg);
  res.c = est.c;
  res.limit = est.derivative_limit;
  res.criterion = std::abs(res.c - 1.0) <= kSpotTol;
  double worst = 0.0;
  for (const auto& q : spot_points(gamma, cfg)) {
    worst = std::max(worst, (f(q) - q).norm() / std::max(1.0, q.norm()));
  }
  res.confirmed = worst <= kSpotTol;
  ReportBuilder b("rigidity", cfg);
  b.flag("fixed_point_c_at_most_one", fp, res.c <= 1.0 + kSpotTol, 1.0 + kSpotTol - res.c,
         Quaternion{res.c});
  res.rigid = res.criterion && res.confirmed;
  res.report = b.finish();
  return res;
}

// Shared by the half-space and ball versions; `worst_value` is the largest
// |f| seen by the spot check in whichever domain the function lives.
RigidityResult decay_to_zero_core(const SliceMap& f, const RigidityParams& p,
                                  const SampleConfig& cfg, double worst_value) {
  const Quaternion dir = Quaternion{std::cos(p.theta)} + p.unit * std::sin(p.theta);
  std::vector<double> seq;
  for (int m = 0; m <= 20; ++m) {
    const double r = std::ldexp(1.0, m);
    seq.push_back(r * f(dir * r).norm());
  }
  RigidityResult res;
  res.limit = Quaternion{*std::min_element(seq.begin() + tail_start(seq.size()), seq.end())};
  res.criterion = res.limit.x0 <= kLimitTol;
  res.confirmed = worst_value <= kSpotTol;
  ReportBuilder b("rigidity", cfg);
  const bool ok = res.criterion == res.confirmed;
  b.flag("decay_to_zero_consistent", dir, ok, ok ? 0.0 : -1.0, res.limit);
  res.rigid = res.criterion && res.confirmed;
  res.report = b.finish();
  return res;
}

}  // namespace

RigidityResult check_rigidity(const SliceMap& f, double gamma, RigidityMode mode,
                              const RigidityParams& params, const SampleConfig& cfg) {
  switch (mode) {
    case RigidityMode::BurnsKrantz:
      return burns_krantz(f, gamma, cfg);
    case RigidityMode::FixedPoint:
      return fixed_point_mode(f, gamma, params, cfg);
    case RigidityMode::DecayToZero: {
      if (std::abs(params.theta) >= std::numbers::pi / 2) {
        throw SliceError(ErrorKind::ModeHypothesisViolated, "ray angle must lie in (-pi/2, pi/2)");
      }
      double worst = 0.0;
      for (const auto& q : spot_points(gamma, cfg)) {
        const Quaternion w = f(q);
        if (w.x0 < -kRangeTol * std::max(1.0, w.norm())) {
          throw SliceError(ErrorKind::ModeHypothesisViolated,
                           "Re f < 0 at " + to_string(q) + ", value " + to_string(w));
        }
        worst = std::max(worst, w.norm());
      }
      return decay_to_zero_core(f, params, cfg, worst);
    }
  }
  throw SliceError(ErrorKind::InvalidArgument, "unknown rigidity mode");
}

RigidityResult check_ball_decay_rigidity(const RegularSeries& f, const SampleConfig& cfg) {
  double worst = 0.0;
  for (const auto& q : sample_ball(cfg.seed, cfg.count)) {
    const Quaternion w = f(q);
    if (w.x0 < -kRangeTol * std::max(1.0, w.norm())) {
      throw SliceError(ErrorKind::RangeHypothesisViolated,
                       "Re f < 0 at " + to_string(q) + ", value " + to_string(w));
    }
    worst = std::max(worst, w.norm());
  }
  // The positive real ray of ℍ⁺ is carried by φ onto the radius ending at -1.
  return decay_to_zero_core(SliceMap::compose_cayley(f), RigidityParams{}, cfg, worst);
}

std::pair<Quaternion, Quaternion> asymptotic_products(const SliceMap& f, double gamma) {
  const Quaternion q = cone_ray_direction(gamma) * kFarRadius;
  const Quaternion w = f(q);
  return {q * w, w * q};
}

}  // namespace sliceq
