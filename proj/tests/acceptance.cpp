// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "sliceq/boundary.hpp"
#include "sliceq/error.hpp"
#include "sliceq/geometry.hpp"
#include "sliceq/parallel.hpp"
#include "sliceq/suites.hpp"
#include "sliceq/verify.hpp"
#include "support.hpp"

using namespace sliceq;
using testsupport::Gen;

namespace {

const Quaternion I = Quaternion::i(), J = Quaternion::j(), K = Quaternion::k();

// Collects failed sub-checks of one criterion with a short reason each.
struct Checks {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void near(const Quaternion& got, const Quaternion& want, double tol, const std::string& what) {
    const double err = (got - want).norm();
    if (err > tol) failures.push_back(what + ": got " + to_string(got) + ", err " + std::to_string(err));
  }
  void near(double got, double want, double tol, const std::string& what) {
    near(Quaternion{got}, Quaternion{want}, tol, what);
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<void(Checks&)> body;
};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

void first_example(Checks& c) {
  const RegularSeries f = example1(128);
  c.near(f(J), J, 1e-10, "f(j)");
  c.near(derivative(f)(J), Quaternion{5.0 / 3.0} + K * (4.0 / 3.0), 1e-10, "f'(j)");
  const SphericalJet jet = spherical_jet(f, J);
  c.near(jet.A[1], Quaternion{1.0}, 1e-10, "A1");
  c.near(jet.A[2], -(2.0 * I + J) / 3.0, 1e-10, "A2");
  c.near(lie_bracket(J.conj(), f(J) * jet.A[2].conj()), I * (4.0 / 3.0), 1e-10, "bracket");
  c.near(boundary_schwarz_quantity(f, J), 5.0 / 3.0, 1e-10, "boundary Schwarz quantity");
  c.near(hopf_bound(f, 0), 1.0 / 3.0, 1e-10, "order-0 bound");
}

void second_example(Checks& c) {
  const RegularSeries g = example2(128);
  c.near(g(J), J, 1e-10, "g(j)");
  c.near(derivative(g)(J), Quaternion{8.0 / 3.0} - K * (4.0 / 3.0), 1e-10, "g'(j)");
  c.near(lie_bracket(J, spherical_jet(g, J).A[2]), K * (-4.0 / 3.0), 1e-10, "bracket");
  c.near(fixed_point_boundary_derivative(g, J), 8.0 / 3.0, 1e-10, "fixed-point derivative");
}

void schwarz_pick(Checks& c) {
  const std::vector<Quaternion> p0 = sample_ball(101, 100), p1 = sample_ball(102, 100);
  const auto worst = parallel_map<double>(100, workers(), [&](std::size_t i) {
    const RegularSeries f = random_blaschke(100, i, 128);
    double w = 1e300;
    for (std::size_t k = 0; k < 100; ++k) w = std::min(w, check_schwarz_pick_ball(f, p0[k], p1[k]));
    return w;
  });
  for (std::size_t i = 0; i < worst.size(); ++i) {
    c.expect(worst[i] >= -1e-9, "Blaschke map " + std::to_string(i) + " margin " + std::to_string(worst[i]));
  }
  for (std::uint64_t i = 0; i < 20; ++i) {
    const RegularSeries m = random_moebius(103, i, 128);
    for (std::size_t k = 0; k < 100; ++k) {
      const double d = check_schwarz_pick_ball(m, p0[k], p1[k]);
      c.expect(std::abs(d) <= 1e-8, "Möbius map " + std::to_string(i) + " deviation " + std::to_string(d));
    }
  }
}

void julia_caratheodory(Checks& c) {
  SampleConfig cfg;
  const BoundaryData m = estimate_boundary_data(moebius(Quaternion{0.5}), cfg);
  const double u = 0.5;
  c.near(m.alpha, (1 + u) / (1 - u), 1e-4, "alpha of moebius(1/2)");
  c.near(m.eta, Quaternion{1.0}, 1e-6, "eta of moebius(1/2)");
  c.near(m.fprime1, Quaternion{(1 + u) / (1 - u)}, 1e-4, "f'(1) of moebius(1/2)");
  c.near(m.fprime1, m.alpha * m.eta, 1e-4, "f'(1) - alpha eta");
  c.near(estimate_boundary_data(RegularSeries::power(2), cfg).alpha, 2.0, 1e-4, "alpha of q^2");
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const Quaternion beta : {J, Quaternion{0.5, 0.5, 0.0, 0.5}, Quaternion{-1.0}}) {
      if (beta.norm() >= static_cast<double>(n)) continue;
      const RegularSeries f = RegularSeries::power(n) * (beta / static_cast<double>(n));
      c.expect(estimate_boundary_data(f, cfg).divergent, "divergence flag for n = " + std::to_string(n));
    }
  }
}

void julia_orispheres(Checks& c) {
  SampleConfig cfg;
  cfg.count = 1000;
  const std::vector<std::pair<std::string, RegularSeries>> maps = {
      {"id", RegularSeries::identity()}, {"moebius(1/2)", moebius(Quaternion{0.5})},
      {"q^2", RegularSeries::power(2)}};
  for (const auto& [name, f] : maps) {
    const BoundaryData bd = estimate_boundary_data(f, cfg);
    for (double k : {0.5, 1.0, 2.0}) {
      const Orisphere target(bd.eta / bd.eta.norm(), bd.alpha * k);
      double worst = 1e300;
      const auto seed = static_cast<std::uint64_t>(200 + k * 10);
      for (const auto& q : sample_orisphere(Orisphere(Quaternion{1.0}, k), seed, 1000)) {
        worst = std::min(worst, orisphere_margin(target, f(q)));
      }
      c.expect(worst >= -1e-9, name + " k = " + std::to_string(k) + " margin " + std::to_string(worst));
      c.expect(check_julia(f, k, bd, cfg).pass(), name + " julia report, k = " + std::to_string(k));
    }
  }
}

void hopf(Checks& c) {
  SampleConfig cfg;
  const RegularSeries m = moebius(Quaternion{0.5});
  const double a0 = m[0].norm();
  const double weak = (Quaternion{1.0} - m[0]).norm() * (Quaternion{1.0} - m[0]).norm() / (1.0 - a0 * a0);
  c.near(weak, 3.0, 1e-12, "weak bound of moebius(1/2)");
  c.near(estimate_boundary_data(m, cfg).fprime1, Quaternion{weak}, 1e-6, "f'(1) of moebius(1/2)");
  c.expect(check_hopf(m, 0, cfg, true).pass(), "moebius(1/2) report");

  const RegularSeries half({Quaternion{}, Quaternion{0.5}, Quaternion{0.5}});
  const double fp = estimate_boundary_data(half, cfg).fprime1.x0;
  c.near(fp, 1.5, 1e-6, "f'(1) of (q + q^2)/2");
  c.near(hopf_bound(half, 0), 4.0 / 3.0, 1e-12, "bound of (q + q^2)/2");
  c.expect(fp - hopf_bound(half, 0) >= 0.16, "margin of (q + q^2)/2");
  c.expect(check_hopf(half, 0, cfg).pass(), "(q + q^2)/2 report");

  for (std::size_t n = 1; n <= 5; ++n) {
    const RegularSeries f = RegularSeries::power(n);
    c.near(estimate_boundary_data(f, cfg).fprime1, Quaternion{static_cast<double>(n)}, 1e-6,
           "f'(1) of q^" + std::to_string(n));
    c.near(hopf_bound(f, n), static_cast<double>(n), 1e-12, "bound of q^" + std::to_string(n));
  }
}

void boundary_schwarz(Checks& c) {
  const RegularSeries sq = RegularSeries::power(2);
  c.near(boundary_schwarz_quantity(sq, J), 2.0, 1e-12, "q^2 at j");
  c.expect(boundary_schwarz_raw(sq, J).im_norm() <= 1e-8, "imaginary defect of q^2 at j");
  const CounterRng rng(107);
  int found = 0;
  for (std::uint64_t i = 0; found < 20; ++i) {
    const Quaternion xi = sphere_point(rng, i);
    if (xi.im_norm() < 1e-3) continue;
    ++found;
    c.near(boundary_schwarz_quantity(RegularSeries::identity(), xi), 1.0, 1e-12, "identity at " + to_string(xi));
  }
}

void lindelof(Checks& c) {
  SampleConfig cfg;
  cfg.count = 1000;
  // char, not bool: std::vector<bool> packs bits and cannot take concurrent writes.
  const auto bounded = parallel_map<char>(100, workers(), [&](std::size_t i) -> char {
    SampleConfig local = cfg;
    local.seed = i;
    return check_lindelof(random_bounded(108, i), local).pass();
  });
  for (std::size_t i = 0; i < bounded.size(); ++i) c.expect(bounded[i], "bounded map " + std::to_string(i));
  for (std::uint64_t i = 0; i < 10; ++i) {
    c.expect(check_lindelof(random_moebius(109, i, 128), cfg, {true, false}).pass(),
             "Möbius equality, map " + std::to_string(i));
  }
  const CounterRng rng(110);
  for (std::size_t n = 1; n <= 5; ++n) {
    const RegularSeries f = RegularSeries::power(n) * sphere_point(rng, n);
    c.expect(check_lindelof(f, cfg, {false, true}).pass(), "unimodular power " + std::to_string(n));
  }
}

void halfspace(Checks& c) {
  SampleConfig cfg;
  const auto id = estimate_c_halfspace(SliceMap::identity(), 0.5, cfg);
  c.near(id.c, 1.0, 1e-12, "c of q");
  c.near(id.quotient_limit, Quaternion{1.0}, 1e-4, "quotient limit of q");
  c.near(id.derivative_limit, Quaternion{1.0}, 1e-4, "derivative limit of q");
  c.near(estimate_c_halfspace(SliceMap::constant(1.0), 0.5, cfg).c, 0.0, 1e-5, "c of 1");
  const auto aff = estimate_c_halfspace(SliceMap::affine(Quaternion{2.0}, I), 0.5, cfg);
  c.near(aff.c, 2.0, 1e-12, "c of 2q + i");
  c.near(aff.derivative_limit, Quaternion{2.0}, 1e-6, "derivative limit of 2q + i");

  for (std::uint64_t i = 0; i < 20; ++i) {
    // φ(0) = 1, so a ball map fixing 0 becomes a half-space map fixing 1.
    const SliceMap f = SliceMap::cayley_conjugate(random_blaschke(111, i, 128, 1));
    RigidityParams p;
    p.fixed_point = Quaternion{1.0};
    const auto r = check_rigidity(f, 0.5, RigidityMode::FixedPoint, p, cfg);
    c.expect(r.c <= 1.0 + 1e-6 && r.report.pass(), "Cayley map " + std::to_string(i));
  }
  Gen g(112);
  for (int i = 0; i < 20; ++i) {
    const double a = g.uniform(0.05, 0.95);
    Quaternion b = g.quat();
    b.x0 = std::abs(b.x0) + 0.1;
    RigidityParams p;
    p.fixed_point = b / (1.0 - a);
    const auto r = check_rigidity(SliceMap::affine(Quaternion{a}, b), 0.5, RigidityMode::FixedPoint, p, cfg);
    c.expect(r.c <= 1.0 + 1e-6 && r.report.pass(), "affine map " + std::to_string(i));
  }

  const auto bk_id = check_rigidity(SliceMap::identity(), 0.5, RigidityMode::BurnsKrantz, {}, cfg);
  c.expect(bk_id.rigid, "rigidity detector accepts q");
  const SliceMap recip =
      SliceMap::slice_preserving([](const Quaternion& q) { return inverse(q + 1.0); }, "1/(q+1)");
  const auto bk = check_rigidity(SliceMap::identity() + recip, 0.5, RigidityMode::BurnsKrantz, {}, cfg);
  c.expect(!bk.rigid, "rigidity detector rejects q + 1/(q+1)");
  c.near(bk.limit, Quaternion{1.0}, 1e-3, "limit for q + 1/(q+1)");
}

void kernel_properties(Checks& c) {
  Gen g(113);
  auto bounded_away = [&](std::size_t degree) {
    std::vector<Quaternion> cs(degree + 1);
    cs[0] = g.unit() * 2.0;
    for (std::size_t n = 1; n <= degree; ++n) cs[n] = g.quat() * (0.9 / static_cast<double>(degree) / 3.0);
    return RegularSeries(std::move(cs));
  };

  double worst = 0.0;
  for (int n = 0; n < 2000; ++n) {
    const RegularSeries f = g.polynomial(g.index(1, 8)), h = g.polynomial(g.index(1, 8));
    const Quaternion q = g.in_ball();
    const Quaternion a = star(f, h)(q), b = pointwise_star(f, h, q);
    worst = std::max(worst, (a - b).norm() / std::max(1.0, b.norm()));
  }
  c.expect(worst <= 1e-9, "product equivalence " + std::to_string(worst));

  worst = 0.0;
  for (int n = 0; n < 2000; ++n) {
    const RegularSeries f = bounded_away(g.index(1, 6));
    const Quaternion q = g.in_ball();
    worst = std::max(worst, (T_map(conj_regular(f), T_map(f, q)) - q).norm());
  }
  c.expect(worst <= 1e-10, "T round trip " + std::to_string(worst));

  worst = 0.0;
  double imag = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const RegularSeries f = bounded_away(g.index(1, 6));
    const RegularSeries one = star(reciprocal(f, 128), f);
    worst = std::max(worst, (one[0] - Quaternion{1.0}).norm());
    for (std::size_t k = 1; k <= 64; ++k) worst = std::max(worst, one[k].norm() / f.scale());
    const RegularSeries s = symmetrize(g.polynomial(g.index(1, 8)));
    for (const auto& x : s.coeffs()) imag = std::max(imag, x.im_norm() / std::max(1.0, x.norm()));
  }
  c.expect(worst <= 1e-10, "reciprocal identity " + std::to_string(worst));
  c.expect(imag <= 1e-12, "symmetrisation realness " + std::to_string(imag));

  double residual = 0.0, jet_gap = 0.0, dir_gap = 0.0, recon = 0.0;
  for (int n = 0; n < 2000; ++n) {
    const std::size_t d = g.index(2, 8);
    const RegularSeries f = g.polynomial(d);
    const Quaternion q0 = g.non_real(0.1, 1.0);
    const RegularSeries quot = divide_linear(f, q0);
    const RegularSeries back = star(RegularSeries::linear(q0), quot) + RegularSeries::constant(f(q0));
    for (std::size_t k = 0; k <= d; ++k) residual = std::max(residual, (back.coeff(k) - f[k]).norm() / f.scale());
    const SphericalJet jet = spherical_jet(f, q0, d);
    const auto [a1, a2] = closed_form_A1_A2(f, q0);
    jet_gap = std::max({jet_gap, (jet.A[1] - a1).norm() / f.scale(), (jet.A[2] - a2).norm() / f.scale()});
    const Quaternion v = g.unit();
    const double t = 1e-5;
    const Quaternion fd = (f(q0 + t * v) - f(q0 - t * v)) / (2.0 * t);
    dir_gap = std::max(dir_gap, (directional_derivative(f, q0, v) - fd).norm() / f.scale());
    const Quaternion q = g.in_ball();
    recon = std::max(recon, (jet.reconstruct(q, d) - f(q)).norm() / f.scale());
  }
  c.expect(residual <= 1e-9, "division reconstruction " + std::to_string(residual));
  c.expect(jet_gap <= 1e-8, "jet agreement " + std::to_string(jet_gap));
  c.expect(dir_gap <= 1e-6, "directional derivative " + std::to_string(dir_gap));
  c.expect(recon <= 1e-10, "spherical reconstruction " + std::to_string(recon));
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "first worked example", 1.0, first_example},
      {2, "second worked example", 1.0, second_example},
      {3, "ball Schwarz-Pick", 10.0, schwarz_pick},
      {4, "angular derivative at 1", 5.0, julia_caratheodory},
      {5, "orisphere mapping", 5.0, julia_orispheres},
      {6, "boundary fixed-point bounds", 5.0, hopf},
      {7, "boundary Schwarz quantity", 5.0, boundary_schwarz},
      {8, "Lindelof inequalities", 10.0, lindelof},
      {9, "half-space growth and rigidity", 5.0, halfspace},
      {10, "kernel properties", 30.0, kernel_properties},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checks checks;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(checks);
    } catch (const std::exception& e) {
      checks.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.budget_s) {
      checks.failures.push_back("runtime " + std::to_string(secs) + " s over budget " +
                                std::to_string(cr.budget_s) + " s");
    }
    const bool ok = checks.failures.empty();
    std::printf("criterion %2d %-32s %8.3f s  %s\n", cr.id, cr.title.c_str(), secs, ok ? "PASS" : "FAIL");
    for (std::size_t i = 0; i < checks.failures.size() && i < 10; ++i) {
      std::printf("    %s\n", checks.failures[i].c_str());
    }
    if (!ok) ++failed;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
