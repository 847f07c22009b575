#include "sliceq/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "sliceq/boundary.hpp"
#include "sliceq/error.hpp"
#include "sliceq/parallel.hpp"
#include "sliceq/verify.hpp"

namespace sliceq {

namespace {

// Stream tags so that different suites and roles never share draws.
enum Stream : std::uint64_t {
  kBlaschke = 0x1001,
  kMoebius = 0x1002,
  kBounded = 0x1003,
  kPairs = 0x2001,
  kSamples = 0x2002,
  kBoundaryPoint = 0x2003,
  kUnimodular = 0x2004,
  kAffine = 0x2005,
};

CounterRng sub_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
  return CounterRng(CounterRng(seed).bits(index, stream));
}

SampleConfig with_seed(const SampleConfig& cfg, std::uint64_t index, std::uint64_t stream) {
  SampleConfig c = cfg;
  c.seed = CounterRng(cfg.seed).bits(index, stream);
  return c;
}

Report tagged(Report r, const std::string& prefix) {
  for (auto& w : r.witnesses) w.check = prefix + ": " + w.check;
  return r;
}

std::string map_label(const std::string& kind, std::size_t i) {
  return kind + "#" + std::to_string(i);
}

// Non-real unit quaternion with |Im| >= 0.2, drawn from the sphere sampler.
Quaternion boundary_point(const CounterRng& rng, std::uint64_t index) {
  for (std::uint64_t a = 0; a < kRejectionBudget; ++a) {
    const Quaternion p = sphere_point(rng, index * 1024 + a);
    if (p.im_norm() >= 0.2) return p;
  }
  throw SliceError(ErrorKind::RejectionBudgetExceeded, "no non-real boundary point drawn");
}

// Runs fn(i) for i < n on the configured workers and folds in index order.
Report fold(const std::string& suite, const SampleConfig& cfg, std::size_t n,
            const std::function<Report(std::size_t)>& fn) {
  return combine(suite, cfg, parallel_map<Report>(n, cfg.workers, fn));
}

// A hypothesis check that is expected to fire, recorded as a pass when it does.
Report expect_error(const std::string& suite, const SampleConfig& cfg, const std::string& check,
                    ErrorKind kind, const std::function<void()>& fn) {
  ReportBuilder b(suite, cfg);
  bool fired = false;
  try {
    fn();
  } catch (const SliceError& e) {
    fired = e.kind() == kind;
  }
  b.flag(check, {}, fired, fired ? 0.0 : -1.0);
  return b.finish();
}

Report expect_close(const std::string& suite, const SampleConfig& cfg, const std::string& check,
                    const Quaternion& point, const Quaternion& got, const Quaternion& want,
                    double tol) {
  ReportBuilder b(suite, cfg);
  const double dev = (got - want).norm();
  b.flag(check, point, dev <= tol, tol - dev, got);
  return b.finish();
}

Report expect_true(const std::string& suite, const SampleConfig& cfg, const std::string& check,
                   bool ok, const Quaternion& value = {}) {
  ReportBuilder b(suite, cfg);
  b.flag(check, {}, ok, ok ? 0.0 : -1.0, value);
  return b.finish();
}

// ---------------------------------------------------------------------------

Report suite_paper_examples(const SampleConfig& cfg) {
  ReportBuilder b("paper_examples", cfg);
  for (const auto& row : example_rows(cfg.truncation)) {
    const double dev = (row.computed - row.expected).norm();
    b.flag(row.label, {}, row.pass(), 1e-10 - dev, row.computed);
  }
  return b.finish();
}

Report schwarz_pick_pairs(const RegularSeries& f, const SampleConfig& cfg, std::uint64_t index,
                          bool equality) {
  ReportBuilder b("schwarz_pick", cfg);
  const CounterRng rng = sub_rng(cfg.seed, index, kPairs);
  for (std::size_t j = 0; j < cfg.count; ++j) {
    const Quaternion q0 = ball_point(rng, 2 * j);
    const Quaternion q = ball_point(rng, 2 * j + 1);
    const double m = check_schwarz_pick_ball(f, q0, q);
    if (equality) {
      b.equality("schwarz_pick_equality", q, m, q0);
    } else {
      b.inequality("schwarz_pick", q, m, q0);
    }
  }
  return b.finish();
}

Report suite_schwarz_pick(const SampleConfig& cfg, const SuiteOptions& opt) {
  const std::string name = "schwarz_pick";
  if (opt.ball_fn) return schwarz_pick_pairs(*opt.ball_fn, cfg, 0, false);
  constexpr std::size_t kMoebiusMaps = 20;
  const std::size_t n = cfg.maps + kMoebiusMaps;
  return fold(name, cfg, n, [&](std::size_t i) {
    if (i < cfg.maps) {
      const RegularSeries f = random_blaschke(cfg.seed, i, cfg.truncation);
      return tagged(schwarz_pick_pairs(f, cfg, i, false), map_label("blaschke", i));
    }
    const std::size_t m = i - cfg.maps;
    const RegularSeries f = random_moebius(cfg.seed, m, cfg.truncation);
    return tagged(schwarz_pick_pairs(f, cfg, i, true), map_label("moebius", m));
  });
}

Report julia_for(const RegularSeries& f, const SampleConfig& cfg, const SuiteOptions& opt,
                 const std::string& label) {
  const BoundaryData bd = estimate_boundary_data(f, cfg);
  std::vector<Report> parts;
  for (double k : opt.k_values) parts.push_back(tagged(check_julia(f, k, bd, cfg), label));
  return combine("julia", cfg, parts);
}

std::vector<NamedSeries> julia_corpus(const SampleConfig& cfg) {
  std::vector<NamedSeries> fs = {
      {"identity", RegularSeries::identity()},
      {"moebius(1/2)", moebius(Quaternion{0.5}, cfg.truncation)},
      {"q^2", RegularSeries::power(2)},
  };
  const std::size_t extra = std::min<std::size_t>(cfg.maps, 10);
  for (std::size_t i = 0; i < extra; ++i) {
    fs.push_back({map_label("blaschke", i), random_blaschke(cfg.seed, i, cfg.truncation)});
  }
  return fs;
}

Report suite_julia(const SampleConfig& cfg, const SuiteOptions& opt) {
  if (opt.ball_fn) return julia_for(*opt.ball_fn, cfg, opt, "fn");
  const auto fs = julia_corpus(cfg);
  return fold("julia", cfg, fs.size(), [&](std::size_t i) {
    return julia_for(fs[i].f, with_seed(cfg, i, kSamples), opt, fs[i].name);
  });
}

Report caratheodory_for(const RegularSeries& f, const SampleConfig& cfg,
                        const std::string& label) {
  ReportBuilder b("julia_caratheodory", cfg);
  const BoundaryData bd = estimate_boundary_data(f, cfg);
  const Quaternion one{1.0};
  if (bd.divergent) {
    // Nothing further to compare; the regime itself is legitimate.
    b.flag("divergent_alpha_reported", one, true, 0.0, Quaternion{bd.alpha_raw});
    return tagged(b.finish(), label);
  }
  const double tol = 1e-4 * (1.0 + bd.alpha);
  b.flag("angular_derivative_matches_alpha_eta", one, bd.angular_consistent,
         tol - (bd.fprime1 - bd.eta * bd.alpha).norm(), bd.fprime1);
  b.flag("nontangential_quotient_matches_alpha", one, bd.nt_consistent,
         tol - std::abs(bd.alpha_nt - bd.alpha), Quaternion{bd.alpha_nt});
  const double a0 = f.coeff(0).norm();
  const double floor = (1.0 - a0) / (1.0 + a0);
  b.inequality("alpha_above_julia_floor", one, bd.alpha - floor, Quaternion{bd.alpha});
  b.flag("alpha_positive", one, bd.alpha > 0.0, bd.alpha, Quaternion{bd.alpha});
  return tagged(b.finish(), label);
}

Report suite_julia_caratheodory(const SampleConfig& cfg, const SuiteOptions& opt) {
  const std::string name = "julia_caratheodory";
  if (opt.ball_fn) return caratheodory_for(*opt.ball_fn, cfg, "fn");
  std::vector<Report> parts;
  const Quaternion one{1.0};

  const RegularSeries m = moebius(Quaternion{0.5}, cfg.truncation);
  const BoundaryData bm = estimate_boundary_data(m, cfg);
  parts.push_back(caratheodory_for(m, cfg, "moebius(1/2)"));
  parts.push_back(expect_close(name, cfg, "moebius(1/2) alpha = 3", one, bm.alpha, 3.0, 1e-4));
  parts.push_back(expect_close(name, cfg, "moebius(1/2) eta = 1", one, bm.eta, 1.0, 1e-6));
  parts.push_back(expect_close(name, cfg, "moebius(1/2) f'(1) = 3", one, bm.fprime1, 3.0, 1e-4));

  const RegularSeries sq = RegularSeries::power(2);
  parts.push_back(caratheodory_for(sq, cfg, "q^2"));
  parts.push_back(expect_close(name, cfg, "q^2 alpha = 2", one,
                               estimate_boundary_data(sq, cfg).alpha, 2.0, 1e-4));
  const RegularSeries id = RegularSeries::identity();
  parts.push_back(caratheodory_for(id, cfg, "identity"));
  parts.push_back(expect_close(name, cfg, "identity alpha = 1", one,
                               estimate_boundary_data(id, cfg).alpha, 1.0, 1e-4));

  // qⁿβ/n with |β| < n never reaches the unit sphere on the radius.
  const std::vector<std::pair<std::size_t, Quaternion>> divergent = {
      {2, Quaternion{1.0}}, {3, Quaternion{1.0, 1.0, 0.0, 0.0}}, {4, Quaternion{0.0, 0.0, 2.0, 1.0}}};
  for (const auto& [n, beta] : divergent) {
    const RegularSeries f = shift(RegularSeries::constant(beta / static_cast<double>(n)), n);
    parts.push_back(expect_true(name, cfg, "q^" + std::to_string(n) + "*beta/n flagged divergent",
                                estimate_boundary_data(f, cfg).divergent));
  }

  const std::size_t extra = std::min<std::size_t>(cfg.maps, 20);
  Report gen = fold(name, cfg, extra, [&](std::size_t i) {
    return caratheodory_for(random_blaschke(cfg.seed, i, cfg.truncation), cfg,
                            map_label("blaschke", i));
  });
  parts.push_back(gen);
  return combine(name, cfg, parts);
}

Report suite_hopf(const SampleConfig& cfg, const SuiteOptions& opt) {
  const std::string name = "hopf";
  if (opt.ball_fn) return check_hopf(*opt.ball_fn, vanishing_order(*opt.ball_fn), cfg);
  std::vector<Report> parts;
  parts.push_back(tagged(check_hopf(moebius(Quaternion{0.5}, cfg.truncation), 0, cfg, true),
                         "moebius(1/2)"));
  const RegularSeries mixed({Quaternion{}, Quaternion{0.5}, Quaternion{0.5}});
  parts.push_back(tagged(check_hopf(mixed, 0, cfg), "(q+q^2)/2"));
  for (std::size_t n = 1; n <= 4; ++n) {
    parts.push_back(tagged(check_hopf(RegularSeries::power(n), n, cfg, true),
                           "q^" + std::to_string(n)));
  }
  const std::size_t extra = std::min<std::size_t>(cfg.maps, 20);
  parts.push_back(fold(name, cfg, 2 * extra, [&](std::size_t i) {
    if (i < extra) {
      const RegularSeries b = random_blaschke(cfg.seed, i, cfg.truncation);
      const RegularSeries f = b * inverse(b(Quaternion{1.0}));
      return tagged(check_hopf(f, vanishing_order(f), cfg), map_label("blaschke", i));
    }
    const std::size_t j = i - extra;
    const CounterRng rng = sub_rng(cfg.seed, j, kMoebius);
    const Quaternion u = ball_point(rng, 0) * 0.6;
    const std::size_t n = j % 3;
    const RegularSeries f = shift(moebius_fixing_one(u, cfg.truncation), n);
    return tagged(check_hopf(f, n, cfg, true), map_label("moebius_family", j));
  }));
  return combine(name, cfg, parts);
}

Report suite_lindelof(const SampleConfig& cfg, const SuiteOptions& opt) {
  const std::string name = "lindelof";
  if (opt.ball_fn) return check_lindelof(*opt.ball_fn, cfg);
  constexpr std::size_t kMoebiusMaps = 5;
  constexpr std::size_t kPowerMaps = 6;
  const std::size_t n = cfg.maps + kMoebiusMaps + kPowerMaps;
  return fold(name, cfg, n, [&](std::size_t i) {
    const SampleConfig c = with_seed(cfg, i, kSamples);
    if (i < cfg.maps) {
      return tagged(check_lindelof(random_bounded(cfg.seed, i), c), map_label("bounded", i));
    }
    if (i < cfg.maps + kMoebiusMaps) {
      const std::size_t m = i - cfg.maps;
      return tagged(check_lindelof(random_moebius(cfg.seed, m, cfg.truncation), c, {true, false}),
                    map_label("moebius", m));
    }
    const std::size_t m = i - cfg.maps - kMoebiusMaps;
    const Quaternion u = sphere_point(sub_rng(cfg.seed, m, kUnimodular), 0);
    const RegularSeries f = shift(RegularSeries::constant(u), 1 + m % 3);
    return tagged(check_lindelof(f, c, {false, true}), map_label("power_unimodular", m));
  });
}

Report suite_boundary_schwarz(const SampleConfig& cfg) {
  const std::string name = "boundary_schwarz";
  std::vector<Report> parts;
  const Quaternion j = Quaternion::j();

  const RegularSeries id = RegularSeries::identity();
  const CounterRng pts = sub_rng(cfg.seed, 0, kBoundaryPoint);
  for (std::size_t i = 0; i < 20; ++i) {
    const Quaternion xi = boundary_point(pts, i);
    parts.push_back(tagged(check_boundary_schwarz(id, xi, cfg), "identity"));
    parts.push_back(expect_close(name, cfg, "identity quantity = 1", xi,
                                 boundary_schwarz_raw(id, xi), 1.0, cfg.tol_eq));
  }
  const RegularSeries sq = RegularSeries::power(2);
  parts.push_back(tagged(check_boundary_schwarz(sq, j, cfg), "q^2"));
  parts.push_back(expect_close(name, cfg, "q^2 quantity at j = 2", j, boundary_schwarz_raw(sq, j),
                               2.0, cfg.tol_eq));
  const RegularSeries e1 = example1(cfg.truncation);
  parts.push_back(tagged(check_boundary_schwarz(e1, j, cfg), "example1"));
  parts.push_back(tagged(check_boundary_schwarz(example2(cfg.truncation), j, cfg), "example2"));

  const std::size_t extra = std::min<std::size_t>(cfg.maps, 50);
  parts.push_back(fold(name, cfg, 3 * extra, [&](std::size_t i) {
    const Quaternion xi = boundary_point(sub_rng(cfg.seed, i, kBoundaryPoint), 0);
    if (i < extra) {
      const Quaternion u = sphere_point(sub_rng(cfg.seed, i, kUnimodular), 0);
      const std::size_t n = 1 + i % 4;
      const RegularSeries f = shift(RegularSeries::constant(u), n);
      ReportBuilder b(name, cfg);
      b.merge(check_boundary_schwarz(f, xi, cfg));
      const double dev = (boundary_schwarz_raw(f, xi) - Quaternion{static_cast<double>(n)}).norm();
      b.flag("power_unimodular quantity = n", xi, dev <= cfg.tol_eq, cfg.tol_eq - dev);
      return tagged(b.finish(), map_label("power_unimodular", i));
    }
    if (i < 2 * extra) {
      const std::size_t m = i - extra;
      return tagged(check_boundary_schwarz(random_blaschke(cfg.seed, m, cfg.truncation), xi, cfg),
                    map_label("blaschke", m));
    }
    const std::size_t m = i - 2 * extra;
    const RegularSeries b = random_blaschke(cfg.seed, m, cfg.truncation, 1);
    const RegularSeries f = b * (inverse(b(xi)) * xi);
    return tagged(check_boundary_schwarz(f, xi, cfg), map_label("blaschke_fixed", m));
  }));
  return combine(name, cfg, parts);
}

// Self-maps of ℍ⁺ used by the half-space suites.
// qa + b with real a > 0. With Re b = 0 the map is onto ℍ⁺ (a half-space
// Möbius map); otherwise its image is a proper sub-half-space.
SliceMap halfspace_affine(std::uint64_t seed, std::uint64_t index, bool onto) {
  const CounterRng rng = sub_rng(seed, index, kAffine);
  const double a = rng.uniform(0, 0, 0.1, 3.0);
  Quaternion b = ball_point(rng, 1) * 2.0;
  b.x0 = onto ? 0.0 : std::abs(b.x0);
  return SliceMap::affine(Quaternion{a}, b);
}

Report halfspace_pairs(const SliceMap& f, const SampleConfig& cfg, std::uint64_t index,
                       bool equality = false) {
  ReportBuilder b("halfspace", cfg);
  const CounterRng rng = sub_rng(cfg.seed, index, kPairs);
  for (std::size_t j = 0; j < cfg.count; ++j) {
    const Quaternion q0 = cayley(ball_point(rng, 2 * j));
    const Quaternion q = cayley(ball_point(rng, 2 * j + 1));
    const double m = check_schwarz_pick_halfspace(f, q0, q);
    if (equality) {
      b.equality("halfspace_schwarz_pick_equality", q, m, q0);
    } else {
      b.inequality("halfspace_schwarz_pick", q, m, q0);
    }
  }
  return b.finish();
}

Report suite_halfspace(const SampleConfig& cfg, const SuiteOptions& opt) {
  const std::string name = "halfspace";
  if (opt.half_fn) {
    return combine(name, cfg,
                   {halfspace_pairs(*opt.half_fn, cfg, 0),
                    estimate_c_halfspace(*opt.half_fn, opt.gamma, cfg).report});
  }
  std::vector<Report> parts;
  const Quaternion far = cone_ray_direction(opt.gamma) * 1048576.0;

  const auto id = estimate_c_halfspace(SliceMap::identity(), opt.gamma, cfg);
  parts.push_back(tagged(id.report, "identity"));
  parts.push_back(expect_close(name, cfg, "identity c = 1", far, id.c, 1.0, 1e-4));
  parts.push_back(expect_close(name, cfg, "identity q^-1 f limit = 1", far, id.quotient_limit, 1.0,
                               1e-4));
  parts.push_back(expect_close(name, cfg, "identity f' limit = 1", far, id.derivative_limit, 1.0,
                               1e-4));

  const auto one = estimate_c_halfspace(SliceMap::constant(1.0), opt.gamma, cfg);
  parts.push_back(tagged(one.report, "constant 1"));
  parts.push_back(expect_close(name, cfg, "constant 1 c = 0", far, one.c, 0.0, 1e-4));

  const SliceMap lin = SliceMap::affine(Quaternion{2.0}, Quaternion::i());
  const auto two = estimate_c_halfspace(lin, opt.gamma, cfg);
  parts.push_back(tagged(two.report, "2q+i"));
  parts.push_back(expect_close(name, cfg, "2q+i c = 2", far, two.c, 2.0, 1e-4));
  parts.push_back(expect_close(name, cfg, "2q+i f' limit = 2", far, two.derivative_limit, 2.0,
                               1e-6));

  // Cayley conjugates of ball Möbius maps and qa + b with real a > 0 are
  // half-space Möbius maps: equality throughout.
  constexpr std::size_t kMoebiusMaps = 10;
  parts.push_back(fold(name, cfg, 2 * kMoebiusMaps, [&](std::size_t i) {
    const SampleConfig c = with_seed(cfg, i, kSamples);
    if (i < kMoebiusMaps) {
      const SliceMap f = SliceMap::cayley_conjugate(random_moebius(cfg.seed, i, cfg.truncation));
      return tagged(halfspace_pairs(f, c, i, true), map_label("cayley_moebius", i));
    }
    const std::size_t m = i - kMoebiusMaps;
    return tagged(halfspace_pairs(halfspace_affine(cfg.seed, m, true), c, i, true),
                  map_label("affine_onto", m));
  }));

  const std::size_t extra = std::min<std::size_t>(cfg.maps, 20);
  parts.push_back(fold(name, cfg, 2 * extra, [&](std::size_t i) {
    const SampleConfig c = with_seed(cfg, i, kSamples);
    if (i < extra) {
      const SliceMap f = SliceMap::cayley_conjugate(random_blaschke(cfg.seed, i, cfg.truncation));
      return tagged(combine(name, c, {halfspace_pairs(f, c, i),
                                      estimate_c_halfspace(f, opt.gamma, c).report}),
                    map_label("cayley_blaschke", i));
    }
    const std::size_t m = i - extra;
    const SliceMap f = halfspace_affine(cfg.seed, m, false);
    return tagged(combine(name, c, {halfspace_pairs(f, c, i),
                                    estimate_c_halfspace(f, opt.gamma, c).report}),
                  map_label("affine", m));
  }));
  return combine(name, cfg, parts);
}

Report suite_rigidity(const SampleConfig& cfg, const SuiteOptions& opt) {
  const std::string name = "rigidity";
  const double g = opt.gamma;
  if (opt.half_fn) {
    return check_rigidity(*opt.half_fn, g, RigidityMode::BurnsKrantz, {}, cfg).report;
  }
  std::vector<Report> parts;
  const SliceMap id = SliceMap::identity();
  const SliceMap recip = SliceMap::slice_preserving(
      [](const Quaternion& q) { return inverse(q + 1.0); }, "(q+1)^-1");

  const auto bk_id = check_rigidity(id, g, RigidityMode::BurnsKrantz, {}, cfg);
  parts.push_back(tagged(bk_id.report, "identity"));
  parts.push_back(expect_true(name, cfg, "burns_krantz accepts q", bk_id.rigid, bk_id.limit));

  const auto bk_pert = check_rigidity(id + recip, g, RigidityMode::BurnsKrantz, {}, cfg);
  parts.push_back(tagged(bk_pert.report, "q+(q+1)^-1"));
  parts.push_back(expect_true(name, cfg, "burns_krantz rejects q+(q+1)^-1",
                              !bk_pert.rigid && std::abs(bk_pert.c - 1.0) <= 1e-4,
                              bk_pert.limit));
  parts.push_back(expect_close(name, cfg, "q+(q+1)^-1 limit = 1", {}, bk_pert.limit, 1.0, 1e-3));

  const auto c3_recip = check_rigidity(recip, g, RigidityMode::DecayToZero, {}, cfg);
  parts.push_back(tagged(c3_recip.report, "(q+1)^-1"));
  parts.push_back(expect_true(name, cfg, "decay-to-zero rejects (q+1)^-1", !c3_recip.rigid,
                              c3_recip.limit));
  const auto c3_zero =
      check_rigidity(SliceMap::constant(0.0), g, RigidityMode::DecayToZero, {}, cfg);
  parts.push_back(tagged(c3_zero.report, "zero"));
  parts.push_back(expect_true(name, cfg, "decay-to-zero accepts 0", c3_zero.rigid));

  const auto t3_zero = check_ball_decay_rigidity(RegularSeries::constant(0.0), cfg);
  parts.push_back(tagged(t3_zero.report, "ball zero"));
  parts.push_back(expect_true(name, cfg, "ball version accepts 0", t3_zero.rigid));
  const auto t3_lin = check_ball_decay_rigidity(RegularSeries({Quaternion{1.0}, Quaternion{1.0}}), cfg);
  parts.push_back(tagged(t3_lin.report, "1+q"));
  parts.push_back(expect_true(name, cfg, "ball version rejects 1+q", !t3_lin.rigid,
                              t3_lin.limit));
  parts.push_back(expect_error(name, cfg, "(1+q)^2 violates the range hypothesis",
                               ErrorKind::RangeHypothesisViolated, [&] {
                                 check_ball_decay_rigidity(
                                     RegularSeries({Quaternion{1.0}, Quaternion{2.0},
                                                    Quaternion{1.0}}),
                                     cfg);
                               }));

  // Self-maps with an interior fixed point: Cayley conjugates of ball maps
  // with F(0) = 0 fix 1; qa + b with 0 < a < 1 fixes b/(1 - a).
  const std::size_t extra = std::min<std::size_t>(cfg.maps, 20);
  parts.push_back(fold(name, cfg, 2 * extra, [&](std::size_t i) {
    const SampleConfig c = with_seed(cfg, i, kSamples);
    if (i < extra) {
      const SliceMap f =
          SliceMap::cayley_conjugate(random_blaschke(cfg.seed, i, cfg.truncation, 1));
      RigidityParams p;
      p.fixed_point = Quaternion{1.0};
      return tagged(check_rigidity(f, g, RigidityMode::FixedPoint, p, c).report,
                    map_label("cayley_blaschke", i));
    }
    const std::size_t m = i - extra;
    const CounterRng rng = sub_rng(cfg.seed, m, kAffine);
    const double a = rng.uniform(0, 0, 0.05, 0.95);
    Quaternion b = ball_point(rng, 1) * 2.0;
    b.x0 = std::abs(b.x0) + 0.01;
    RigidityParams p;
    p.fixed_point = b / (1.0 - a);
    return tagged(
        check_rigidity(SliceMap::affine(Quaternion{a}, b), g, RigidityMode::FixedPoint, p, c)
            .report,
        map_label("affine_fixed", m));
  }));
  return combine(name, cfg, parts);
}

}  // namespace

// ---------------------------------------------------------------------------
// Generators

RegularSeries random_blaschke(std::uint64_t seed, std::uint64_t index, std::size_t truncation,
                              std::size_t min_power) {
  const CounterRng rng = sub_rng(seed, index, kBlaschke);
  const std::size_t factors = 1 + rng.bits(0, 0) % 3;
  const std::size_t power = min_power + rng.bits(0, 1) % 3;
  RegularSeries b = RegularSeries::constant(1.0);
  for (std::size_t k = 0; k < factors; ++k) {
    b = star(b, moebius(ball_point(rng, 1 + k) * 0.6, truncation));
  }
  return shift(b, power) * sphere_point(rng, 10);
}

RegularSeries random_moebius(std::uint64_t seed, std::uint64_t index, std::size_t truncation) {
  const CounterRng rng = sub_rng(seed, index, kMoebius);
  return moebius(ball_point(rng, 0) * 0.6, truncation) * sphere_point(rng, 1);
}

RegularSeries random_bounded(std::uint64_t seed, std::uint64_t index) {
  const CounterRng rng = sub_rng(seed, index, kBounded);
  const std::size_t zeros = rng.bits(0, 0) % 3;
  const std::size_t degree = zeros + 1 + rng.bits(0, 1) % (9 - zeros - 1);
  std::vector<Quaternion> a(degree + 1);
  double total = 0.0;
  for (std::size_t n = zeros; n <= degree; ++n) {
    a[n] = Quaternion{rng.normal(n + 1, 0), rng.normal(n + 1, 1), rng.normal(n + 1, 2),
                      rng.normal(n + 1, 3)};
    total += a[n].norm();
  }
  const double s = rng.uniform(0, 2, 0.3, 0.99);
  for (auto& c : a) c = c * (s / total);
  return RegularSeries(std::move(a));
}

RegularSeries example1(std::size_t truncation) {
  return moebius(Quaternion::i() * 0.5, truncation);
}

RegularSeries example2(std::size_t truncation) {
  return shift(example1(truncation), 1) * (-Quaternion::j());
}

std::vector<NamedSeries> explicit_corpus(std::size_t truncation) {
  return {{"example1", example1(truncation)},
          {"example2", example2(truncation)},
          {"identity", RegularSeries::identity()},
          {"q^2", RegularSeries::power(2)},
          {"q^3", RegularSeries::power(3)}};
}

std::vector<ExampleRow> example_rows(std::size_t truncation) {
  const Quaternion i = Quaternion::i();
  const Quaternion j = Quaternion::j();
  const Quaternion k = Quaternion::k();
  const RegularSeries f = example1(truncation);
  const auto [a1, a2] = closed_form_A1_A2(f, j);
  const SphericalJet jet = spherical_jet(f, j, 2);
  const Quaternion fj = f(j);
  const Quaternion bracket = lie_bracket(j.conj(), fj * a2.conj());

  const RegularSeries g = example2(truncation);
  const SphericalJet gjet = spherical_jet(g, j, 2);

  return {
      {"f(J)", fj, j, "j"},
      {"f'(J)", derivative(f)(j), Quaternion{5.0 / 3.0} + k * (4.0 / 3.0), "5/3 + 4/3 k"},
      {"A1 (closed form)", a1, Quaternion{1.0}, "1"},
      {"A1 (division)", jet.A[1], Quaternion{1.0}, "1"},
      {"A2 (closed form)", a2, (i * 2.0 + j) * (-1.0 / 3.0), "-(2i + j)/3"},
      {"A2 (division)", jet.A[2], (i * 2.0 + j) * (-1.0 / 3.0), "-(2i + j)/3"},
      {"bracket", bracket, i * (4.0 / 3.0), "4/3 i"},
      {"boundary Schwarz quantity", Quaternion{boundary_schwarz_quantity(f, j)}, Quaternion{5.0 / 3.0},
       "5/3"},
      {"boundary Schwarz bound", Quaternion{hopf_bound(f, 0)}, Quaternion{1.0 / 3.0}, "1/3"},
      {"g(J)", g(j), j, "j"},
      {"g'(J)", derivative(g)(j), Quaternion{8.0 / 3.0} - k * (4.0 / 3.0), "8/3 - 4/3 k"},
      {"bracket g", lie_bracket(j, gjet.A[2]), k * (-4.0 / 3.0), "-4/3 k"},
      {"fixed-point derivative", Quaternion{fixed_point_boundary_derivative(g, j)}, Quaternion{8.0 / 3.0},
       "8/3"},
  };
}

Report run_suite(const std::string& name, const SampleConfig& cfg, const SuiteOptions& opt) {
  cfg.validate();
  if (name == "paper_examples") return suite_paper_examples(cfg);
  if (name == "schwarz_pick") return suite_schwarz_pick(cfg, opt);
  if (name == "julia") return suite_julia(cfg, opt);
  if (name == "julia_caratheodory") return suite_julia_caratheodory(cfg, opt);
  if (name == "hopf") return suite_hopf(cfg, opt);
  if (name == "lindelof") return suite_lindelof(cfg, opt);
  if (name == "boundary_schwarz") return suite_boundary_schwarz(cfg);
  if (name == "halfspace") return suite_halfspace(cfg, opt);
  if (name == "rigidity") return suite_rigidity(cfg, opt);
  if (name == "all") {
    std::vector<Report> parts;
    for (const auto& s : kSuiteNames) {
      if (s == "all") continue;
      parts.push_back(tagged(run_suite(s, cfg, opt), s));
    }
    return combine("all", cfg, parts);
  }
  throw SliceError(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

}  // namespace sliceq
