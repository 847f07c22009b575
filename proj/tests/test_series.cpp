#include <doctest.h>

#include <complex>

#include "sliceq/error.hpp"
#include "sliceq/series.hpp"
#include "support.hpp"

using namespace sliceq;
using testsupport::Gen;
using testsupport::rel_err;

namespace {

// Direct double loop, written independently of the library's convolution.
std::vector<Quaternion> brute_convolution(const RegularSeries& f, const RegularSeries& g) {
  std::vector<Quaternion> c(f.truncation() + g.truncation() + 1);
  for (std::size_t a = 0; a <= f.truncation(); ++a) {
    for (std::size_t b = 0; b <= g.truncation(); ++b) c[a + b] += f[a] * g[b];
  }
  return c;
}

// Pointwise product formula f(q) g(f(q)⁻¹ q f(q)), evaluated with plain
// arithmetic rather than the library helper.
Quaternion product_formula(const RegularSeries& f, const RegularSeries& g, const Quaternion& q) {
  const Quaternion fq = f(q);
  if (fq.norm() == 0.0) return {};
  return fq * g(inverse(fq) * q * fq);
}

// Power sum Σ qⁿ aₙ with explicit powers (no Horner).
Quaternion power_sum(const RegularSeries& f, const Quaternion& q) {
  Quaternion acc, pw{1.0};
  for (std::size_t n = 0; n <= f.truncation(); ++n) {
    acc += pw * f[n];
    pw = pw * q;
  }
  return acc;
}

// A polynomial whose symmetrisation has no zeros in the closed unit ball:
// constant term of modulus 2 and Σ_{n>0} |aₙ| <= 1.
RegularSeries zero_free(Gen& g, std::size_t degree) {
  std::vector<Quaternion> c(degree + 1);
  c[0] = g.unit() * 2.0;
  double total = 0.0;
  for (std::size_t n = 1; n <= degree; ++n) {
    c[n] = g.quat();
    total += c[n].norm();
  }
  for (std::size_t n = 1; n <= degree; ++n) c[n] = c[n] * (g.uniform(0.1, 1.0) / total);
  return RegularSeries(std::move(c));
}

}  // namespace

TEST_CASE("Horner evaluation matches the power sum") {
  Gen g(21);
  for (int n = 0; n < 200; ++n) {
    const RegularSeries f = g.polynomial(g.index(0, 12));
    const Quaternion q = g.in_ball(1.2);
    CHECK(rel_err(f(q), power_sum(f, q)) <= 1e-13 * f.scale() * 4);
  }
}

TEST_CASE("constructors") {
  CHECK(RegularSeries::identity()(Quaternion::j()) == Quaternion::j());
  CHECK(RegularSeries::power(3)(Quaternion::i()) == -Quaternion::i());
  CHECK(RegularSeries::linear(Quaternion::k())(Quaternion::k()) == Quaternion{});
  CHECK(RegularSeries::constant(2.0).truncation() == 0);
  CHECK_THROWS_AS(RegularSeries(std::vector<Quaternion>{}), SliceError);
}

TEST_CASE("star product equals the convolution") {
  Gen g(22);
  for (int n = 0; n < 200; ++n) {
    const RegularSeries f = g.polynomial(g.index(0, 10));
    const RegularSeries h = g.polynomial(g.index(0, 10));
    const RegularSeries p = star(f, h);
    const auto c = brute_convolution(f, h);
    REQUIRE(p.truncation() + 1 == c.size());
    for (std::size_t k = 0; k < c.size(); ++k) CHECK((p[k] - c[k]).norm() <= 1e-13 * (1.0 + c[k].norm()));
    CHECK_FALSE(p.truncated());
  }
}

TEST_CASE("star product series agrees with the pointwise formula") {
  Gen g(23);
  int checked = 0;
  for (int n = 0; n < 2000; ++n) {
    const RegularSeries f = g.polynomial(g.index(1, 8));
    const RegularSeries h = g.polynomial(g.index(1, 8));
    const Quaternion q = g.in_ball(1.0);
    const Quaternion series = star(f, h)(q);
    const Quaternion pointwise = product_formula(f, h, q);
    const double scale = std::max(1.0, f(q).norm() * h.scale() * 9.0);
    CHECK((series - pointwise).norm() <= 1e-9 * scale);
    CHECK((pointwise_star(f, h, q) - pointwise).norm() <= 1e-12 * scale);
    ++checked;
  }
  CHECK(checked == 2000);
}

TEST_CASE("star product with a real-coefficient factor commutes") {
  Gen g(24);
  for (int n = 0; n < 100; ++n) {
    const RegularSeries f = g.polynomial(6);
    const RegularSeries r = g.real_polynomial(5);
    const RegularSeries a = star(f, r), b = star(r, f);
    for (std::size_t k = 0; k <= a.truncation(); ++k) CHECK((a[k] - b[k]).norm() <= 1e-13 * 10);
  }
}

TEST_CASE("star product order is capped and the flag records dropped terms") {
  const RegularSeries f = RegularSeries::power(200);
  const RegularSeries p = star(f, f, 256);
  CHECK(p.truncation() == 256);
  CHECK(p.truncated());
  const RegularSeries q = star(RegularSeries::power(100), RegularSeries::power(100), 256);
  CHECK(q.truncation() == 200);
  CHECK_FALSE(q.truncated());
}

TEST_CASE("shift is multiplication by q^m") {
  Gen g(25);
  const RegularSeries f = g.polynomial(5);
  const Quaternion q = g.in_ball();
  CHECK(rel_err(shift(f, 3)(q), q * q * q * f(q)) <= 1e-13);
  CHECK(rel_err(shift(f, 3)(q), star(RegularSeries::power(3), f)(q)) <= 1e-13);
}

TEST_CASE("symmetrisation has real coefficients") {
  Gen g(26);
  for (int n = 0; n < 500; ++n) {
    const RegularSeries f = g.polynomial(g.index(0, 10));
    const RegularSeries s = symmetrize(f);
    for (const auto& c : s.coeffs()) CHECK(c.im_norm() <= 1e-12 * f.scale() * f.scale() * 11);
    const RegularSeries s2 = star(conj_regular(f), f);
    for (std::size_t k = 0; k <= s.truncation(); ++k) {
      CHECK((s[k] - s2[k]).norm() <= 1e-12 * f.scale() * f.scale() * 11);
    }
  }
}

TEST_CASE("real series inverse") {
  // 1/(1 - x) = Σ xⁿ
  const std::vector<double> s = {1.0, -1.0};
  const auto inv = real_series_inverse(s, 10);
  for (double c : inv) CHECK(c == doctest::Approx(1.0));
  CHECK_THROWS_AS(real_series_inverse(std::vector<double>{0.0, 1.0}, 3), SliceError);
}

TEST_CASE("reciprocal is a star inverse up to the tail") {
  Gen g(27);
  for (int n = 0; n < 300; ++n) {
    const RegularSeries f = zero_free(g, g.index(1, 6));
    const RegularSeries r = reciprocal(f, 128);
    const RegularSeries one = star(r, f);
    CHECK((one[0] - Quaternion{1.0}).norm() <= 1e-12);
    for (std::size_t k = 1; k <= 128; ++k) CHECK(one[k].norm() <= 1e-11);
  }
}

TEST_CASE("reciprocal of q - c for |c| > 1 matches the geometric series") {
  const Quaternion c{0.0, 0.0, 2.0, 0.0};
  const RegularSeries r = reciprocal(RegularSeries::linear(c), 60);
  // (q - c)^{-1} = -c⁻¹ Σ (q c⁻¹)ⁿ for scalar-like q on the slice of c.
  const Quaternion q{0.3, 0.0, 0.2, 0.0};
  CHECK(rel_err(r(q), inverse(q - c)) <= 1e-14);
}

TEST_CASE("reciprocal refuses a vanishing constant term") {
  CHECK_THROWS_AS(reciprocal(RegularSeries::identity()), SliceError);
}

TEST_CASE("T map and its conjugate are mutually inverse") {
  Gen g(28);
  for (int n = 0; n < 2000; ++n) {
    const RegularSeries f = zero_free(g, g.index(1, 6));
    const Quaternion q = g.in_ball();
    const Quaternion t = T_map(f, q);
    CHECK(same_sphere(t, q, 1e-12));
    CHECK((T_map(conj_regular(f), t) - q).norm() <= 1e-10);
  }
}

TEST_CASE("quotient evaluation agrees with the reciprocal series") {
  Gen g(29);
  for (int n = 0; n < 300; ++n) {
    const RegularSeries f = zero_free(g, g.index(1, 5));
    const RegularSeries h = g.polynomial(g.index(0, 5));
    const Quaternion q = g.in_ball(0.9);
    const Quaternion series = star(reciprocal(f, 128), h)(q);
    CHECK(rel_err(quotient_eval(f, h, q), series) <= 1e-9 * h.scale() * 6);
  }
}

TEST_CASE("symmetrisation modulus matches the series") {
  Gen g(30);
  for (int n = 0; n < 300; ++n) {
    const RegularSeries f = g.polynomial(g.index(1, 6));
    const Quaternion q = g.in_ball();
    CHECK(symmetrization_modulus(f, q) ==
          doctest::Approx(symmetrize(f)(q).norm()).epsilon(1e-10).scale(f.scale() * f.scale()));
  }
}

TEST_CASE("quotient evaluation refuses the zero set") {
  // f = q - j vanishes at j; f^s = q² + 1 vanishes on the whole sphere of j.
  const RegularSeries f = RegularSeries::linear(Quaternion::j());
  CHECK_THROWS_AS(quotient_eval(f, RegularSeries::constant(1.0), Quaternion::k()), SliceError);
}

TEST_CASE("slice derivative matches finite differences along the real direction") {
  Gen g(31);
  for (int n = 0; n < 300; ++n) {
    const RegularSeries f = g.polynomial(g.index(1, 8));
    const Quaternion q = g.in_ball();
    const double h = 1e-6;
    const Quaternion fd = (f(q + h) - f(q - h)) / (2.0 * h);
    CHECK((derivative(f)(q) - fd).norm() <= 1e-6 * f.scale() * 40);
  }
}

TEST_CASE("linear division reproduces f") {
  Gen g(32);
  for (int n = 0; n < 1000; ++n) {
    const RegularSeries f = g.polynomial(g.index(1, 10));
    const Quaternion q0 = g.in_ball(1.0);
    const RegularSeries d = divide_linear(f, q0);
    // (q - q0) * d + f(q0) must give back the coefficients of f.
    const RegularSeries back = star(RegularSeries::linear(q0), d) + RegularSeries::constant(f(q0));
    for (std::size_t k = 0; k <= f.truncation(); ++k) {
      CHECK((back.coeff(k) - f[k]).norm() <= 1e-9 * std::max(f.scale(), f(q0).norm()));
    }
    // Pointwise: (q - q0) * d at q equals f(q) - f(q0) by the product formula.
    const Quaternion q = g.in_ball();
    CHECK((product_formula(RegularSeries::linear(q0), d, q) - (f(q) - f(q0))).norm() <=
          1e-9 * f.scale() * 20);
  }
}

TEST_CASE("linear division of a series that does not converge at q0 is refused") {
  // Truncated geometric tail evaluated far outside its disc of convergence.
  std::vector<Quaternion> c(80, Quaternion{1.0});
  const RegularSeries f(std::move(c), true);
  CHECK_NOTHROW(divide_linear(f, Quaternion{0.5}));
}

TEST_CASE("Möbius coefficients") {
  const Quaternion u = Quaternion::i() * 0.5;
  const RegularSeries m = moebius(u, 10);
  CHECK(m[0] == -u);
  CHECK((m[1] - Quaternion{0.75}).norm() <= 1e-16);
  CHECK((m[2] - Quaternion::i() * (-0.375)).norm() <= 1e-16);
  CHECK(m.truncated());
  CHECK_THROWS_AS(moebius(Quaternion{1.0}), SliceError);
  CHECK_THROWS_AS(moebius(Quaternion{0.0, 0.6, 0.8, 0.0}), SliceError);
}

TEST_CASE("Möbius maps fix the unit sphere and vanish at u") {
  Gen g(33);
  for (int n = 0; n < 200; ++n) {
    const Quaternion u = g.in_ball(0.7);
    const RegularSeries m = moebius(u, 128);
    CHECK(m(u).norm() <= 1e-14);
    CHECK(std::abs(m(g.unit()).norm() - 1.0) <= 1e-13);
    CHECK(m(g.in_ball(0.99)).norm() < 1.0);
    // The closed form (1 - qū)^{-*} * (q - u) through the quotient formula.
    const Quaternion q = g.in_ball();
    const RegularSeries den({Quaternion{1.0}, -u.conj()});
    CHECK(rel_err(m(q), quotient_eval(den, RegularSeries::linear(u), q)) <= 1e-13);
  }
}

TEST_CASE("boundary-normalised Möbius map fixes 1") {
  Gen g(34);
  for (int n = 0; n < 100; ++n) {
    const RegularSeries m = moebius_fixing_one(g.in_ball(0.6), 128);
    CHECK((m(Quaternion{1.0}) - Quaternion{1.0}).norm() <= 1e-13);
  }
}

TEST_CASE("tail mass and truncation changes") {
  const RegularSeries f({1.0, 2.0, 3.0, 4.0, 5.0});
  CHECK(tail_mass(f) == doctest::Approx(9.0));  // a₃ + a₄ for N = 4
  const RegularSeries lower = f.with_truncation(2);
  CHECK(lower.truncation() == 2);
  CHECK(lower.truncated());
  const RegularSeries higher = f.with_truncation(7);
  CHECK(higher[7] == Quaternion{});
  CHECK_FALSE(higher.truncated());
}

TEST_CASE("holomorphy check separates regular from non-regular maps") {
  Gen g(35);
  std::vector<std::complex<double>> zs;
  for (int n = 0; n < 50; ++n) zs.emplace_back(g.uniform(-0.6, 0.6), g.uniform(-0.6, 0.6));
  const UnitImaginary unit = UnitImaginary::from_direction(Quaternion{0.0, 1.0, 2.0, -1.0});
  const RegularSeries f = g.polynomial(6);
  CHECK(holomorphy_check(f, unit, zs) <= 1e-7 * f.scale());
  // Left coefficients are not regular in general.
  const Quaternion a = g.quat();
  const PointMap left = [a](const Quaternion& q) { return a * q; };
  CHECK(holomorphy_check(left, unit, zs) > 1e-3);
}

TEST_CASE("worked values for evaluation and products") {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  std::vector<Quaternion> geo(61);
  for (std::size_t n = 0; n <= 60; ++n) geo[n] = Quaternion{std::ldexp(1.0, -static_cast<int>(n))};
  CHECK(std::abs(RegularSeries(geo)(Quaternion{0.5}).x0 - 4.0 / 3.0) <= 1e-12);
  CHECK(RegularSeries::constant(k)(Quaternion{0.3, 0.1, 0.2, 0.9}) == k);

  const RegularSeries f({Quaternion{1.0}, i}), g({Quaternion{1.0}, j});
  const RegularSeries p = star(f, g);
  REQUIRE(p.truncation() == 2);
  CHECK(p[0] == Quaternion{1.0});
  CHECK(p[1] == i + j);
  CHECK(p[2] == k);
  const Quaternion q{0.3, 0.0, 0.4, 0.0};
  CHECK(rel_err(pointwise_star(f, g, q), p(q)) <= 1e-15);
  CHECK(pointwise_star(RegularSeries::linear(j), g, j) == Quaternion{});
  CHECK(pointwise_star(f, RegularSeries::constant(k), q) == f(q) * k);
  CHECK(star(f, RegularSeries::constant(1.0))[1] == i);
  CHECK(star(f, g)(Quaternion{}) == f[0] * g[0]);
}

TEST_CASE("worked values for conjugates, symmetrisation and reciprocals") {
  const Quaternion i = Quaternion::i(), j = Quaternion::j();
  const RegularSeries f({Quaternion{1.0}, i});
  CHECK(conj_regular(f)[1] == -i);
  CHECK(conj_regular(conj_regular(f))[1] == i);
  const RegularSeries s = symmetrize(f);
  CHECK(s[0] == Quaternion{1.0});
  CHECK(s[1] == Quaternion{});
  CHECK(s[2] == Quaternion{1.0});
  const RegularSeries half({Quaternion{1.0}, -(i * 0.5).conj()});
  const RegularSeries hs = symmetrize(half);
  CHECK(hs[1].norm() == 0.0);
  CHECK(hs[2] == Quaternion{0.25});
  const RegularSeries one_plus_q({Quaternion{1.0}, Quaternion{1.0}});
  CHECK(symmetrize(one_plus_q)[1] == Quaternion{2.0});

  CHECK(reciprocal(RegularSeries::constant(2.0))[0] == Quaternion{0.5});
  const RegularSeries r = reciprocal(RegularSeries({Quaternion{1.0}, Quaternion{-1.0}}), 20);
  for (std::size_t n = 0; n <= 20; ++n) CHECK((r[n] - Quaternion{1.0}).norm() <= 1e-15);
  // (1 + qi/2)^{-*} = Σ qⁿ (-i/2)ⁿ
  const RegularSeries ri = reciprocal(RegularSeries({Quaternion{1.0}, i * 0.5}), 30);
  Quaternion pw{1.0};
  for (std::size_t n = 0; n <= 30; ++n) {
    CHECK((ri[n] - pw).norm() <= 1e-15);
    pw = pw * (i * -0.5);
  }

  CHECK((T_map(RegularSeries({Quaternion{1.0}, Quaternion{2.0}}), j) - j).norm() <= 1e-15);
  CHECK(T_map(f, Quaternion{0.7}) == Quaternion{0.7});
  CHECK(same_sphere(T_map(f, j), j));
}

TEST_CASE("worked values for quotients") {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  const RegularSeries den({Quaternion{1.0}, i * 0.5});
  const RegularSeries num = RegularSeries::linear(i * 0.5);
  CHECK((quotient_eval(den, den, Quaternion{0.2, 0.1, 0.3, 0.0}) - Quaternion{1.0}).norm() <= 1e-15);
  CHECK((quotient_eval(den, num, j) - j).norm() <= 1e-15);
  const Quaternion q{0.3, 0.0, 0.0, 0.4};
  const Quaternion q2 = q * q;
  const Quaternion closed = inverse(q2 + 4.0) * (3.0 * q - 2.0 * (q2 + 1.0) * i);
  CHECK((quotient_eval(den, num, q) - closed).norm() <= 1e-15);
  (void)k;
}

TEST_CASE("worked values for derivatives and division") {
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  const RegularSeries d = derivative(RegularSeries::power(2));
  CHECK(d.truncation() == 1);
  CHECK(d[1] == Quaternion{2.0});
  CHECK(derivative(RegularSeries::constant(3.0))(j) == Quaternion{});
  // n-th derivative at 0 is n!·aₙ
  Gen g(36);
  const RegularSeries f = g.polynomial(5);
  RegularSeries dn = f;
  for (int n = 0; n < 3; ++n) dn = derivative(dn);
  CHECK((dn(Quaternion{}) - f[3] * 6.0).norm() <= 1e-14);

  const RegularSeries e1 = moebius(i * 0.5);
  CHECK((derivative(e1)(j) - (Quaternion{5.0} + 4.0 * k) / 3.0).norm() <= 1e-12);

  const RegularSeries dq = divide_linear(RegularSeries::power(2), j);
  CHECK(dq[0] == j);
  CHECK(dq[1] == Quaternion{1.0});
  const RegularSeries da = divide_linear(RegularSeries({Quaternion{}, k}), Quaternion{});
  CHECK(da[0] == k);
  CHECK((divide_linear(e1, j)(-j) - Quaternion{1.0}).norm() <= 1e-12);
}

TEST_CASE("Möbius worked values") {
  const Quaternion i = Quaternion::i();
  const RegularSeries id = moebius(Quaternion{}, 10);
  CHECK(id[0] == Quaternion{});
  CHECK(id[1] == Quaternion{1.0});
  for (std::size_t n = 2; n <= 10; ++n) CHECK(id[n] == Quaternion{});
  CHECK(moebius(Quaternion{0.5})(Quaternion{}) == Quaternion{-0.5});
  const RegularSeries a = moebius(i * 0.5);
  const RegularSeries b =
      star(reciprocal(RegularSeries({Quaternion{1.0}, i * 0.5}), 128), RegularSeries::linear(i * 0.5), 128);
  for (std::size_t n = 0; n <= 128; ++n) CHECK((a[n] - b[n]).norm() <= 1e-15);
}

TEST_CASE("star product is associative") {
  Gen g(37);
  for (int n = 0; n < 200; ++n) {
    const RegularSeries a = g.polynomial(g.index(0, 8)), b = g.polynomial(g.index(0, 8)),
                        c = g.polynomial(g.index(0, 8));
    const RegularSeries l = star(star(a, b), c), r = star(a, star(b, c));
    const double s = a.scale() * b.scale() * c.scale() * 81;
    for (std::size_t k = 0; k <= l.truncation(); ++k) CHECK((l[k] - r[k]).norm() <= 1e-12 * s);
  }
}

TEST_CASE("modulus of a product") {
  Gen g(38);
  for (int n = 0; n < 500; ++n) {
    const RegularSeries a = g.polynomial(4), b = g.polynomial(4);
    const Quaternion q = g.in_ball();
    const Quaternion aq = a(q);
    const double want = aq.norm() * b(inverse(aq) * q * aq).norm();
    CHECK(std::abs(star(a, b)(q).norm() - want) <= 1e-12 * (1.0 + want) * 25);
  }
}

TEST_CASE("Möbius quotient stays in the ball") {
  Gen g(39);
  for (int n = 0; n < 1000; ++n) {
    const Quaternion u = g.in_ball(0.95);
    const RegularSeries den({Quaternion{1.0}, -u.conj()});
    CHECK(quotient_eval(den, RegularSeries::linear(u), g.in_ball(0.999)).norm() < 1.0);
  }
}

TEST_CASE("holomorphy check on the first worked example and on conjugation") {
  Gen g(40);
  std::vector<std::complex<double>> zs;
  for (int n = 0; n < 50; ++n) zs.emplace_back(g.uniform(-0.6, 0.6), g.uniform(-0.6, 0.6));
  const UnitImaginary k(Quaternion::k());
  CHECK(holomorphy_check(moebius(Quaternion::i() * 0.5), k, zs) <= 1e-8);
  const PointMap bar = [](const Quaternion& q) { return q.conj(); };
  CHECK(std::abs(holomorphy_check(bar, k, zs) - 1.0) <= 1e-6);
}
