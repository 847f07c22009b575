#include "sliceq/series.hpp"

#include <algorithm>
#include <limits>

#include "sliceq/error.hpp"

namespace sliceq {

RegularSeries::RegularSeries(std::vector<Quaternion> coeffs, bool truncated)
    : coeffs_(std::move(coeffs)), truncated_(truncated) {
  if (coeffs_.empty()) {
    throw SliceError(ErrorKind::InvalidArgument, "series needs at least one coefficient");
  }
  for (const auto& a : coeffs_) {
    if (!a.finite()) throw SliceError(ErrorKind::InvalidArgument, "non-finite coefficient");
  }
}

RegularSeries RegularSeries::power(std::size_t n) {
  std::vector<Quaternion> c(n + 1);
  c[n] = Quaternion{1.0};
  return RegularSeries(std::move(c));
}

double RegularSeries::scale() const {
  double s = 0.0;
  for (const auto& a : coeffs_) s = std::max(s, a.norm());
  return std::max(s, std::numeric_limits<double>::min());
}

Quaternion RegularSeries::eval(const Quaternion& q) const {
  Quaternion acc = coeffs_.back();
  for (std::size_t n = coeffs_.size() - 1; n-- > 0;) {
    acc = q * acc + coeffs_[n];
  }
  return acc;
}

RegularSeries RegularSeries::with_truncation(std::size_t n) const {
  std::vector<Quaternion> c(n + 1);
  bool dropped = truncated_;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k <= n) {
      c[k] = coeffs_[k];
    } else if (coeffs_[k] != Quaternion{}) {
      dropped = true;
    }
  }
  return RegularSeries(std::move(c), dropped);
}

namespace {

template <typename Op>
RegularSeries combine(const RegularSeries& f, const RegularSeries& g, Op op) {
  const std::size_t n = std::max(f.truncation(), g.truncation());
  std::vector<Quaternion> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = op(f.coeff(k), g.coeff(k));
  return RegularSeries(std::move(c), f.truncated() || g.truncated());
}

}  // namespace

RegularSeries operator+(const RegularSeries& f, const RegularSeries& g) {
  return combine(f, g, [](const Quaternion& a, const Quaternion& b) { return a + b; });
}

RegularSeries operator-(const RegularSeries& f, const RegularSeries& g) {
  return combine(f, g, [](const Quaternion& a, const Quaternion& b) { return a - b; });
}

RegularSeries operator-(const RegularSeries& f) {
  std::vector<Quaternion> c(f.coeffs().begin(), f.coeffs().end());
  for (auto& a : c) a = -a;
  return RegularSeries(std::move(c), f.truncated());
}

RegularSeries operator*(const RegularSeries& f, const Quaternion& c) {
  std::vector<Quaternion> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& a : out) a = a * c;
  return RegularSeries(std::move(out), f.truncated());
}

RegularSeries operator*(double r, const RegularSeries& f) {
  std::vector<Quaternion> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& a : out) a *= r;
  return RegularSeries(std::move(out), f.truncated());
}

RegularSeries shift(const RegularSeries& f, std::size_t m) {
  std::vector<Quaternion> c(f.truncation() + m + 1);
  std::copy(f.coeffs().begin(), f.coeffs().end(), c.begin() + static_cast<std::ptrdiff_t>(m));
  return RegularSeries(std::move(c), f.truncated());
}

RegularSeries star(const RegularSeries& f, const RegularSeries& g, std::size_t cap) {
  const std::size_t nf = f.truncation();
  const std::size_t ng = g.truncation();
  const std::size_t full = nf + ng;
  const std::size_t n = std::min(full, std::max({nf, ng, cap}));
  std::vector<Quaternion> c(n + 1);
  bool dropped = f.truncated() || g.truncated();
  for (std::size_t m = 0; m <= full; ++m) {
    Quaternion acc;
    const std::size_t lo = m > ng ? m - ng : 0;
    const std::size_t hi = std::min(m, nf);
    for (std::size_t k = lo; k <= hi; ++k) acc += f[k] * g[m - k];
    if (m <= n) {
      c[m] = acc;
    } else if (acc != Quaternion{}) {
      dropped = true;
    }
  }
  return RegularSeries(std::move(c), dropped);
}

Quaternion pointwise_star(const RegularSeries& f, const RegularSeries& g, const Quaternion& q) {
  const Quaternion fq = f(q);
  if (fq == Quaternion{}) return {};
  return fq * g(inverse(fq) * q * fq);
}

RegularSeries conj_regular(const RegularSeries& f) {
  std::vector<Quaternion> c(f.coeffs().begin(), f.coeffs().end());
  for (auto& a : c) a = a.conj();
  return RegularSeries(std::move(c), f.truncated());
}

RegularSeries symmetrize(const RegularSeries& f) { return star(f, conj_regular(f)); }

std::vector<double> real_series_inverse(std::span<const double> s, std::size_t n) {
  const double scale = std::max(1e-300, std::abs(*std::max_element(
                                            s.begin(), s.end(), [](double a, double b) {
                                              return std::abs(a) < std::abs(b);
                                            })));
  if (s.empty() || !(std::abs(s[0]) > kEpsDen * scale)) {
    throw SliceError(ErrorKind::ZeroConstantTerm, "series constant term vanishes");
  }
  std::vector<double> t(n + 1);
  t[0] = 1.0 / s[0];
  for (std::size_t m = 1; m <= n; ++m) {
    double acc = 0.0;
    const std::size_t top = std::min(m, s.size() - 1);
    for (std::size_t k = 1; k <= top; ++k) acc += s[k] * t[m - k];
    t[m] = -acc * t[0];
  }
  return t;
}

RegularSeries reciprocal(const RegularSeries& f, std::size_t truncation) {
  if (!(f[0].norm() > kEpsDen * f.scale())) {
    throw SliceError(ErrorKind::ZeroConstantTerm, "reciprocal needs a nonzero constant term");
  }
  const RegularSeries fs = symmetrize(f);
  std::vector<double> s(fs.truncation() + 1);
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = fs[k].x0;
  // One extra order tells us whether the infinite series was cut short.
  const std::vector<double> t = real_series_inverse(s, truncation + 1);
  std::vector<Quaternion> tq(t.begin(), t.end());
  const RegularSeries inv_s(std::move(tq));
  const RegularSeries r = star(inv_s, conj_regular(f), truncation + 1);
  std::vector<Quaternion> out(r.coeffs().begin(), r.coeffs().begin() +
                                                      static_cast<std::ptrdiff_t>(truncation + 1));
  bool dropped = f.truncated();
  for (std::size_t k = truncation + 1; k <= r.truncation(); ++k) {
    dropped = dropped || r[k] != Quaternion{};
  }
  return RegularSeries(std::move(out), dropped);
}

Quaternion T_map(const RegularSeries& f, const Quaternion& q) {
  const Quaternion fc = conj_regular(f)(q);
  if (!(fc.norm() > kEpsDen * f.scale())) {
    throw SliceError(ErrorKind::ZeroDenominator, "f^c vanishes at " + to_string(q));
  }
  return inverse(fc) * q * fc;
}

double symmetrization_modulus(const RegularSeries& f, const Quaternion& q) {
  const Quaternion fc = conj_regular(f)(q);
  if (fc == Quaternion{}) return 0.0;
  const Quaternion t = inverse(fc) * q * fc;
  return fc.norm() * f(t).norm();
}

Quaternion quotient_eval(const RegularSeries& f, const RegularSeries& g, const Quaternion& q,
                         double eps) {
  const double sc = f.scale();
  const Quaternion fc = conj_regular(f)(q);
  if (!(fc.norm() > eps * sc)) {
    throw SliceError(ErrorKind::NearZeroSet, "f^c vanishes at " + to_string(q));
  }
  const Quaternion t = inverse(fc) * q * fc;
  const Quaternion ft = f(t);
  if (!(fc.norm() * ft.norm() > eps * sc * sc)) {
    throw SliceError(ErrorKind::NearZeroSet, "f^s vanishes near " + to_string(q));
  }
  return inverse(ft) * g(t);
}

RegularSeries derivative(const RegularSeries& f) {
  const std::size_t n = f.truncation();
  if (n == 0) return RegularSeries({Quaternion{}}, f.truncated());
  std::vector<Quaternion> c(n);
  for (std::size_t k = 1; k <= n; ++k) c[k - 1] = f[k] * static_cast<double>(k);
  return RegularSeries(std::move(c), f.truncated());
}

RegularSeries divide_linear(const RegularSeries& f, const Quaternion& q0, double tol) {
  const std::size_t n = f.truncation();
  const Quaternion fq0 = f(q0);
  if (n == 0) {
    return RegularSeries({Quaternion{}}, f.truncated());
  }
  std::vector<Quaternion> b(n);
  b[n - 1] = f[n];
  for (std::size_t m = n - 1; m >= 1; --m) {
    b[m - 1] = f[m] + q0 * b[m];
  }
  const Quaternion residual = (f[0] - fq0) + q0 * b[0];
  const double scale = std::max(f.scale(), fq0.norm());
  if (!(residual.norm() <= tol * scale)) {
    throw SliceError(ErrorKind::ResidualTooLarge,
                     "linear division residual " + std::to_string(residual.norm()));
  }
  return RegularSeries(std::move(b), f.truncated());
}

RegularSeries moebius(const Quaternion& u, std::size_t truncation) {
  if (!(u.norm() < 1.0)) {
    throw SliceError(ErrorKind::ParameterOutOfBall, "moebius parameter " + to_string(u));
  }
  std::vector<Quaternion> c(std::max<std::size_t>(truncation, 1) + 1);
  c[0] = -u;
  const Quaternion ub = u.conj();
  const double w = 1.0 - u.norm2();
  Quaternion p{1.0};
  for (std::size_t n = 1; n < c.size(); ++n) {
    c[n] = p * w;
    p = p * ub;
  }
  // p now holds ū^N, the first dropped power.
  return RegularSeries(std::move(c), p != Quaternion{});
}

RegularSeries moebius_fixing_one(const Quaternion& u, std::size_t truncation) {
  const Quaternion one{1.0};
  return moebius(u, truncation) * ((one - u.conj()) * inverse(one - u));
}

double tail_mass(const RegularSeries& f) {
  double s = 0.0;
  for (std::size_t n = f.truncation() / 2 + 1; n <= f.truncation(); ++n) s += f[n].norm();
  return s;
}

double holomorphy_check(const PointMap& f, const UnitImaginary& unit,
                        std::span<const std::complex<double>> samples, double h) {
  const Quaternion I = unit.value();
  double worst = 0.0;
  for (const auto& z : samples) {
    const double x = z.real();
    const double y = z.imag();
    const Quaternion dx = (f(on_slice(x + h, y, I)) - f(on_slice(x - h, y, I))) / (2.0 * h);
    const Quaternion dy = (f(on_slice(x, y + h, I)) - f(on_slice(x, y - h, I))) / (2.0 * h);
    worst = std::max(worst, ((dx + I * dy) * 0.5).norm());
  }
  return worst;
}

double holomorphy_check(const RegularSeries& f, const UnitImaginary& unit,
                        std::span<const std::complex<double>> samples, double h) {
  return holomorphy_check([&f](const Quaternion& q) { return f(q); }, unit, samples, h);
}

}  // namespace sliceq
