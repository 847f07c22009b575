#include "sliceq/slice_map.hpp"

#include <algorithm>

#include "sliceq/error.hpp"
#include "sliceq/geometry.hpp"

namespace sliceq {

SliceMap::SliceMap(Fn value, Fn conj_value, std::string name)
    : value_(std::make_shared<const Fn>(std::move(value))),
      conj_(std::make_shared<const Fn>(std::move(conj_value))),
      name_(std::move(name)) {}

SliceMap SliceMap::identity() {
  auto id = [](const Quaternion& q) { return q; };
  return SliceMap(id, id, "q");
}

SliceMap SliceMap::constant(const Quaternion& c) {
  return SliceMap([c](const Quaternion&) { return c; },
                  [cb = c.conj()](const Quaternion&) { return cb; }, to_string(c));
}

SliceMap SliceMap::affine(const Quaternion& a, const Quaternion& b) {
  return SliceMap([a, b](const Quaternion& q) { return q * a + b; },
                  [ab = a.conj(), bb = b.conj()](const Quaternion& q) { return q * ab + bb; },
                  "affine");
}

SliceMap SliceMap::power(std::size_t n) {
  auto pw = [n](const Quaternion& q) {
    Quaternion acc{1.0};
    for (std::size_t k = 0; k < n; ++k) acc = acc * q;
    return acc;
  };
  return SliceMap(pw, pw, "pow(" + std::to_string(n) + ")");
}

SliceMap SliceMap::slice_preserving(Fn value, std::string name) {
  Fn copy = value;
  return SliceMap(std::move(value), std::move(copy), std::move(name));
}

SliceMap SliceMap::from_series(const RegularSeries& f, std::string name) {
  return SliceMap([f](const Quaternion& q) { return f(q); },
                  [fc = conj_regular(f)](const Quaternion& q) { return fc(q); },
                  std::move(name));
}

SliceMap SliceMap::compose_cayley(const RegularSeries& f) {
  return SliceMap([f](const Quaternion& q) { return f(cayley(q)); },
                  [fc = conj_regular(f)](const Quaternion& q) { return fc(cayley(q)); },
                  "F∘φ");
}

SliceMap SliceMap::cayley_conjugate(const RegularSeries& f) {
  const SliceMap g = compose_cayley(f);
  const SliceMap one = constant(Quaternion{1.0});
  SliceMap h = quotient(one + g, one - g);
  return SliceMap([h](const Quaternion& q) { return h(q); },
                  [h](const Quaternion& q) { return h.conj_at(q); }, "cayley_conj");
}

Quaternion SliceMap::derivative(const Quaternion& q, double h) const {
  const double t = h * std::max(1.0, q.norm());
  return ((*this)(q + t) - (*this)(q - t)) / (2.0 * t);
}

SliceMap operator+(const SliceMap& f, const SliceMap& g) {
  return SliceMap([f, g](const Quaternion& q) { return f(q) + g(q); },
                  [f, g](const Quaternion& q) { return f.conj_at(q) + g.conj_at(q); },
                  "sum(" + f.name() + "," + g.name() + ")");
}

SliceMap operator-(const SliceMap& f, const SliceMap& g) {
  return SliceMap([f, g](const Quaternion& q) { return f(q) - g(q); },
                  [f, g](const Quaternion& q) { return f.conj_at(q) - g.conj_at(q); },
                  "diff(" + f.name() + "," + g.name() + ")");
}

namespace {

// a * b at q for pointwise values a(q), b(·).
Quaternion star_at(const Quaternion& aq, const SliceMap::Fn& b, const Quaternion& q) {
  if (aq == Quaternion{}) return {};
  return aq * b(inverse(aq) * q * aq);
}

}  // namespace

SliceMap star(const SliceMap& f, const SliceMap& g) {
  return SliceMap(
      [f, g](const Quaternion& q) {
        return star_at(f(q), [&g](const Quaternion& p) { return g(p); }, q);
      },
      [f, g](const Quaternion& q) {
        // (f * g)^c = g^c * f^c
        return star_at(g.conj_at(q), [&f](const Quaternion& p) { return f.conj_at(p); }, q);
      },
      "star(" + f.name() + "," + g.name() + ")");
}

SliceMap rmul(const SliceMap& f, const Quaternion& c) { return star(f, SliceMap::constant(c)); }

double symmetrization_modulus(const SliceMap& f, const Quaternion& q) {
  const Quaternion fc = f.conj_at(q);
  if (fc == Quaternion{}) return 0.0;
  return fc.norm() * f(inverse(fc) * q * fc).norm();
}

Quaternion quotient_eval(const SliceMap& den, const SliceMap& num, const Quaternion& q,
                         double eps) {
  const Quaternion dc = den.conj_at(q);
  if (!(dc.norm() > eps)) {
    throw SliceError(ErrorKind::NearZeroSet, "denominator conjugate vanishes at " + to_string(q));
  }
  const Quaternion t = inverse(dc) * q * dc;
  const Quaternion dt = den(t);
  if (!(dt.norm() > eps * std::max(1.0, dc.norm()))) {
    throw SliceError(ErrorKind::NearZeroSet, "denominator symmetrisation vanishes near " +
                                                 to_string(q));
  }
  return inverse(dt) * num(t);
}

SliceMap quotient(const SliceMap& den, const SliceMap& num) {
  auto value = [den, num](const Quaternion& q) { return quotient_eval(den, num, q); };
  auto conj_value = [den, num](const Quaternion& q) {
    // (den^{-*} * num)^c = num^c * (den^c)^{-*} = (den^s)⁻¹ (num^c * den), where
    // den^s has real coefficients and so multiplies pointwise.
    const Quaternion dq = den(q);
    const Quaternion ds =
        star_at(dq, [&den](const Quaternion& p) { return den.conj_at(p); }, q);
    if (!(ds.norm() > kEpsDen)) {
      throw SliceError(ErrorKind::NearZeroSet, "denominator symmetrisation vanishes at " +
                                                   to_string(q));
    }
    const Quaternion nc_den =
        star_at(num.conj_at(q), [&den](const Quaternion& p) { return den(p); }, q);
    return inverse(ds) * nc_den;
  };
  return SliceMap(value, conj_value, "quot(" + den.name() + "," + num.name() + ")");
}

SliceMap reciprocal(const SliceMap& f) { return quotient(f, SliceMap::constant(Quaternion{1.0})); }

}  // namespace sliceq
