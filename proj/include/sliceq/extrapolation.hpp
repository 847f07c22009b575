#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>

#include "sliceq/quaternion.hpp"

namespace sliceq {

template <typename T>
struct Extrapolated {
  T raw{};           // last value of the sequence
  T extrapolated{};  // first-order Richardson estimate of the limit
  std::size_t level = 0;
};

namespace detail {
inline double size_of(double v) { return std::abs(v); }
inline double size_of(const Quaternion& v) { return v.norm(); }
}  // namespace detail

/// Limit of a sequence sampled at step sizes h, h/2, h/4, ... under the error
/// model v(h) = L + c·h. Each pair gives E_m = 2v_m - v_{m-1}; the reported
/// estimate is the E_m that moved least from its predecessor, which balances
/// the O(h²) model error against rounding that grows like 1/h.
template <typename T>
Extrapolated<T> richardson(std::span<const T> values) {
  Extrapolated<T> out;
  if (values.empty()) return out;
  out.raw = values.back();
  out.extrapolated = values.back();
  out.level = values.size() - 1;
  if (values.size() < 3) {
    if (values.size() == 2) out.extrapolated = values[1] * 2.0 - values[0];
    return out;
  }
  double best = std::numeric_limits<double>::infinity();
  T prev = values[1] * 2.0 - values[0];
  for (std::size_t m = 2; m < values.size(); ++m) {
    const T cur = values[m] * 2.0 - values[m - 1];
    const double change = detail::size_of(cur - prev);
    if (change <= best) {
      best = change;
      out.extrapolated = cur;
      out.level = m;
    }
    prev = cur;
  }
  return out;
}

}  // namespace sliceq
