#pragma once

#include <string>

#include "sliceq/boundary.hpp"
#include "sliceq/series.hpp"

namespace sliceq {

/// {"truncation": N, "coeffs": [[x0,x1,x2,x3], ...], "truncated": bool}.
/// Doubles are written in shortest round-trip form, so a dump followed by a
/// load reproduces the coefficients bit for bit. "truncated" is optional on
/// input.
std::string coeffs_to_json(const RegularSeries& f);
RegularSeries coeffs_from_json(const std::string& text);

/// File versions; IoError when the file cannot be read or written.
void save_coeffs(const RegularSeries& f, const std::string& path);
RegularSeries load_coeffs(const std::string& path);

/// {"q0": [..], "A": [[..], ...]}
std::string jet_to_json(const SphericalJet& jet);

}  // namespace sliceq
