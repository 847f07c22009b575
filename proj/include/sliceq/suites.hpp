#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sliceq/geometry.hpp"
#include "sliceq/report.hpp"
#include "sliceq/series.hpp"
#include "sliceq/slice_map.hpp"

namespace sliceq {

// ---------------------------------------------------------------------------
// Function generators. Map i of a generator is a pure function of (seed, i).

/// *-product of 1..3 Möbius factors with |uᵢ| <= 0.6, a qᵐ factor with
/// m in [min_power, min_power + 2], and a right unimodular constant.
RegularSeries random_blaschke(std::uint64_t seed, std::uint64_t index, std::size_t truncation,
                              std::size_t min_power = 0);

/// moebius(u)·c with |u| <= 0.6 and |c| = 1.
RegularSeries random_moebius(std::uint64_t seed, std::uint64_t index, std::size_t truncation);

/// Polynomial of degree <= 8 with Σ|aₙ| = s in [0.3, 0.99]; some draws have
/// one or two leading coefficients equal to zero.
RegularSeries random_bounded(std::uint64_t seed, std::uint64_t index);

/// The map of the first worked example: moebius(i/2).
RegularSeries example1(std::size_t truncation = kDefaultTruncation);
/// The second worked example: -q·example1(q)·j, by shifting coefficients.
RegularSeries example2(std::size_t truncation = kDefaultTruncation);

struct NamedSeries {
  std::string name;
  RegularSeries f;
};

/// Explicit corpus: both worked examples, the identity and q², q³.
std::vector<NamedSeries> explicit_corpus(std::size_t truncation);

// ---------------------------------------------------------------------------
// Worked-example table

struct ExampleRow {
  std::string label;
  Quaternion computed;
  Quaternion expected;
  std::string expected_text;
  bool pass(double tol = 1e-10) const { return (computed - expected).norm() <= tol; }
};

std::vector<ExampleRow> example_rows(std::size_t truncation = kDefaultTruncation);

// ---------------------------------------------------------------------------
// Suites

inline const std::vector<std::string> kSuiteNames = {
    "schwarz_pick", "julia",     "julia_caratheodory", "hopf",           "lindelof",
    "boundary_schwarz", "halfspace", "rigidity",       "paper_examples", "all"};

struct SuiteOptions {
  std::optional<RegularSeries> ball_fn;  // replaces the generated corpus
  std::optional<SliceMap> half_fn;
  std::vector<double> k_values{0.5, 1.0, 2.0};
  double gamma = 0.5;
};

/// Runs a named suite. Throws InvalidArgument for an unknown name.
Report run_suite(const std::string& name, const SampleConfig& cfg, const SuiteOptions& opt = {});

}  // namespace sliceq
