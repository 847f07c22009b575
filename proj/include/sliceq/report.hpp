#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sliceq/quaternion.hpp"

namespace sliceq {

struct SampleConfig {
  std::uint64_t seed = 0;
  std::size_t count = 1000;    // sample points per function
  std::size_t maps = 100;      // functions drawn from a generator
  std::size_t truncation = 128;
  double tol_eq = 1e-8;
  double tol_strict = -1e-9;   // floor for "≥ 0 up to rounding"
  int K_radial = 24;
  unsigned workers = 1;        // never affects results

  void validate() const;
};

struct Witness {
  std::string check;
  Quaternion point;
  double margin = 0.0;
  Quaternion value;
  bool violation = false;
};

/// Outcome of a verification suite. pass ⟺ violations == 0.
struct Report {
  std::string suite;
  SampleConfig config;
  std::size_t samples = 0;
  double min_margin = 0.0;
  std::size_t violations = 0;
  std::vector<Witness> witnesses;

  bool pass() const { return violations == 0; }
};

/// Accumulates margins in a fixed order. Inequality margins violate below
/// tol_strict; equality margins violate when |margin| > tol_eq. Keeps the
/// worst sample and up to kMaxWitnesses violations as witnesses; merged
/// violations take priority over merged worst-sample entries.
class ReportBuilder {
 public:
  static constexpr std::size_t kMaxWitnesses = 16;

  ReportBuilder(std::string suite, const SampleConfig& cfg);

  /// Returns true when the sample passed.
  bool inequality(const std::string& check, const Quaternion& point, double margin,
                  const Quaternion& value = {});
  bool equality(const std::string& check, const Quaternion& point, double deviation,
                const Quaternion& value = {});
  /// A boolean check with an explicit margin (violation iff !ok).
  bool flag(const std::string& check, const Quaternion& point, bool ok, double margin,
            const Quaternion& value = {});
  void merge(const Report& other);

  Report finish() const;

 private:
  void record(const std::string& check, const Quaternion& point, double margin,
              const Quaternion& value, bool ok);

  Report report_;
  bool have_min_ = false;
  Witness worst_;
};

/// Several suite reports folded into one.
Report combine(const std::string& suite, const SampleConfig& cfg,
               const std::vector<Report>& parts);

/// JSON with key order {suite, config, samples, min_margin, violations,
/// witnesses, pass}; quaternions as 4-arrays.
std::string to_json(const Report& r, int indent = 2);
std::string to_text(const Report& r);

}  // namespace sliceq
