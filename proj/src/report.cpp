#include "sliceq/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "sliceq/error.hpp"

namespace sliceq {

using ordered_json = nlohmann::ordered_json;

void SampleConfig::validate() const {
  if (count < 1 || maps < 1) {
    throw SliceError(ErrorKind::InvalidArgument, "sample and map counts must be >= 1");
  }
  if (!(tol_eq > 0.0) || !(tol_strict <= 0.0)) {
    throw SliceError(ErrorKind::InvalidArgument, "tol_eq must be > 0 and tol_strict <= 0");
  }
  if (K_radial < 6) throw SliceError(ErrorKind::InvalidArgument, "K_radial must be >= 6");
}

ReportBuilder::ReportBuilder(std::string suite, const SampleConfig& cfg) {
  report_.suite = std::move(suite);
  report_.config = cfg;
}

void ReportBuilder::record(const std::string& check, const Quaternion& point, double margin,
                           const Quaternion& value, bool ok) {
  ++report_.samples;
  if (std::isnan(margin)) margin = -std::numeric_limits<double>::infinity();
  const Witness w{check, point, margin, value, !ok};
  if (!ok) {
    ++report_.violations;
    if (report_.witnesses.size() < kMaxWitnesses) report_.witnesses.push_back(w);
  }
  if (!have_min_ || margin < report_.min_margin) {
    report_.min_margin = margin;
    worst_ = w;
    have_min_ = true;
  }
}

bool ReportBuilder::inequality(const std::string& check, const Quaternion& point, double margin,
                               const Quaternion& value) {
  const bool ok = margin >= report_.config.tol_strict;  // NaN fails
  record(check, point, margin, value, ok);
  return ok;
}

bool ReportBuilder::equality(const std::string& check, const Quaternion& point,
                             double deviation, const Quaternion& value) {
  const bool ok = std::abs(deviation) <= report_.config.tol_eq;
  // Stored as a margin so that min_margin keeps "negative means bad".
  record(check, point, report_.config.tol_eq - std::abs(deviation), value, ok);
  return ok;
}

bool ReportBuilder::flag(const std::string& check, const Quaternion& point, bool ok,
                         double margin, const Quaternion& value) {
  record(check, point, margin, value, ok);
  return ok;
}

void ReportBuilder::merge(const Report& other) {
  if (other.samples == 0) return;
  report_.samples += other.samples;
  report_.violations += other.violations;
  for (const auto& w : other.witnesses) {
    if (w.violation && report_.witnesses.size() < kMaxWitnesses) report_.witnesses.push_back(w);
  }
  if (!have_min_ || other.min_margin < report_.min_margin) {
    report_.min_margin = other.min_margin;
    have_min_ = true;
    for (const auto& w : other.witnesses) {
      if (w.margin == other.min_margin) {
        worst_ = w;
        break;
      }
    }
  }
}

Report ReportBuilder::finish() const {
  Report r = report_;
  // The worst sample is always reported, even when every check passed.
  if (have_min_ && !worst_.check.empty() && r.witnesses.size() < kMaxWitnesses) {
    bool present = false;
    for (const auto& w : r.witnesses) {
      present = present || (w.check == worst_.check && w.point == worst_.point);
    }
    if (!present) r.witnesses.push_back(worst_);
  }
  return r;
}

Report combine(const std::string& suite, const SampleConfig& cfg,
               const std::vector<Report>& parts) {
  ReportBuilder b(suite, cfg);
  for (const auto& p : parts) b.merge(p);
  return b.finish();
}

namespace {

ordered_json quat_json(const Quaternion& q) { return ordered_json::array({q.x0, q.x1, q.x2, q.x3}); }

ordered_json config_json(const SampleConfig& c) {
  ordered_json j;
  j["seed"] = c.seed;
  j["count"] = c.count;
  j["maps"] = c.maps;
  j["truncation"] = c.truncation;
  j["tol_eq"] = c.tol_eq;
  j["tol_strict"] = c.tol_strict;
  j["K_radial"] = c.K_radial;
  j["liminf"] = "minimum over the computed tail of the dyadic radial or ray sequence";
  return j;
}

}  // namespace

std::string to_json(const Report& r, int indent) {
  ordered_json j;
  j["suite"] = r.suite;
  j["config"] = config_json(r.config);
  j["samples"] = r.samples;
  j["min_margin"] = r.min_margin;
  j["violations"] = r.violations;
  ordered_json ws = ordered_json::array();
  for (const auto& w : r.witnesses) {
    ordered_json wj;
    wj["check"] = w.check;
    wj["point"] = quat_json(w.point);
    wj["margin"] = w.margin;
    wj["value"] = quat_json(w.value);
    wj["violation"] = w.violation;
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);
  j["pass"] = r.pass();
  return j.dump(indent);
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-20s samples=%-8zu min_margin=% .6e violations=%-6zu %s\n",
                r.suite.c_str(), r.samples, r.min_margin, r.violations,
                r.pass() ? "PASS" : "FAIL");
  os << line;
  for (const auto& w : r.witnesses) {
    if (!w.violation) continue;
    os << "  witness " << w.check << " at " << to_string(w.point) << " margin " << w.margin
       << "\n";
  }
  return os.str();
}

}  // namespace sliceq
