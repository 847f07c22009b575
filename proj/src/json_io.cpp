#include "sliceq/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sliceq/error.hpp"

namespace sliceq {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json quat_json(const Quaternion& q) { return ordered_json::array({q.x0, q.x1, q.x2, q.x3}); }

Quaternion quat_from(const ordered_json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw SliceError(ErrorKind::ParseError, "quaternion must be a 4-element array");
  }
  for (const auto& x : j) {
    if (!x.is_number()) throw SliceError(ErrorKind::ParseError, "quaternion entries must be numbers");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

}  // namespace

std::string coeffs_to_json(const RegularSeries& f) {
  ordered_json j;
  j["truncation"] = f.truncation();
  ordered_json cs = ordered_json::array();
  for (const auto& c : f.coeffs()) cs.push_back(quat_json(c));
  j["coeffs"] = std::move(cs);
  j["truncated"] = f.truncated();
  return j.dump(2);
}

RegularSeries coeffs_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SliceError(ErrorKind::ParseError, std::string("coefficient file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty()) {
    throw SliceError(ErrorKind::ParseError, "coefficient file needs a non-empty \"coeffs\" array");
  }
  std::vector<Quaternion> cs;
  for (const auto& c : j["coeffs"]) cs.push_back(quat_from(c));
  if (j.contains("truncation")) {
    if (!j["truncation"].is_number_unsigned() || j["truncation"].get<std::size_t>() + 1 != cs.size()) {
      throw SliceError(ErrorKind::ParseError, "\"truncation\" must equal len(coeffs) - 1");
    }
  }
  const bool truncated = j.contains("truncated") && j["truncated"].is_boolean() &&
                         j["truncated"].get<bool>();
  return RegularSeries(std::move(cs), truncated);
}

void save_coeffs(const RegularSeries& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SliceError(ErrorKind::IoError, "cannot write " + path);
  out << coeffs_to_json(f) << "\n";
  if (!out) throw SliceError(ErrorKind::IoError, "write failed for " + path);
}

RegularSeries load_coeffs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SliceError(ErrorKind::IoError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return coeffs_from_json(ss.str());
}

std::string jet_to_json(const SphericalJet& jet) {
  ordered_json j;
  j["q0"] = quat_json(jet.q0);
  ordered_json as = ordered_json::array();
  for (const auto& a : jet.A) as.push_back(quat_json(a));
  j["A"] = std::move(as);
  return j.dump();
}

}  // namespace sliceq
