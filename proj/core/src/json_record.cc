// Copyright 2026 The cablegrip Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "json_record.h"

#include <cmath>

namespace cablegrip::internal {

Json ParseDocument(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("document", std::string("syntax error: ") + e.what());
  }
}

RecordReader::RecordReader(const Json& json, std::string record)
    : json_(json), record_(std::move(record)) {
  if (!json_.is_object()) Fail("expected an object");
}

void RecordReader::Fail(const std::string& what) const {
  throw ValidationError(record_, what);
}

bool RecordReader::Has(std::string_view key) const {
  return json_.contains(std::string(key));
}

const Json& RecordReader::Require(const std::string& key) {
  auto it = json_.find(key);
  if (it == json_.end()) Fail("missing field '" + key + "'");
  used_.insert(key);
  return *it;
}

std::string RecordReader::UnitKey(std::string_view name, std::string_view unit) {
  std::string key = std::string(name) + "_" + std::string(unit);
  if (json_.contains(key)) return key;
  const std::string prefix = std::string(name) + "_";
  for (auto it = json_.begin(); it != json_.end(); ++it) {
    if (it.key().rfind(prefix, 0) == 0) {
      Fail("bad unit in '" + it.key() + "': expected '" + key + "'");
    }
  }
  Fail("missing field '" + key + "'");
}

double RecordReader::Number(std::string_view name, std::string_view unit) {
  const std::string key = UnitKey(name, unit);
  const Json& v = Require(key);
  if (!v.is_number()) Fail("'" + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) Fail("'" + key + "' must be finite");
  return d;
}

double RecordReader::NumberOr(std::string_view name, std::string_view unit,
                              double fallback) {
  const std::string prefix = std::string(name) + "_";
  for (auto it = json_.begin(); it != json_.end(); ++it) {
    if (it.key().rfind(prefix, 0) == 0) return Number(name, unit);
  }
  return fallback;
}

Vec3 RecordReader::Vector(std::string_view name, std::string_view unit) {
  const std::string key = UnitKey(name, unit);
  const Json& v = Require(key);
  if (!v.is_array() || v.size() != 3) Fail("'" + key + "' must be a 3-vector");
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    if (!v[i].is_number()) Fail("'" + key + "' must hold numbers");
    out[i] = v[i].get<double>();
  }
  if (!out.allFinite()) Fail("'" + key + "' must be finite");
  return out;
}

std::pair<double, double> RecordReader::Range(std::string_view name,
                                              std::string_view unit) {
  const std::string key = UnitKey(name, unit);
  const Json& v = Require(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    Fail("'" + key + "' must be [min, max]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

std::string RecordReader::String(std::string_view key) {
  const Json& v = Require(std::string(key));
  if (!v.is_string()) Fail("'" + std::string(key) + "' must be a string");
  return v.get<std::string>();
}

bool RecordReader::Bool(std::string_view key) {
  const Json& v = Require(std::string(key));
  if (!v.is_boolean()) Fail("'" + std::string(key) + "' must be true or false");
  return v.get<bool>();
}

Pose RecordReader::PoseField(std::string_view key) {
  RecordReader p(Require(std::string(key)), record_ + "." + std::string(key));
  const Vec3 t = p.Vector("translation", "mm");
  const std::string qkey = "quaternion_wxyz";
  const Json& qj = p.Require(qkey);
  if (!qj.is_array() || qj.size() != 4) p.Fail("'" + qkey + "' must hold w, x, y, z");
  double q[4];
  for (int i = 0; i < 4; ++i) {
    if (!qj[i].is_number()) p.Fail("'" + qkey + "' must hold numbers");
    q[i] = qj[i].get<double>();
  }
  const double norm = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  if (!(norm > 1e-6) || !std::isfinite(norm)) p.Fail("quaternion has zero norm");
  p.Finish();
  return Pose::FromQuaternion(Eigen::Quaterniond(q[0], q[1], q[2], q[3]), t);
}

const Json& RecordReader::Array(std::string_view key) {
  const Json& v = Require(std::string(key));
  if (!v.is_array()) Fail("'" + std::string(key) + "' must be a list");
  return v;
}

const Json& RecordReader::Object(std::string_view key) {
  const Json& v = Require(std::string(key));
  if (!v.is_object()) Fail("'" + std::string(key) + "' must be an object");
  return v;
}

const Json* RecordReader::OptionalObject(std::string_view key) {
  if (!Has(key)) return nullptr;
  const Json& v = Require(std::string(key));
  if (v.is_null()) return nullptr;
  if (!v.is_object()) Fail("'" + std::string(key) + "' must be an object or null");
  return &v;
}

void RecordReader::Finish() const {
  for (auto it = json_.begin(); it != json_.end(); ++it) {
    if (!used_.count(it.key())) Fail("unknown field '" + it.key() + "'");
  }
}

Json VecToJson(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

Json PoseToJson(const Pose& pose) {
  const Eigen::Quaterniond q = pose.quaternion();
  Json j = Json::object();
  j["translation_mm"] = VecToJson(pose.translation());
  j["quaternion_wxyz"] = Json::array({q.w(), q.x(), q.y(), q.z()});
  return j;
}

}  // namespace cablegrip::internal
