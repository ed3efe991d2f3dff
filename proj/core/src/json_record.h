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

// Helpers shared by the scene and task readers: typed field access with
// unit-suffixed keys and record-scoped error messages.

#ifndef CABLEGRIP_SRC_JSON_RECORD_H_
#define CABLEGRIP_SRC_JSON_RECORD_H_

#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "cablegrip/errors.h"
#include "cablegrip/pose.h"
#include "json.hpp"

namespace cablegrip::internal {

using Json = nlohmann::ordered_json;

// Parses `text`; throws ValidationError("document", ...) on syntax errors.
Json ParseDocument(std::string_view text);

class RecordReader {
 public:
  RecordReader(const Json& json, std::string record);

  const std::string& record() const { return record_; }
  bool Has(std::string_view key) const;

  // `name`_`unit` must be present; a sibling key `name`_<other> reports a
  // bad unit instead of a missing field.
  double Number(std::string_view name, std::string_view unit);
  double NumberOr(std::string_view name, std::string_view unit, double fallback);
  Vec3 Vector(std::string_view name, std::string_view unit);
  std::pair<double, double> Range(std::string_view name, std::string_view unit);
  std::string String(std::string_view key);
  bool Bool(std::string_view key);
  Pose PoseField(std::string_view key);
  const Json& Array(std::string_view key);
  const Json& Object(std::string_view key);
  // Null or absent -> nullptr.
  const Json* OptionalObject(std::string_view key);

  // Rejects keys that were never read.
  void Finish() const;

  [[noreturn]] void Fail(const std::string& what) const;

 private:
  const Json& Require(const std::string& key);
  std::string UnitKey(std::string_view name, std::string_view unit);

  const Json& json_;
  std::string record_;
  std::set<std::string, std::less<>> used_;
};

Json PoseToJson(const Pose& pose);
Json VecToJson(const Vec3& v);

}  // namespace cablegrip::internal

#endif  // CABLEGRIP_SRC_JSON_RECORD_H_
