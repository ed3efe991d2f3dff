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

#include "cablegrip/task_io.h"

#include <cmath>

#include "cablegrip/errors.h"
#include "cablegrip/scene_io.h"
#include "json_record.h"

namespace cablegrip {
namespace {

using internal::Json;
using internal::PoseToJson;
using internal::RecordReader;
using internal::VecToJson;

constexpr std::string_view kFormat = "cablegrip-task/1";

JointGoal ReadJoints(const Json& j, const std::string& record) {
  RecordReader r(j, record + ".joints");
  JointGoal g;
  g.roll = r.Number("roll", "rad");
  g.wrist_yaw = r.Number("wrist_yaw", "rad");
  g.pitch = r.Number("pitch", "rad");
  r.Finish();
  return g;
}

Json JointsToJson(const JointGoal& g) {
  Json j = Json::object();
  j["roll_rad"] = g.roll;
  j["wrist_yaw_rad"] = g.wrist_yaw;
  j["pitch_rad"] = g.pitch;
  return j;
}

Mat3 ReadOrientation(RecordReader& r) {
  const Json& q = r.Array("orientation_wxyz");
  if (q.size() != 4) r.Fail("'orientation_wxyz' must hold w, x, y, z");
  double v[4];
  for (int i = 0; i < 4; ++i) {
    if (!q[i].is_number()) r.Fail("'orientation_wxyz' must hold numbers");
    v[i] = q[i].get<double>();
  }
  const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
  if (!(norm > 1e-6) || !std::isfinite(norm)) r.Fail("orientation has zero norm");
  return Eigen::Quaterniond(v[0], v[1], v[2], v[3]).normalized().toRotationMatrix();
}

Phase ReadPhase(const Json& j, const std::string& record) {
  RecordReader r(j, record);
  const std::string op = r.String("op");
  Phase phase;
  if (op == "move_to") {
    MoveTo m;
    m.carriage = r.PoseField("carriage");
    if (r.Has("joints")) m.joints = ReadJoints(r.Object("joints"), record);
    if (r.Has("orientation_wxyz")) m.orientation = ReadOrientation(r);
    if (m.joints.has_value() == m.orientation.has_value()) {
      r.Fail("move_to needs exactly one of 'joints' or 'orientation_wxyz'");
    }
    phase = m;
  } else if (op == "set_opening") {
    phase = SetOpening{r.Number("width", "mm")};
  } else if (op == "close_on") {
    phase = CloseOn{r.String("component")};
  } else if (op == "pull") {
    Pull p;
    p.axis = r.Vector("axis", "unit");
    p.distance = r.Number("distance", "mm");
    phase = p;
  } else if (op == "release") {
    phase = Release{};
  } else if (op == "reorient") {
    phase = Reorient{ReadJoints(r.Object("joints"), record)};
  } else {
    r.Fail("unknown op '" + op + "'");
  }
  r.Finish();
  return phase;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Json PhaseToJson(const Phase& phase) {
  Json j = Json::object();
  j["op"] = std::string(PhaseName(phase));
  std::visit(Overloaded{
                 [&](const MoveTo& m) {
                   j["carriage"] = PoseToJson(m.carriage);
                   if (m.joints) j["joints"] = JointsToJson(*m.joints);
                   if (m.orientation) {
                     Eigen::Quaterniond q(*m.orientation);
                     if (q.w() < 0) q.coeffs() *= -1.0;
                     j["orientation_wxyz"] = Json::array({q.w(), q.x(), q.y(), q.z()});
                   }
                 },
                 [&](const SetOpening& s) { j["width_mm"] = s.width; },
                 [&](const CloseOn& c) { j["component"] = c.component; },
                 [&](const Pull& p) {
                   j["axis_unit"] = VecToJson(p.axis);
                   j["distance_mm"] = p.distance;
                 },
                 [&](const Release&) {},
                 [&](const Reorient& r) { j["joints"] = JointsToJson(r.goal); },
             },
             phase);
  return j;
}

}  // namespace

TaskScript LoadTask(std::string_view text) {
  const Json doc = internal::ParseDocument(text);
  RecordReader r(doc, "task");
  if (r.String("format") != kFormat) {
    r.Fail("unsupported format, expected '" + std::string(kFormat) + "'");
  }
  TaskScript script;
  script.id = r.String("id");
  if (r.Has("description")) script.description = r.String("description");
  for (const Json& t : r.Array("targets")) {
    if (!t.is_string()) r.Fail("'targets' must hold component ids");
    script.targets.push_back(t.get<std::string>());
  }
  const Json& phases = r.Array("phases");
  for (std::size_t i = 0; i < phases.size(); ++i) {
    script.phases.push_back(ReadPhase(phases[i], "phases[" + std::to_string(i) + "]"));
  }
  r.Finish();
  return script;
}

TaskScript LoadTaskFile(const std::filesystem::path& path) {
  return LoadTask(ReadTextFile(path));
}

std::string SaveTask(const TaskScript& script) {
  Json doc = Json::object();
  doc["format"] = std::string(kFormat);
  doc["id"] = script.id;
  doc["description"] = script.description;
  doc["targets"] = script.targets;
  Json phases = Json::array();
  for (const Phase& p : script.phases) phases.push_back(PhaseToJson(p));
  doc["phases"] = std::move(phases);
  return doc.dump(2) + "\n";
}

}  // namespace cablegrip
