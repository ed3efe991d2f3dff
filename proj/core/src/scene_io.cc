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

#include "cablegrip/scene_io.h"

#include <fstream>
#include <sstream>

#include "cablegrip/errors.h"
#include "json_record.h"

namespace cablegrip {
namespace {

using internal::Json;
using internal::PoseToJson;
using internal::RecordReader;
using internal::VecToJson;

constexpr std::string_view kFormat = "cablegrip-scene/1";

std::string Indexed(std::string_view list, std::size_t i) {
  return std::string(list) + "[" + std::to_string(i) + "]";
}

Limits ReadLimits(RecordReader& r, std::string_view name) {
  const auto [lo, hi] = r.Range(name, "rad");
  return {lo, hi};
}

Obb ReadBox(RecordReader& r) {
  Obb box;
  box.pose = r.PoseField("pose");
  box.half_extents = r.Vector("half_extents", "mm");
  if (box.half_extents.minCoeff() <= 0) r.Fail("half_extents_mm must be positive");
  return box;
}

void ReadGripper(const Json& j, Scene* scene) {
  RecordReader r(j, "gripper");
  GripperParams& g = scene->gripper;
  g.base_length = r.Number("base_length", "mm");
  g.wrist_length = r.Number("wrist_length", "mm");
  g.jaw_length = r.Number("jaw_length", "mm");
  g.jaw_thickness = r.Number("jaw_thickness", "mm");
  g.jaw_width = r.Number("jaw_width", "mm");
  g.body_width = r.Number("body_width", "mm");
  g.wrist_yaw = ReadLimits(r, "wrist_yaw_limits");
  g.jaw = ReadLimits(r, "jaw_limits");
  g.roll = ReadLimits(r, "roll_limits");
  RecordReader h(r.Object("home"), "gripper.home");
  GripperConfig& c = scene->home;
  c.carriage = h.PoseField("carriage");
  c.roll = h.Number("roll", "rad");
  c.wrist_yaw = h.Number("wrist_yaw", "rad");
  c.jaw1 = h.Number("jaw1", "rad");
  c.jaw2 = h.Number("jaw2", "rad");
  h.Finish();
  r.Finish();
}

DriveJoint ReadJoint(RecordReader& r) {
  DriveJoint joint;
  const std::string name = r.String("joint");
  if (!ParseDriveJoint(name, &joint)) r.Fail("unknown joint '" + name + "'");
  return joint;
}

void ReadDrives(const Json& list, Scene* scene) {
  if (list.size() != kNumDrives) {
    throw ValidationError("drives", "expected one drive per joint (wrist, jaw1, jaw2)");
  }
  bool seen[kNumDrives] = {false, false, false};
  for (std::size_t i = 0; i < list.size(); ++i) {
    RecordReader r(list[i], Indexed("drives", i));
    const DriveJoint joint = ReadJoint(r);
    const int k = static_cast<int>(joint);
    if (seen[k]) r.Fail("duplicate drive for joint");
    seen[k] = true;
    DriveModule& d = scene->drives[k];
    d.capstan_radius = r.Number("capstan_radius", "mm");
    d.joint_pulley_radius = r.Number("joint_pulley_radius", "mm");
    d.pretension = r.Number("pretension", "N");
    d.torque_constant = r.Number("torque_constant", "Nmm_per_A");
    d.servo_range = r.Number("servo_range", "rad");
    d.ratchet_step = r.Number("ratchet_step", "N");
    r.Finish();
  }
}

void ReadRoutes(const Json& list, Scene* scene) {
  if (list.size() != kNumDrives) {
    throw ValidationError("routes", "expected one route per joint (wrist, jaw1, jaw2)");
  }
  bool seen[kNumDrives] = {false, false, false};
  for (std::size_t i = 0; i < list.size(); ++i) {
    RecordReader r(list[i], Indexed("routes", i));
    const DriveJoint joint = ReadJoint(r);
    const int k = static_cast<int>(joint);
    if (seen[k]) r.Fail("duplicate route for joint");
    seen[k] = true;
    CableRoute& route = scene->routes[k];
    route = CableRoute{};
    route.joint = joint;
    route.capstan_exit = r.Vector("capstan_exit", "mm");
    route.guide = r.Vector("guide", "mm");
    if (r.Has("guide_cap_mm")) route.guide_cap = r.Vector("guide_cap", "mm");
    route.attachment = r.Vector("attachment", "mm");
    route.reference_angle = r.Number("reference_angle", "rad");
    route.decoupled = r.Bool("decoupled");
    r.Finish();
  }
  for (int k = 0; k < kNumDrives; ++k) {
    scene->routes[k].pulley_radius = scene->drives[k].joint_pulley_radius;
  }
}

void ReadStatics(const Json& list, Scene* scene) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    RecordReader r(list[i], Indexed("statics", i));
    StaticBody s;
    s.id = r.String("id");
    s.pose = r.PoseField("pose");
    const Json& boxes = r.Array("boxes");
    if (boxes.empty()) r.Fail("static body needs at least one box");
    for (std::size_t b = 0; b < boxes.size(); ++b) {
      RecordReader br(boxes[b], r.record() + "." + Indexed("boxes", b));
      NamedObb nb;
      nb.name = br.String("name");
      nb.box = ReadBox(br);
      br.Finish();
      s.shape.boxes.push_back(std::move(nb));
    }
    r.Finish();
    scene->statics.push_back(std::move(s));
  }
}

void ReadComponents(const Json& list, Scene* scene) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    RecordReader r(list[i], Indexed("components", i));
    Component c;
    c.id = r.String("id");
    const std::string kind = r.String("kind");
    if (!ParseComponentKind(kind, &c.kind)) r.Fail("unknown kind '" + kind + "'");
    c.pose = r.PoseField("pose");
    c.half_extents = r.Vector("half_extents", "mm");
    if (const Json* sj = r.OptionalObject("slot")) {
      RecordReader sr(*sj, r.record() + ".slot");
      Slot slot;
      slot.axis = sr.Vector("axis", "unit");
      slot.depth = sr.Number("depth", "mm");
      slot.engaged_fraction = sr.Number("engaged", "fraction");
      sr.Finish();
      c.slot = slot;
    }
    r.Finish();
    scene->components.push_back(std::move(c));
  }
}

Json LimitsToJson(const Limits& l) { return Json::array({l.min, l.max}); }

}  // namespace

Scene LoadScene(std::string_view text) {
  const Json doc = internal::ParseDocument(text);
  RecordReader top(doc, "scene");
  const std::string format = top.String("format");
  if (format != kFormat) top.Fail("unsupported format '" + format + "'");
  Scene scene;
  {
    RecordReader w(top.Object("workspace"), "workspace");
    scene.workspace = ReadBox(w);
    w.Finish();
  }
  ReadGripper(top.Object("gripper"), &scene);
  ReadDrives(top.Array("drives"), &scene);
  ReadRoutes(top.Array("routes"), &scene);
  ReadStatics(top.Array("statics"), &scene);
  ReadComponents(top.Array("components"), &scene);
  top.Finish();
  scene.Validate();
  return scene;
}

Scene LoadSceneFile(const std::filesystem::path& path) {
  return LoadScene(ReadTextFile(path));
}

std::string SaveScene(const Scene& scene) {
  Json doc = Json::object();
  doc["format"] = kFormat;
  doc["workspace"] = {{"pose", PoseToJson(scene.workspace.pose)},
                      {"half_extents_mm", VecToJson(scene.workspace.half_extents)}};
  const GripperParams& g = scene.gripper;
  const GripperConfig& h = scene.home;
  doc["gripper"] = {
      {"base_length_mm", g.base_length},
      {"wrist_length_mm", g.wrist_length},
      {"jaw_length_mm", g.jaw_length},
      {"jaw_thickness_mm", g.jaw_thickness},
      {"jaw_width_mm", g.jaw_width},
      {"body_width_mm", g.body_width},
      {"wrist_yaw_limits_rad", LimitsToJson(g.wrist_yaw)},
      {"jaw_limits_rad", LimitsToJson(g.jaw)},
      {"roll_limits_rad", LimitsToJson(g.roll)},
      {"home",
       {{"carriage", PoseToJson(h.carriage)},
        {"roll_rad", h.roll},
        {"wrist_yaw_rad", h.wrist_yaw},
        {"jaw1_rad", h.jaw1},
        {"jaw2_rad", h.jaw2}}}};
  Json drives = Json::array();
  for (int k = 0; k < kNumDrives; ++k) {
    const DriveModule& d = scene.drives[k];
    drives.push_back({{"joint", DriveJointName(static_cast<DriveJoint>(k))},
                      {"capstan_radius_mm", d.capstan_radius},
                      {"joint_pulley_radius_mm", d.joint_pulley_radius},
                      {"pretension_N", d.pretension},
                      {"torque_constant_Nmm_per_A", d.torque_constant},
                      {"servo_range_rad", d.servo_range},
                      {"ratchet_step_N", d.ratchet_step}});
  }
  doc["drives"] = std::move(drives);
  Json routes = Json::array();
  for (const CableRoute& r : scene.routes) {
    Json j = Json::object();
    j["joint"] = DriveJointName(r.joint);
    j["capstan_exit_mm"] = VecToJson(r.capstan_exit);
    j["guide_mm"] = VecToJson(r.guide);
    if (r.guide_cap) j["guide_cap_mm"] = VecToJson(*r.guide_cap);
    j["attachment_mm"] = VecToJson(r.attachment);
    j["reference_angle_rad"] = r.reference_angle;
    j["decoupled"] = r.decoupled;
    routes.push_back(std::move(j));
  }
  doc["routes"] = std::move(routes);
  Json statics = Json::array();
  for (const StaticBody& s : scene.statics) {
    Json boxes = Json::array();
    for (const NamedObb& b : s.shape.boxes) {
      boxes.push_back({{"name", b.name},
                       {"pose", PoseToJson(b.box.pose)},
                       {"half_extents_mm", VecToJson(b.box.half_extents)}});
    }
    statics.push_back({{"id", s.id}, {"pose", PoseToJson(s.pose)}, {"boxes", std::move(boxes)}});
  }
  doc["statics"] = std::move(statics);
  Json comps = Json::array();
  for (const Component& c : scene.components) {
    Json j = Json::object();
    j["id"] = c.id;
    j["kind"] = ComponentKindName(c.kind);
    j["pose"] = PoseToJson(c.pose);
    j["half_extents_mm"] = VecToJson(c.half_extents);
    if (c.slot) {
      j["slot"] = {{"axis_unit", VecToJson(c.slot->axis)},
                   {"depth_mm", c.slot->depth},
                   {"engaged_fraction", c.slot->engaged_fraction}};
    } else {
      j["slot"] = nullptr;
    }
    comps.push_back(std::move(j));
  }
  doc["components"] = std::move(comps);
  return doc.dump(2) + "\n";
}

void SaveSceneFile(const Scene& scene, const std::filesystem::path& path) {
  WriteTextFile(path, SaveScene(scene));
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  return ss.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace cablegrip
