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

#ifndef CABLEGRIP_SCENE_H_
#define CABLEGRIP_SCENE_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cablegrip/cable_drive.h"
#include "cablegrip/geometry.h"
#include "cablegrip/kinematics.h"
#include "cablegrip/pose.h"

namespace cablegrip {

enum class ComponentKind { kRam, kSsd, kHdd };
std::string_view ComponentKindName(ComponentKind kind);
bool ParseComponentKind(std::string_view name, ComponentKind* kind);

// Prismatic retention: the component may only translate along `axis` (the
// extraction direction) until it has travelled `depth`.
struct Slot {
  Vec3 axis = Vec3::UnitZ();
  double depth = 0.0;             // mm
  double engaged_fraction = 1.0;  // 1 seated, 0 free
};

// A removable part. Its shape is a single box centred on its frame.
struct Component {
  std::string id;
  ComponentKind kind = ComponentKind::kRam;
  Pose pose;
  Vec3 half_extents = Vec3::Ones();
  std::optional<Slot> slot;  // nullopt once free

  Obb box() const { return {pose, half_extents}; }
  BodyShape shape() const { return {{{id, {Pose(), half_extents}}}}; }
  bool engaged() const { return slot.has_value(); }
  // Grasps close across the thinnest dimension.
  double graspable_width() const { return 2.0 * half_extents.minCoeff(); }
};

struct StaticBody {
  std::string id;
  Pose pose;
  BodyShape shape;
};

// Immutable world snapshot; updates return new scenes.
struct Scene {
  std::vector<StaticBody> statics;
  std::vector<Component> components;
  GripperParams gripper;
  GripperConfig home;
  std::array<DriveModule, kNumDrives> drives;
  std::array<CableRoute, kNumDrives> routes;
  Obb workspace;  // chassis bounds; extracted parts must end outside it

  const Component* FindComponent(std::string_view id) const;
  const Component& GetComponent(std::string_view id) const;  // LookupError
  const DriveModule& drive(DriveJoint j) const {
    return drives[static_cast<int>(j)];
  }
  const CableRoute& route(DriveJoint j) const {
    return routes[static_cast<int>(j)];
  }

  // Every static box and every component except `exclude`, world-placed.
  std::vector<PlacedBox> Bodies(std::string_view exclude = {}) const;

  // Throws ValidationError naming the first offending record.
  void Validate() const;
};

// A scene with default gripper, drives and routes, no bodies, and a unit
// workspace; a starting point for building scenes in code.
Scene MakeEmptyScene();

// Below this remaining fraction a slot counts as disengaged.
inline constexpr double kFreeFractionTol = 1e-9;

// Moves an engaged component `distance` mm along its slot axis and reduces
// its engaged fraction by distance / depth; at zero it becomes free.
// Throws LookupError for an unknown id and ConfigurationError for a free
// component or a negative distance.
Scene ExtractComponent(const Scene& scene, std::string_view id, double distance);

struct ClearanceReport {
  double clearance = 0.0;             // min over all bodies, mm
  std::vector<std::string> blocking;  // bodies closer than the threshold
};

ClearanceReport ClearanceQuery(const Scene& scene, const Obb& probe,
                               double threshold = 0.5);

}  // namespace cablegrip

#endif  // CABLEGRIP_SCENE_H_
