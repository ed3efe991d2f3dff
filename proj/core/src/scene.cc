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

#include "cablegrip/scene.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "cablegrip/errors.h"

namespace cablegrip {
namespace {

constexpr double kUnitTol = 1e-9;
// Resting contact between bodies is fine; overlap beyond this is not.
constexpr double kInterpenetrationTol = 1e-9;

std::string Record(std::string_view kind, std::size_t index, std::string_view id) {
  return std::string(kind) + "[" + std::to_string(index) + "] (" +
         std::string(id) + ")";
}

}  // namespace

std::string_view ComponentKindName(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kRam:
      return "ram";
    case ComponentKind::kSsd:
      return "ssd";
    case ComponentKind::kHdd:
      return "hdd";
  }
  return "unknown";
}

bool ParseComponentKind(std::string_view name, ComponentKind* kind) {
  for (ComponentKind k : {ComponentKind::kRam, ComponentKind::kSsd, ComponentKind::kHdd}) {
    if (ComponentKindName(k) == name) {
      *kind = k;
      return true;
    }
  }
  return false;
}

const Component* Scene::FindComponent(std::string_view id) const {
  for (const Component& c : components) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

const Component& Scene::GetComponent(std::string_view id) const {
  const Component* c = FindComponent(id);
  if (c == nullptr) throw LookupError("unknown component '" + std::string(id) + "'");
  return *c;
}

std::vector<PlacedBox> Scene::Bodies(std::string_view exclude) const {
  std::vector<PlacedBox> out;
  for (const StaticBody& s : statics) {
    for (PlacedBox& b : PlaceShape(s.id, s.shape, s.pose)) out.push_back(std::move(b));
  }
  for (const Component& c : components) {
    if (c.id == exclude) continue;
    out.push_back({c.id, c.id, c.box()});
  }
  return out;
}

void Scene::Validate() const {
  try {
    gripper.Validate();
  } catch (const ConfigurationError& e) {
    throw ValidationError("gripper", e.what());
  }
  try {
    CheckLimits(gripper, home);
  } catch (const OutOfRangeError& e) {
    throw ValidationError("gripper.home", e.what());
  }
  for (int i = 0; i < kNumDrives; ++i) {
    const std::string rec =
        "drives[" + std::to_string(i) + "] (" +
        std::string(DriveJointName(static_cast<DriveJoint>(i))) + ")";
    try {
      drives[i].Validate();
    } catch (const ConfigurationError& e) {
      throw ValidationError(rec, e.what());
    }
  }
  for (int i = 0; i < kNumDrives; ++i) {
    const CableRoute& r = routes[i];
    const std::string rec = "routes[" + std::to_string(i) + "] (" +
                            std::string(DriveJointName(r.joint)) + ")";
    if (static_cast<int>(r.joint) != i) {
      throw ValidationError(rec, "routes must be listed as wrist, jaw1, jaw2");
    }
    try {
      r.Validate();
    } catch (const ConfigurationError& e) {
      throw ValidationError(rec, e.what());
    }
  }
  try {
    workspace.Validate();
  } catch (const ConfigurationError& e) {
    throw ValidationError("workspace", e.what());
  }

  std::set<std::string, std::less<>> ids;
  for (std::size_t i = 0; i < statics.size(); ++i) {
    const StaticBody& s = statics[i];
    const std::string rec = Record("statics", i, s.id);
    if (s.id.empty()) throw ValidationError(rec, "empty id");
    if (!ids.insert(s.id).second) throw ValidationError(rec, "duplicate id");
    try {
      s.shape.Validate();
    } catch (const ConfigurationError& e) {
      throw ValidationError(rec, e.what());
    }
  }
  for (std::size_t i = 0; i < components.size(); ++i) {
    const Component& c = components[i];
    const std::string rec = Record("components", i, c.id);
    if (c.id.empty()) throw ValidationError(rec, "empty id");
    if (!ids.insert(c.id).second) throw ValidationError(rec, "duplicate id");
    if (!(c.half_extents.allFinite() && c.half_extents.minCoeff() > 0)) {
      throw ValidationError(rec, "half_extents must be positive");
    }
    if (c.slot) {
      if (std::abs(c.slot->axis.norm() - 1.0) > kUnitTol) {
        throw ValidationError(rec, "slot axis is not unit length");
      }
      if (!(c.slot->depth > 0)) throw ValidationError(rec, "slot depth must be positive");
      if (!(c.slot->engaged_fraction > 0 && c.slot->engaged_fraction <= 1)) {
        throw ValidationError(rec, "engaged_fraction must lie in (0, 1]");
      }
    }
  }

  // Pairwise overlap among statics, then components against everything.
  struct Tagged {
    std::size_t body;
    std::string rec;
    Obb box;
  };
  std::vector<Tagged> static_boxes;
  for (std::size_t i = 0; i < statics.size(); ++i) {
    for (const PlacedBox& b : PlaceShape(statics[i].id, statics[i].shape, statics[i].pose)) {
      static_boxes.push_back({i, Record("statics", i, statics[i].id) + "." + b.name, b.box});
    }
  }
  for (std::size_t i = 0; i < static_boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < static_boxes.size(); ++j) {
      // Boxes of one body may overlap each other.
      if (static_boxes[i].body == static_boxes[j].body) continue;
      if (ObbPenetration(static_boxes[i].box, static_boxes[j].box) > kInterpenetrationTol) {
        throw ValidationError(static_boxes[j].rec,
                              "interpenetrates " + static_boxes[i].rec);
      }
    }
  }
  for (std::size_t i = 0; i < components.size(); ++i) {
    const std::string rec = Record("components", i, components[i].id);
    const Obb box = components[i].box();
    for (const Tagged& s : static_boxes) {
      if (ObbPenetration(box, s.box) > kInterpenetrationTol) {
        throw ValidationError(rec, "interpenetrates " + s.rec);
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (ObbPenetration(box, components[j].box()) > kInterpenetrationTol) {
        throw ValidationError(rec, "interpenetrates " +
                                       Record("components", j, components[j].id));
      }
    }
  }
}

Scene MakeEmptyScene() {
  Scene s;
  for (int i = 0; i < kNumDrives; ++i) {
    s.routes[i] = DefaultRoute(static_cast<DriveJoint>(i), s.gripper, s.drives[i]);
  }
  s.workspace = Obb{Pose(), Vec3::Ones()};
  return s;
}

Scene ExtractComponent(const Scene& scene, std::string_view id, double distance) {
  Scene out = scene;
  auto it = std::find_if(out.components.begin(), out.components.end(),
                         [&](const Component& c) { return c.id == id; });
  if (it == out.components.end()) {
    throw LookupError("unknown component '" + std::string(id) + "'");
  }
  if (!it->slot) {
    throw ConfigurationError("component '" + std::string(id) + "' is not engaged");
  }
  if (!(distance >= 0)) throw ConfigurationError("extraction distance must be >= 0");
  if (distance == 0) return out;
  Slot& slot = *it->slot;
  it->pose = Pose::FromTranslation(slot.axis * distance) * it->pose;
  slot.engaged_fraction =
      std::clamp(slot.engaged_fraction - distance / slot.depth, 0.0, 1.0);
  if (slot.engaged_fraction <= kFreeFractionTol) it->slot.reset();
  return out;
}

ClearanceReport ClearanceQuery(const Scene& scene, const Obb& probe,
                               double threshold) {
  ClearanceReport report;
  report.clearance = std::numeric_limits<double>::infinity();
  for (const PlacedBox& b : scene.Bodies()) {
    const double c = ObbClearance(probe, b.box);
    report.clearance = std::min(report.clearance, c);
    if (c < threshold &&
        std::find(report.blocking.begin(), report.blocking.end(), b.body) ==
            report.blocking.end()) {
      report.blocking.push_back(b.body);
    }
  }
  return report;
}

}  // namespace cablegrip
