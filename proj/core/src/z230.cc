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

#include "cablegrip/z230.h"

#include <string>
#include <utility>

namespace cablegrip {
namespace {

using z230::kHddHeight;
using z230::kHddLength;
using z230::kHddWidth;

// Axis-aligned box from its min/max corners.
NamedObb Box(std::string name, const Vec3& lo, const Vec3& hi) {
  return {std::move(name), Obb{Pose::FromTranslation(0.5 * (lo + hi)), 0.5 * (hi - lo)}};
}

StaticBody Body(std::string id, std::vector<NamedObb> boxes) {
  return {std::move(id), Pose(), BodyShape{std::move(boxes)}};
}

Component Part(std::string id, ComponentKind kind, const Vec3& center,
               const Vec3& size, const Vec3& slot_axis, double slot_depth) {
  Component c;
  c.id = std::move(id);
  c.kind = kind;
  c.pose = Pose::FromTranslation(center);
  c.half_extents = 0.5 * size;
  c.slot = Slot{slot_axis, slot_depth, 1.0};
  return c;
}

}  // namespace

Scene BuildZ230Scene() {
  Scene s = MakeEmptyScene();
  constexpr double kX = 480, kY = 470, kZ = z230::kChassisHeight, kT = 3;

  // Chassis bounds include the walls and tray.
  s.workspace = Obb{Pose::FromTranslation(Vec3(kX / 2, kY / 2, (kZ - kT) / 2)),
                    Vec3(kX / 2 + kT, kY / 2 + kT, (kZ + kT) / 2)};
  s.home.carriage = Pose(RotX(kPi), Vec3(240, 230, 420));

  s.statics.push_back(Body("tray", {Box("plate", {-kT, -kT, -kT}, {kX + kT, kY + kT, 0})}));
  s.statics.push_back(Body("back_wall", {Box("plate", {-kT, 0, 0}, {0, kY, kZ})}));
  s.statics.push_back(Body("front_wall", {Box("plate", {kX, 0, 0}, {kX + kT, kY, kZ})}));
  s.statics.push_back(Body("bottom_wall", {Box("plate", {0, -kT, 0}, {kX, 0, kZ})}));
  s.statics.push_back(Body("top_wall", {Box("plate", {0, kY, 0}, {kX, kY + kT, kZ})}));
  s.statics.push_back(Body("motherboard", {Box("board", {10, 170, 0}, {250, 466, 2})}));
  s.statics.push_back(Body("cpu_cooler", {Box("fins", {60, 330, 2}, {165, 410, 140})}));

  // DIMMs: ram_1 sits 13 mm from the cooler face, neighbours at 10 mm pitch.
  std::vector<NamedObb> sockets;
  for (int k = 1; k <= 4; ++k) {
    const double y = 415.0 + z230::kRamPitch * k;
    sockets.push_back(Box("socket_" + std::to_string(k), {50, y - 3.5, 2}, {190, y + 3.5, 9}));
    s.components.push_back(Part("ram_" + std::to_string(k), ComponentKind::kRam,
                                {120, y, 9.2 + 15}, z230::kRamSize, Vec3::UnitZ(),
                                z230::kRamSlotDepth));
  }
  s.statics.push_back(Body("ram_sockets", std::move(sockets)));

  // SSD enclosure, 40 mm inner width across y.
  s.statics.push_back(Body("ssd_enclosure", {
      Box("wall_a", {300, 20, 0}, {414, 22, 124}),
      Box("wall_b", {300, 62, 0}, {414, 64, 124}),
      Box("end_a", {300, 22, 0}, {302, 62, 124}),
      Box("end_b", {412, 22, 0}, {414, 62, 124}),
      Box("floor", {302, 22, 0}, {412, 62, 4}),
  }));
  s.components.push_back(Part("ssd", ComponentKind::kSsd,
                              {357, 42, 4.5 + 0.5 * z230::kSsdSize.z()}, z230::kSsdSize,
                              Vec3::UnitZ(), z230::kSsdSlotDepth));

  // Upright drive cage beside the SSD.
  s.statics.push_back(Body("hdd_cage", {
      Box("floor", {298, 80, 0}, {448, 155, 2}),
      Box("rail_a", {298, 84.45, 2}, {448, 86.45, 110}),
      Box("rail_mid", {298, 113.55, 2}, {448, 121.45, 110}),
      Box("rail_b", {298, 148.55, 2}, {448, 150.55, 110}),
  }));
  const Vec3 upright_size(kHddLength, kHddHeight, kHddWidth);
  s.components.push_back(Part("hdd_upright_1", ComponentKind::kHdd, {373, 100, 53.3},
                              upright_size, Vec3::UnitZ(), z230::kUprightHddSlotDepth));
  s.components.push_back(Part("hdd_upright_2", ComponentKind::kHdd, {373, 135, 53.3},
                              upright_size, Vec3::UnitZ(), z230::kUprightHddSlotDepth));

  // Roofed bay with a drive lying flat; its front protrudes 20 mm.
  s.statics.push_back(Body("hdd_bay_horizontal", {
      Box("floor", {350, 187, 18}, {478, 293, 20.5}),
      Box("roof", {350, 187, 47.6}, {478, 293, 50}),
      Box("side_a", {350, 185, 18}, {478, 187, 50}),
      Box("side_b", {350, 293, 18}, {478, 295, 50}),
      Box("back", {476.5, 187, 20.5}, {478, 293, 47.6}),
  }));
  s.components.push_back(Part("hdd_horizontal", ComponentKind::kHdd,
                              {330 + 0.5 * kHddLength, 240, 21 + 0.5 * kHddHeight},
                              Vec3(kHddLength, kHddWidth, kHddHeight), -Vec3::UnitX(),
                              z230::kBayHddSlotDepth));

  // Roofed bay with a drive standing on edge; same 20 mm protrusion.
  s.statics.push_back(Body("hdd_bay_vertical", {
      Box("floor", {350, 356.45, 0}, {478, 383.55, 2}),
      Box("roof", {350, 354.45, 104.6}, {478, 385.55, 107}),
      Box("side_a", {350, 354.45, 0}, {478, 356.45, 104.6}),
      Box("side_b", {350, 383.55, 0}, {478, 385.55, 104.6}),
      Box("back", {476.5, 356.45, 2}, {478, 383.55, 104.6}),
  }));
  s.components.push_back(Part("hdd_vertical", ComponentKind::kHdd,
                              {330 + 0.5 * kHddLength, 370, 2.5 + 0.5 * kHddWidth},
                              Vec3(kHddLength, kHddHeight, kHddWidth), -Vec3::UnitX(),
                              z230::kBayHddSlotDepth));
  return s;
}

}  // namespace cablegrip
