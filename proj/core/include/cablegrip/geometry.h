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

#ifndef CABLEGRIP_GEOMETRY_H_
#define CABLEGRIP_GEOMETRY_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cablegrip/pose.h"

namespace cablegrip {

// Oriented bounding box: centre frame plus half-extents (mm) along its axes.
struct Obb {
  Pose pose;
  Vec3 half_extents = Vec3::Ones();

  void Validate() const;  // throws ConfigurationError
  std::array<Vec3, 8> Corners() const;
  Vec3 center() const { return pose.translation(); }
  Vec3 axis(int i) const { return pose.rotation().col(i); }
  // Half-length of the box's projection onto unit direction `dir`.
  double ProjectedRadius(const Vec3& dir) const;
  double DistanceToPoint(const Vec3& point) const;
  // Same box moved by `frame`.
  Obb Transformed(const Pose& frame) const { return {frame * pose, half_extents}; }
};

// Separating-axis test over the 15 candidate axes. Touching boxes (zero
// gap) intersect.
bool ObbIntersects(const Obb& a, const Obb& b);

// Conservative separation distance: the largest gap over the 15 candidate
// axes. Never exceeds the true distance; exact for face-aligned pairs.
// Returns 0 for intersecting boxes.
double ObbClearance(const Obb& a, const Obb& b);

// Smallest overlap over the candidate axes (0 when separated or touching).
double ObbPenetration(const Obb& a, const Obb& b);

struct NamedObb {
  std::string name;
  Obb box;  // in the owning frame
};

// Boxes rigidly attached to one link or component frame.
struct BodyShape {
  std::vector<NamedObb> boxes;

  void Validate() const;
  // Largest distance from the frame origin to any box corner.
  double Reach() const;
};

// A box already placed in the world, tagged with its owning body.
struct PlacedBox {
  std::string body;
  std::string name;
  Obb box;
};

std::vector<PlacedBox> PlaceShape(const std::string& body,
                                  const BodyShape& shape, const Pose& frame);

struct SweepHit {
  std::size_t sample = 0;  // 0 is the start pose
  std::string moving_box;
  std::string body;
  std::string body_box;
};

// Number of equal sub-steps for a motion whose points travel at most
// `displacement` mm: the smallest power of two keeping every sub-step
// <= `step`, so halving `step` nests the old samples in the new ones.
// Returns 0 for a zero-length motion.
std::size_t SweepSubdivisions(double displacement, double step);

// Bound on how far any point of a body with reach `reach` moves between
// two frame poses.
double MotionBound(const Pose& from, const Pose& to, double reach);

// Samples `shape` from `from` to `to` (translation lerp, shortest-arc
// rotation) and returns the first colliding sample, or nullopt when clear.
// A zero-length motion checks only the start pose.
std::optional<SweepHit> SweptCollision(const BodyShape& shape, const Pose& from,
                                       const Pose& to,
                                       std::span<const PlacedBox> bodies,
                                       double step);

}  // namespace cablegrip

#endif  // CABLEGRIP_GEOMETRY_H_
