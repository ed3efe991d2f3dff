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

#include "cablegrip/geometry.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cablegrip/errors.h"

namespace cablegrip {
namespace {

// Cross-product axes shorter than this are treated as degenerate (parallel
// edges); the face axes already cover those configurations.
constexpr double kDegenerateAxis = 1e-9;

// Signed gap along each candidate axis: |T.L| - (ra + rb), normalised by |L|.
// Calls fn(gap) for every non-degenerate axis; stops early if fn returns
// false.
template <typename Fn>
void ForEachAxisGap(const Obb& a, const Obb& b, Fn fn) {
  const Mat3& ra = a.pose.rotation();
  const Mat3& rb = b.pose.rotation();
  const Vec3 t = b.center() - a.center();
  const Vec3& ea = a.half_extents;
  const Vec3& eb = b.half_extents;

  auto gap_along = [&](const Vec3& axis) {
    const double len = axis.norm();
    if (len < kDegenerateAxis) return std::optional<double>();
    const Vec3 l = axis / len;
    const double r_a = ea.x() * std::abs(ra.col(0).dot(l)) +
                       ea.y() * std::abs(ra.col(1).dot(l)) +
                       ea.z() * std::abs(ra.col(2).dot(l));
    const double r_b = eb.x() * std::abs(rb.col(0).dot(l)) +
                       eb.y() * std::abs(rb.col(1).dot(l)) +
                       eb.z() * std::abs(rb.col(2).dot(l));
    return std::optional<double>(std::abs(t.dot(l)) - (r_a + r_b));
  };

  for (int i = 0; i < 3; ++i) {
    if (!fn(*gap_along(ra.col(i)))) return;
  }
  for (int i = 0; i < 3; ++i) {
    if (!fn(*gap_along(rb.col(i)))) return;
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto g = gap_along(ra.col(i).cross(rb.col(j)));
      if (g && !fn(*g)) return;
    }
  }
}

}  // namespace

void Obb::Validate() const {
  if (!(half_extents.allFinite() && half_extents.minCoeff() > 0)) {
    throw ConfigurationError("box half-extents must be positive");
  }
  if (!IsRotation(pose.rotation())) {
    throw ConfigurationError("box rotation must be orthonormal");
  }
}

std::array<Vec3, 8> Obb::Corners() const {
  std::array<Vec3, 8> out;
  for (int i = 0; i < 8; ++i) {
    const Vec3 local((i & 1) ? half_extents.x() : -half_extents.x(),
                     (i & 2) ? half_extents.y() : -half_extents.y(),
                     (i & 4) ? half_extents.z() : -half_extents.z());
    out[i] = pose * local;
  }
  return out;
}

double Obb::ProjectedRadius(const Vec3& dir) const {
  const Mat3& r = pose.rotation();
  return half_extents.x() * std::abs(r.col(0).dot(dir)) +
         half_extents.y() * std::abs(r.col(1).dot(dir)) +
         half_extents.z() * std::abs(r.col(2).dot(dir));
}

double Obb::DistanceToPoint(const Vec3& point) const {
  const Vec3 local = pose.rotation().transpose() * (point - pose.translation());
  const Vec3 outside = (local.cwiseAbs() - half_extents).cwiseMax(0.0);
  return outside.norm();
}

bool ObbIntersects(const Obb& a, const Obb& b) {
  bool separated = false;
  ForEachAxisGap(a, b, [&](double gap) {
    if (gap > 0) {
      separated = true;
      return false;
    }
    return true;
  });
  return !separated;
}

double ObbClearance(const Obb& a, const Obb& b) {
  double best = 0.0;
  ForEachAxisGap(a, b, [&](double gap) {
    best = std::max(best, gap);
    return true;
  });
  return best;
}

double ObbPenetration(const Obb& a, const Obb& b) {
  double least = std::numeric_limits<double>::infinity();
  ForEachAxisGap(a, b, [&](double gap) {
    least = std::min(least, -gap);
    return least > 0;
  });
  return std::max(least, 0.0);
}

void BodyShape::Validate() const {
  if (boxes.empty()) throw ConfigurationError("body shape has no boxes");
  for (const NamedObb& b : boxes) b.box.Validate();
}

double BodyShape::Reach() const {
  double reach = 0.0;
  for (const NamedObb& b : boxes) {
    for (const Vec3& c : b.box.Corners()) reach = std::max(reach, c.norm());
  }
  return reach;
}

std::vector<PlacedBox> PlaceShape(const std::string& body,
                                  const BodyShape& shape, const Pose& frame) {
  std::vector<PlacedBox> out;
  out.reserve(shape.boxes.size());
  for (const NamedObb& b : shape.boxes) {
    out.push_back({body, b.name, b.box.Transformed(frame)});
  }
  return out;
}

std::size_t SweepSubdivisions(double displacement, double step) {
  if (!(step > 0)) throw ConfigurationError("sweep step must be positive");
  if (!(displacement > 0)) return 0;
  std::size_t n = 1;
  while (displacement / static_cast<double>(n) > step) n *= 2;
  return n;
}

double MotionBound(const Pose& from, const Pose& to, double reach) {
  return (to.translation() - from.translation()).norm() +
         reach * AngleBetween(from.rotation(), to.rotation());
}

std::optional<SweepHit> SweptCollision(const BodyShape& shape, const Pose& from,
                                       const Pose& to,
                                       std::span<const PlacedBox> bodies,
                                       double step) {
  const std::size_t n = SweepSubdivisions(MotionBound(from, to, shape.Reach()), step);
  for (std::size_t i = 0; i <= n; ++i) {
    const double t = n == 0 ? 0.0 : static_cast<double>(i) / static_cast<double>(n);
    const Pose frame = Pose::Interpolate(from, to, t);
    for (const NamedObb& m : shape.boxes) {
      const Obb placed = m.box.Transformed(frame);
      for (const PlacedBox& b : bodies) {
        if (ObbIntersects(placed, b.box)) {
          return SweepHit{i, m.name, b.body, b.name};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace cablegrip
