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

#include "cablegrip/pose.h"

#include <algorithm>
#include <cmath>

#include "cablegrip/errors.h"

namespace cablegrip {

Mat3 RotX(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 r;
  r << 1, 0, 0,
       0, c, -s,
       0, s, c;
  return r;
}

Mat3 RotY(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 r;
  r << c, 0, s,
       0, 1, 0,
       -s, 0, c;
  return r;
}

Mat3 RotZ(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 r;
  r << c, -s, 0,
       s, c, 0,
       0, 0, 1;
  return r;
}

bool IsRotation(const Mat3& r, double tol) {
  if (!r.allFinite()) return false;
  const double ortho = (r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff();
  return ortho <= tol && std::abs(r.determinant() - 1.0) <= tol;
}

double AngleBetween(const Mat3& a, const Mat3& b) {
  const double c = std::clamp(((a.transpose() * b).trace() - 1.0) / 2.0, -1.0, 1.0);
  return std::acos(c);
}

Pose::Pose(const Mat3& rotation, const Vec3& translation)
    : rotation_(rotation), translation_(translation) {
  if (!IsRotation(rotation_)) {
    throw ConfigurationError("pose rotation is not orthonormal with det +1");
  }
  if (!translation_.allFinite()) {
    throw ConfigurationError("pose translation is not finite");
  }
}

Pose Pose::FromTranslation(const Vec3& t) {
  return Pose(Mat3::Identity(), t);
}

Pose Pose::FromRotation(const Mat3& r) { return Pose(r, Vec3::Zero()); }

Pose Pose::FromQuaternion(const Eigen::Quaterniond& q, const Vec3& t) {
  return Pose(q.normalized().toRotationMatrix(), t);
}

Eigen::Quaterniond Pose::quaternion() const {
  Eigen::Quaterniond q(rotation_);
  q.normalize();
  // Canonical sign keeps serialization stable.
  if (q.w() < 0) q.coeffs() *= -1.0;
  return q;
}

Pose Pose::operator*(const Pose& other) const {
  return Pose(rotation_ * other.rotation_,
              rotation_ * other.translation_ + translation_, Unchecked{});
}

Pose Pose::Inverse() const {
  const Mat3 rt = rotation_.transpose();
  return Pose(rt, -(rt * translation_), Unchecked{});
}

Pose Pose::Interpolate(const Pose& from, const Pose& to, double t) {
  if (t <= 0.0) return from;
  if (t >= 1.0) return to;
  const Vec3 trans = from.translation_ + t * (to.translation_ - from.translation_);
  if (from.rotation_ == to.rotation_) {
    return Pose(from.rotation_, trans, Unchecked{});
  }
  const Eigen::Quaterniond qa(from.rotation_);
  const Eigen::Quaterniond qb(to.rotation_);
  // Eigen's slerp already takes the shorter arc.
  const Mat3 rot = qa.slerp(t, qb).normalized().toRotationMatrix();
  return Pose(rot, trans, Unchecked{});
}

double PoseDistance(const Pose& a, const Pose& b) {
  return std::max((a.rotation() - b.rotation()).norm(),
                  (a.translation() - b.translation()).norm());
}

}  // namespace cablegrip
