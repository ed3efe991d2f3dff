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

#ifndef CABLEGRIP_POSE_H_
#define CABLEGRIP_POSE_H_

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace cablegrip {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = 3.14159265358979323846;

// Elementary rotations. The gripper uses z as the tool (roll) axis, x as the
// wrist yaw axis and y as the jaw pitch axis.
Mat3 RotX(double angle);
Mat3 RotY(double angle);
Mat3 RotZ(double angle);

// True when `r` is orthonormal with determinant +1 within `tol`.
bool IsRotation(const Mat3& r, double tol = 1e-9);

// Angle of the relative rotation a^T b, in [0, pi].
double AngleBetween(const Mat3& a, const Mat3& b);

// Rigid transform: rotation (orthonormal, det +1) and translation in mm.
class Pose {
 public:
  Pose() : rotation_(Mat3::Identity()), translation_(Vec3::Zero()) {}
  // Throws ConfigurationError if `rotation` is not a proper rotation.
  Pose(const Mat3& rotation, const Vec3& translation);

  static Pose Identity() { return Pose(); }
  static Pose FromTranslation(const Vec3& t);
  static Pose FromRotation(const Mat3& r);
  // `q` is normalized before use.
  static Pose FromQuaternion(const Eigen::Quaterniond& q, const Vec3& t);

  const Mat3& rotation() const { return rotation_; }
  const Vec3& translation() const { return translation_; }
  Eigen::Quaterniond quaternion() const;

  Pose operator*(const Pose& other) const;
  Vec3 operator*(const Vec3& point) const {
    return rotation_ * point + translation_;
  }
  Pose Inverse() const;

  // Translation lerp and shortest-arc slerp; t in [0, 1].
  static Pose Interpolate(const Pose& from, const Pose& to, double t);

  bool operator==(const Pose& other) const {
    return rotation_ == other.rotation_ && translation_ == other.translation_;
  }

 private:
  struct Unchecked {};
  Pose(const Mat3& r, const Vec3& t, Unchecked)
      : rotation_(r), translation_(t) {}

  Mat3 rotation_;
  Vec3 translation_;
};

// Max of rotation Frobenius distance and translation distance.
double PoseDistance(const Pose& a, const Pose& b);

}  // namespace cablegrip

#endif  // CABLEGRIP_POSE_H_
