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

#include "cablegrip/kinematics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "cablegrip/errors.h"

namespace cablegrip {
namespace {

constexpr double kSingularCos = 1e-6;

void CheckRange(Joint joint, double value, const Limits& limits) {
  if (!std::isfinite(value) || !limits.Contains(value)) {
    const std::string name(JointName(joint));
    throw OutOfRangeError(
        name, name + " = " + std::to_string(value) + " rad outside [" +
                  std::to_string(limits.min) + ", " +
                  std::to_string(limits.max) + "]");
  }
}

}  // namespace

void GripperParams::Validate() const {
  if (!(base_length > 0 && wrist_length > 0 && jaw_length > 0 &&
        jaw_thickness > 0 && jaw_width > 0 && body_width > 0)) {
    throw ConfigurationError("gripper lengths must be positive");
  }
  if (!(wrist_yaw.min < wrist_yaw.max) || !(jaw.min < jaw.max) ||
      !(roll.min < roll.max)) {
    throw ConfigurationError("gripper joint limits must satisfy min < max");
  }
  if (!jaw.Contains(0.0)) {
    throw ConfigurationError("jaw range must admit the closed configuration");
  }
}

double GripperParams::MaxOpening() const {
  const double spread = std::min(jaw.max - jaw.min, kPi);
  return 2.0 * jaw_length * std::sin(0.5 * spread);
}

GripperConfig GripperConfig::FromPitch(const Pose& carriage, double roll,
                                       double wrist_yaw, double pitch,
                                       double opening_angle) {
  GripperConfig c;
  c.carriage = carriage;
  c.roll = roll;
  c.wrist_yaw = wrist_yaw;
  c.jaw1 = pitch + 0.5 * opening_angle;
  c.jaw2 = pitch - 0.5 * opening_angle;
  return c;
}

std::string_view JointName(Joint joint) {
  switch (joint) {
    case Joint::kRoll:
      return "roll";
    case Joint::kWristYaw:
      return "wrist_yaw";
    case Joint::kJaw1:
      return "jaw1";
    case Joint::kJaw2:
      return "jaw2";
  }
  return "unknown";
}

void CheckLimits(const GripperParams& params, const GripperConfig& config) {
  CheckRange(Joint::kRoll, config.roll, params.roll);
  CheckRange(Joint::kWristYaw, config.wrist_yaw, params.wrist_yaw);
  CheckRange(Joint::kJaw1, config.jaw1, params.jaw);
  CheckRange(Joint::kJaw2, config.jaw2, params.jaw);
  if (config.jaw1 < config.jaw2) {
    throw OutOfRangeError("jaw1", "jaw1 must not be less than jaw2");
  }
}

GripperPosture ForwardKinematicsUnchecked(const GripperParams& params,
                                          const GripperConfig& config) {
  GripperPosture p;
  p.base = config.carriage * Pose::FromRotation(RotZ(config.roll)) *
           Pose::FromTranslation(Vec3(0, 0, params.base_length));
  p.wrist = p.base * Pose::FromRotation(RotX(config.wrist_yaw));
  const Pose pivot =
      p.wrist * Pose::FromTranslation(Vec3(0, 0, params.wrist_length));
  p.jaw1 = pivot * Pose::FromRotation(RotY(config.jaw1));
  p.jaw2 = pivot * Pose::FromRotation(RotY(config.jaw2));
  p.jaw_center = pivot * Pose::FromRotation(RotY(config.pitch()));
  const Vec3 tip(0, 0, params.jaw_length);
  p.tip1 = p.jaw1 * tip;
  p.tip2 = p.jaw2 * tip;
  p.tip_opening = (p.tip1 - p.tip2).norm();
  return p;
}

GripperPosture ForwardKinematics(const GripperParams& params,
                                 const GripperConfig& config) {
  CheckLimits(params, config);
  return ForwardKinematicsUnchecked(params, config);
}

double JawOpening(const GripperParams& params, const GripperConfig& config) {
  return ForwardKinematics(params, config).tip_opening;
}

double OpeningAngleForWidth(const GripperParams& params, double width) {
  const double ratio = width / (2.0 * params.jaw_length);
  if (!std::isfinite(width) || width < 0.0 || ratio > 1.0) {
    throw OutOfRangeError("jaw1", "opening " + std::to_string(width) +
                                      " mm exceeds the jaw chord");
  }
  return 2.0 * std::asin(ratio);
}

Mat3 ComposeOrientation(double roll, double wrist_yaw, double pitch) {
  return RotZ(roll) * RotX(wrist_yaw) * RotY(pitch);
}

OrientationSolution SolveOrientation(const GripperParams& params,
                                     const Mat3& target_rotation,
                                     const Mat3& carriage_rotation) {
  if (!IsRotation(target_rotation, 1e-9) ||
      !IsRotation(carriage_rotation, 1e-9)) {
    throw ConfigurationError("orientation target must be orthonormal");
  }
  const Mat3 r = carriage_rotation.transpose() * target_rotation;
  // Rz(a) Rx(b) Ry(c): r(2,1) = sin b, r(2,0) = -cos b sin c,
  // r(2,2) = cos b cos c, r(0,1) = -sin a cos b, r(1,1) = cos a cos b.
  const double sin_yaw = std::clamp(r(2, 1), -1.0, 1.0);
  const double cos_yaw = std::hypot(r(2, 0), r(2, 2));
  if (cos_yaw < kSingularCos) {
    throw SingularOrientationError(
        "wrist yaw at +-pi/2: roll and pitch axes align");
  }
  OrientationSolution s;
  s.wrist_yaw = std::atan2(sin_yaw, cos_yaw);
  s.pitch = std::atan2(-r(2, 0), r(2, 2));
  s.roll = std::atan2(-r(0, 1), r(1, 1));

  auto require = [](Joint joint, double value, const Limits& limits) {
    if (!limits.Contains(value)) {
      const std::string name(JointName(joint));
      throw InfeasibleOrientationError(
          name, name + " = " + std::to_string(value) +
                    " rad needed, outside joint limits");
    }
  };
  require(Joint::kRoll, s.roll, params.roll);
  require(Joint::kWristYaw, s.wrist_yaw, params.wrist_yaw);
  require(Joint::kJaw1, s.pitch, params.jaw);
  return s;
}

}  // namespace cablegrip
