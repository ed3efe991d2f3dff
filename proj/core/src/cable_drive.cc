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

#include "cablegrip/cable_drive.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "cablegrip/errors.h"

namespace cablegrip {
namespace {

constexpr double kOnAxisTol = 1e-9;

double StraightLength(const CableRoute& route, const Vec3& attachment_base) {
  double len = (route.guide - route.capstan_exit).norm();
  if (route.guide_cap) {
    len += (*route.guide_cap - route.guide).norm();
    len += (attachment_base - *route.guide_cap).norm();
  } else {
    len += (attachment_base - route.guide).norm();
  }
  return len;
}

Vec3 AttachmentInBase(const CableRoute& route, double wrist_yaw) {
  if (route.joint == DriveJoint::kWrist) return route.attachment;
  return RotX(wrist_yaw) * route.attachment;
}

void CheckServo(const DriveModule& drive, double servo_angle) {
  const double half = 0.5 * drive.servo_range;
  if (!std::isfinite(servo_angle) || std::abs(servo_angle) > half + 1e-12) {
    throw OutOfRangeError("servo", "servo angle " + std::to_string(servo_angle) +
                                       " rad outside +-" + std::to_string(half));
  }
}

}  // namespace

std::string_view DriveJointName(DriveJoint joint) {
  switch (joint) {
    case DriveJoint::kWrist:
      return "wrist";
    case DriveJoint::kJaw1:
      return "jaw1";
    case DriveJoint::kJaw2:
      return "jaw2";
  }
  return "unknown";
}

bool ParseDriveJoint(std::string_view name, DriveJoint* joint) {
  for (DriveJoint j : {DriveJoint::kWrist, DriveJoint::kJaw1, DriveJoint::kJaw2}) {
    if (DriveJointName(j) == name) {
      *joint = j;
      return true;
    }
  }
  return false;
}

void DriveModule::Validate() const {
  if (!(capstan_radius > 0 && joint_pulley_radius > 0 && torque_constant > 0)) {
    throw ConfigurationError("drive radii and torque constant must be positive");
  }
  if (!(pretension >= 0) || !(servo_range > 0) || !(ratchet_step >= 0)) {
    throw ConfigurationError(
        "drive pretension, ratchet step must be >= 0 and servo range > 0");
  }
}

double ServoToJoint(const DriveModule& drive, double servo_angle) {
  CheckServo(drive, servo_angle);
  return drive.transmission_ratio() * servo_angle;
}

double JointToServo(const DriveModule& drive, double joint_angle) {
  const double servo = joint_angle / drive.transmission_ratio();
  CheckServo(drive, servo);
  return servo;
}

TensionState TensionFromTorque(const DriveModule& drive, double torque) {
  TensionState t;
  t.joint_torque = torque;
  const double delta = torque / (2.0 * drive.joint_pulley_radius);
  t.agonist = drive.pretension + delta;
  t.antagonist = drive.pretension - delta;
  // At exactly |torque| = 2 r_j T0 one side reaches zero but is not slack.
  if (std::abs(torque) > drive.slack_torque()) {
    t.slack = true;
    if (t.agonist < 0) t.agonist = 0;
    if (t.antagonist < 0) t.antagonist = 0;
  }
  return t;
}

double EstimateJointTorque(const DriveModule& drive, double current) {
  return drive.torque_constant * current / drive.transmission_ratio();
}

DriveModule SetPretension(DriveModule drive, double pretension) {
  if (!(pretension >= 0)) {
    throw ConfigurationError("pretension must be non-negative");
  }
  if (drive.ratchet_step > 0) {
    pretension = std::floor(pretension / drive.ratchet_step) * drive.ratchet_step;
  }
  drive.pretension = pretension;
  return drive;
}

double CableRoute::nominal_length() const {
  return StraightLength(*this, AttachmentInBase(*this, 0.0));
}

void CableRoute::Validate() const {
  const std::string name(DriveJointName(joint));
  if (!(pulley_radius > 0)) {
    throw ConfigurationError(name + " route: pulley radius must be positive");
  }
  const Vec3 attach = AttachmentInBase(*this, 0.0);
  const bool zero_segment =
      (guide - capstan_exit).norm() <= 0 ||
      (guide_cap ? ((*guide_cap - guide).norm() <= 0 ||
                    (attach - *guide_cap).norm() <= 0)
                 : (attach - guide).norm() <= 0);
  if (zero_segment) {
    throw ConfigurationError(name + " route: zero-length segment");
  }
  if (joint == DriveJoint::kWrist) {
    if (guide_cap) {
      throw ConfigurationError("wrist route must not pass a guide cap");
    }
    return;
  }
  if (decoupled) {
    if (!guide_cap) {
      throw ConfigurationError(name + " route claims decoupling without a guide cap");
    }
    if (DistanceFromYawAxis(*guide_cap) > kOnAxisTol) {
      throw ConfigurationError(name + " route guide cap is off the yaw axis");
    }
  }
}

double DistanceFromYawAxis(const Vec3& point) {
  return std::hypot(point.y(), point.z());
}

double RouteJointAngle(const CableRoute& route, const GripperConfig& config) {
  switch (route.joint) {
    case DriveJoint::kWrist:
      return config.wrist_yaw;
    case DriveJoint::kJaw1:
      return config.jaw1;
    case DriveJoint::kJaw2:
      return config.jaw2;
  }
  return 0.0;
}

CableLengths ComputeCableLengthsUnchecked(const CableRoute& route,
                                          double wrist_yaw,
                                          double joint_angle) {
  const double straight = StraightLength(route, AttachmentInBase(route, wrist_yaw));
  const double wrap = route.pulley_radius * (joint_angle - route.reference_angle);
  return {straight - wrap, straight + wrap};
}

CableLengths ComputeCableLengths(const CableRoute& route,
                                 const GripperParams& params,
                                 const GripperConfig& config) {
  route.Validate();
  CheckLimits(params, config);
  return ComputeCableLengthsUnchecked(route, config.wrist_yaw,
                                      RouteJointAngle(route, config));
}

double DecouplingResidual(const CableRoute& route, const GripperParams& params,
                          const GripperConfig& config, double delta) {
  (void)params;
  if (!(delta > 0 && delta <= 0.1)) {
    throw ConfigurationError("finite-difference step must lie in (0, 0.1]");
  }
  const double q = RouteJointAngle(route, config);
  // For the wrist loop its own angle moves with yaw.
  const bool self = route.joint == DriveJoint::kWrist;
  const CableLengths hi = ComputeCableLengthsUnchecked(
      route, config.wrist_yaw + delta, self ? q + delta : q);
  const CableLengths lo = ComputeCableLengthsUnchecked(
      route, config.wrist_yaw - delta, self ? q - delta : q);
  const double da = (hi.agonist - lo.agonist) / (2.0 * delta);
  const double db = (hi.antagonist - lo.antagonist) / (2.0 * delta);
  return std::max(std::abs(da), std::abs(db));
}

CableRoute DefaultRoute(DriveJoint joint, const GripperParams& params,
                        const DriveModule& drive) {
  CableRoute r;
  r.joint = joint;
  r.pulley_radius = drive.joint_pulley_radius;
  const double r_j = drive.joint_pulley_radius;
  const double capstan_z = -params.base_length - 10.0;
  switch (joint) {
    case DriveJoint::kWrist:
      // Tangent to the yaw pulley (axis base x, radius r_j).
      r.capstan_exit = Vec3(-8.0, r_j, capstan_z);
      r.guide = Vec3(-8.0, r_j, -10.0);
      r.attachment = Vec3(-8.0, r_j, 0.0);
      r.decoupled = false;
      break;
    case DriveJoint::kJaw1:
      r.capstan_exit = Vec3(4.0, 3.0, capstan_z);
      r.guide = Vec3(4.0, 3.0, -8.0);
      r.guide_cap = Vec3(4.0, 0.0, 0.0);
      // Tangent to the jaw pulley (axis wrist y, centred at the pivot).
      r.attachment = Vec3(r_j, 3.0, params.wrist_length);
      break;
    case DriveJoint::kJaw2:
      r.capstan_exit = Vec3(-4.0, -3.0, capstan_z);
      r.guide = Vec3(-4.0, -3.0, -8.0);
      r.guide_cap = Vec3(-4.0, 0.0, 0.0);
      r.attachment = Vec3(-r_j, -3.0, params.wrist_length);
      break;
  }
  return r;
}

}  // namespace cablegrip
