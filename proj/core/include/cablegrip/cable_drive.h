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

#ifndef CABLEGRIP_CABLE_DRIVE_H_
#define CABLEGRIP_CABLE_DRIVE_H_

#include <optional>
#include <string_view>

#include "cablegrip/kinematics.h"
#include "cablegrip/pose.h"

namespace cablegrip {

// Joints with their own drive module and cable loop.
enum class DriveJoint { kWrist = 0, kJaw1 = 1, kJaw2 = 2 };
inline constexpr int kNumDrives = 3;

std::string_view DriveJointName(DriveJoint joint);
// Returns false for unknown names.
bool ParseDriveJoint(std::string_view name, DriveJoint* joint);

// Servo, split capstan and joint pulley of one cable loop. Radii in mm,
// tension in N, torque constant in N*mm/A, angles in rad.
struct DriveModule {
  double capstan_radius = 10.0;
  double joint_pulley_radius = 5.0;
  double pretension = 20.0;
  double torque_constant = 500.0;
  double servo_range = kPi;  // total travel, centred on zero
  double ratchet_step = 0.0;  // N; 0 disables quantization

  void Validate() const;  // throws ConfigurationError
  double transmission_ratio() const {
    return capstan_radius / joint_pulley_radius;
  }
  // |torque| above which one side of the loop goes slack.
  double slack_torque() const {
    return 2.0 * joint_pulley_radius * pretension;
  }
};

// No-slip capstan: q = (r_c / r_j) * servo. Both throw OutOfRangeError when
// the servo angle (given or implied) leaves the servo range.
double ServoToJoint(const DriveModule& drive, double servo_angle);
double JointToServo(const DriveModule& drive, double joint_angle);

struct TensionState {
  double agonist = 0.0;     // N
  double antagonist = 0.0;  // N
  double joint_torque = 0.0;  // N*mm
  bool slack = false;
};

// Rigid-cable antagonistic split of a joint torque around the pretension.
// A negative side is clamped to zero and reported as slack.
TensionState TensionFromTorque(const DriveModule& drive, double torque);

// Joint torque from servo current: (r_j / r_c) * k_t * i. Meaningful only
// for decoupled routes with both cable sides taut.
double EstimateJointTorque(const DriveModule& drive, double current);

// Throws ConfigurationError on negative tension. With ratchet_step > 0 the
// stored value is floored to a whole number of ratchet steps.
DriveModule SetPretension(DriveModule drive, double pretension);

// Polyline routing of one cable loop, all points in mm.
//
// capstan_exit, guide and guide_cap are fixed in the base frame. The
// attachment is the tangent point on the joint pulley, expressed in the
// frame of the link carrying that pulley: the base frame for the wrist loop
// and the wrist frame for the jaw loops. Both sides of the loop share this
// geometry; they differ only in the wrap around the joint pulley.
struct CableRoute {
  DriveJoint joint = DriveJoint::kWrist;
  Vec3 capstan_exit = Vec3::Zero();
  Vec3 guide = Vec3::Zero();
  std::optional<Vec3> guide_cap;
  Vec3 attachment = Vec3::Zero();
  double pulley_radius = 5.0;
  double reference_angle = 0.0;
  // Claims that the jaw cable is independent of wrist yaw; requires the
  // guide cap to sit on the yaw axis.
  bool decoupled = true;

  // Straight-segment length at the zero configuration.
  double nominal_length() const;
  // Throws ConfigurationError on a violated route invariant.
  void Validate() const;
};

struct CableLengths {
  double agonist = 0.0;
  double antagonist = 0.0;
};

// Distance of a base-frame point from the wrist yaw axis.
double DistanceFromYawAxis(const Vec3& point);

// Straight segments plus the signed pulley wrap of the route's own joint.
// Checks joint ranges and route invariants.
CableLengths ComputeCableLengths(const CableRoute& route,
                                 const GripperParams& params,
                                 const GripperConfig& config);
// Geometry only: no range or route checks.
CableLengths ComputeCableLengthsUnchecked(const CableRoute& route,
                                          double wrist_yaw,
                                          double joint_angle);

// Joint angle that drives `route`'s pulley in `config`.
double RouteJointAngle(const CableRoute& route, const GripperConfig& config);

// |dL/d(wrist yaw)| by central difference with half-step `delta` in
// (0, 0.1]; the larger of the two loop sides.
double DecouplingResidual(const CableRoute& route, const GripperParams& params,
                          const GripperConfig& config, double delta = 1e-3);

// The default routing for `params`: wrist loop without a guide cap, jaw
// loops bending over guide caps on the yaw axis.
CableRoute DefaultRoute(DriveJoint joint, const GripperParams& params,
                        const DriveModule& drive);

}  // namespace cablegrip

#endif  // CABLEGRIP_CABLE_DRIVE_H_
