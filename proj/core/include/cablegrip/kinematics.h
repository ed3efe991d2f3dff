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

#ifndef CABLEGRIP_KINEMATICS_H_
#define CABLEGRIP_KINEMATICS_H_

#include <string_view>

#include "cablegrip/pose.h"

namespace cablegrip {

// Closed interval in radians.
struct Limits {
  double min = 0.0;
  double max = 0.0;
  bool Contains(double v, double tol = 1e-12) const {
    return v >= min - tol && v <= max + tol;
  }
};

// Link dimensions (mm) and joint ranges (rad) of the three-joint gripper.
//
// Frames: the carriage frame is the manipulator flange, tool axis +z. The
// base frame sits `base_length` along +z after the roll joint, with its
// origin on the wrist yaw axis (base x). The wrist frame rotates about base x
// and carries the jaw pivot at (0, 0, wrist_length); both jaws rotate about
// the wrist y axis through that pivot.
struct GripperParams {
  double base_length = 40.0;
  double wrist_length = 40.0;
  double jaw_length = 30.0;
  double jaw_thickness = 3.0;
  double jaw_width = 8.0;
  double body_width = 25.0;
  Limits wrist_yaw{-kPi / 2, kPi / 2};
  Limits jaw{-kPi / 2, kPi / 2};
  Limits roll{-kPi, kPi};

  // Throws ConfigurationError on non-positive lengths or empty ranges.
  void Validate() const;

  // Tip chord at the widest admissible jaw spread.
  double MaxOpening() const;
};

struct GripperConfig {
  Pose carriage;
  double roll = 0.0;
  double wrist_yaw = 0.0;
  double jaw1 = 0.0;  // the +x jaw; jaw1 >= jaw2 always
  double jaw2 = 0.0;

  double pitch() const { return 0.5 * (jaw1 + jaw2); }
  double opening_angle() const { return jaw1 - jaw2; }

  // Jaw angles from the mid-plane pitch and the opening angle.
  static GripperConfig FromPitch(const Pose& carriage, double roll,
                                 double wrist_yaw, double pitch,
                                 double opening_angle);
};

struct GripperPosture {
  Pose base;   // origin on the yaw axis
  Pose wrist;  // rotates with yaw; origin on the yaw axis
  Pose jaw1;   // origin at the pitch pivot
  Pose jaw2;
  Pose jaw_center;  // pivot frame rotated by the mean pitch
  Vec3 tip1 = Vec3::Zero();
  Vec3 tip2 = Vec3::Zero();
  double tip_opening = 0.0;
};

enum class Joint { kRoll, kWristYaw, kJaw1, kJaw2 };
std::string_view JointName(Joint joint);

// Throws OutOfRangeError naming the first joint outside its range, or
// "jaw1" when jaw1 < jaw2.
void CheckLimits(const GripperParams& params, const GripperConfig& config);

// carriage * Roll * base-offset * Yaw * wrist-offset * Pitch(jaw_i) * jaw.
GripperPosture ForwardKinematics(const GripperParams& params,
                                 const GripperConfig& config);
// Same chain without the range checks; used for finite differences.
GripperPosture ForwardKinematicsUnchecked(const GripperParams& params,
                                          const GripperConfig& config);

double JawOpening(const GripperParams& params, const GripperConfig& config);

// Opening angle whose tip chord equals `width`; throws OutOfRangeError if
// the chord exceeds 2 * jaw_length.
double OpeningAngleForWidth(const GripperParams& params, double width);

struct OrientationSolution {
  double roll = 0.0;
  double wrist_yaw = 0.0;
  double pitch = 0.0;
};

// Rz(roll) * Rx(yaw) * Ry(pitch): carriage frame to jaw-center frame.
Mat3 ComposeOrientation(double roll, double wrist_yaw, double pitch);

// Decomposes carriage^T * target into roll-yaw-pitch.
//
// Throws SingularOrientationError when |cos(yaw)| < 1e-6 (roll and pitch
// axes align) and InfeasibleOrientationError naming the joint when the
// decomposition leaves its range (pitch is checked against the jaw range).
OrientationSolution SolveOrientation(const GripperParams& params,
                                     const Mat3& target_rotation,
                                     const Mat3& carriage_rotation);

}  // namespace cablegrip

#endif  // CABLEGRIP_KINEMATICS_H_
