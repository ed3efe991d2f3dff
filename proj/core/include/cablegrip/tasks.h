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

#ifndef CABLEGRIP_TASKS_H_
#define CABLEGRIP_TASKS_H_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cablegrip/cable_drive.h"
#include "cablegrip/geometry.h"
#include "cablegrip/kinematics.h"
#include "cablegrip/scene.h"

namespace cablegrip {

struct JointGoal {
  double roll = 0.0;
  double wrist_yaw = 0.0;
  double pitch = 0.0;
};

// Moves the carriage and the roll/yaw/pitch joints together; the jaw
// opening is kept. Exactly one of `joints` or `orientation` is set; an
// orientation goal is the world rotation of the jaw-centre frame and is
// solved against the carriage rotation.
struct MoveTo {
  Pose carriage;
  std::optional<JointGoal> joints;
  std::optional<Mat3> orientation;
};
// Symmetric change of the tip chord about the current pitch.
struct SetOpening {
  double width = 0.0;  // mm
};
struct CloseOn {
  std::string component;
};
// Straight carriage translation; only valid while holding.
struct Pull {
  Vec3 axis = Vec3::UnitZ();
  double distance = 0.0;  // mm
};
// Reopens the jaws to their pre-grasp angles and lets go.
struct Release {};
// Joint-only motion with the carriage fixed.
struct Reorient {
  JointGoal goal;
};

using Phase = std::variant<MoveTo, SetOpening, CloseOn, Pull, Release, Reorient>;
std::string_view PhaseName(const Phase& phase);

struct TaskScript {
  std::string id;
  std::string description;
  std::vector<std::string> targets;
  std::vector<Phase> phases;
};

// Structural checks against `scene`: known component ids, close_on only
// after a move_to and never while holding, pull and release only while
// holding, positive distances. Throws ValidationError naming the phase.
void ValidateScript(const TaskScript& script, const Scene& scene);

enum class FailureReason { kNone, kCollision, kUnreachable, kGraspFailed, kSlack, kLimit };
std::string_view FailureReasonName(FailureReason reason);

struct StepRecord {
  std::size_t step = 0;
  std::size_t phase = 0;  // index into the script; phase count for the start row
  GripperConfig config;
  std::array<CableLengths, kNumDrives> cable_lengths;
  std::array<TensionState, kNumDrives> tensions;
  std::string held;  // empty when not holding
  std::optional<Pose> held_pose;
  double min_clearance = 0.0;
  bool collision = false;
};

struct TaskResult {
  bool success = false;
  FailureReason reason = FailureReason::kNone;
  std::string detail;
  std::map<std::string, Pose> final_poses;  // target id -> pose
  std::vector<StepRecord> log;
  Scene final_scene;
};

struct ExecutionOptions {
  double step = 0.5;               // mm of point travel between samples
  double contact_tolerance = 0.5;  // mm
  double squeeze_torque = 100.0;   // N*mm per jaw while holding
};

struct GraspOutcome {
  bool ok = false;
  std::string reason;
  double jaw1 = 0.0;  // contact angles after closing
  double jaw2 = 0.0;
};

// Simulated closing of both jaws onto `component_id` from `config`. Holds
// when the part fits the maximum opening, the jaws do not start buried in
// it, each jaw stops within the contact tolerance on opposite sides, and the
// closing sweep touches no other body.
GraspOutcome SimulateGrasp(const Scene& scene, const GripperConfig& config,
                           std::string_view component_id,
                           double contact_tolerance = 0.5);

// Predicate form of SimulateGrasp for a posture computed from `config`.
bool GraspCheck(const Scene& scene, const GripperConfig& config,
                const Component& component, double contact_tolerance = 0.5);

// World boxes of the gripper links in `config` (names: base, wrist, jaw1,
// jaw2).
std::vector<PlacedBox> GripperBoxes(const GripperParams& params,
                                    const GripperConfig& config);

// Quasi-static execution. Failures are reported in the result, never
// thrown; script structure errors throw ValidationError before any motion.
TaskResult Execute(const Scene& scene, const TaskScript& script,
                   const ExecutionOptions& options = {});

// task1, task2, task3a, task3b and the negative control task3b_naive, all
// written against BuildZ230Scene().
std::vector<TaskScript> BuiltinTasks();
// Throws LookupError for an unknown id.
TaskScript BuiltinTask(std::string_view id);

// Release phases followed later by a close_on of the same component.
int CountRegrasps(const TaskScript& script);
// Same count from a log: held id dropped then reacquired.
int CountRegrasps(const std::vector<StepRecord>& log);

// One row per step, fixed column order and precision.
std::string StepLogCsv(const std::vector<StepRecord>& log);

}  // namespace cablegrip

#endif  // CABLEGRIP_TASKS_H_
