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

#include "cablegrip/tasks.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include <fmt/format.h>

#include "cablegrip/errors.h"
#include "cablegrip/z230.h"

namespace cablegrip {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Tip travel per closing increment in the grasp simulation.
constexpr double kCloseIncrement = 0.05;  // mm
constexpr double kAxisTol = 1e-9;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Obb LinkBox(const Pose& frame, const Vec3& center, const Vec3& half) {
  return Obb{frame * Pose::FromTranslation(center), half};
}

Obb JawBox(const GripperParams& p, const Pose& jaw_frame, double side) {
  return LinkBox(jaw_frame, Vec3(side * p.jaw_thickness / 2, 0, p.jaw_length / 2),
                 Vec3(p.jaw_thickness / 2, p.jaw_width / 2, p.jaw_length / 2));
}

// Crude bound on how far any gripper point sits from the carriage origin.
double GripperReach(const GripperParams& p) {
  return p.base_length + p.wrist_length + p.jaw_length + p.body_width +
         p.jaw_thickness + p.jaw_width;
}

std::vector<PlacedBox> JawBoxes(const GripperParams& p, const GripperPosture& fk) {
  return {{"gripper", "jaw1", JawBox(p, fk.jaw1, 1.0)},
          {"gripper", "jaw2", JawBox(p, fk.jaw2, -1.0)}};
}

struct Contact {
  bool hit = false;
  double clearance = kInf;
  const PlacedBox* body = nullptr;
};

// Collision flag and minimum clearance of `moving` against `bodies`.
Contact CheckBoxes(const std::vector<PlacedBox>& moving,
                   const std::vector<PlacedBox>& bodies) {
  Contact out;
  for (const PlacedBox& m : moving) {
    const double rm = m.box.half_extents.norm();
    for (const PlacedBox& b : bodies) {
      const double lower = (m.box.center() - b.box.center()).norm() - rm -
                           b.box.half_extents.norm();
      if (lower > out.clearance) continue;
      if (ObbIntersects(m.box, b.box)) {
        out.clearance = 0.0;
        if (!out.hit) {
          out.hit = true;
          out.body = &b;
        }
        continue;
      }
      out.clearance = std::min(out.clearance, ObbClearance(m.box, b.box));
    }
  }
  return out;
}

struct Held {
  std::string id;
  Pose attach;  // component pose in the wrist frame
  double jaw1 = 0.0;
  double jaw2 = 0.0;
};

class Runner {
 public:
  Runner(const Scene& scene, const TaskScript& script, const ExecutionOptions& options)
      : scene_(scene), script_(script), options_(options), config_(scene.home) {}

  TaskResult Run() {
    TaskResult result;
    if (!script_.phases.empty()) {
      phase_ = script_.phases.size();
      if (!Sample(config_)) Fail(FailureReason::kCollision, CollisionDetail("home"));
      for (phase_ = 0; phase_ < script_.phases.size() && !failed_; ++phase_) {
        std::visit([this](const auto& ph) { Do(ph); }, script_.phases[phase_]);
      }
    }
    result.log = std::move(log_);
    result.reason = reason_;
    result.detail = detail_;
    bool targets_out = true;
    std::string missing;
    for (const std::string& id : script_.targets) {
      const Component& c = scene_.GetComponent(id);
      result.final_poses.emplace(id, c.pose);
      if (c.engaged() || ObbIntersects(c.box(), scene_.workspace)) {
        targets_out = false;
        if (missing.empty()) missing = id;
      }
    }
    if (!failed_ && !targets_out) {
      result.reason = FailureReason::kGraspFailed;
      result.detail = missing + " was not removed from the chassis";
    }
    result.success = !failed_ && targets_out;
    result.final_scene = std::move(scene_);
    return result;
  }

 private:
  const GripperParams& params() const { return scene_.gripper; }

  void Fail(FailureReason reason, std::string detail) {
    if (failed_) return;
    failed_ = true;
    reason_ = reason;
    detail_ = fmt::format("phase {} ({}): {}", phase_,
                          phase_ < script_.phases.size()
                              ? PhaseName(script_.phases[phase_])
                              : std::string_view("start"),
                          detail);
  }

  std::string CollisionDetail(std::string_view where) const {
    return fmt::format("{} collides with {}.{}", where, last_hit_body_, last_hit_box_);
  }

  Component* HeldComponent() {
    if (!held_) return nullptr;
    for (Component& c : scene_.components) {
      if (c.id == held_->id) return &c;
    }
    return nullptr;
  }

  // Checks limits and servo ranges of a motion endpoint.
  bool Reachable(const GripperConfig& c) {
    try {
      CheckLimits(params(), c);
      JointToServo(scene_.drive(DriveJoint::kWrist), c.wrist_yaw);
      JointToServo(scene_.drive(DriveJoint::kJaw1), c.jaw1);
      JointToServo(scene_.drive(DriveJoint::kJaw2), c.jaw2);
    } catch (const OutOfRangeError& e) {
      Fail(FailureReason::kLimit, e.what());
      return false;
    }
    return true;
  }

  std::array<TensionState, kNumDrives> Tensions(bool squeezing) const {
    const double tau = squeezing ? options_.squeeze_torque : 0.0;
    // Squeezing drives jaw1 toward negative pitch and jaw2 toward positive.
    return {TensionFromTorque(scene_.drive(DriveJoint::kWrist), 0.0),
            TensionFromTorque(scene_.drive(DriveJoint::kJaw1), -tau),
            TensionFromTorque(scene_.drive(DriveJoint::kJaw2), tau)};
  }

  // Moves the gripper (and the held part) to `c`, checks it and logs a row.
  // Returns false on collision.
  bool Sample(const GripperConfig& c) {
    config_ = c;
    const GripperPosture fk = ForwardKinematicsUnchecked(params(), c);
    std::vector<PlacedBox> moving = GripperBoxes(params(), c);
    std::string_view exclude;
    if (Component* h = HeldComponent()) {
      h->pose = fk.wrist * held_->attach;
      moving.push_back({h->id, h->id, h->box()});
      exclude = h->id;
    }
    const std::vector<PlacedBox> bodies = scene_.Bodies(exclude);
    const Contact contact = CheckBoxes(moving, bodies);
    if (contact.hit) {
      last_hit_body_ = contact.body->body;
      last_hit_box_ = contact.body->name;
    }
    Log(c, contact.clearance, contact.hit);
    return !contact.hit;
  }

  void Log(const GripperConfig& c, double clearance, bool collision) {
    StepRecord row;
    row.step = log_.size();
    row.phase = phase_;
    row.config = c;
    for (int j = 0; j < kNumDrives; ++j) {
      const CableRoute& route = scene_.routes[j];
      row.cable_lengths[j] = ComputeCableLengthsUnchecked(
          route, c.wrist_yaw, RouteJointAngle(route, c));
    }
    row.tensions = Tensions(held_.has_value());
    if (held_) {
      row.held = held_->id;
      row.held_pose = HeldComponent()->pose;
    }
    row.min_clearance = clearance;
    row.collision = collision;
    log_.push_back(std::move(row));
  }

  // Sampled motion from the current config to `goal`; carriage by
  // Pose::Interpolate, joints linearly.
  bool Sweep(const GripperConfig& goal) {
    const GripperConfig start = config_;
    double reach = GripperReach(params());
    if (const Component* h = HeldComponent()) {
      double far = 0.0;
      for (const Vec3& corner : h->box().Corners()) {
        far = std::max(far, (corner - start.carriage.translation()).norm());
      }
      reach = std::max(reach, far + params().base_length + params().wrist_length);
    }
    const double joints = std::abs(goal.roll - start.roll) +
                          std::abs(goal.wrist_yaw - start.wrist_yaw) +
                          std::max(std::abs(goal.jaw1 - start.jaw1),
                                   std::abs(goal.jaw2 - start.jaw2));
    const double bound = MotionBound(start.carriage, goal.carriage, reach) + reach * joints;
    const std::size_t n = SweepSubdivisions(bound, options_.step);
    for (std::size_t k = 1; k <= n; ++k) {
      const double s = static_cast<double>(k) / static_cast<double>(n);
      GripperConfig c;
      c.carriage = Pose::Interpolate(start.carriage, goal.carriage, s);
      c.roll = start.roll + s * (goal.roll - start.roll);
      c.wrist_yaw = start.wrist_yaw + s * (goal.wrist_yaw - start.wrist_yaw);
      c.jaw1 = start.jaw1 + s * (goal.jaw1 - start.jaw1);
      c.jaw2 = start.jaw2 + s * (goal.jaw2 - start.jaw2);
      if (k == n) c = goal;
      if (!Sample(c)) {
        Fail(FailureReason::kCollision, CollisionDetail("gripper"));
        return false;
      }
    }
    return true;
  }

  bool HeldIsEngaged() {
    const Component* h = HeldComponent();
    return h != nullptr && h->engaged();
  }

  // Joint goal applied around the current opening.
  bool JointTarget(const GripperConfig& base, const JointGoal& goal, GripperConfig* out) {
    *out = GripperConfig::FromPitch(base.carriage, goal.roll, goal.wrist_yaw, goal.pitch,
                                    config_.opening_angle());
    return Reachable(*out);
  }

  void Do(const MoveTo& m) {
    if (HeldIsEngaged()) {
      Fail(FailureReason::kCollision, fmt::format("{} is still seated in its slot", held_->id));
      return;
    }
    GripperConfig goal = config_;
    goal.carriage = m.carriage;
    JointGoal joints{config_.roll, config_.wrist_yaw, config_.pitch()};
    if (m.joints) joints = *m.joints;
    if (m.orientation) {
      try {
        const OrientationSolution sol =
            SolveOrientation(params(), *m.orientation, m.carriage.rotation());
        joints = {sol.roll, sol.wrist_yaw, sol.pitch};
      } catch (const SingularOrientationError& e) {
        Fail(FailureReason::kUnreachable, e.what());
        return;
      } catch (const InfeasibleOrientationError& e) {
        Fail(FailureReason::kLimit, e.what());
        return;
      }
    }
    if (!JointTarget(goal, joints, &goal)) return;
    Sweep(goal);
  }

  void Do(const SetOpening& s) {
    double angle = 0.0;
    try {
      angle = OpeningAngleForWidth(params(), s.width);
    } catch (const OutOfRangeError& e) {
      Fail(FailureReason::kLimit, e.what());
      return;
    }
    GripperConfig goal = GripperConfig::FromPitch(config_.carriage, config_.roll,
                                                  config_.wrist_yaw, config_.pitch(), angle);
    if (!Reachable(goal)) return;
    Sweep(goal);
  }

  void Do(const CloseOn& c) {
    const GraspOutcome g =
        SimulateGrasp(scene_, config_, c.component, options_.contact_tolerance);
    if (!g.ok) {
      Fail(FailureReason::kGraspFailed, g.reason);
      return;
    }
    const double pre1 = config_.jaw1, pre2 = config_.jaw2;
    config_.jaw1 = g.jaw1;
    config_.jaw2 = g.jaw2;
    const GripperPosture fk = ForwardKinematicsUnchecked(params(), config_);
    const Component& part = scene_.GetComponent(c.component);
    held_ = Held{part.id, fk.wrist.Inverse() * part.pose, pre1, pre2};
    for (const TensionState& t : Tensions(true)) {
      if (t.slack) {
        Fail(FailureReason::kSlack, "squeeze torque exceeds the slack limit");
        Log(config_, kInf, false);
        return;
      }
    }
    if (!Sample(config_)) Fail(FailureReason::kCollision, CollisionDetail("grasp"));
  }

  void Do(const Pull& p) {
    Component* h = HeldComponent();
    if (h->engaged() && p.axis.dot(h->slot->axis) < 1.0 - kAxisTol) {
      Fail(FailureReason::kCollision,
           fmt::format("pull direction is not the slot axis of {}", h->id));
      return;
    }
    const GripperConfig start = config_;
    const std::size_t n = SweepSubdivisions(p.distance, options_.step);
    double done = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      const double travelled = p.distance * static_cast<double>(k) / static_cast<double>(n);
      if (HeldIsEngaged()) {
        scene_ = ExtractComponent(scene_, held_->id, travelled - done);
      }
      done = travelled;
      GripperConfig c = start;
      c.carriage = Pose::FromTranslation(p.axis * travelled) * start.carriage;
      if (!Sample(c)) {
        Fail(FailureReason::kCollision, CollisionDetail("pull"));
        return;
      }
    }
  }

  void Do(const Release&) {
    GripperConfig goal = config_;
    goal.jaw1 = held_->jaw1;
    goal.jaw2 = held_->jaw2;
    if (!Reachable(goal)) return;
    // The jaws open away from the part, which stays where it is.
    const Held held = *held_;
    held_.reset();
    SweepExcluding(goal, held.id);
  }

  // Sweep for jaw-only motion that ignores one component.
  bool SweepExcluding(const GripperConfig& goal, const std::string& id) {
    const GripperConfig start = config_;
    const double bound = GripperReach(params()) *
                         std::max(std::abs(goal.jaw1 - start.jaw1),
                                  std::abs(goal.jaw2 - start.jaw2));
    const std::size_t n = std::max<std::size_t>(1, SweepSubdivisions(bound, options_.step));
    const std::vector<PlacedBox> bodies = scene_.Bodies(id);
    for (std::size_t k = 1; k <= n; ++k) {
      const double s = static_cast<double>(k) / static_cast<double>(n);
      GripperConfig c = start;
      c.jaw1 = start.jaw1 + s * (goal.jaw1 - start.jaw1);
      c.jaw2 = start.jaw2 + s * (goal.jaw2 - start.jaw2);
      if (k == n) c = goal;
      config_ = c;
      const Contact contact = CheckBoxes(GripperBoxes(params(), c), bodies);
      Log(c, contact.clearance, contact.hit);
      if (contact.hit) {
        last_hit_body_ = contact.body->body;
        last_hit_box_ = contact.body->name;
        Fail(FailureReason::kCollision, CollisionDetail("release"));
        return false;
      }
    }
    return true;
  }

  void Do(const Reorient& r) {
    if (HeldIsEngaged()) {
      Fail(FailureReason::kCollision, fmt::format("{} is still seated in its slot", held_->id));
      return;
    }
    GripperConfig goal;
    if (!JointTarget(config_, r.goal, &goal)) return;
    Sweep(goal);
  }

  Scene scene_;
  const TaskScript& script_;
  ExecutionOptions options_;
  GripperConfig config_;
  std::optional<Held> held_;
  std::vector<StepRecord> log_;
  std::size_t phase_ = 0;
  bool failed_ = false;
  FailureReason reason_ = FailureReason::kNone;
  std::string detail_;
  std::string last_hit_body_;
  std::string last_hit_box_;
};

std::string PhaseLabel(std::size_t i, const Phase& phase) {
  return fmt::format("phase {} ({})", i, PhaseName(phase));
}

}  // namespace

std::string_view PhaseName(const Phase& phase) {
  return std::visit(Overloaded{
                        [](const MoveTo&) { return std::string_view("move_to"); },
                        [](const SetOpening&) { return std::string_view("set_opening"); },
                        [](const CloseOn&) { return std::string_view("close_on"); },
                        [](const Pull&) { return std::string_view("pull"); },
                        [](const Release&) { return std::string_view("release"); },
                        [](const Reorient&) { return std::string_view("reorient"); },
                    },
                    phase);
}

std::string_view FailureReasonName(FailureReason reason) {
  switch (reason) {
    case FailureReason::kNone: return "none";
    case FailureReason::kCollision: return "collision";
    case FailureReason::kUnreachable: return "unreachable";
    case FailureReason::kGraspFailed: return "grasp-failed";
    case FailureReason::kSlack: return "slack";
    case FailureReason::kLimit: return "limit";
  }
  return "unknown";
}

void ValidateScript(const TaskScript& script, const Scene& scene) {
  const std::string rec = script.id.empty() ? std::string("task") : "task " + script.id;
  if (script.id.empty()) throw ValidationError(rec, "id is empty");
  for (const std::string& t : script.targets) {
    if (scene.FindComponent(t) == nullptr) {
      throw ValidationError(rec, "unknown target component " + t);
    }
  }
  bool moved = false;
  bool holding = false;
  for (std::size_t i = 0; i < script.phases.size(); ++i) {
    const std::string at = rec + " " + PhaseLabel(i, script.phases[i]);
    std::visit(
        Overloaded{
            [&](const MoveTo& m) {
              if (m.joints.has_value() == m.orientation.has_value()) {
                throw ValidationError(at, "needs exactly one of joints or orientation");
              }
              if (m.orientation && !IsRotation(*m.orientation)) {
                throw ValidationError(at, "orientation is not a rotation");
              }
              moved = true;
            },
            [&](const SetOpening& s) {
              if (!(s.width >= 0)) throw ValidationError(at, "width must be non-negative");
              if (holding) throw ValidationError(at, "cannot change the opening while holding");
            },
            [&](const CloseOn& c) {
              if (scene.FindComponent(c.component) == nullptr) {
                throw ValidationError(at, "unknown component " + c.component);
              }
              if (!moved) throw ValidationError(at, "close_on before any move_to");
              if (holding) throw ValidationError(at, "already holding");
              holding = true;
            },
            [&](const Pull& p) {
              if (!holding) throw ValidationError(at, "pull while not holding");
              if (std::abs(p.axis.norm() - 1.0) > kAxisTol) {
                throw ValidationError(at, "axis is not unit length");
              }
              if (!(p.distance > 0)) throw ValidationError(at, "distance must be positive");
            },
            [&](const Release&) {
              if (!holding) throw ValidationError(at, "release while not holding");
              holding = false;
            },
            [&](const Reorient&) {},
        },
        script.phases[i]);
  }
}

std::vector<PlacedBox> GripperBoxes(const GripperParams& p, const GripperConfig& config) {
  const GripperPosture fk = ForwardKinematicsUnchecked(p, config);
  const Vec3 body_half(p.body_width / 2, p.body_width / 2, 0.0);
  std::vector<PlacedBox> boxes;
  boxes.reserve(4);
  boxes.push_back({"gripper", "base",
                   LinkBox(fk.base, Vec3(0, 0, -p.base_length / 2),
                           body_half + Vec3(0, 0, p.base_length / 2))});
  boxes.push_back({"gripper", "wrist",
                   LinkBox(fk.wrist, Vec3(0, 0, p.wrist_length / 2),
                           body_half + Vec3(0, 0, p.wrist_length / 2))});
  for (PlacedBox& jaw : JawBoxes(p, fk)) boxes.push_back(std::move(jaw));
  return boxes;
}

GraspOutcome SimulateGrasp(const Scene& scene, const GripperConfig& config,
                           std::string_view component_id, double contact_tolerance) {
  GraspOutcome out;
  const Component* part = scene.FindComponent(component_id);
  if (part == nullptr) {
    out.reason = "unknown component " + std::string(component_id);
    return out;
  }
  const GripperParams& p = scene.gripper;
  if (part->graspable_width() > p.MaxOpening()) {
    out.reason = fmt::format("{} is {:.3f} mm thick, wider than the {:.3f} mm jaw opening",
                             part->id, part->graspable_width(), p.MaxOpening());
    return out;
  }
  const Obb target = part->box();
  const std::vector<PlacedBox> others = scene.Bodies(part->id);

  GripperConfig c = config;
  const double mid = c.pitch();
  const double dphi = kCloseIncrement / p.jaw_length;
  bool done1 = false, done2 = false;
  while (true) {
    const GripperPosture fk = ForwardKinematicsUnchecked(p, c);
    const std::vector<PlacedBox> jaws = JawBoxes(p, fk);
    const Contact hit = CheckBoxes(jaws, others);
    if (hit.hit) {
      out.reason = fmt::format("closing jaws collide with {}.{}", hit.body->body, hit.body->name);
      return out;
    }
    for (int i = 0; i < 2; ++i) {
      if (ObbPenetration(jaws[i].box, target) > contact_tolerance) {
        out.reason = fmt::format("cannot close: {} is inside {}", jaws[i].name, part->id);
        return out;
      }
    }
    done1 = done1 || ObbClearance(jaws[0].box, target) <= contact_tolerance;
    done2 = done2 || ObbClearance(jaws[1].box, target) <= contact_tolerance;
    if (done1 && done2) {
      // Contacts must straddle the part along the tip-to-tip direction.
      const Vec3 across = fk.tip1 - fk.tip2;
      const Vec3 centre = part->pose.translation();
      const double s1 = across.dot(jaws[0].box.center() - centre);
      const double s2 = across.dot(jaws[1].box.center() - centre);
      if (!(s1 > 0 && s2 < 0)) {
        out.reason = "jaws touch the same side of " + part->id;
        return out;
      }
      // Both jaws must bite down beside the part, not rest on top of it.
      const Vec3 approach = fk.jaw_center.rotation().col(2);
      const double part_top = centre.dot(approach) - target.ProjectedRadius(approach);
      for (int i = 0; i < 2; ++i) {
        const double tip_end =
            jaws[i].box.center().dot(approach) + jaws[i].box.ProjectedRadius(approach);
        if (tip_end - part_top <= contact_tolerance) {
          out.reason = fmt::format("{} does not reach beside {}", jaws[i].name, part->id);
          return out;
        }
      }
      out.ok = true;
      out.jaw1 = c.jaw1;
      out.jaw2 = c.jaw2;
      return out;
    }
    if (!done1) c.jaw1 -= dphi;
    if (!done2) c.jaw2 += dphi;
    if (c.jaw1 < mid || c.jaw2 > mid) {
      out.reason = fmt::format("jaws closed without gripping {}", part->id);
      return out;
    }
  }
}

bool GraspCheck(const Scene& scene, const GripperConfig& config,
                const Component& component, double contact_tolerance) {
  return SimulateGrasp(scene, config, component.id, contact_tolerance).ok;
}

TaskResult Execute(const Scene& scene, const TaskScript& script,
                   const ExecutionOptions& options) {
  if (!(options.step > 0)) throw ConfigurationError("sweep step must be positive");
  ValidateScript(script, scene);
  return Runner(scene, script, options).Run();
}

int CountRegrasps(const TaskScript& script) {
  int count = 0;
  std::string holding;
  std::vector<std::string> released;
  for (const Phase& ph : script.phases) {
    if (const auto* c = std::get_if<CloseOn>(&ph)) {
      if (std::find(released.begin(), released.end(), c->component) != released.end()) {
        ++count;
        std::erase(released, c->component);
      }
      holding = c->component;
    } else if (std::holds_alternative<Release>(ph)) {
      released.push_back(holding);
      holding.clear();
    }
  }
  return count;
}

int CountRegrasps(const std::vector<StepRecord>& log) {
  int count = 0;
  std::string prev;
  std::vector<std::string> released;
  for (const StepRecord& row : log) {
    if (row.held != prev) {
      if (!prev.empty()) released.push_back(prev);
      if (!row.held.empty() &&
          std::find(released.begin(), released.end(), row.held) != released.end()) {
        ++count;
        std::erase(released, row.held);
      }
      prev = row.held;
    }
  }
  return count;
}

std::string StepLogCsv(const std::vector<StepRecord>& log) {
  std::string out =
      "step,qw,phi1,phi2,roll,tx,ty,tz,len_w1,len_w2,len_j1a,len_j1b,len_j2a,len_j2b,"
      "T1_w,T2_w,T1_j1,T2_j1,T1_j2,T2_j2,held,min_clearance,collision\n";
  for (const StepRecord& r : log) {
    const Vec3& t = r.config.carriage.translation();
    fmt::format_to(std::back_inserter(out), "{},{:.9f},{:.9f},{:.9f},{:.9f},{:.6f},{:.6f},{:.6f}",
                   r.step, r.config.wrist_yaw, r.config.jaw1, r.config.jaw2, r.config.roll,
                   t.x(), t.y(), t.z());
    for (const CableLengths& l : r.cable_lengths) {
      fmt::format_to(std::back_inserter(out), ",{:.6f},{:.6f}", l.agonist, l.antagonist);
    }
    for (const TensionState& s : r.tensions) {
      fmt::format_to(std::back_inserter(out), ",{:.6f},{:.6f}", s.agonist, s.antagonist);
    }
    fmt::format_to(std::back_inserter(out), ",{},{:.6f},{}\n", r.held, r.min_clearance,
                   r.collision ? 1 : 0);
  }
  return out;
}

namespace {

const JointGoal kUpright{kPi / 2, 0.0, 0.0};  // jaws down, opening along world y
const JointGoal kSideways{kPi / 2, kPi / 2, 0.0};  // jaws along +x, opening along y

// Carriage pose putting the tip midpoint at `tips` for the given rotation,
// joints and tip chord.
Pose CarriageFor(const GripperParams& p, const Mat3& rotation, const JointGoal& j,
                 double width, const Vec3& tips) {
  const GripperConfig c = GripperConfig::FromPitch(
      Pose(rotation, Vec3::Zero()), j.roll, j.wrist_yaw, j.pitch,
      OpeningAngleForWidth(p, width));
  const GripperPosture fk = ForwardKinematics(p, c);
  return Pose(rotation, tips - 0.5 * (fk.tip1 + fk.tip2));
}

class ScriptBuilder {
 public:
  ScriptBuilder(std::string id, std::string description, std::vector<std::string> targets)
      : params_(GripperParams()) {
    script_.id = std::move(id);
    script_.description = std::move(description);
    script_.targets = std::move(targets);
  }

  // Move with joint goals; `tips` is where the tip midpoint should land.
  ScriptBuilder& Move(const Mat3& rotation, const JointGoal& j, const Vec3& tips) {
    script_.phases.push_back(
        MoveTo{CarriageFor(params_, rotation, j, width_, tips), j, std::nullopt});
    return *this;
  }
  // Move with an orientation goal for the jaw-centre frame.
  ScriptBuilder& MoveOriented(const Mat3& rotation, const Mat3& jaws, const Vec3& tips) {
    const OrientationSolution sol = SolveOrientation(params_, jaws, rotation);
    const JointGoal j{sol.roll, sol.wrist_yaw, sol.pitch};
    script_.phases.push_back(
        MoveTo{CarriageFor(params_, rotation, j, width_, tips), std::nullopt, jaws});
    return *this;
  }
  ScriptBuilder& Open(double width) {
    width_ = width;
    script_.phases.push_back(SetOpening{width});
    return *this;
  }
  ScriptBuilder& Close(std::string id) {
    script_.phases.push_back(CloseOn{std::move(id)});
    return *this;
  }
  ScriptBuilder& Pulling(const Vec3& axis, double distance) {
    script_.phases.push_back(Pull{axis, distance});
    return *this;
  }
  ScriptBuilder& Let() {
    script_.phases.push_back(Release{});
    return *this;
  }
  ScriptBuilder& Turn(const JointGoal& j) {
    script_.phases.push_back(Reorient{j});
    return *this;
  }
  TaskScript Build() { return std::move(script_); }

 private:
  GripperParams params_;
  TaskScript script_;
  double width_ = 0.0;
};

// Grasp height: the jaw tips overlap the top of a part by this much.
constexpr double kBite = 5.0;
// Tip height well above the chassis for transfers.
constexpr double kHigh = 205.0;

TaskScript Task1() {
  const Mat3 down = RotX(kPi);
  ScriptBuilder b("task1", "remove the third and then the first RAM chip", {"ram_3", "ram_1"});
  b.Open(7.0);
  const double grip_z = 9.2 + z230::kRamSize.z() - kBite;
  // ram_3 between two neighbours, then ram_1 beside the cooler. Each chip
  // is lifted clear and left outside the back wall.
  const std::pair<const char*, Vec3> cycles[] = {
      {"ram_3", Vec3(120, 445, grip_z)},
      {"ram_1", Vec3(120, 425, grip_z)},
  };
  const double drop_y[] = {445.0, 380.0};
  for (int i = 0; i < 2; ++i) {
    const Vec3 grip = cycles[i].second;
    b.Move(down, kUpright, grip + Vec3(0, 0, kHigh - grip.z()))
        .Move(down, kUpright, grip)
        .Close(cycles[i].first)
        .Pulling(Vec3::UnitZ(), 8.0)
        .Pulling(Vec3::UnitZ(), kHigh - grip.z() - 8.0)
        .Move(down, kUpright, Vec3(-100, drop_y[i], kHigh))
        .Let()
        .Move(down, kUpright, Vec3(-100, drop_y[i], kHigh + 40));
  }
  return b.Build();
}

TaskScript Task2() {
  const Mat3 down = RotX(kPi);
  const Vec3 grip(357, 42, 4.5 + z230::kSsdSize.z() - kBite);
  return ScriptBuilder("task2", "descend the SSD enclosure and pull the SSD out", {"ssd"})
      .Open(10.0)
      .Move(down, kUpright, Vec3(grip.x(), grip.y(), kHigh + 40))
      .Move(down, kUpright, grip)
      .Close("ssd")
      .Pulling(Vec3::UnitZ(), 12.0)
      .Pulling(Vec3::UnitZ(), 170.0)
      .Build();
}

TaskScript Task3a() {
  // Carriage tilted 45 degrees; the jaws point along +x and open along z.
  const Mat3 tilted = RotY(3 * kPi / 4);
  const Mat3 jaws = RotY(kPi / 2);
  const Vec3 grip(333, 240, 21 + z230::kHddHeight / 2);
  return ScriptBuilder("task3a", "grasp the horizontal HDD at its exposed end and pull it out",
                       {"hdd_horizontal"})
      .Open(34.0)
      .MoveOriented(tilted, jaws, grip + Vec3(-60, 0, 150))
      .MoveOriented(tilted, jaws, grip + Vec3(-60, 0, 0))
      .MoveOriented(tilted, jaws, grip)
      .Close("hdd_horizontal")
      .Pulling(-Vec3::UnitX(), 150.0)
      .Pulling(Vec3::UnitZ(), 160.0)
      .Build();
}

// Shared opening of both vertical-HDD tasks: a sideways grasp on the
// exposed end of the drive.
ScriptBuilder& SideGrasp(ScriptBuilder& b, const Vec3& grip) {
  const Mat3 down = RotX(kPi);
  return b.Open(34.0)
      .Move(down, kSideways, grip + Vec3(-60, 0, 150))
      .Move(down, kSideways, grip + Vec3(-60, 0, 0))
      .Move(down, kSideways, grip)
      .Close("hdd_vertical");
}

constexpr double kVerticalHddTop = 2.5 + z230::kHddWidth;
const Vec3 kSideGrip(333, 370, 2.5 + z230::kHddWidth / 2);

TaskScript Task3b() {
  const Mat3 down = RotX(kPi);
  constexpr double kPartial = 60.0;
  ScriptBuilder b("task3b",
                  "pull the vertical HDD part way, regrasp it upright and pull it out",
                  {"hdd_vertical"});
  const Vec3 upright_grip(300, 370, kVerticalHddTop - 3.0);
  SideGrasp(b, kSideGrip)
      .Pulling(-Vec3::UnitX(), kPartial)
      .Let()
      .Move(down, kSideways, kSideGrip + Vec3(-kPartial - 20, 0, 0))
      .Move(down, kSideways, kSideGrip + Vec3(-kPartial - 20, 0, 130))
      .Turn(kUpright)
      .Move(down, kUpright, upright_grip + Vec3(0, 0, 40))
      .Move(down, kUpright, upright_grip)
      .Close("hdd_vertical")
      .Pulling(-Vec3::UnitX(), z230::kBayHddSlotDepth - kPartial + 4.0)
      .Pulling(Vec3::UnitZ(), 180.0);
  return b.Build();
}

TaskScript Task3bNaive() {
  ScriptBuilder b("task3b_naive", "pull the vertical HDD out sideways in one go",
                  {"hdd_vertical"});
  SideGrasp(b, kSideGrip).Pulling(-Vec3::UnitX(), z230::kBayHddSlotDepth + 4.0);
  return b.Build();
}

}  // namespace

std::vector<TaskScript> BuiltinTasks() {
  return {Task1(), Task2(), Task3a(), Task3b(), Task3bNaive()};
}

TaskScript BuiltinTask(std::string_view id) {
  for (TaskScript& t : BuiltinTasks()) {
    if (t.id == id) return std::move(t);
  }
  throw LookupError("unknown task " + std::string(id));
}

}  // namespace cablegrip
