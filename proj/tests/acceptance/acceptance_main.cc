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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Tolerances are pinned here, not read from flags.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "cablegrip/cable_drive.h"
#include "cablegrip/geometry.h"
#include "cablegrip/kinematics.h"
#include "cablegrip/scene.h"
#include "cablegrip/scene_io.h"
#include "cablegrip/tasks.h"
#include "cli.h"
#include "oracles/oracles.h"

namespace cablegrip {
namespace {

namespace fs = std::filesystem;

const fs::path kScene = fs::path(CABLEGRIP_DATA_DIR) / "z230.scene";

struct Outcome {
  bool pass = true;
  std::string detail;
  void Require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double Lerp(double lo, double hi, int i, int n) { return lo + (hi - lo) * i / (n - 1); }

// Runs a built-in task through the CLI entry point; returns the exit code.
int RunCli(const std::string& task, double step, std::optional<double> body_width,
           const fs::path& out = {}, std::string* summary = nullptr) {
  cli::RunManifest m;
  m.scene = kScene;
  m.task_id = task;
  m.step = step;
  m.body_width = body_width;
  m.out = out;
  std::ostringstream o, e;
  const int code = cli::CmdRun(m, o, e);
  if (summary) *summary = o.str() + e.str();
  return code;
}

int CollisionSteps(const TaskResult& r) {
  return static_cast<int>(std::count_if(r.log.begin(), r.log.end(),
                                        [](const StepRecord& s) { return s.collision; }));
}

// 1. Jaw cable lengths do not depend on wrist yaw; an off-axis cap does.
Outcome Decoupling() {
  Outcome o;
  const Scene s = LoadSceneFile(kScene);
  const GripperParams& p = s.gripper;
  constexpr int n = 15;
  double worst = 0.0;
  for (int b = 0; b < n; ++b) {
    for (int c = 0; c < n; ++c) {
      const double q1 = Lerp(p.jaw.min, p.jaw.max, b, n);
      const double q2 = Lerp(p.jaw.min, p.jaw.max, c, n);
      const CableLengths ref1 = ComputeCableLengthsUnchecked(s.route(DriveJoint::kJaw1), 0.0, q1);
      const CableLengths ref2 = ComputeCableLengthsUnchecked(s.route(DriveJoint::kJaw2), 0.0, q2);
      for (int a = 0; a < n; ++a) {
        const double yaw = Lerp(p.wrist_yaw.min, p.wrist_yaw.max, a, n);
        const CableLengths l1 = ComputeCableLengthsUnchecked(s.route(DriveJoint::kJaw1), yaw, q1);
        const CableLengths l2 = ComputeCableLengthsUnchecked(s.route(DriveJoint::kJaw2), yaw, q2);
        worst = std::max({worst, std::abs(l1.agonist - ref1.agonist),
                          std::abs(l1.antagonist - ref1.antagonist),
                          std::abs(l2.agonist - ref2.agonist),
                          std::abs(l2.antagonist - ref2.antagonist)});
      }
    }
  }
  o.Require(worst < 1e-6, fmt::format("length variation {:.3e} mm", worst));

  CableRoute bent = s.route(DriveJoint::kJaw1);
  bent.guide_cap = *bent.guide_cap + Vec3(0, 1.0, 0);
  bent.decoupled = false;
  double peak = 0.0;
  GripperConfig cfg;
  for (int a = 0; a < n; ++a) {
    cfg.wrist_yaw = Lerp(p.wrist_yaw.min, p.wrist_yaw.max, a, n);
    peak = std::max(peak, DecouplingResidual(bent, p, cfg));
  }
  o.Require(peak > 1e-3, fmt::format("perturbed residual {:.3e} mm/rad", peak));
  if (o.pass)
    o.detail = fmt::format("variation {:.2e} mm, perturbed residual {:.3f} mm/rad", worst, peak);
  return o;
}

// 2. Both RAM chips come out at two sweep resolutions.
Outcome TaskOne() {
  Outcome o;
  const Scene scene = LoadSceneFile(kScene);
  const TaskScript script = BuiltinTask("task1");
  for (double step : {1.0, 0.5}) {
    const int code = RunCli("task1", step, std::nullopt);
    o.Require(code == cli::kExitOk, fmt::format("step {}: exit {}", step, code));
    ExecutionOptions opt;
    opt.step = step;
    const TaskResult r = Execute(scene, script, opt);
    o.Require(r.success, fmt::format("step {}: {}", step, r.detail));
    o.Require(CollisionSteps(r) == 0, fmt::format("step {}: collision steps", step));
    for (const char* id : {"ram_3", "ram_1"}) {
      const Component& c = r.final_scene.GetComponent(id);
      o.Require(!c.engaged(), fmt::format("step {}: {} still seated", step, id));
      o.Require(!ObbIntersects(c.box(), r.final_scene.workspace),
                fmt::format("step {}: {} inside chassis", step, id));
    }
  }
  if (o.pass) o.detail = "ram_3 and ram_1 free and outside at 1.0 and 0.5 mm";
  return o;
}

// 3. The enclosure admits the default body and rejects a 45 mm one.
Outcome TaskTwo() {
  Outcome o;
  const int ok = RunCli("task2", 0.5, std::nullopt);
  o.Require(ok == cli::kExitOk, fmt::format("width 25: exit {}", ok));
  std::string summary;
  const int wide = RunCli("task2", 0.5, 45.0, {}, &summary);
  o.Require(wide == cli::kExitFailure, fmt::format("width 45: exit {}", wide));
  o.Require(summary.find("reason: collision") != std::string::npos,
            "width 45: reason is not collision");
  if (o.pass) o.detail = "width 25 exits 0, width 45 exits 1 (collision)";
  return o;
}

// 4. Horizontal drive, vertical drive with one regrasp, naive pull blocked.
Outcome TaskThree() {
  Outcome o;
  const Scene scene = LoadSceneFile(kScene);
  o.Require(RunCli("task3a", 0.5, std::nullopt) == cli::kExitOk, "task3a failed");
  o.Require(RunCli("task3b", 0.5, std::nullopt) == cli::kExitOk, "task3b failed");
  const TaskResult b = Execute(scene, BuiltinTask("task3b"));
  const int regrasps = CountRegrasps(b.log);
  o.Require(regrasps == 1, fmt::format("task3b regrasps {}", regrasps));
  std::string summary;
  const int naive = RunCli("task3b_naive", 0.5, std::nullopt, {}, &summary);
  o.Require(naive == cli::kExitFailure, fmt::format("naive exit {}", naive));
  o.Require(summary.find("reason: collision") != std::string::npos,
            "naive reason is not collision");
  if (o.pass) o.detail = "task3a ok, task3b ok with 1 regrasp, naive pull collides";
  return o;
}

// 5. Orientation round trip, chord law and yaw equivariance.
Outcome Kinematics() {
  Outcome o;
  const GripperParams p;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> roll(-kPi + 1e-3, kPi - 1e-3);
  std::uniform_real_distribution<double> yaw(-kPi / 2 + 0.05, kPi / 2 - 0.05);
  std::uniform_real_distribution<double> pitch(-kPi / 2, kPi / 2);
  double round_trip = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Mat3 carriage = oracle::RandomRotation(rng);
    const Mat3 target = carriage * ComposeOrientation(roll(rng), yaw(rng), pitch(rng));
    const OrientationSolution s = SolveOrientation(p, target, carriage);
    const Mat3 back = carriage * ComposeOrientation(s.roll, s.wrist_yaw, s.pitch);
    round_trip = std::max(round_trip, (back - target).cwiseAbs().maxCoeff());
  }
  o.Require(round_trip < 1e-9, fmt::format("round trip {:.3e}", round_trip));

  constexpr int n = 15;
  const double d = 0.2;
  double chord = 0.0, equi = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
          GripperConfig c;
          c.roll = Lerp(p.roll.min, p.roll.max, a, n);
          c.wrist_yaw = Lerp(p.wrist_yaw.min, p.wrist_yaw.max - d, b, n);
          c.jaw1 = Lerp(p.jaw.min, p.jaw.max, i, n);
          c.jaw2 = Lerp(p.jaw.min, p.jaw.max, j, n);
          const GripperPosture before = ForwardKinematics(p, c);
          const double want = 2.0 * p.jaw_length * std::sin(0.5 * (c.jaw1 - c.jaw2));
          chord = std::max(chord, std::abs(before.tip_opening - want));
          c.wrist_yaw += d;
          const GripperPosture after = ForwardKinematics(p, c);
          const Pose turn = before.base * Pose::FromRotation(RotX(d)) * before.base.Inverse();
          equi = std::max({equi, (after.tip1 - turn * before.tip1).norm(),
                           (after.tip2 - turn * before.tip2).norm()});
        }
      }
    }
  }
  o.Require(chord < 1e-9, fmt::format("chord law {:.3e} mm", chord));
  o.Require(equi < 1e-9, fmt::format("yaw equivariance {:.3e} mm", equi));
  if (o.pass)
    o.detail = fmt::format("round trip {:.1e}, chord {:.1e} mm, equivariance {:.1e} mm",
                           round_trip, chord, equi);
  return o;
}

// 6. SAT never misses an overlap that sampling finds.
Outcome Collision() {
  Outcome o;
  std::mt19937_64 rng(6);
  constexpr int kPairs = 10000;
  int false_negatives = 0, hits = 0, sampled = 0, unconfirmed = 0;
  for (int i = 0; i < kPairs; ++i) {
    const Obb a = oracle::RandomObb(rng, 5.0, 0.3, 4.0);
    const Obb b = oracle::RandomObb(rng, 5.0, 0.3, 4.0);
    const bool sat = ObbIntersects(a, b);
    const bool sample = oracle::SampledOverlap(a, b);
    hits += sat;
    sampled += sample;
    if (sample && !sat) ++false_negatives;
    // Sampling can miss thin overlaps; the exact oracle must still agree.
    if (sat && !sample && !oracle::EdgeClipOverlap(a, b)) ++unconfirmed;
  }
  o.Require(false_negatives == 0, fmt::format("{} false negatives", false_negatives));
  o.Require(unconfirmed == 0, fmt::format("{} SAT hits not confirmed", unconfirmed));
  if (o.pass)
    o.detail = fmt::format("{} pairs, {} SAT hits, {} sampled hits, 0 false negatives",
                           kPairs, hits, sampled);
  return o;
}

// 7. Antagonistic tension model and servo mapping.
Outcome Transmission() {
  Outcome o;
  const DriveModule d;
  double conservation = 0.0;
  for (double tau = -d.slack_torque(); tau <= d.slack_torque(); tau += 0.5) {
    const TensionState t = TensionFromTorque(d, tau);
    conservation = std::max({conservation,
                             std::abs(t.agonist + t.antagonist - 2.0 * d.pretension),
                             std::abs(d.joint_pulley_radius * (t.agonist - t.antagonist) - tau)});
  }
  o.Require(conservation < 1e-9, fmt::format("conservation {:.3e}", conservation));

  const double limit = 2.0 * d.joint_pulley_radius * d.pretension;
  const TensionState edge = TensionFromTorque(d, limit);
  const TensionState over = TensionFromTorque(d, limit + 1e-9);
  const TensionState under = TensionFromTorque(d, -limit - 1e-9);
  o.Require(!edge.slack && std::abs(edge.antagonist) <= 1e-9, "boundary torque went slack");
  o.Require(over.slack && under.slack, "past the boundary is not slack");

  double linear = 0.0;
  for (double a = -2.0; a <= 2.0; a += 0.25) {
    for (double i = -1.0; i <= 1.0; i += 0.125) {
      linear = std::max(linear, std::abs(EstimateJointTorque(d, a * i + 0.3) -
                                         a * EstimateJointTorque(d, i) -
                                         EstimateJointTorque(d, 0.3)));
    }
  }
  o.Require(linear < 1e-9, fmt::format("torque linearity {:.3e}", linear));

  double servo = 0.0;
  for (int i = 0; i <= 10000; ++i) {
    const double s = Lerp(-d.servo_range / 2, d.servo_range / 2, i, 10001);
    servo = std::max(servo, std::abs(JointToServo(d, ServoToJoint(d, s)) - s));
  }
  o.Require(servo <= 1e-12, fmt::format("servo round trip {:.3e} rad", servo));
  if (o.pass)
    o.detail = fmt::format("conservation {:.1e}, slack at {} N*mm, servo {:.1e} rad",
                           conservation, limit, servo);
  return o;
}

std::string ReadAll(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// 8. Two runs of each task write the same bytes.
Outcome Determinism() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "cablegrip_acceptance";
  fs::create_directories(dir);
  int checked = 0;
  for (const TaskScript& t : BuiltinTasks()) {
    const fs::path a = dir / (t.id + "_a.csv"), b = dir / (t.id + "_b.csv");
    RunCli(t.id, 0.5, std::nullopt, a);
    RunCli(t.id, 0.5, std::nullopt, b);
    const std::string x = ReadAll(a), y = ReadAll(b);
    o.Require(!x.empty(), t.id + ": empty log");
    o.Require(x == y, t.id + ": logs differ");
    ++checked;
  }
  fs::remove_all(dir);
  if (o.pass) o.detail = fmt::format("{} tasks byte-identical", checked);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace cablegrip

int main() {
  using namespace cablegrip;
  const std::vector<Criterion> criteria = {
      {1, "decoupling", 5.0, Decoupling},
      {2, "task1", 30.0, TaskOne},
      {3, "task2", 30.0, TaskTwo},
      {4, "task3", 60.0, TaskThree},
      {5, "kinematics", 5.0, Kinematics},
      {6, "collision", 30.0, Collision},
      {7, "transmission", 1.0, Transmission},
      {8, "determinism", 0.0, Determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.Require(false, fmt::format("over budget of {} s", c.budget_s));
    }
    failed += !o.pass;
    std::cout << fmt::format("criterion {} {:<13} {} ({:.2f} s) {}\n", c.id, c.name,
                             o.pass ? "PASS" : "FAIL", secs, o.detail);
  }
  std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failed,
                           criteria.size());
  return failed == 0 ? 0 : 1;
}
