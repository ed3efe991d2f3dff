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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"
#include "cablegrip/cable_drive.h"
#include "cablegrip/errors.h"
#include "cablegrip/kinematics.h"
#include "cablegrip/scene_io.h"
#include "cablegrip/task_io.h"
#include "cablegrip/tasks.h"
#include "cablegrip/z230.h"

namespace cablegrip::cli {
namespace {

constexpr double kDecouplingTol = 1e-6;  // mm/rad

// Bundled file names of the built-in tasks.
const std::pair<const char*, const char*> kTaskFiles[] = {
    {"task1", "task1_ram.task"},
    {"task2", "task2_ssd.task"},
    {"task3a", "task3a_hdd_horizontal.task"},
    {"task3b", "task3b_hdd_vertical.task"},
    {"task3b_naive", "task3b_naive.task"},
};

// Runs `body`, mapping library exceptions onto exit codes.
template <class F>
int Guard(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const LookupError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    fmt::print(err, "invalid: {}\n", e.what());
    return kExitInvalid;
  }
}

}  // namespace

void RunManifest::Validate() const {
  if (!(step > 0) || !std::isfinite(step)) throw ConfigurationError("--step must be positive");
  if (task_id.empty() == script.empty()) {
    throw ConfigurationError("give exactly one of --task or --script");
  }
  if (!std::filesystem::exists(scene)) throw IoError("no such file: " + scene.string());
  if (!script.empty() && !std::filesystem::exists(script)) {
    throw IoError("no such file: " + script.string());
  }
}

double ParseAngle(const std::string& text) {
  std::string number = text;
  double scale = 1.0;
  auto ends_with = [&](std::string_view suffix) {
    return number.size() > suffix.size() &&
           number.compare(number.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with("deg")) {
    number.resize(number.size() - 3);
    scale = kPi / 180.0;
  } else if (ends_with("rad")) {
    number.resize(number.size() - 3);
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(number, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != number.size() || !std::isfinite(value)) {
    throw ConfigurationError("bad angle '" + text + "'");
  }
  return value * scale;
}

int CmdValidate(const std::filesystem::path& scene, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const Scene s = LoadSceneFile(scene);
    fmt::print(out, "ok: {} statics, {} components\n", s.statics.size(), s.components.size());
    return kExitOk;
  });
}

int CmdRun(const RunManifest& m, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    try {
      m.Validate();
    } catch (const ConfigurationError& e) {
      fmt::print(err, "error: {}\n", e.what());
      return kExitUsage;
    }
    Scene scene = LoadSceneFile(m.scene);
    if (m.body_width) {
      scene.gripper.body_width = *m.body_width;
      scene.Validate();
    }
    const TaskScript script = m.script.empty() ? BuiltinTask(m.task_id) : LoadTaskFile(m.script);
    ExecutionOptions options;
    options.step = m.step;
    const TaskResult result = Execute(scene, script, options);
    if (!m.out.empty()) WriteTextFile(m.out, StepLogCsv(result.log));
    std::size_t collisions = 0;
    for (const StepRecord& r : result.log) collisions += r.collision ? 1 : 0;
    fmt::print(out, "task {}: {}\n", script.id, result.success ? "success" : "failure");
    if (!result.success) {
      fmt::print(out, "reason: {}\ndetail: {}\n", FailureReasonName(result.reason),
                 result.detail);
    }
    fmt::print(out, "steps: {}\ncollision steps: {}\nregrasps: {}\nstep: {} mm\nseed: {}\n",
               result.log.size(), collisions, CountRegrasps(result.log), m.step, m.seed);
    for (const auto& [id, pose] : result.final_poses) {
      const Vec3& t = pose.translation();
      fmt::print(out, "final {}: [{:.3f}, {:.3f}, {:.3f}]\n", id, t.x(), t.y(), t.z());
    }
    return result.success ? kExitOk : kExitFailure;
  });
}

int CmdCheckDecoupling(const std::filesystem::path& scene_path, int grid_n, std::ostream& out,
                       std::ostream& err) {
  if (grid_n < 2) {
    fmt::print(err, "error: --grid must be at least 2\n");
    return kExitUsage;
  }
  return Guard(err, [&] {
    const Scene scene = LoadSceneFile(scene_path);
    const GripperParams& p = scene.gripper;
    auto at = [grid_n](const Limits& l, int i) {
      return l.min + (l.max - l.min) * i / (grid_n - 1);
    };
    double worst = 0.0;
    fmt::print(out, "qw,phi1,phi2,res_jaw1,res_jaw2,res_wrist\n");
    for (int a = 0; a < grid_n; ++a) {
      for (int b = 0; b < grid_n; ++b) {
        for (int c = 0; c < grid_n; ++c) {
          GripperConfig config;
          config.wrist_yaw = at(p.wrist_yaw, a);
          config.jaw1 = at(p.jaw, b);
          config.jaw2 = at(p.jaw, c);
          const double r1 = DecouplingResidual(scene.route(DriveJoint::kJaw1), p, config);
          const double r2 = DecouplingResidual(scene.route(DriveJoint::kJaw2), p, config);
          const double rw = DecouplingResidual(scene.route(DriveJoint::kWrist), p, config);
          worst = std::max({worst, r1, r2});
          fmt::print(out, "{:.9f},{:.9f},{:.9f},{:.3e},{:.3e},{:.3e}\n", config.wrist_yaw,
                     config.jaw1, config.jaw2, r1, r2, rw);
        }
      }
    }
    fmt::print(err, "max jaw residual {:.3e} mm/rad (limit {:.0e})\n", worst, kDecouplingTol);
    return worst < kDecouplingTol ? kExitOk : kExitFailure;
  });
}

int CmdFk(const FkInput& in, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const Scene scene = in.scene.empty() ? MakeEmptyScene() : LoadSceneFile(in.scene);
    GripperConfig config;
    config.roll = in.roll;
    config.wrist_yaw = in.wrist_yaw;
    config.jaw1 = in.jaw1;
    config.jaw2 = in.jaw2;
    const GripperPosture fk = ForwardKinematics(scene.gripper, config);
    fmt::print(out, "tip1: [{:.6f}, {:.6f}, {:.6f}]\n", fk.tip1.x(), fk.tip1.y(), fk.tip1.z());
    fmt::print(out, "tip2: [{:.6f}, {:.6f}, {:.6f}]\n", fk.tip2.x(), fk.tip2.y(), fk.tip2.z());
    fmt::print(out, "opening: {:.6f} mm\n", fk.tip_opening);
    for (int j = 0; j < kNumDrives; ++j) {
      const CableLengths l = ComputeCableLengths(scene.routes[j], scene.gripper, config);
      fmt::print(out, "cable {}: {:.6f} {:.6f} mm\n",
                 DriveJointName(static_cast<DriveJoint>(j)), l.agonist, l.antagonist);
    }
    return kExitOk;
  });
}

int CmdExport(const std::filesystem::path& dir, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    std::filesystem::create_directories(dir / "tasks");
    SaveSceneFile(BuildZ230Scene(), dir / "z230.scene");
    for (const TaskScript& t : BuiltinTasks()) {
      for (const auto& [id, file] : kTaskFiles) {
        if (t.id == id) WriteTextFile(dir / "tasks" / file, SaveTask(t));
      }
    }
    fmt::print(out, "wrote {}\n", dir.string());
    return kExitOk;
  });
}

int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cable-driven gripper kinematics, collision and disassembly tasks"};
  app.require_subcommand(1);

  std::string scene;
  auto* validate = app.add_subcommand("validate", "check a scene file");
  validate->add_option("--scene", scene, "scene file")->required();

  RunManifest manifest;
  std::string task_id, script, log_out;
  double body_width = 0.0;
  auto* run = app.add_subcommand("run", "execute a task and write its step log");
  run->add_option("--scene", scene, "scene file")->required();
  auto* task_opt = run->add_option("--task", task_id, "built-in task id");
  auto* script_opt = run->add_option("--script", script, "task file");
  task_opt->excludes(script_opt);
  run->add_option("--step", manifest.step, "sweep step in mm");
  run->add_option("--out", log_out, "CSV step log path");
  run->add_option("--seed", manifest.seed, "recorded in the summary");
  auto* width_opt = run->add_option("--body-width", body_width, "override gripper body width, mm");

  int grid = 15;
  auto* decouple = app.add_subcommand("check-decoupling", "jaw cable residual grid as CSV");
  decouple->add_option("--scene", scene, "scene file")->required();
  decouple->add_option("--grid", grid, "points per joint axis");

  std::string roll = "0", yaw = "0", jaw1 = "0", jaw2 = "0";
  auto* fk = app.add_subcommand("fk", "forward kinematics for one configuration");
  fk->add_option("--scene", scene, "scene file (default gripper if omitted)");
  fk->add_option("--roll", roll, "roll angle, rad or NNdeg");
  fk->add_option("--yaw", yaw, "wrist yaw angle");
  fk->add_option("--jaw1", jaw1, "jaw 1 angle");
  fk->add_option("--jaw2", jaw2, "jaw 2 angle");

  std::string export_dir;
  auto* exp = app.add_subcommand("export", "write the bundled scene and task files");
  exp->add_option("--out", export_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  }

  if (*validate) return CmdValidate(scene, out, err);
  if (*run) {
    manifest.scene = scene;
    manifest.task_id = task_id;
    manifest.script = script;
    manifest.out = log_out;
    if (*width_opt) manifest.body_width = body_width;
    return CmdRun(manifest, out, err);
  }
  if (*decouple) return CmdCheckDecoupling(scene, grid, out, err);
  if (*fk) {
    FkInput in;
    in.scene = scene;
    try {
      in.roll = ParseAngle(roll);
      in.wrist_yaw = ParseAngle(yaw);
      in.jaw1 = ParseAngle(jaw1);
      in.jaw2 = ParseAngle(jaw2);
    } catch (const ConfigurationError& e) {
      fmt::print(err, "error: {}\n", e.what());
      return kExitUsage;
    }
    return CmdFk(in, out, err);
  }
  return CmdExport(export_dir, out, err);
}

}  // namespace cablegrip::cli
