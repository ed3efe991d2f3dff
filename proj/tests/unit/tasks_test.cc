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

#include <filesystem>

#include <gtest/gtest.h>

#include "cablegrip/errors.h"
#include "cablegrip/scene_io.h"
#include "cablegrip/task_io.h"
#include "cablegrip/z230.h"

namespace cablegrip {
namespace {

const std::filesystem::path kData = CABLEGRIP_DATA_DIR;

Obb Aabb(const Vec3& lo, const Vec3& hi) {
  return Obb{Pose::FromTranslation(0.5 * (lo + hi)), 0.5 * (hi - lo)};
}

// Upright jaws (opening along world y) with the tip midpoint at `tips`.
GripperConfig UprightAt(const GripperParams& p, const Vec3& tips, double width) {
  GripperConfig c = GripperConfig::FromPitch(Pose(RotX(kPi), Vec3::Zero()), kPi / 2, 0.0,
                                             0.0, OpeningAngleForWidth(p, width));
  const GripperPosture fk = ForwardKinematics(p, c);
  c.carriage = Pose(RotX(kPi), tips - 0.5 * (fk.tip1 + fk.tip2));
  return c;
}

// A lone 7 mm card standing on a floor, slot along +z.
Scene CardScene() {
  Scene s = MakeEmptyScene();
  s.workspace = Aabb({-100, -100, -10}, {100, 100, 60});
  s.statics.push_back({"floor", Pose(), {{{"plate", Aabb({-80, -80, -2}, {80, 80, 0})}}}});
  Component c;
  c.id = "card";
  c.kind = ComponentKind::kSsd;
  c.pose = Pose::FromTranslation(Vec3(0, 0, 25.5));
  c.half_extents = Vec3(30, 3.5, 25);
  c.slot = Slot{Vec3::UnitZ(), 10.0, 1.0};
  s.components.push_back(c);
  s.home.carriage = Pose(RotX(kPi), Vec3(0, 0, 250));
  return s;
}

int CollisionSteps(const TaskResult& r) {
  int n = 0;
  for (const StepRecord& row : r.log) n += row.collision;
  return n;
}

// Box-face arithmetic: tips 7 mm apart on a 7 mm card sit on both faces at
// once, so neither jaw needs to move.
TEST(GraspTest, SevenOnSevenHolds) {
  const Scene s = CardScene();
  const GripperConfig c = UprightAt(s.gripper, Vec3(0, 0, 47.5), 7.0);
  const GraspOutcome g = SimulateGrasp(s, c, "card");
  EXPECT_TRUE(g.ok) << g.reason;
  EXPECT_DOUBLE_EQ(g.jaw1, c.jaw1);
  EXPECT_DOUBLE_EQ(g.jaw2, c.jaw2);
  EXPECT_TRUE(GraspCheck(s, c, s.GetComponent("card")));
}

TEST(GraspTest, FiveOnSevenCannotClose) {
  const Scene s = CardScene();
  const GripperConfig c = UprightAt(s.gripper, Vec3(0, 0, 47.5), 5.0);
  const GraspOutcome g = SimulateGrasp(s, c, "card");
  EXPECT_FALSE(g.ok);
  EXPECT_NE(g.reason.find("cannot close"), std::string::npos);
}

TEST(GraspTest, TipsRestingOnTheTopEdgeDoNotGrip) {
  const Scene s = CardScene();
  const GraspOutcome g = SimulateGrasp(s, UprightAt(s.gripper, Vec3(0, 0, 50.5), 5.0), "card");
  EXPECT_FALSE(g.ok);
  EXPECT_NE(g.reason.find("does not reach"), std::string::npos) << g.reason;
}

TEST(GraspTest, WideOpeningClosesToContact) {
  const Scene s = CardScene();
  const GripperConfig c = UprightAt(s.gripper, Vec3(0, 0, 45.5), 20.0);
  const GraspOutcome g = SimulateGrasp(s, c, "card", 0.5);
  ASSERT_TRUE(g.ok) << g.reason;
  EXPECT_LT(g.jaw1, c.jaw1);
  EXPECT_GT(g.jaw2, c.jaw2);
  GripperConfig closed = c;
  closed.jaw1 = g.jaw1;
  closed.jaw2 = g.jaw2;
  const std::vector<PlacedBox> jaws = GripperBoxes(s.gripper, closed);
  const Obb card = s.GetComponent("card").box();
  for (int i = 2; i < 4; ++i) {
    const double gap = ObbClearance(jaws[i].box, card);
    EXPECT_LE(gap, 0.5);
    EXPECT_GT(gap, 0.5 - 0.06);  // one closing increment of tip travel
  }
}

TEST(GraspTest, JawsAboveThePartMissIt) {
  const Scene s = CardScene();
  const GripperConfig c = UprightAt(s.gripper, Vec3(0, 0, 60.5), 20.0);
  EXPECT_FALSE(SimulateGrasp(s, c, "card").ok);
}

TEST(GraspTest, TooThickForTheJaws) {
  Scene s = CardScene();
  s.components[0].half_extents = Vec3(40, 31, 31);
  const GraspOutcome g = SimulateGrasp(s, UprightAt(s.gripper, Vec3(0, 0, 45.5), 60), "card");
  EXPECT_FALSE(g.ok);
  EXPECT_NE(g.reason.find("wider"), std::string::npos);
}

TEST(GraspTest, ClosingIntoAnotherBodyFails) {
  Scene s = CardScene();
  // A post sitting in the closing path of jaw2's outside.
  s.statics.push_back({"post", Pose(), {{{"x", Aabb({-2, -12.2, 30.5}, {2, -11.5, 50.5})}}}});
  const GripperConfig c = UprightAt(s.gripper, Vec3(0, 0, 45.5), 20.0);
  const GraspOutcome open = SimulateGrasp(s, c, "card");
  EXPECT_FALSE(open.ok);
  EXPECT_NE(open.reason.find("post"), std::string::npos);
}

TEST(GraspTest, UnknownComponent) {
  const Scene s = CardScene();
  EXPECT_FALSE(SimulateGrasp(s, s.home, "nope").ok);
}

// RAM #3 between neighbours at 10 mm pitch with 3 mm jaws.
TEST(GraspTest, RamThreeBetweenNeighbours) {
  const Scene s = BuildZ230Scene();
  const GripperConfig c = UprightAt(s.gripper, Vec3(120, 445, 34.2), 7.0);
  const GraspOutcome g = SimulateGrasp(s, c, "ram_3");
  ASSERT_TRUE(g.ok) << g.reason;
  GripperConfig closed = c;
  closed.jaw1 = g.jaw1;
  closed.jaw2 = g.jaw2;
  for (const PlacedBox& box : GripperBoxes(s.gripper, closed)) {
    for (const char* n : {"ram_2", "ram_4"}) {
      EXPECT_FALSE(ObbIntersects(box.box, s.GetComponent(n).box())) << box.name << " " << n;
    }
  }
}

TEST(ExecuteTest, EmptyScripts) {
  const Scene s = CardScene();
  TaskScript empty{"noop", "", {}, {}};
  TaskResult r = Execute(s, empty);
  EXPECT_TRUE(r.success);
  EXPECT_TRUE(r.log.empty());
  empty.targets = {"card"};
  r = Execute(s, empty);
  EXPECT_FALSE(r.success);
  EXPECT_EQ(r.reason, FailureReason::kGraspFailed);
}

TEST(ExecuteTest, ValidationRejectsBadScripts) {
  const Scene s = CardScene();
  const Pose p = s.home.carriage;
  const JointGoal j{0, 0, 0};
  EXPECT_THROW(Execute(s, {"t", "", {}, {CloseOn{"card"}}}), ValidationError);
  EXPECT_THROW(Execute(s, {"t", "", {}, {Pull{Vec3::UnitZ(), 1}}}), ValidationError);
  EXPECT_THROW(Execute(s, {"t", "", {}, {Release{}}}), ValidationError);
  EXPECT_THROW(Execute(s, {"t", "", {"ghost"}, {}}), ValidationError);
  EXPECT_THROW(Execute(s, {"", "", {}, {}}), ValidationError);
  EXPECT_THROW(Execute(s, {"t", "", {}, {MoveTo{p, std::nullopt, std::nullopt}}}),
               ValidationError);
  EXPECT_THROW(Execute(s, {"t", "", {}, {MoveTo{p, j, std::nullopt}, CloseOn{"card"},
                                          Pull{Vec3(0, 0, 2), 1}}}),
               ValidationError);
  EXPECT_THROW(Execute(s, {"t", "", {}, {MoveTo{p, j, std::nullopt}, CloseOn{"card"},
                                          SetOpening{3}}}),
               ValidationError);
  EXPECT_THROW(Execute(s, {"t", "", {}, {}}, ExecutionOptions{0.0}), ConfigurationError);
  try {
    ValidateScript({"t", "", {}, {MoveTo{p, j, std::nullopt}, Release{}}}, s);
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("phase 1 (release)"), std::string::npos);
  }
}

TEST(ExecuteTest, CardPickSucceeds) {
  const Scene s = CardScene();
  const GripperConfig grip = UprightAt(s.gripper, Vec3(0, 0, 45.5), 12.0);
  const JointGoal up{kPi / 2, 0, 0};
  const TaskScript t{"pick", "", {"card"},
                     {SetOpening{12}, MoveTo{grip.carriage, up, std::nullopt},
                      CloseOn{"card"}, Pull{Vec3::UnitZ(), 90}}};
  const TaskResult r = Execute(s, t);
  EXPECT_TRUE(r.success) << r.detail;
  EXPECT_EQ(CollisionSteps(r), 0);
  EXPECT_FALSE(r.final_scene.GetComponent("card").engaged());
  EXPECT_TRUE(r.final_poses.at("card").translation().isApprox(Vec3(0, 0, 115.5)));
  EXPECT_EQ(r.log.front().step, 0u);
  EXPECT_EQ(r.log.back().held, "card");
}

TEST(ExecuteTest, PullOffTheSlotAxisFails) {
  const Scene s = CardScene();
  const GripperConfig grip = UprightAt(s.gripper, Vec3(0, 0, 45.5), 12.0);
  const TaskScript t{"pick", "", {"card"},
                     {SetOpening{12}, MoveTo{grip.carriage, JointGoal{kPi / 2, 0, 0}, std::nullopt},
                      CloseOn{"card"}, Pull{Vec3::UnitX(), 10}}};
  const TaskResult r = Execute(s, t);
  EXPECT_FALSE(r.success);
  EXPECT_EQ(r.reason, FailureReason::kCollision);
}

TEST(ExecuteTest, MovingAPartStillSeatedFails) {
  const Scene s = CardScene();
  const GripperConfig grip = UprightAt(s.gripper, Vec3(0, 0, 45.5), 12.0);
  const JointGoal up{kPi / 2, 0, 0};
  const TaskScript t{"pick", "", {"card"},
                     {SetOpening{12}, MoveTo{grip.carriage, up, std::nullopt}, CloseOn{"card"},
                      MoveTo{s.home.carriage, up, std::nullopt}}};
  const TaskResult r = Execute(s, t);
  EXPECT_EQ(r.reason, FailureReason::kCollision);
  EXPECT_NE(r.detail.find("seated"), std::string::npos);
}

TEST(ExecuteTest, LimitAndUnreachableReasons) {
  const Scene s = CardScene();
  const Pose p = s.home.carriage;
  TaskResult r = Execute(s, {"t", "", {}, {MoveTo{p, JointGoal{0, 2.0, 0}, std::nullopt}}});
  EXPECT_EQ(r.reason, FailureReason::kLimit);
  EXPECT_NE(r.detail.find("wrist_yaw"), std::string::npos);
  r = Execute(s, {"t", "", {}, {MoveTo{p, std::nullopt, RotX(kPi) * RotX(kPi / 2)}}});
  EXPECT_EQ(r.reason, FailureReason::kUnreachable);
  r = Execute(s, {"t", "", {}, {SetOpening{61}}});
  EXPECT_EQ(r.reason, FailureReason::kLimit);
}

TEST(ExecuteTest, SlackSqueezeFails) {
  const Scene s = CardScene();
  const GripperConfig grip = UprightAt(s.gripper, Vec3(0, 0, 45.5), 12.0);
  ExecutionOptions o;
  o.squeeze_torque = 2.0 * 5.0 * 20.0 + 1.0;
  const TaskResult r =
      Execute(s, {"t", "", {}, {SetOpening{12}, MoveTo{grip.carriage, JointGoal{kPi / 2, 0, 0}, std::nullopt}, CloseOn{"card"}}},
              o);
  EXPECT_EQ(r.reason, FailureReason::kSlack);
}

TEST(ExecuteTest, HomeInCollisionFails) {
  Scene s = CardScene();
  s.home.carriage = Pose(RotX(kPi), Vec3(0, 0, 100));
  const TaskResult r = Execute(s, {"t", "", {}, {SetOpening{3}}});
  EXPECT_EQ(r.reason, FailureReason::kCollision);
  EXPECT_TRUE(r.log.front().collision);
}

class BuiltinTest : public ::testing::TestWithParam<std::string> {};

TEST_P(BuiltinTest, ValidatesAgainstBundledScene) {
  const Scene s = LoadSceneFile(kData / "z230.scene");
  EXPECT_NO_THROW(ValidateScript(BuiltinTask(GetParam()), s));
}

TEST_P(BuiltinTest, DeterministicLogs) {
  const Scene s = BuildZ230Scene();
  const TaskScript t = BuiltinTask(GetParam());
  EXPECT_EQ(StepLogCsv(Execute(s, t).log), StepLogCsv(Execute(s, t).log));
}

// Shrinking the step never turns a collision failure into a success.
TEST_P(BuiltinTest, RefinementIsConservative) {
  const Scene s = BuildZ230Scene();
  const TaskScript t = BuiltinTask(GetParam());
  bool collided = false;
  for (double step : {2.0, 1.0, 0.5, 0.25}) {
    const TaskResult r = Execute(s, t, ExecutionOptions{step});
    if (collided) EXPECT_FALSE(r.success) << "step " << step;
    collided = collided || r.reason == FailureReason::kCollision;
    EXPECT_EQ(r.success, GetParam() != "task3b_naive") << "step " << step << ": " << r.detail;
  }
}

// The held part moves as if welded to the wrist.
TEST_P(BuiltinTest, HeldPartIsRigid) {
  const Scene s = BuildZ230Scene();
  const TaskResult r = Execute(s, BuiltinTask(GetParam()));
  std::string held;
  Pose attach;
  int checked = 0;
  for (const StepRecord& row : r.log) {
    if (row.held.empty()) {
      held.clear();
      continue;
    }
    ASSERT_TRUE(row.held_pose.has_value());
    const Pose wrist = ForwardKinematics(s.gripper, row.config).wrist;
    if (row.held != held) {
      held = row.held;
      attach = wrist.Inverse() * *row.held_pose;
      continue;
    }
    const Pose expect = wrist * attach;
    EXPECT_LT(PoseDistance(expect, *row.held_pose), 1e-9) << "step " << row.step;
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST_P(BuiltinTest, NoDriveGoesSlack) {
  const TaskResult r = Execute(BuildZ230Scene(), BuiltinTask(GetParam()));
  for (const StepRecord& row : r.log) {
    for (const TensionState& t : row.tensions) {
      EXPECT_FALSE(t.slack);
      EXPECT_GT(t.agonist, 0.0);
      EXPECT_GT(t.antagonist, 0.0);
    }
  }
}

TEST_P(BuiltinTest, BundledFileMatchesBuilder) {
  const char* file = nullptr;
  const std::string id = GetParam();
  if (id == "task1") file = "task1_ram.task";
  if (id == "task2") file = "task2_ssd.task";
  if (id == "task3a") file = "task3a_hdd_horizontal.task";
  if (id == "task3b") file = "task3b_hdd_vertical.task";
  if (id == "task3b_naive") file = "task3b_naive.task";
  ASSERT_NE(file, nullptr);
  EXPECT_EQ(ReadTextFile(kData / "tasks" / file), SaveTask(BuiltinTask(id)));
}

INSTANTIATE_TEST_SUITE_P(AllTasks, BuiltinTest,
                         ::testing::Values("task1", "task2", "task3a", "task3b",
                                           "task3b_naive"));

TEST(BuiltinTasksTest, ShapeOfTheScripts) {
  const std::vector<TaskScript> all = BuiltinTasks();
  ASSERT_EQ(all.size(), 5u);
  EXPECT_GE(BuiltinTask("task1").phases.size(), 8u);
  EXPECT_EQ(BuiltinTask("task1").targets, (std::vector<std::string>{"ram_3", "ram_1"}));
  EXPECT_EQ(CountRegrasps(BuiltinTask("task3b")), 1);
  EXPECT_EQ(CountRegrasps(BuiltinTask("task1")), 0);
  EXPECT_EQ(CountRegrasps(BuiltinTask("task3b_naive")), 0);
  EXPECT_THROW(BuiltinTask("task9"), LookupError);
}

TEST(BuiltinTasksTest, Task3bLogHasOneRegrasp) {
  const TaskResult r = Execute(BuildZ230Scene(), BuiltinTask("task3b"));
  ASSERT_TRUE(r.success) << r.detail;
  EXPECT_EQ(CountRegrasps(r.log), 1);
}

TEST(BuiltinTasksTest, NaivePullHitsTheCooler) {
  const TaskResult r = Execute(BuildZ230Scene(), BuiltinTask("task3b_naive"));
  EXPECT_EQ(r.reason, FailureReason::kCollision);
  EXPECT_NE(r.detail.find("cpu_cooler"), std::string::npos);
  EXPECT_TRUE(r.log.back().collision);
  EXPECT_EQ(CollisionSteps(r), 1);
}

TEST(BuiltinTasksTest, WideBodyCannotEnterSsdEnclosure) {
  Scene s = BuildZ230Scene();
  s.gripper.body_width = 45.0;
  const TaskResult r = Execute(s, BuiltinTask("task2"));
  EXPECT_EQ(r.reason, FailureReason::kCollision);
  EXPECT_NE(r.detail.find("ssd_enclosure"), std::string::npos);
}

TEST(StepLogTest, CsvHeaderAndRows) {
  const TaskResult r = Execute(BuildZ230Scene(), BuiltinTask("task2"));
  const std::string csv = StepLogCsv(r.log);
  const std::string header = csv.substr(0, csv.find('\n'));
  EXPECT_EQ(header,
            "step,qw,phi1,phi2,roll,tx,ty,tz,len_w1,len_w2,len_j1a,len_j1b,len_j2a,"
            "len_j2b,T1_w,T2_w,T1_j1,T2_j1,T1_j2,T2_j2,held,min_clearance,collision");
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')),
            r.log.size() + 1);
}

TEST(StepLogTest, RegraspCountFromRows) {
  std::vector<StepRecord> log(6);
  const char* held[] = {"", "a", "a", "", "a", "b"};
  for (int i = 0; i < 6; ++i) log[i].held = held[i];
  EXPECT_EQ(CountRegrasps(log), 1);
}

TEST(NamesTest, ReasonsAndPhases) {
  EXPECT_EQ(FailureReasonName(FailureReason::kGraspFailed), "grasp-failed");
  EXPECT_EQ(PhaseName(Phase{Pull{}}), "pull");
  EXPECT_EQ(PhaseName(Phase{Reorient{}}), "reorient");
}

}  // namespace
}  // namespace cablegrip
