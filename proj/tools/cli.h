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

#ifndef CABLEGRIP_TOOLS_CLI_H_
#define CABLEGRIP_TOOLS_CLI_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace cablegrip::cli {

// Stable process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;     // task or check failed
inline constexpr int kExitInvalid = 2;     // scene, script or input invalid
inline constexpr int kExitUsage = 3;       // I/O or command line error

struct RunManifest {
  std::filesystem::path scene;
  std::string task_id;                 // built-in task, or
  std::filesystem::path script;        // a task file
  double step = 0.5;                   // mm
  std::filesystem::path out;           // CSV log; empty writes none
  std::uint64_t seed = 0;              // echoed in the summary
  std::optional<double> body_width;    // mm, overrides the scene

  // Throws IoError for missing files and ConfigurationError for a bad step
  // or an ambiguous task selection.
  void Validate() const;
};

// Parses an angle; a trailing "deg" converts degrees, "rad" or no suffix
// means radians. Throws ConfigurationError.
double ParseAngle(const std::string& text);

int CmdValidate(const std::filesystem::path& scene, std::ostream& out, std::ostream& err);
int CmdRun(const RunManifest& manifest, std::ostream& out, std::ostream& err);
int CmdCheckDecoupling(const std::filesystem::path& scene, int grid_n,
                       std::ostream& out, std::ostream& err);

struct FkInput {
  std::filesystem::path scene;  // empty uses the default gripper
  double roll = 0.0;
  double wrist_yaw = 0.0;
  double jaw1 = 0.0;
  double jaw2 = 0.0;
};
int CmdFk(const FkInput& input, std::ostream& out, std::ostream& err);

// Writes z230.scene and tasks/*.task under `dir`.
int CmdExport(const std::filesystem::path& dir, std::ostream& out, std::ostream& err);

// Full command line entry point.
int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cablegrip::cli

#endif  // CABLEGRIP_TOOLS_CLI_H_
