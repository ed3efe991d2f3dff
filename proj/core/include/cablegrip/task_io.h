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

#ifndef CABLEGRIP_TASK_IO_H_
#define CABLEGRIP_TASK_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "cablegrip/tasks.h"

namespace cablegrip {

// Task documents are JSON objects {format, id, description, targets[],
// phases[]}. Each phase names its operation in `op`:
//   move_to      carriage pose plus `joints` {roll_rad, wrist_yaw_rad,
//                pitch_rad} or `orientation_wxyz`
//   set_opening  width_mm
//   close_on     component
//   pull         axis_unit, distance_mm
//   release
//   reorient     joints
//
// Throws ValidationError naming the phase for schema errors; structural
// checks against a scene are left to ValidateScript.
TaskScript LoadTask(std::string_view text);
TaskScript LoadTaskFile(const std::filesystem::path& path);  // IoError

std::string SaveTask(const TaskScript& script);

}  // namespace cablegrip

#endif  // CABLEGRIP_TASK_IO_H_
