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

#ifndef CABLEGRIP_SCENE_IO_H_
#define CABLEGRIP_SCENE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "cablegrip/scene.h"

namespace cablegrip {

// Scene documents are JSON objects with the top-level records `workspace`,
// `gripper`, `drives[]`, `routes[]`, `statics[]` and `components[]`.
// Quantities carry their unit in the key (`depth_mm`, `roll_rad`,
// `pretension_N`); poses are {translation_mm, quaternion_wxyz}.
//
// Throws ValidationError naming the offending record for schema and
// invariant violations. The returned scene has passed Scene::Validate().
Scene LoadScene(std::string_view text);
// Throws IoError when the file cannot be read.
Scene LoadSceneFile(const std::filesystem::path& path);

std::string SaveScene(const Scene& scene);
void SaveSceneFile(const Scene& scene, const std::filesystem::path& path);

// Whole-file helpers shared with the task reader and the CLI.
std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace cablegrip

#endif  // CABLEGRIP_SCENE_IO_H_
