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

#ifndef CABLEGRIP_Z230_H_
#define CABLEGRIP_Z230_H_

#include "cablegrip/scene.h"

namespace cablegrip {

// Simplified tower workstation lying on its side with the side panel off.
// World frame: x runs back to front, y bottom to top of the tower, z up out
// of the motherboard tray; the open side faces +z. Dimensions are a
// plausible layout, not measurements.
//
// Components: ram_1..ram_4 (DIMMs at 10 mm pitch, ram_1 beside the CPU
// cooler), ssd (upright in a 40 mm wide enclosure), hdd_upright_1/2,
// hdd_horizontal (flat in a roofed bay, extracted along -x) and
// hdd_vertical (on edge in a roofed bay, extracted along -x).
Scene BuildZ230Scene();

namespace z230 {

// Part sizes (full extents, mm): 2.5" and 3.5" drive outlines and a DIMM.
inline const Vec3 kRamSize{133.0, 4.0, 30.0};
inline const Vec3 kSsdSize{100.0, 7.0, 69.85};
inline constexpr double kHddLength = 146.0;
inline constexpr double kHddWidth = 101.6;
inline constexpr double kHddHeight = 26.1;

inline constexpr double kRamPitch = 10.0;
inline constexpr double kRamSlotDepth = 5.0;
inline constexpr double kSsdSlotDepth = 10.0;
inline constexpr double kUprightHddSlotDepth = 20.0;
inline constexpr double kBayHddSlotDepth = kHddLength;

inline constexpr double kChassisHeight = 170.0;  // interior, along z
inline constexpr double kSsdEnclosureWidth = 40.0;

}  // namespace z230
}  // namespace cablegrip

#endif  // CABLEGRIP_Z230_H_
