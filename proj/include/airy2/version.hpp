// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace airy2 {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace airy2
