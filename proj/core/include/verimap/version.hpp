// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace verimap {

inline constexpr const char* kToolName = "verimap";
inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

}  // namespace verimap
