// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace cutmit {

inline constexpr const char* kToolName = "cutmit";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace cutmit
