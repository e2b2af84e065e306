// Copyright 2026 The ottk Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ottk {

/// Raised for invalid data or violated preconditions. The message starts with
/// a stable tag (e.g. "degenerate measure") that callers and tests match on.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-fatal diagnostics collected by operations that may degrade silently
/// (FBP with few angles, overlapping signed parts, ...).
using Warnings = std::vector<std::string>;

inline void warn(Warnings* sink, std::string message) {
  if (sink != nullptr) sink->push_back(std::move(message));
}

inline void require(bool condition, const std::string& message) {
  if (!condition) throw Error(message);
}

}  // namespace ottk
