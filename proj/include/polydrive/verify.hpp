// Copyright 2026 The polydrive Authors
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

// Closed-form versus numerical comparison suites.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polydrive {

struct VerifyOverrides {
  std::optional<double> interaction;  ///< U in units of Omega for bell / w
  std::optional<double> rel_tol;
};

struct CheckResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool at_least = false;  ///< pass when value >= threshold, else value <= threshold
  bool passed = false;
  std::string error;  ///< set when the check could not be evaluated
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// two-level, bell, w, lambda, all.
std::vector<std::string> verify_suites();

/// Throws kInvalidArgument for an unknown suite. Check failures never throw.
VerifyReport run_verify(std::string_view suite, const VerifyOverrides& overrides = {});

}  // namespace polydrive
