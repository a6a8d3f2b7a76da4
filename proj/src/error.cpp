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

#include "polydrive/error.hpp"

namespace polydrive {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kDimensionMismatch: return "dimension mismatch";
    case ErrorCode::kNotHermitian: return "operator is not Hermitian";
    case ErrorCode::kNearSingular: return "near-singular evaluation point";
    case ErrorCode::kCorruptedState: return "corrupted state";
    case ErrorCode::kStepUnderflow: return "step size underflow";
    case ErrorCode::kNonFinite: return "non-finite value";
    case ErrorCode::kNegativeDensity: return "negative density-matrix eigenvalue";
    case ErrorCode::kUnknownLabel: return "unknown basis label";
    case ErrorCode::kUnknownScenario: return "unknown scenario";
    case ErrorCode::kIo: return "I/O failure";
  }
  return "unknown error";
}

}  // namespace polydrive
