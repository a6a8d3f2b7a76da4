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

// Closed-form populations for a system prepared in its ground state and
// driven by the polychromatic envelope. Every finite-N result is a function
// of the rotation angle phase_integral(t); the N -> infinity limits are
// piecewise constant in t and select their branch with branch_index().

#pragma once

#include "polydrive/drive.hpp"

namespace polydrive::analytic {

struct TwoLevelPopulations {
  double pg = 1.0;
  double pe = 0.0;
};

struct LambdaPopulations {
  double pg = 1.0;
  double pe = 0.0;
  double pr = 0.0;
};

/// Resonant two-level atom. Throws kInvalidArgument for a detuned central field.
TwoLevelPopulations two_level(double t, const DriveParams& p);

/// N -> infinity: pe = sin^2((2m+1) pi Omega / Delta), m = floor(Delta t / 2 pi).
TwoLevelPopulations two_level_limit(double t, double omega, double delta);

/// |T> population for two blockaded atoms, sin^2(sqrt(2) * phase).
double bell_population(double t, const DriveParams& p);

/// |W^M> population in the blockade regime, sin^2(sqrt(M) * phase).
double w_population(double t, const DriveParams& p, int atoms);

/// N -> infinity counterpart of w_population.
double w_limit(double t, double omega, double delta, int atoms);

/// Lambda atom from |g>, both legs driven by the same envelope.
LambdaPopulations lambda_populations(double t, const DriveParams& p);

/// N -> infinity excited-ground population sin^4(sqrt(2)(2m+1) pi Omega / (2 Delta)).
double lambda_limit(double t, double omega, double delta);

}  // namespace polydrive::analytic
