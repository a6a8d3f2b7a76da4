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

#include "polydrive/analytic.hpp"

#include <cmath>
#include <numbers>

#include "polydrive/error.hpp"

namespace polydrive::analytic {
namespace {

double sq(double x) { return x * x; }

void require_non_negative(double t, const char* what) {
  if (!(t >= 0.0)) throw Error(ErrorCode::kInvalidArgument, std::string(what) + ": t must be >= 0");
}

// m = floor(Delta t / 2 pi); (2m + 1) pi is the accumulated limit phase.
double limit_angle(double t, double omega, double delta) {
  const auto m = branch_index(delta * t);
  return static_cast<double>(2 * m + 1) * std::numbers::pi * omega / delta;
}

}  // namespace

TwoLevelPopulations two_level(double t, const DriveParams& p) {
  if (p.detuning != 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "two_level: closed form holds only for a resonant central field");
  }
  const double theta = phase_integral(t, p);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return {c * c, s * s};
}

TwoLevelPopulations two_level_limit(double t, double omega, double delta) {
  require_non_negative(t, "two_level_limit");
  const double pe = sq(std::sin(limit_angle(t, omega, delta)));
  return {1.0 - pe, pe};
}

double bell_population(double t, const DriveParams& p) { return w_population(t, p, 2); }

double w_population(double t, const DriveParams& p, int atoms) {
  if (atoms < 2) throw Error(ErrorCode::kInvalidArgument, "w_population: need M >= 2");
  return sq(std::sin(std::sqrt(static_cast<double>(atoms)) * phase_integral(t, p)));
}

double w_limit(double t, double omega, double delta, int atoms) {
  require_non_negative(t, "w_limit");
  if (atoms < 1) throw Error(ErrorCode::kInvalidArgument, "w_limit: need M >= 1");
  return sq(std::sin(std::sqrt(static_cast<double>(atoms)) * limit_angle(t, omega, delta)));
}

LambdaPopulations lambda_populations(double t, const DriveParams& p) {
  // Bright state (|g> + |e>)/sqrt(2) couples to |r> with sqrt(2) A_N; the
  // dark combination is frozen.
  const double phi = std::sqrt(2.0) * phase_integral(t, p);
  const double c = std::cos(0.5 * phi);
  const double s = std::sin(0.5 * phi);
  return {sq(c * c), sq(s * s), 0.5 * sq(std::sin(phi))};
}

double lambda_limit(double t, double omega, double delta) {
  require_non_negative(t, "lambda_limit");
  const double s = std::sin(std::sqrt(2.0) * limit_angle(t, omega, delta) / 2.0);
  return sq(s * s);
}

}  // namespace polydrive::analytic
