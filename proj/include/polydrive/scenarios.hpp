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

// Named parameter sets for every published panel, a JSON-configured custom
// scenario, and one-parameter scans.
//
// Grid times are in the scenario's display unit: dimensionless Omega*t, or
// microseconds with Omega given in rad/us. All curves of one scenario share
// the exact same time samples.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polydrive/drive.hpp"
#include "polydrive/dynamics.hpp"

namespace polydrive {

enum class ModelKind { kTwoLevel, kRydberg, kEffectiveW, kLambda };
enum class TimeUnit { kOmegaT, kMicroseconds };

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);

struct TimeGrid {
  double start = 0.0;
  double stop = 30.0;
  std::size_t samples = 3001;
};

/// One numerically integrated curve; `tag` suffixes its column names.
struct CurveSpec {
  std::string tag;
  DriveParams drive;
};

struct Scenario {
  std::string id;
  ModelKind model = ModelKind::kTwoLevel;
  std::vector<CurveSpec> curves;
  double gamma = 0.0;        ///< decay rate, same units as Omega
  double interaction = 0.0;  ///< U, same units as Omega (Rydberg only)
  int atoms = 1;             ///< atom count (Rydberg / effective W)
  TimeGrid grid;
  TimeUnit unit = TimeUnit::kOmegaT;
  std::vector<std::string> observables;
  bool analytic = false;  ///< add closed-form columns where one exists
  bool baseline = false;  ///< add the single central field (N = 0) curve
  std::vector<std::string> assumptions;

  void validate() const;
  /// Display grid values.
  std::vector<double> display_times() const;
  /// Model time for a display time, given the curve's Omega.
  double model_time(double display_time, double omega) const;
};

struct Column {
  std::string name;
  std::vector<double> values;
};

struct CurveDiagnostics {
  std::string curve;
  bool mixed = false;
  IntegratorDiagnostics integrator;
};

struct RunResult {
  std::string scenario_id;
  std::string time_label;
  std::vector<double> times;
  std::vector<Column> columns;
  std::vector<CurveDiagnostics> diagnostics;
  std::vector<std::pair<std::string, std::string>> metadata;

  /// Throws kUnknownLabel when absent.
  const Column& column(std::string_view name) const;
};

std::vector<std::string> builtin_ids();

/// Throws kUnknownScenario (message lists the valid ids).
Scenario builtin(std::string_view id);

/// Parses the JSON config object {model, omega, ratio_p, ratio_q, M, N,
/// delta_over_omega, gamma_over_omega, U_over_omega, t_start, t_stop,
/// samples, observables}. Optional: id, atoms, analytic, baseline.
Scenario scenario_from_json(std::string_view json_text);

/// Integrates every curve (plus the baseline) and merges them on the
/// scenario grid in declared order. Integration failures are rethrown with
/// the curve name prefixed.
RunResult run(const Scenario& s, const IntegratorConfig& cfg);

enum class Reduction { kPlateauMean, kMax, kFinal, kMaxDeviation };
Reduction parse_reduction(std::string_view name);

/// Axis names: "N", "U", "gamma", "delta" (units of Omega) and "M".
struct ScanSpec {
  Scenario base;
  std::string axis;
  std::vector<double> values;
  Reduction reduction = Reduction::kMax;

  void validate() const;
};

struct ScanRow {
  double value = 0.0;
  double metric = 0.0;
  bool ok = false;
  std::string error;
};

/// One run per value; the metric reduces the first curve's first observable.
/// A failing value is reported in its row and the scan continues.
std::vector<ScanRow> scan(const ScanSpec& spec, const IntegratorConfig& cfg);

/// Applies one scan axis value to a scenario.
Scenario with_axis_value(const Scenario& base, std::string_view axis, double value);

/// True when Delta*t sits in the central half of its branch window,
/// i.e. frac(Delta t / 2 pi) in [1/4, 3/4].
bool in_plateau_interior(double delta_t_phase);

/// Mean of values over plateau-interior samples. `window` < 0 uses every
/// window, otherwise only branch index `window`.
double plateau_mean(std::span<const double> model_times, std::span<const double> values,
                    double spacing, long window = -1);

}  // namespace polydrive
