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

// Adaptive integration of the Schrodinger and Lindblad equations.
//
// Both solvers use the Dormand-Prince 5(4) pair with PI step-size control.
// A grid time falling inside an accepted step is reached by a separate
// fifth-order step from the start of that step, so grid density never
// constrains the step sequence. The first grid time is the initial time.

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "polydrive/linalg.hpp"
#include "polydrive/models.hpp"

namespace polydrive {

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double initial_step = 0.0;  ///< 0 selects 0.01 * 2 pi / model.fastest_rate
  double max_step = 0.0;      ///< 0 selects 50 * initial_step
  int norm_check_interval = 1;  ///< output samples between norm / trace checks

  void validate() const;
};

struct IntegratorDiagnostics {
  double max_norm_drift = 0.0;  ///< |<psi|psi> - 1| or |Tr rho - 1|, before renormalizing
  double min_eigenvalue = 0.0;  ///< smallest sampled eigenvalue of rho (mixed runs only)
  std::size_t steps = 0;
  std::size_t rejected_steps = 0;
  std::size_t renormalizations = 0;
};

struct Trajectory {
  enum class Kind { kPure, kMixed };

  Kind kind = Kind::kPure;
  std::vector<double> times;
  std::vector<std::string> basis_labels;
  /// One entry per time: amplitudes (pure) or row-major rho (mixed).
  std::vector<Amplitudes> states;
  /// Population of every basis state, keyed by label.
  std::map<std::string, std::vector<double>> observables;
  IntegratorDiagnostics diagnostics;

  std::size_t dim() const noexcept { return basis_labels.size(); }
  StateVector final_state_vector() const;
  DensityMatrix final_density_matrix() const;
};

/// Solves i d|psi>/dt = H(t)|psi> on the grid. The model must have no channels.
Trajectory integrate_schrodinger(const TimeDependentModel& model, const StateVector& psi0,
                                 std::span<const double> grid, const IntegratorConfig& cfg);

/// Solves d rho/dt = -i[H, rho] + sum_k (L_k rho L_k^dag - {L_k^dag L_k, rho}/2).
Trajectory integrate_lindblad(const TimeDependentModel& model, const DensityMatrix& rho0,
                              std::span<const double> grid, const IntegratorConfig& cfg);

/// Per-time population of a basis label or of "T"/"W"/"G" (see population_projector).
std::vector<double> population_series(const Trajectory& traj, const std::string& label);

/// Uniform grid of `samples` points on [start, stop].
std::vector<double> uniform_grid(double start, double stop, std::size_t samples);

}  // namespace polydrive
