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

// Hamiltonian and collapse-channel builders.
//
// Multi-atom basis ordering: labels are strings over {g, e}, the leftmost
// character is atom 1, and basis index order is the lexicographic order of
// the labels with g < e (atom 1 is the most significant bit). This is the
// order produced by tensor(atom1, atom2, ...).

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polydrive/drive.hpp"
#include "polydrive/linalg.hpp"

namespace polydrive {

/// H(t) contribution coefficient(t) * op, plus conj(coefficient(t)) * op^dagger
/// when add_adjoint is set.
struct HamiltonianTerm {
  Operator op;
  std::function<Complex(double)> coefficient;
  bool add_adjoint = false;
};

/// Jump operator with the rate already folded in (sqrt(rate) * jump).
struct LindbladChannel {
  Operator op;
};

struct TimeDependentModel {
  std::vector<std::string> basis_labels;
  std::vector<HamiltonianTerm> terms;
  std::vector<LindbladChannel> channels;
  /// Fastest angular rate in the problem; seeds the integrator step.
  double fastest_rate = 1.0;

  std::size_t dim() const noexcept { return basis_labels.size(); }
  Operator hamiltonian_at(double t) const;
};

struct RydbergParams {
  DriveParams drive;
  int atoms = 2;         ///< M, 2..5
  double interaction = 400.0;  ///< uniform pair interaction U (same units as Omega)

  static constexpr int kMaxAtoms = 5;
  void validate() const;
};

/// Complex coupling Omega (e^{i delta t} + 2 sum cos(n Delta t)); equals
/// envelope() when delta = 0.
Complex drive_coefficient(double t, const DriveParams& p);

/// Basis {g, e}; channel sqrt(gamma)|g><e| when gamma > 0.
TimeDependentModel two_level_model(const DriveParams& p, double gamma);

/// M atoms, each driven by the envelope, plus U on every doubly excited pair.
/// One channel sqrt(gamma)|g>_a<e| per atom when gamma > 0.
TimeDependentModel rydberg_model(const RydbergParams& rp, double gamma);

/// Blockade-reduced model on {G = |g...g>, W = |W^M>}, coupling sqrt(M) A_N.
TimeDependentModel effective_w_model(const DriveParams& p, int atoms);

/// Basis {g, e, r}; both ground states couple to r with the same envelope.
/// Channels sqrt(gamma/2)|g><r| and sqrt(gamma/2)|e><r| when gamma > 0.
TimeDependentModel lambda_model(const DriveParams& p, double gamma);

/// Labels of all M-atom product states in basis order.
std::vector<std::string> atom_basis_labels(int atoms);

/// Symmetric single-excitation state |W^M> in the M-atom product basis.
Amplitudes w_state(int atoms);

/// Projector for a population label on the given basis. Accepts any basis
/// label, "T" (two atoms) and "W" for the symmetric single-excitation state,
/// and "G" for the all-ground state. Throws kUnknownLabel otherwise.
Operator population_projector(const std::vector<std::string>& basis_labels,
                              const std::string& label);

}  // namespace polydrive
