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

#include "polydrive/models.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "polydrive/error.hpp"

namespace polydrive {
namespace {

double fastest_rate(const DriveParams& p, double interaction, double gamma) {
  const double n = static_cast<double>(p.pairs);
  return std::max({n * p.spacing(), (2.0 * n + 1.0) * p.omega, std::abs(p.detuning),
                   interaction, gamma});
}

void require_rate(double gamma) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw Error(ErrorCode::kInvalidArgument, "decay rate must be finite and >= 0");
  }
}

// |e><g| on atom `which` (0-based) of an M-atom register.
Operator raise_on_atom(int atoms, int which) {
  std::vector<Operator> factors;
  factors.reserve(static_cast<std::size_t>(atoms));
  for (int a = 0; a < atoms; ++a) {
    factors.push_back(a == which ? Operator::basis_outer(2, 1, 0) : Operator::identity(2));
  }
  return tensor(factors);
}

Operator lower_on_atom(int atoms, int which) { return dagger(raise_on_atom(atoms, which)); }

bool is_atom_product_basis(const std::vector<std::string>& labels, std::size_t& atoms) {
  if (labels.empty()) return false;
  atoms = labels.front().size();
  if (atoms < 1 || atoms > 30 || labels.size() != (std::size_t{1} << atoms)) return false;
  return labels == atom_basis_labels(static_cast<int>(atoms));
}

}  // namespace

Operator TimeDependentModel::hamiltonian_at(double t) const {
  const std::size_t n = dim();
  std::vector<Complex> h(n * n);
  for (const HamiltonianTerm& term : terms) {
    const Complex c = term.coefficient(t);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Complex v = term.op(i, j);
        if (v == Complex{}) continue;
        h[i * n + j] += c * v;
        if (term.add_adjoint) h[j * n + i] += std::conj(c * v);
      }
    }
  }
  return Operator(n, std::move(h));
}

void RydbergParams::validate() const {
  drive.validate();
  if (atoms < 2 || atoms > kMaxAtoms) {
    throw Error(ErrorCode::kInvalidArgument,
                "rydberg: atom count " + std::to_string(atoms) + " outside [2, 5]");
  }
  if (!(interaction > 0.0) || !std::isfinite(interaction)) {
    throw Error(ErrorCode::kInvalidArgument, "rydberg: interaction U must be positive");
  }
}

Complex drive_coefficient(double t, const DriveParams& p) {
  const double delta = p.spacing();
  double comb = 0.0;
  for (int n = 1; n <= p.pairs; ++n) comb += 2.0 * std::cos(n * delta * t);
  if (p.detuning == 0.0) return p.omega * (1.0 + comb);
  const double phi = p.detuning * t;
  return p.omega * Complex(std::cos(phi) + comb, std::sin(phi));
}

TimeDependentModel two_level_model(const DriveParams& p, double gamma) {
  p.validate();
  require_rate(gamma);
  TimeDependentModel m;
  m.basis_labels = {"g", "e"};
  m.terms.push_back({Operator::basis_outer(2, 1, 0),
                     [p](double t) { return drive_coefficient(t, p); }, true});
  if (gamma > 0.0) {
    m.channels.push_back({std::sqrt(gamma) * Operator::basis_outer(2, 0, 1)});
  }
  m.fastest_rate = fastest_rate(p, 0.0, gamma);
  return m;
}

TimeDependentModel rydberg_model(const RydbergParams& rp, double gamma) {
  rp.validate();
  require_rate(gamma);
  const int atoms = rp.atoms;
  const std::size_t dim = std::size_t{1} << atoms;

  Operator raise(dim);
  for (int a = 0; a < atoms; ++a) raise = raise + raise_on_atom(atoms, a);

  // U times the number of doubly excited pairs in each product state.
  std::vector<Complex> diag(dim * dim);
  for (std::size_t s = 0; s < dim; ++s) {
    const int excited = std::popcount(s);
    diag[s * dim + s] = rp.interaction * (excited * (excited - 1) / 2);
  }

  TimeDependentModel m;
  m.basis_labels = atom_basis_labels(atoms);
  const DriveParams p = rp.drive;
  m.terms.push_back({std::move(raise), [p](double t) { return drive_coefficient(t, p); }, true});
  m.terms.push_back({Operator(dim, std::move(diag)), [](double) { return Complex(1.0); }, false});
  if (gamma > 0.0) {
    for (int a = 0; a < atoms; ++a) {
      m.channels.push_back({std::sqrt(gamma) * lower_on_atom(atoms, a)});
    }
  }
  m.fastest_rate = fastest_rate(p, rp.interaction, gamma);
  return m;
}

TimeDependentModel effective_w_model(const DriveParams& p, int atoms) {
  p.validate();
  if (atoms < 2) throw Error(ErrorCode::kInvalidArgument, "effective_w_model: need M >= 2");
  TimeDependentModel m;
  m.basis_labels = {"G", atoms == 2 ? "T" : "W"};
  const double root = std::sqrt(static_cast<double>(atoms));
  m.terms.push_back({root * Operator::basis_outer(2, 1, 0),
                     [p](double t) { return drive_coefficient(t, p); }, true});
  m.fastest_rate = root * fastest_rate(p, 0.0, 0.0);
  return m;
}

TimeDependentModel lambda_model(const DriveParams& p, double gamma) {
  p.validate();
  require_rate(gamma);
  TimeDependentModel m;
  m.basis_labels = {"g", "e", "r"};
  m.terms.push_back({Operator::basis_outer(3, 1, 2) + Operator::basis_outer(3, 0, 2),
                     [p](double t) { return drive_coefficient(t, p); }, true});
  if (gamma > 0.0) {
    const double root = std::sqrt(0.5 * gamma);
    m.channels.push_back({root * Operator::basis_outer(3, 0, 2)});
    m.channels.push_back({root * Operator::basis_outer(3, 1, 2)});
  }
  m.fastest_rate = fastest_rate(p, 0.0, gamma);
  return m;
}

std::vector<std::string> atom_basis_labels(int atoms) {
  if (atoms < 1) throw Error(ErrorCode::kInvalidArgument, "atom_basis_labels: need M >= 1");
  const std::size_t dim = std::size_t{1} << atoms;
  std::vector<std::string> labels(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    std::string label(static_cast<std::size_t>(atoms), 'g');
    for (int a = 0; a < atoms; ++a) {
      if ((s >> (atoms - 1 - a)) & 1U) label[static_cast<std::size_t>(a)] = 'e';
    }
    labels[s] = std::move(label);
  }
  return labels;
}

Amplitudes w_state(int atoms) {
  if (atoms < 1) throw Error(ErrorCode::kInvalidArgument, "w_state: need M >= 1");
  const std::size_t dim = std::size_t{1} << atoms;
  Amplitudes v(dim);
  const double amp = 1.0 / std::sqrt(static_cast<double>(atoms));
  for (int a = 0; a < atoms; ++a) v[std::size_t{1} << a] = amp;
  return v;
}

Operator population_projector(const std::vector<std::string>& basis_labels,
                              const std::string& label) {
  const std::size_t dim = basis_labels.size();
  const auto it = std::find(basis_labels.begin(), basis_labels.end(), label);
  if (it != basis_labels.end()) {
    const auto idx = static_cast<std::size_t>(it - basis_labels.begin());
    return Operator::basis_outer(dim, idx, idx);
  }

  std::size_t atoms = 0;
  const bool product = is_atom_product_basis(basis_labels, atoms);
  if (product && atoms >= 2 && (label == "W" || (label == "T" && atoms == 2))) {
    return Operator::projector(w_state(static_cast<int>(atoms)));
  }
  if (product && label == "G") return Operator::basis_outer(dim, 0, 0);

  // The two-atom effective basis names its excited state T; "W" finds it too.
  if (label == "W") {
    const auto alt = std::find(basis_labels.begin(), basis_labels.end(), "T");
    if (alt != basis_labels.end()) {
      const auto idx = static_cast<std::size_t>(alt - basis_labels.begin());
      return Operator::basis_outer(dim, idx, idx);
    }
  }
  throw Error(ErrorCode::kUnknownLabel, "no population label '" + label + "' in this basis");
}

}  // namespace polydrive
