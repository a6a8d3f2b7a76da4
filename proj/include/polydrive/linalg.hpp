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

// Dense complex linear algebra for the small Hilbert spaces used here
// (two-level, three-level and up to five-atom tensor products, dim <= 32).

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace polydrive {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;

/// Square matrix, row-major. Entries are checked finite on construction and
/// never mutated afterwards.
class Operator {
 public:
  Operator() = default;
  explicit Operator(std::size_t dim);
  Operator(std::size_t dim, std::vector<Complex> entries);

  static Operator identity(std::size_t dim);
  /// |row><col| in a dim-dimensional space.
  static Operator basis_outer(std::size_t dim, std::size_t row, std::size_t col);
  /// |ket><bra|.
  static Operator outer(std::span<const Complex> ket, std::span<const Complex> bra);
  static Operator projector(std::span<const Complex> ket) { return outer(ket, ket); }

  std::size_t dim() const noexcept { return dim_; }
  Complex operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * dim_ + col];
  }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex trace() const noexcept;
  double max_abs() const noexcept;
  bool is_hermitian(double tol) const noexcept;

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(Complex s, const Operator& a);
  friend bool operator==(const Operator& a, const Operator& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

/// Normalized amplitude vector over a labelled basis.
class StateVector {
 public:
  static constexpr double kNormTolerance = 1e-9;

  StateVector(std::vector<std::string> basis_labels, Amplitudes amplitudes);

  /// The basis state with the given index.
  static StateVector basis(std::vector<std::string> basis_labels, std::size_t index);

  const std::vector<std::string>& basis_labels() const noexcept { return labels_; }
  const Amplitudes& amplitudes() const noexcept { return amplitudes_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }

 private:
  std::vector<std::string> labels_;
  Amplitudes amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
 public:
  static constexpr double kHermitianTolerance = 1e-9;
  static constexpr double kTraceTolerance = 1e-9;
  static constexpr double kEigenvalueFloor = -1e-8;

  explicit DensityMatrix(Operator rho);

  static DensityMatrix pure(const StateVector& psi);

  std::size_t dim() const noexcept { return rho_.dim(); }
  const Operator& op() const noexcept { return rho_; }
  Complex operator()(std::size_t row, std::size_t col) const noexcept { return rho_(row, col); }

 private:
  Operator rho_;
};

Amplitudes apply(const Operator& op, std::span<const Complex> v);
Operator dagger(const Operator& op);

/// Ascending spectrum of a Hermitian matrix by cyclic Jacobi rotations.
/// Throws kNotHermitian when op deviates from its adjoint by more than 1e-9.
std::vector<double> hermitian_eigenvalues(const Operator& op);

/// Kronecker product; the first factor is the most significant index.
Operator tensor(std::span<const Operator> factors);
Operator tensor(std::initializer_list<Operator> factors);

/// Tr(rho * proj). Throws kCorruptedState when the imaginary part exceeds 1e-8.
double expectation(const DensityMatrix& rho, const Operator& proj);
double expectation(const Operator& rho, const Operator& proj);

double norm_squared(std::span<const Complex> v) noexcept;

}  // namespace polydrive
