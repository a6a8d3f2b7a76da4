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

#include "polydrive/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "polydrive/error.hpp"

namespace polydrive {
namespace {

constexpr double kHermitianInputTolerance = 1e-9;
constexpr double kImaginaryError = 1e-8;
constexpr int kMaxJacobiSweeps = 100;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_dim(const Operator& a, const Operator& b, const char* what) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << what << ": dimensions " << a.dim() << " and " << b.dim() << " differ";
    throw Error(ErrorCode::kDimensionMismatch, msg.str());
  }
}

}  // namespace

Operator::Operator(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

Operator::Operator(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "operator needs " + std::to_string(dim_ * dim_) + " entries, got " +
                    std::to_string(entries_.size()));
  }
  if (!std::all_of(entries_.begin(), entries_.end(), finite)) {
    throw Error(ErrorCode::kNonFinite, "operator has a non-finite entry");
  }
}

Operator Operator::identity(std::size_t dim) {
  std::vector<Complex> e(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return Operator(dim, std::move(e));
}

Operator Operator::basis_outer(std::size_t dim, std::size_t row, std::size_t col) {
  if (row >= dim || col >= dim) {
    throw Error(ErrorCode::kInvalidArgument, "basis index out of range");
  }
  std::vector<Complex> e(dim * dim);
  e[row * dim + col] = 1.0;
  return Operator(dim, std::move(e));
}

Operator Operator::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  if (ket.size() != bra.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "outer product of unequal lengths");
  }
  const std::size_t n = ket.size();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = ket[i] * std::conj(bra[j]);
  }
  return Operator(n, std::move(e));
}

Complex Operator::trace() const noexcept {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += entries_[i * dim_ + i];
  return t;
}

double Operator::max_abs() const noexcept {
  double m = 0.0;
  for (const Complex& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

bool Operator::is_hermitian(double tol) const noexcept {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    }
  }
  return true;
}

Operator operator+(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "operator sum");
  std::vector<Complex> e(a.entries_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries_[i];
  return Operator(a.dim_, std::move(e));
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "operator difference");
  std::vector<Complex> e(a.entries_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries_[i];
  return Operator(a.dim_, std::move(e));
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "operator product");
  const std::size_t n = a.dim_;
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a.entries_[i * n + k];
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) e[i * n + j] += aik * b.entries_[k * n + j];
    }
  }
  return Operator(n, std::move(e));
}

Operator operator*(Complex s, const Operator& a) {
  std::vector<Complex> e(a.entries_);
  for (Complex& z : e) z *= s;
  return Operator(a.dim_, std::move(e));
}

StateVector::StateVector(std::vector<std::string> basis_labels, Amplitudes amplitudes)
    : labels_(std::move(basis_labels)), amplitudes_(std::move(amplitudes)) {
  if (labels_.size() != amplitudes_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "state has " + std::to_string(labels_.size()) +
                                                   " labels but " +
                                                   std::to_string(amplitudes_.size()) +
                                                   " amplitudes");
  }
  if (!std::all_of(amplitudes_.begin(), amplitudes_.end(), finite)) {
    throw Error(ErrorCode::kNonFinite, "state has a non-finite amplitude");
  }
  const double n = norm_squared(amplitudes_);
  if (std::abs(n - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "state is not normalized (norm^2 = " << n << ")";
    throw Error(ErrorCode::kInvalidArgument, msg.str());
  }
}

StateVector StateVector::basis(std::vector<std::string> basis_labels, std::size_t index) {
  if (index >= basis_labels.size()) {
    throw Error(ErrorCode::kInvalidArgument, "basis index out of range");
  }
  Amplitudes a(basis_labels.size());
  a[index] = 1.0;
  return StateVector(std::move(basis_labels), std::move(a));
}

DensityMatrix::DensityMatrix(Operator rho) : rho_(std::move(rho)) {
  if (!rho_.is_hermitian(kHermitianTolerance)) {
    throw Error(ErrorCode::kNotHermitian, "density matrix is not Hermitian");
  }
  const Complex tr = rho_.trace();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "density matrix trace is " << tr.real();
    throw Error(ErrorCode::kInvalidArgument, msg.str());
  }
  const std::vector<double> ev = hermitian_eigenvalues(rho_);
  if (!ev.empty() && ev.front() < kEigenvalueFloor) {
    std::ostringstream msg;
    msg << "density matrix has eigenvalue " << ev.front();
    throw Error(ErrorCode::kNegativeDensity, msg.str());
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  return DensityMatrix(Operator::projector(psi.amplitudes()));
}

Amplitudes apply(const Operator& op, std::span<const Complex> v) {
  if (op.dim() != v.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "apply: operator dim " +
                                                   std::to_string(op.dim()) +
                                                   " vs vector length " +
                                                   std::to_string(v.size()));
  }
  const std::size_t n = op.dim();
  Amplitudes out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += op(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Operator dagger(const Operator& op) {
  const std::size_t n = op.dim();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) e[j * n + i] = std::conj(op(i, j));
  }
  return Operator(n, std::move(e));
}

std::vector<double> hermitian_eigenvalues(const Operator& op) {
  if (!op.is_hermitian(kHermitianInputTolerance)) {
    throw Error(ErrorCode::kNotHermitian, "hermitian_eigenvalues: input is not Hermitian");
  }
  const std::size_t n = op.dim();
  std::vector<Complex> a(op.entries().begin(), op.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> Complex& { return a[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) at(i, i) = at(i, i).real();

  double scale = 0.0;
  for (const Complex& z : a) scale += std::norm(z);
  scale = std::sqrt(scale);

  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += std::norm(at(i, j));
    }
    if (std::sqrt(off) <= 1e-15 * scale || off == 0.0) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = at(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        // Phase rotation makes the pivot real, then a real Jacobi rotation
        // annihilates it. Combined unitary V acts on columns p and q.
        const Complex phase = apq / r;
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex vpp = c;
        const Complex vpq = s;
        const Complex vqp = -s * std::conj(phase);
        const Complex vqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = at(k, p);
          const Complex akq = at(k, q);
          at(k, p) = akp * vpp + akq * vqp;
          at(k, q) = akp * vpq + akq * vqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = at(p, k);
          const Complex aqk = at(q, k);
          at(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
          at(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        at(p, p) = at(p, p).real();
        at(q, q) = at(q, q).real();
      }
    }
  }

  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

Operator tensor(std::span<const Operator> factors) {
  if (factors.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "tensor: empty factor list");
  }
  Operator acc = factors.front();
  for (std::size_t f = 1; f < factors.size(); ++f) {
    const Operator& b = factors[f];
    const std::size_t na = acc.dim();
    const std::size_t nb = b.dim();
    const std::size_t n = na * nb;
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t j = 0; j < na; ++j) {
        const Complex aij = acc(i, j);
        if (aij == Complex{}) continue;
        for (std::size_t k = 0; k < nb; ++k) {
          for (std::size_t l = 0; l < nb; ++l) {
            e[(i * nb + k) * n + (j * nb + l)] = aij * b(k, l);
          }
        }
      }
    }
    acc = Operator(n, std::move(e));
  }
  return acc;
}

Operator tensor(std::initializer_list<Operator> factors) {
  return tensor(std::span<const Operator>(factors.begin(), factors.size()));
}

double expectation(const Operator& rho, const Operator& proj) {
  require_same_dim(rho, proj, "expectation");
  const std::size_t n = rho.dim();
  Complex acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) acc += rho(i, k) * proj(k, i);
  }
  if (std::abs(acc.imag()) > kImaginaryError) {
    std::ostringstream msg;
    msg << "expectation has imaginary part " << acc.imag();
    throw Error(ErrorCode::kCorruptedState, msg.str());
  }
  return acc.real();
}

double expectation(const DensityMatrix& rho, const Operator& proj) {
  return expectation(rho.op(), proj);
}

double norm_squared(std::span<const Complex> v) noexcept {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return s;
}

}  // namespace polydrive
