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

#include "polydrive/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>

#include "polydrive/error.hpp"

namespace polydrive {
namespace {

constexpr double kMinStep = 1e-14;
constexpr double kRenormalizeThreshold = 1e-8;
constexpr double kNegativityLimit = -1e-6;

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                 a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
// Fifth minus fourth order weights.
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
// PI controller constants.
constexpr double kBeta = 0.04;
constexpr double kExpo = 0.2 - 0.75 * kBeta;
constexpr double kSafety = 0.9;
constexpr double kMinFactor = 0.2;
constexpr double kMaxFactor = 10.0;

struct Entry {
  std::uint32_t row;
  std::uint32_t col;
  Complex value;
};

std::vector<Entry> nonzeros(const Operator& op) {
  std::vector<Entry> out;
  const std::size_t n = op.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (op(i, j) != Complex{}) {
        out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), op(i, j)});
      }
    }
  }
  return out;
}

// H(t) reduced to its structural nonzeros; storage stays dense in the model.
class CompiledHamiltonian {
 public:
  explicit CompiledHamiltonian(const TimeDependentModel& model) : model_(&model) {
    for (const HamiltonianTerm& term : model.terms) {
      Term t;
      t.direct = nonzeros(term.op);
      if (term.add_adjoint) t.adjoint = nonzeros(dagger(term.op));
      terms_.push_back(std::move(t));
    }
    coeffs_.resize(terms_.size() * 2);
  }

  // Fills (entries, coefficient) pairs for time t.
  void evaluate(double t) {
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const Complex c = model_->terms[k].coefficient(t);
      coeffs_[2 * k] = c;
      coeffs_[2 * k + 1] = std::conj(c);
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const Complex c = coeffs_[2 * k];
      for (const Entry& e : terms_[k].direct) f(e.row, e.col, c * e.value);
      const Complex cc = coeffs_[2 * k + 1];
      for (const Entry& e : terms_[k].adjoint) f(e.row, e.col, cc * e.value);
    }
  }

 private:
  struct Term {
    std::vector<Entry> direct;
    std::vector<Entry> adjoint;
  };
  const TimeDependentModel* model_;
  std::vector<Term> terms_;
  std::vector<Complex> coeffs_;
};

class SchrodingerRhs {
 public:
  explicit SchrodingerRhs(const TimeDependentModel& model) : h_(model), n_(model.dim()) {}

  void operator()(double t, const Complex* y, Complex* dy) {
    h_.evaluate(t);
    std::fill(dy, dy + n_, Complex{});
    h_.for_each([&](std::uint32_t i, std::uint32_t j, Complex v) { dy[i] += v * y[j]; });
    for (std::size_t i = 0; i < n_; ++i) dy[i] = Complex(dy[i].imag(), -dy[i].real());
  }

 private:
  CompiledHamiltonian h_;
  std::size_t n_;
};

class LindbladRhs {
 public:
  explicit LindbladRhs(const TimeDependentModel& model) : h_(model), n_(model.dim()) {
    Operator decay(n_);
    for (const LindbladChannel& ch : model.channels) {
      jumps_.push_back(nonzeros(ch.op));
      decay = decay + dagger(ch.op) * ch.op;
    }
    // -i H_eff with H_eff = H - (i/2) sum L^dag L: the decay part is -(1/2) K.
    decay_ = nonzeros(decay);
    scratch_.resize(n_ * n_);
  }

  void operator()(double t, const Complex* rho, Complex* drho) {
    const std::size_t n = n_;
    h_.evaluate(t);
    // scratch = H rho - rho H
    std::fill(scratch_.begin(), scratch_.end(), Complex{});
    h_.for_each([&](std::uint32_t i, std::uint32_t j, Complex v) {
      const Complex* rj = rho + j * n;
      Complex* si = scratch_.data() + i * n;
      for (std::size_t k = 0; k < n; ++k) si[k] += v * rj[k];
      for (std::size_t k = 0; k < n; ++k) scratch_[k * n + j] -= rho[k * n + i] * v;
    });
    for (std::size_t idx = 0; idx < n * n; ++idx) {
      drho[idx] = Complex(scratch_[idx].imag(), -scratch_[idx].real());
    }
    for (const Entry& e : decay_) {
      const Complex v = 0.5 * e.value;
      const Complex* rj = rho + e.col * n;
      Complex* di = drho + e.row * n;
      for (std::size_t k = 0; k < n; ++k) di[k] -= v * rj[k];
      for (std::size_t k = 0; k < n; ++k) drho[k * n + e.col] -= rho[k * n + e.row] * v;
    }
    for (const std::vector<Entry>& jump : jumps_) {
      for (const Entry& a : jump) {
        for (const Entry& b : jump) {
          drho[a.row * n + b.row] += a.value * rho[a.col * n + b.col] * std::conj(b.value);
        }
      }
    }
  }

 private:
  CompiledHamiltonian h_;
  std::size_t n_;
  std::vector<std::vector<Entry>> jumps_;
  std::vector<Entry> decay_;
  std::vector<Complex> scratch_;
};

bool all_finite(const std::vector<Complex>& v) {
  return std::all_of(v.begin(), v.end(), [](Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

struct StepBounds {
  double initial;
  double max;
};

StepBounds step_bounds(const TimeDependentModel& model, const IntegratorConfig& cfg) {
  const double rate = model.fastest_rate > 0.0 ? model.fastest_rate : 1.0;
  const double initial =
      cfg.initial_step > 0.0 ? cfg.initial_step : 0.01 * 2.0 * std::numbers::pi / rate;
  const double max = cfg.max_step > 0.0 ? cfg.max_step : 50.0 * initial;
  return {std::min(initial, max), max};
}

void validate_grid(std::span<const double> grid) {
  if (grid.empty()) throw Error(ErrorCode::kInvalidArgument, "time grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) throw Error(ErrorCode::kInvalidArgument, "time grid not finite");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "time grid must be strictly increasing");
    }
  }
}

// Stages 2..6 of one Dormand-Prince step from (t, y) with slope k1. Grid
// samples reuse this for a side step of length (t_grid - t) from the last
// accepted point, which is as accurate as a regular step and leaves the
// main step sequence untouched.
struct Stages {
  explicit Stages(std::size_t n) : k2(n), k3(n), k4(n), k5(n), k6(n), ytmp(n) {}

  template <class Rhs>
  void step(Rhs& rhs, double t, double h, const std::vector<Complex>& y,
            const std::vector<Complex>& k1, std::vector<Complex>& out) {
    const std::size_t n = y.size();
    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    rhs(t + c2 * h, ytmp.data(), k2.data());
    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(t + c3 * h, ytmp.data(), k3.data());
    for (std::size_t i = 0; i < n; ++i) {
      ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    }
    rhs(t + c4 * h, ytmp.data(), k4.data());
    for (std::size_t i = 0; i < n; ++i) {
      ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    }
    rhs(t + c5 * h, ytmp.data(), k5.data());
    for (std::size_t i = 0; i < n; ++i) {
      ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    }
    rhs(t + h, ytmp.data(), k6.data());
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
    }
  }

  std::vector<Complex> k2, k3, k4, k5, k6, ytmp;
};

// Hooks supplied by the Schrodinger / Lindblad drivers.
//   on_sample(index, state)      -- a grid point was reached
//   after_step(t, y) -> bool     -- accepted step; true if y was modified
template <class Rhs, class OnSample, class AfterStep>
void run_dopri5(Rhs& rhs, std::vector<Complex>& y, std::span<const double> grid,
                const IntegratorConfig& cfg, StepBounds bounds, IntegratorDiagnostics& diag,
                OnSample&& on_sample, AfterStep&& after_step) {
  const std::size_t n = y.size();
  Stages stages(n);
  std::vector<Complex> k1(n), k7(n), ynew(n), sample(n);

  double t = grid.front();
  const double t_end = grid.back();
  on_sample(0, y);
  std::size_t next = 1;
  if (grid.size() == 1) return;

  rhs(t, y.data(), k1.data());
  double h = bounds.initial;
  double facold = 1e-4;
  bool rejected_last = false;

  while (next < grid.size()) {
    bool last = false;
    if (t + 1.01 * h >= t_end) {
      h = t_end - t;
      last = true;
    }
    if (h < kMinStep) {
      std::ostringstream msg;
      msg << "step size " << h << " fell below " << kMinStep << " at t = " << t;
      throw Error(ErrorCode::kStepUnderflow, msg.str());
    }

    stages.step(rhs, t, h, y, k1, ynew);
    rhs(t + h, ynew.data(), k7.data());

    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex e =
          h * (e1 * k1[i] + e3 * stages.k3[i] + e4 * stages.k4[i] + e5 * stages.k5[i] + e6 * stages.k6[i] +
               e7 * k7[i]);
      const double sk = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err += std::norm(e) / (sk * sk);
    }
    err = std::sqrt(err / static_cast<double>(n));
    if (!std::isfinite(err) || !all_finite(ynew)) {
      std::ostringstream msg;
      msg << "non-finite state at t = " << t;
      throw Error(ErrorCode::kNonFinite, msg.str());
    }

    const double fac11 = std::pow(err, kExpo);
    if (err <= 1.0) {
      double fac = fac11 / std::pow(facold, kBeta);
      fac = std::clamp(fac / kSafety, 1.0 / kMaxFactor, 1.0 / kMinFactor);
      double h_new = h / fac;
      facold = std::max(err, 1e-4);
      ++diag.steps;

      const double t_new = last ? t_end : t + h;
      while (next < grid.size() && grid[next] <= t_new) {
        if (grid[next] == t_new) {
          on_sample(next, ynew);
        } else {
          stages.step(rhs, t, grid[next] - t, y, k1, sample);
          on_sample(next, sample);
        }
        ++next;
      }

      t = t_new;
      y.swap(ynew);
      k1.swap(k7);
      if (after_step(t, y)) rhs(t, y.data(), k1.data());

      h_new = std::min(h_new, bounds.max);
      if (rejected_last) h_new = std::min(h_new, h);
      rejected_last = false;
      h = h_new;
    } else {
      ++diag.rejected_steps;
      h /= std::min(1.0 / kMinFactor, fac11 / kSafety);
      rejected_last = true;
    }
  }
}

void fill_observables(Trajectory& traj) {
  const std::size_t n = traj.dim();
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<double> pop(traj.states.size());
    for (std::size_t s = 0; s < traj.states.size(); ++s) {
      pop[s] = traj.kind == Trajectory::Kind::kPure ? std::norm(traj.states[s][b])
                                                     : traj.states[s][b * n + b].real();
    }
    traj.observables[traj.basis_labels[b]] = std::move(pop);
  }
}

}  // namespace

void IntegratorConfig::validate() const {
  auto tol_ok = [](double v) { return v > 0.0 && v < 1e-2; };
  if (!tol_ok(rel_tol) || !tol_ok(abs_tol)) {
    throw Error(ErrorCode::kInvalidArgument, "integrator tolerances must lie in (0, 1e-2)");
  }
  if (initial_step < 0.0 || max_step < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "integrator steps must be positive (0 = automatic)");
  }
  if (norm_check_interval < 1) {
    throw Error(ErrorCode::kInvalidArgument, "norm_check_interval must be >= 1");
  }
}

StateVector Trajectory::final_state_vector() const {
  if (kind != Kind::kPure || states.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "trajectory does not hold a pure state");
  }
  Amplitudes a = states.back();
  const double norm = std::sqrt(norm_squared(a));
  for (Complex& z : a) z /= norm;
  return StateVector(basis_labels, std::move(a));
}

DensityMatrix Trajectory::final_density_matrix() const {
  if (states.empty()) throw Error(ErrorCode::kInvalidArgument, "empty trajectory");
  if (kind == Kind::kPure) return DensityMatrix::pure(final_state_vector());
  return DensityMatrix(Operator(dim(), states.back()));
}

Trajectory integrate_schrodinger(const TimeDependentModel& model, const StateVector& psi0,
                                 std::span<const double> grid, const IntegratorConfig& cfg) {
  cfg.validate();
  validate_grid(grid);
  if (!model.channels.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "integrate_schrodinger: model has collapse channels; use integrate_lindblad");
  }
  if (psi0.dim() != model.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "initial state dimension does not match model");
  }

  Trajectory traj;
  traj.kind = Trajectory::Kind::kPure;
  traj.basis_labels = model.basis_labels;
  traj.times.assign(grid.begin(), grid.end());
  traj.states.resize(grid.size());

  SchrodingerRhs rhs(model);
  std::vector<Complex> y = psi0.amplitudes();
  IntegratorDiagnostics& diag = traj.diagnostics;
  int since_check = 0;
  bool check_due = false;

  auto on_sample = [&](std::size_t idx, const std::vector<Complex>& state) {
    traj.states[idx] = state;
    diag.max_norm_drift = std::max(diag.max_norm_drift, std::abs(norm_squared(state) - 1.0));
    if (++since_check >= cfg.norm_check_interval) {
      since_check = 0;
      check_due = true;
    }
  };
  auto after_step = [&](double, std::vector<Complex>& state) {
    if (!check_due) return false;
    check_due = false;
    const double drift = std::abs(norm_squared(state) - 1.0);
    diag.max_norm_drift = std::max(diag.max_norm_drift, drift);
    if (drift <= kRenormalizeThreshold) return false;
    const double scale = 1.0 / std::sqrt(norm_squared(state));
    for (Complex& z : state) z *= scale;
    ++diag.renormalizations;
    return true;
  };

  run_dopri5(rhs, y, grid, cfg, step_bounds(model, cfg), diag, on_sample, after_step);
  fill_observables(traj);
  return traj;
}

Trajectory integrate_lindblad(const TimeDependentModel& model, const DensityMatrix& rho0,
                              std::span<const double> grid, const IntegratorConfig& cfg) {
  cfg.validate();
  validate_grid(grid);
  if (rho0.dim() != model.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "initial density matrix does not match model");
  }
  const std::size_t n = model.dim();

  Trajectory traj;
  traj.kind = Trajectory::Kind::kMixed;
  traj.basis_labels = model.basis_labels;
  traj.times.assign(grid.begin(), grid.end());
  traj.states.resize(grid.size());

  LindbladRhs rhs(model);
  std::vector<Complex> y(rho0.op().entries().begin(), rho0.op().entries().end());
  IntegratorDiagnostics& diag = traj.diagnostics;
  diag.min_eigenvalue = std::numeric_limits<double>::infinity();
  int since_check = 0;
  bool check_due = false;

  auto trace_of = [n](const std::vector<Complex>& r) {
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += r[i * n + i].real();
    return tr;
  };

  auto on_sample = [&](std::size_t idx, const std::vector<Complex>& state) {
    traj.states[idx] = state;
    diag.max_norm_drift = std::max(diag.max_norm_drift, std::abs(trace_of(state) - 1.0));
    if (++since_check >= cfg.norm_check_interval) {
      since_check = 0;
      check_due = true;
      const std::vector<double> ev = hermitian_eigenvalues(Operator(n, state));
      diag.min_eigenvalue = std::min(diag.min_eigenvalue, ev.front());
      if (ev.front() < kNegativityLimit) {
        std::ostringstream msg;
        msg << "density matrix eigenvalue " << ev.front() << " at t = " << grid[idx];
        throw Error(ErrorCode::kNegativeDensity, msg.str());
      }
    }
  };
  auto after_step = [&](double, std::vector<Complex>& state) {
    for (std::size_t i = 0; i < n; ++i) {
      state[i * n + i] = state[i * n + i].real();
      for (std::size_t j = i + 1; j < n; ++j) {
        const Complex avg = 0.5 * (state[i * n + j] + std::conj(state[j * n + i]));
        state[i * n + j] = avg;
        state[j * n + i] = std::conj(avg);
      }
    }
    if (!check_due) return false;
    check_due = false;
    const double tr = trace_of(state);
    const double drift = std::abs(tr - 1.0);
    diag.max_norm_drift = std::max(diag.max_norm_drift, drift);
    if (drift <= kRenormalizeThreshold) return false;
    for (Complex& z : state) z /= tr;
    ++diag.renormalizations;
    return true;
  };

  run_dopri5(rhs, y, grid, cfg, step_bounds(model, cfg), diag, on_sample, after_step);
  fill_observables(traj);
  return traj;
}

std::vector<double> population_series(const Trajectory& traj, const std::string& label) {
  const Operator proj = population_projector(traj.basis_labels, label);
  const std::size_t n = traj.dim();
  std::vector<double> out(traj.states.size());
  for (std::size_t s = 0; s < traj.states.size(); ++s) {
    const Amplitudes& st = traj.states[s];
    if (traj.kind == Trajectory::Kind::kPure) {
      Complex acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        Complex row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += proj(i, j) * st[j];
        acc += std::conj(st[i]) * row;
      }
      out[s] = acc.real();
    } else {
      out[s] = expectation(Operator(n, st), proj);
    }
  }
  return out;
}

std::vector<double> uniform_grid(double start, double stop, std::size_t samples) {
  if (samples < 2 || !(stop > start)) {
    throw Error(ErrorCode::kInvalidArgument, "grid needs >= 2 samples and stop > start");
  }
  std::vector<double> g(samples);
  const double step = (stop - start) / static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) g[i] = start + step * static_cast<double>(i);
  g.back() = stop;
  return g;
}

}  // namespace polydrive
