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

// Independent reference computations used only by tests. Nothing here calls
// into the library.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Dense = std::vector<C>;  // row-major n x n

inline Dense matmul(const Dense& a, const Dense& b, std::size_t n) {
  Dense out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += a[i * n + k] * b[k * n + j];
  return out;
}

inline Dense adjoint(const Dense& a, std::size_t n) {
  Dense out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j * n + i] = std::conj(a[i * n + j]);
  return out;
}

// Characteristic polynomial coefficients c[0..n] of det(xI - A), c[n] = 1,
// by the Faddeev-LeVerrier recursion.
inline std::vector<C> charpoly(const Dense& a, std::size_t n) {
  std::vector<C> c(n + 1);
  c[n] = 1.0;
  Dense m(n * n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Dense am = matmul(a, m, n);
    for (std::size_t i = 0; i < n; ++i) am[i * n + i] += c[n - k + 1];
    m = am;  // M_k = A M_{k-1} + c_{n-k+1} I
    const Dense amk = matmul(a, m, n);
    C tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += amk[i * n + i];
    c[n - k] = -tr / static_cast<double>(k);
  }
  return c;
}

inline C horner(const std::vector<C>& c, C x) {
  C v = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

// All roots of the monic polynomial by Durand-Kerner, polished by Newton.
inline std::vector<double> eigenvalues_by_charpoly(const Dense& a, std::size_t n) {
  const std::vector<C> c = charpoly(a, n);
  std::vector<C> deriv(n);
  for (std::size_t i = 1; i <= n; ++i) deriv[i - 1] = c[i] * static_cast<double>(i);
  double bound = 0.0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i]));
  bound += 1.0;
  std::vector<C> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = bound * std::pow(C(0.4, 0.9), static_cast<double>(i));
  for (int it = 0; it < 5000; ++it) {
    double moved = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      C denom = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      const C step = horner(c, z[i]) / denom;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-15 * bound) break;
  }
  std::vector<double> out;
  for (C root : z) {
    C x = root.real();
    for (int it = 0; it < 20; ++it) {
      const C d = horner(deriv, x);
      if (std::abs(d) == 0.0) break;
      x -= horner(c, x) / d;
    }
    out.push_back(x.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Adaptive Simpson quadrature.
inline double simpson(const std::function<double(double)>& f, double a, double b, double tol,
                      int depth = 50) {
  const std::function<double(double, double, double, double, double, double, double, int)> rec =
      [&](double lo, double hi, double flo, double fmid, double fhi, double whole, double eps,
          int d) {
        const double mid = 0.5 * (lo + hi);
        const double lm = 0.5 * (lo + mid);
        const double rm = 0.5 * (mid + hi);
        const double flm = f(lm);
        const double frm = f(rm);
        const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
        const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
        if (d <= 0 || std::abs(left + right - whole) <= 15.0 * eps) {
          return left + right + (left + right - whole) / 15.0;
        }
        return rec(lo, mid, flo, flm, fmid, left, eps / 2.0, d - 1) +
               rec(mid, hi, fmid, frm, fhi, right, eps / 2.0, d - 1);
      };
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  return rec(a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, depth);
}

// Lindblad right-hand side with plain dense products.
inline Dense lindblad_rhs(const Dense& h, const std::vector<Dense>& jumps, const Dense& rho,
                          std::size_t n) {
  const Dense hr = matmul(h, rho, n);
  const Dense rh = matmul(rho, h, n);
  Dense out(n * n);
  for (std::size_t i = 0; i < n * n; ++i) out[i] = C(0.0, -1.0) * (hr[i] - rh[i]);
  for (const Dense& l : jumps) {
    const Dense ld = adjoint(l, n);
    const Dense lrl = matmul(matmul(l, rho, n), ld, n);
    const Dense k = matmul(ld, l, n);
    const Dense kr = matmul(k, rho, n);
    const Dense rk = matmul(rho, k, n);
    for (std::size_t i = 0; i < n * n; ++i) out[i] += lrl[i] - 0.5 * (kr[i] + rk[i]);
  }
  return out;
}

// Classic fixed-step RK4 for the master equation. Returns rho at each
// requested time (times must be multiples of h, ascending, starting at 0).
inline std::vector<Dense> rk4_lindblad(const std::function<Dense(double)>& hamiltonian,
                                       const std::vector<Dense>& jumps, Dense rho, std::size_t n,
                                       double h, const std::vector<double>& times) {
  std::vector<Dense> out;
  double t = 0.0;
  std::size_t next = 0;
  auto axpy = [n](const Dense& y, const Dense& k, double s) {
    Dense r(n * n);
    for (std::size_t i = 0; i < n * n; ++i) r[i] = y[i] + s * k[i];
    return r;
  };
  long step = 0;
  while (next < times.size()) {
    if (std::abs(t - times[next]) < 0.5 * h) {
      out.push_back(rho);
      ++next;
      continue;
    }
    const Dense h0 = hamiltonian(t);
    const Dense hm = hamiltonian(t + 0.5 * h);
    const Dense h1 = hamiltonian(t + h);
    const Dense k1 = lindblad_rhs(h0, jumps, rho, n);
    const Dense k2 = lindblad_rhs(hm, jumps, axpy(rho, k1, 0.5 * h), n);
    const Dense k3 = lindblad_rhs(hm, jumps, axpy(rho, k2, 0.5 * h), n);
    const Dense k4 = lindblad_rhs(h1, jumps, axpy(rho, k3, h), n);
    for (std::size_t i = 0; i < n * n; ++i) {
      rho[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    ++step;
    t = static_cast<double>(step) * h;
  }
  return out;
}

// Resonant-frame Rabi formula for a coupling Omega e^{i delta t}.
inline double detuned_rabi_pe(double t, double omega, double delta) {
  const double w2 = omega * omega + 0.25 * delta * delta;
  const double s = std::sin(std::sqrt(w2) * t);
  return omega * omega / w2 * s * s;
}

// Two-level excited population from the accumulated pulse area.
inline double pulse_area_pe(double t, double omega, double spacing, int pairs) {
  double area = omega * t;
  for (int n = 1; n <= pairs; ++n) area += 2.0 * omega * std::sin(n * spacing * t) / (n * spacing);
  const double s = std::sin(area);
  return s * s;
}

}  // namespace oracle
