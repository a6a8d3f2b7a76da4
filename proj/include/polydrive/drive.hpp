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

// The polychromatic drive: a central field plus N symmetric sideband pairs
// at +-n*Delta. Its envelope is A_N(t) = Omega * [1 + 2 sum_n cos(n Delta t)].
//
// The sideband spacing is never stored as a float. Callers give the exact
// rational r = 2 sqrt(M) Omega / Delta together with the integer M, so the
// number-theoretic classification below is done with integer arithmetic.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polydrive {

/// Exact positive-or-zero rational in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  /// Parses "p/q" or "p".
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
};

struct DriveParams {
  double omega = 1.0;         ///< central Rabi amplitude, sets the unit scale
  Rational ratio{1, 1};       ///< 2 sqrt(M) Omega / Delta, exact
  int scale_root = 1;         ///< M in the sqrt(M) factor
  int pairs = 0;              ///< N, number of symmetric sideband pairs
  double detuning = 0.0;      ///< delta, detuning of the central field

  /// Delta = 2 sqrt(M) Omega / r.
  double spacing() const noexcept;

  /// Throws kInvalidArgument when an invariant is violated.
  void validate() const;
};

/// Outcome of the odd-ratio test on r = (2j+1)/(2k+1).
struct RatioClass {
  enum class Kind {
    kConclusionI,   ///< (2k+1) divides (2j+1): unity population at all times
    kConclusionII,  ///< coprime odd pair: unity inside periodic windows
    kGeneric,       ///< even numerator or denominator
  };
  Kind kind = Kind::kGeneric;
  std::int64_t j = 0;
  std::int64_t k = 0;

  std::string str() const;
  friend bool operator==(const RatioClass&, const RatioClass&) = default;
};

/// Half-open interval [start, end) in Delta*t phase (radians).
struct StabilizationWindow {
  double start = 0.0;
  double end = 0.0;
  bool contains(double phase) const noexcept { return phase >= start && phase < end; }
};

/// Omega [1 + 2 sum_{n=1}^N cos(n Delta t)]. Smooth everywhere.
double envelope(double t, const DriveParams& p);

/// Omega sin((N + 1/2) Delta t) / sin(Delta t / 2). Test oracle only; throws
/// kNearSingular when |sin(Delta t / 2)| <= 1e-8.
double envelope_dirichlet(double t, const DriveParams& p);

/// Closed-form running integral of the envelope from 0 to t:
/// Omega t + 2 Omega sum_{n=1}^N sin(n Delta t) / (n Delta).
double phase_integral(double t, const DriveParams& p);

/// Logarithm branch for the N -> infinity limit: floor(Delta t / 2 pi).
std::int64_t branch_index(double delta_t_phase);

RatioClass classify(const Rational& ratio);
inline RatioClass classify(const DriveParams& p) { return classify(p.ratio); }

/// Windows for k' = 1, 3, 5, ... (count entries).
std::vector<StabilizationWindow> stabilization_windows(std::int64_t k, int count);

}  // namespace polydrive
