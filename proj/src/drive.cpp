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

#include "polydrive/drive.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "polydrive/error.hpp"

namespace polydrive {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDirichletSingularity = 1e-8;

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw Error(ErrorCode::kInvalidArgument, "not an integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "rational with zero denominator");
  constexpr auto kMin = std::numeric_limits<std::int64_t>::min();
  if (num == kMin || den == kMin) {
    throw Error(ErrorCode::kInvalidArgument, "rational component out of range");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

double DriveParams::spacing() const noexcept {
  return 2.0 * std::sqrt(static_cast<double>(scale_root)) * omega / ratio.value();
}

void DriveParams::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw Error(ErrorCode::kInvalidArgument, "drive: omega must be positive and finite");
  }
  if (ratio.num() <= 0) throw Error(ErrorCode::kInvalidArgument, "drive: ratio must be positive");
  if (scale_root < 1) throw Error(ErrorCode::kInvalidArgument, "drive: M must be >= 1");
  if (pairs < 0) throw Error(ErrorCode::kInvalidArgument, "drive: N must be >= 0");
  if (!std::isfinite(detuning)) {
    throw Error(ErrorCode::kInvalidArgument, "drive: detuning must be finite");
  }
  const double d = spacing();
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw Error(ErrorCode::kInvalidArgument, "drive: derived spacing is not positive and finite");
  }
}

std::string RatioClass::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kConclusionI: os << "ConclusionI(j=" << j << ",k=" << k << ")"; break;
    case Kind::kConclusionII: os << "ConclusionII(j=" << j << ",k=" << k << ")"; break;
    case Kind::kGeneric: os << "Generic"; break;
  }
  return os.str();
}

double envelope(double t, const DriveParams& p) {
  const double delta = p.spacing();
  double sum = 1.0;
  for (int n = 1; n <= p.pairs; ++n) sum += 2.0 * std::cos(n * delta * t);
  return p.omega * sum;
}

double envelope_dirichlet(double t, const DriveParams& p) {
  const double x = p.spacing() * t;
  const double denom = std::sin(0.5 * x);
  if (std::abs(denom) <= kDirichletSingularity) {
    throw Error(ErrorCode::kNearSingular,
                "envelope_dirichlet: sin(Delta t / 2) vanishes; use envelope()");
  }
  return p.omega * std::sin((p.pairs + 0.5) * x) / denom;
}

double phase_integral(double t, const DriveParams& p) {
  const double delta = p.spacing();
  double sum = 0.0;
  for (int n = 1; n <= p.pairs; ++n) sum += std::sin(n * delta * t) / (n * delta);
  return p.omega * t + 2.0 * p.omega * sum;
}

std::int64_t branch_index(double delta_t_phase) {
  if (!(delta_t_phase >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "branch_index: phase must be non-negative");
  }
  return static_cast<std::int64_t>(std::floor(delta_t_phase / kTwoPi));
}

RatioClass classify(const Rational& ratio) {
  const std::int64_t p = ratio.num();
  const std::int64_t q = ratio.den();
  if (p <= 0 || p % 2 == 0 || q % 2 == 0) return {};
  const RatioClass::Kind kind =
      p % q == 0 ? RatioClass::Kind::kConclusionI : RatioClass::Kind::kConclusionII;
  return {kind, (p - 1) / 2, (q - 1) / 2};
}

std::vector<StabilizationWindow> stabilization_windows(std::int64_t k, int count) {
  if (k < 0 || count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "stabilization_windows: need k >= 0 and count >= 1");
  }
  std::vector<StabilizationWindow> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const std::int64_t kp = 2 * i + 1;
    const double start = static_cast<double>(2 * kp * k + kp - 1) * std::numbers::pi;
    out.push_back({start, start + kTwoPi});
  }
  return out;
}

}  // namespace polydrive
