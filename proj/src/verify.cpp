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

#include "polydrive/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>

#include "polydrive/error.hpp"
#include "polydrive/scenarios.hpp"

namespace polydrive {
namespace {

constexpr double kClosedFormTol = 1e-6;
constexpr double kPlateauLevel = 0.99;
constexpr double kIdentityTol = 1e-12;
constexpr double kNumericSumTol = 1e-8;

CheckResult evaluate(std::string name, double threshold, bool at_least,
                     const std::function<double()>& measure) {
  CheckResult c;
  c.name = std::move(name);
  c.threshold = threshold;
  c.at_least = at_least;
  try {
    c.value = measure();
    c.passed = at_least ? c.value >= threshold : c.value <= threshold;
  } catch (const std::exception& e) {
    c.value = std::numeric_limits<double>::quiet_NaN();
    c.error = e.what();
  }
  return c;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

std::string shortest(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

IntegratorConfig config(const VerifyOverrides& o) {
  IntegratorConfig cfg;
  if (o.rel_tol) cfg.rel_tol = *o.rel_tol;
  return cfg;
}

DriveParams drive(int pairs, Rational ratio, int root) {
  DriveParams p;
  p.pairs = pairs;
  p.ratio = ratio;
  p.scale_root = root;
  return p;
}

void two_level_suite(const VerifyOverrides& o, std::vector<CheckResult>& out) {
  const IntegratorConfig cfg = config(o);
  for (int n : {1, 2, 10}) {
    for (const Rational& r : {Rational(1, 1), Rational(3, 1), Rational(1, 3)}) {
      Scenario s;
      s.id = "verify-two-level";
      s.curves = {{"", drive(n, r, 1)}};
      s.grid = {0.0, 30.0, 3001};
      s.observables = {"e"};
      s.analytic = true;
      const std::string name = "two-level N=" + std::to_string(n) +
                               " Delta=" + Rational(2 * r.den(), r.num()).str() + " max|dev|";
      out.push_back(evaluate(name, kClosedFormTol, false, [&] {
        const RunResult res = run(s, cfg);
        return max_abs_diff(res.column("pop_e_numeric").values, res.column("pop_e_analytic").values);
      }));
    }
  }
}

void blockade_suite(const std::string& prefix, std::vector<int> atom_counts,
                    const VerifyOverrides& o, std::vector<CheckResult>& out) {
  const IntegratorConfig cfg = config(o);
  const double u = o.interaction.value_or(400.0);
  for (int m : atom_counts) {
    const std::string obs = m == 2 ? "T" : "W";
    const std::string tag = prefix + " M=" + std::to_string(m);

    Scenario eff;
    eff.id = "verify-" + prefix;
    eff.model = ModelKind::kEffectiveW;
    eff.atoms = m;
    eff.curves = {{"", drive(10, Rational(1, 1), m)}};
    eff.grid = {0.0, 15.0, 1501};
    eff.observables = {obs};
    eff.analytic = true;
    out.push_back(evaluate(tag + " effective model max|dev|", kClosedFormTol, false, [&] {
      const RunResult res = run(eff, cfg);
      return max_abs_diff(res.column("pop_" + obs + "_numeric").values,
                          res.column("pop_" + obs + "_analytic").values);
    }));

    Scenario full = eff;
    full.model = ModelKind::kRydberg;
    full.interaction = u;
    full.analytic = false;
    out.push_back(evaluate(tag + " U=" + shortest(u) + " first plateau mean", kPlateauLevel,
                           true, [&] {
                             const RunResult res = run(full, cfg);
                             const double spacing = full.curves.front().drive.spacing();
                             return plateau_mean(res.times, res.column("pop_" + obs + "_numeric").values,
                                                 spacing, 0);
                           }));
  }
}

void lambda_suite(const VerifyOverrides& o, std::vector<CheckResult>& out) {
  const IntegratorConfig cfg = config(o);
  for (const Rational& r : {Rational(2, 1), Rational(6, 1), Rational(2, 3)}) {
    Scenario s;
    s.id = "verify-lambda";
    s.model = ModelKind::kLambda;
    s.curves = {{"", drive(10, r, 2)}};
    s.grid = {0.0, 30.0, 3001};
    s.observables = {"g", "e", "r"};
    s.analytic = true;
    const std::string tag = "lambda sqrt2*Omega/Delta=" + Rational(r.num(), 2 * r.den()).str();

    RunResult res;
    std::string failure;
    try {
      res = run(s, cfg);
    } catch (const std::exception& e) {
      failure = e.what();
    }
    auto guarded = [&](const std::function<double()>& f) {
      return [&, f] {
        if (!failure.empty()) throw Error(ErrorCode::kInvalidArgument, failure);
        return f();
      };
    };
    for (const std::string level : {"g", "e", "r"}) {
      out.push_back(evaluate(tag + " p" + level + " max|dev|", kClosedFormTol, false, guarded([&, level] {
                               return max_abs_diff(res.column("pop_" + level + "_numeric").values,
                                                   res.column("pop_" + level + "_analytic").values);
                             })));
    }
    auto sum_dev = [&](const std::string& kind) {
      const auto& g = res.column("pop_g_" + kind).values;
      const auto& e = res.column("pop_e_" + kind).values;
      const auto& rr = res.column("pop_r_" + kind).values;
      double worst = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i) worst = std::max(worst, std::abs(g[i] + e[i] + rr[i] - 1.0));
      return worst;
    };
    out.push_back(evaluate(tag + " closed-form population sum", kIdentityTol, false,
                           guarded([&] { return sum_dev("analytic"); })));
    out.push_back(evaluate(tag + " numeric population sum", kNumericSumTol, false,
                           guarded([&] { return sum_dev("numeric"); })));
  }
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> verify_suites() { return {"two-level", "bell", "w", "lambda", "all"}; }

VerifyReport run_verify(std::string_view suite, const VerifyOverrides& overrides) {
  if (overrides.interaction && !(*overrides.interaction > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "verify: U override must be positive");
  }
  config(overrides).validate();
  VerifyReport report;
  report.suite = std::string(suite);
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "two-level") {
    two_level_suite(overrides, report.checks);
    known = true;
  }
  if (all || suite == "bell") {
    blockade_suite("bell", {2}, overrides, report.checks);
    known = true;
  }
  if (all || suite == "w") {
    blockade_suite("w", {3, 5}, overrides, report.checks);
    known = true;
  }
  if (all || suite == "lambda") {
    lambda_suite(overrides, report.checks);
    known = true;
  }
  if (!known) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown suite '" + std::string(suite) + "' (two-level, bell, w, lambda, all)");
  }
  return report;
}

}  // namespace polydrive
