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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "polydrive/error.hpp"
#include "polydrive/scenarios.hpp"

namespace polydrive {
namespace {

IntegratorConfig fast() {
  IntegratorConfig cfg;
  cfg.rel_tol = 1e-8;
  cfg.abs_tol = 1e-10;
  return cfg;
}

TEST(Builtin, IdsAreUniqueAndComplete) {
  const auto ids = builtin_ids();
  const std::vector<std::string> want = {"fig1a", "fig1b", "fig1c", "fig1d", "fig1e",
                                         "fig2a", "fig2b", "fig2c", "fig2d", "fig3a",
                                         "fig3b", "fig3c", "fig3d", "feasibility"};
  EXPECT_EQ(ids, want);
  for (const auto& id : ids) {
    const Scenario s = builtin(id);
    EXPECT_EQ(s.id, id);
    EXPECT_NO_THROW(s.validate()) << id;
  }
}

TEST(Builtin, UnknownIdListsValidIds) {
  try {
    builtin("fig9z");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownScenario);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("fig1a"), std::string::npos);
    EXPECT_NE(msg.find("feasibility"), std::string::npos);
  }
}

TEST(Builtin, Fig2aParameters) {
  const Scenario s = builtin("fig2a");
  EXPECT_EQ(s.model, ModelKind::kRydberg);
  EXPECT_EQ(s.atoms, 2);
  ASSERT_EQ(s.curves.size(), 1u);
  EXPECT_EQ(s.curves[0].drive.pairs, 10);
  EXPECT_DOUBLE_EQ(s.interaction, 400.0);
  EXPECT_NEAR(s.curves[0].drive.spacing(), 2.0 * std::sqrt(2.0), 1e-15);
  EXPECT_EQ(s.observables, std::vector<std::string>{"T"});
  EXPECT_TRUE(s.analytic);
}

TEST(Builtin, FeasibilityParameters) {
  const Scenario s = builtin("feasibility");
  const double two_pi = 2.0 * std::numbers::pi;
  const DriveParams& d = s.curves.at(0).drive;
  EXPECT_DOUBLE_EQ(d.omega, two_pi);
  EXPECT_DOUBLE_EQ(s.gamma, two_pi * 0.001);
  EXPECT_NEAR(d.spacing(), 2.0 * std::sqrt(2.0) * d.omega, 1e-12);
  EXPECT_DOUBLE_EQ(s.interaction, 400.0 * d.omega);
  EXPECT_EQ(d.pairs, 4);
  EXPECT_GE(s.grid.stop, 140.0);
  EXPECT_EQ(s.unit, TimeUnit::kMicroseconds);
}

TEST(Builtin, Fig1aHasBothSpacingsAndBaseline) {
  const Scenario s = builtin("fig1a");
  ASSERT_EQ(s.curves.size(), 2u);
  EXPECT_EQ(s.curves[0].drive.pairs, 2);
  EXPECT_DOUBLE_EQ(s.curves[0].drive.spacing(), 2.0);
  EXPECT_DOUBLE_EQ(s.curves[1].drive.spacing(), 2.0 / 3.0);
  EXPECT_TRUE(s.baseline);
  EXPECT_DOUBLE_EQ(s.curves[0].drive.detuning, 0.0);
}

TEST(Builtin, AssumptionsAreFlagged) {
  for (const char* id : {"fig1c", "fig3a", "fig3c", "fig3d", "feasibility"}) {
    EXPECT_FALSE(builtin(id).assumptions.empty()) << id;
  }
  const Scenario c = builtin("fig3c");
  EXPECT_DOUBLE_EQ(c.gamma, 0.1);
}

TEST(Run, Fig1aColumnsShareOneGrid) {
  const RunResult r = run(builtin("fig1a"), fast());
  EXPECT_EQ(r.time_label, "Ωt");
  std::vector<std::string> names;
  for (const Column& c : r.columns) {
    names.push_back(c.name);
    EXPECT_EQ(c.values.size(), r.times.size());
  }
  const std::vector<std::string> want = {"pop_e_numeric_Delta2", "pop_e_analytic_Delta2",
                                         "pop_e_numeric_Delta2over3",
                                         "pop_e_analytic_Delta2over3", "pop_e_baseline"};
  EXPECT_EQ(names, want);
  // Single field baseline: sin^2(Omega t).
  const auto& base = r.column("pop_e_baseline").values;
  for (std::size_t i = 0; i < r.times.size(); i += 50) {
    EXPECT_NEAR(base[i], std::pow(std::sin(r.times[i]), 2), 1e-6);
  }
  EXPECT_THROW(r.column("nope"), Error);
}

TEST(Run, Fig1aReachesFirstPlateau) {
  const RunResult r = run(builtin("fig1a"), {});
  const auto& pe = r.column("pop_e_numeric_Delta2").values;
  // First window for Delta = 2: Omega t in [0, pi); the plateau interior
  // is [pi / 4, 3 pi / 4].
  double low = 1.0;
  for (std::size_t i = 0; i < r.times.size(); ++i) {
    const double t = r.times[i];
    if (t >= std::numbers::pi / 4 && t <= 3 * std::numbers::pi / 4) low = std::min(low, pe[i]);
  }
  EXPECT_GE(*std::max_element(pe.begin(), pe.begin() + 400), 0.999);
  EXPECT_GE(low, 0.9);
}

TEST(Run, MetadataDescribesRun) {
  const RunResult r = run(builtin("fig3c"), fast());
  auto has = [&](const std::string& key) {
    return std::any_of(r.metadata.begin(), r.metadata.end(),
                       [&](const auto& kv) { return kv.first == key; });
  };
  for (const char* key : {"scenario", "model", "gamma", "curve", "baseline", "rel_tol",
                          "assumption", "diagnostics_main", "diagnostics_baseline"}) {
    EXPECT_TRUE(has(key)) << key;
  }
  EXPECT_EQ(r.diagnostics.size(), 2u);
  EXPECT_TRUE(r.diagnostics[0].mixed);
}

TEST(Run, CustomSingleFieldIsSinSquared) {
  const Scenario s = scenario_from_json(
      R"({"model": "two-level", "omega": 1.0, "ratio_p": 1, "ratio_q": 1, "M": 1, "N": 0,
          "delta_over_omega": 0, "gamma_over_omega": 0, "U_over_omega": 400,
          "t_start": 0, "t_stop": 10, "samples": 1001, "observables": ["e"]})");
  EXPECT_EQ(s.id, "custom");
  const RunResult r = run(s, {});
  const auto& pe = r.column("pop_e_numeric").values;
  for (std::size_t i = 0; i < pe.size(); ++i) {
    EXPECT_NEAR(pe[i], std::pow(std::sin(r.times[i]), 2), 1e-7);
  }
}

TEST(Run, OmegaScalesDisplayTime) {
  // With Omega = 2 the Omega t axis is unchanged.
  Scenario s = scenario_from_json(R"({"omega": 2.0, "N": 0, "t_stop": 6, "samples": 301})");
  const RunResult r = run(s, {});
  const auto& pe = r.column("pop_e_numeric").values;
  for (std::size_t i = 0; i < pe.size(); ++i) {
    EXPECT_NEAR(pe[i], std::pow(std::sin(r.times[i]), 2), 1e-7);
  }
}

TEST(Run, IntegrationFailureIsAnnotatedWithCurve) {
  Scenario s = builtin("fig2a");
  s.interaction = 1e18;
  try {
    run(s, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(is_integration_failure(e.code()));
    EXPECT_NE(std::string(e.what()).find("curve 'main'"), std::string::npos) << e.what();
  }
}

TEST(Config, RejectsUnknownAndMalformedFields) {
  EXPECT_THROW(scenario_from_json(R"({"omgea": 1})"), Error);
  EXPECT_THROW(scenario_from_json(R"({"N": "ten"})"), Error);
  EXPECT_THROW(scenario_from_json("[1, 2]"), Error);
  EXPECT_THROW(scenario_from_json("{"), Error);
  EXPECT_THROW(scenario_from_json(R"({"ratio_q": 0})"), Error);
  EXPECT_THROW(scenario_from_json(R"({"t_start": 5, "t_stop": 1})"), Error);
  EXPECT_THROW(scenario_from_json(R"({"samples": 1})"), Error);
  EXPECT_THROW(scenario_from_json(R"({"model": "qutrit"})"), Error);
}

TEST(Config, RydbergDefaults) {
  const Scenario s = scenario_from_json(
      R"({"model": "rydberg", "M": 3, "N": 10, "U_over_omega": 200, "t_stop": 2, "samples": 201})");
  EXPECT_EQ(s.atoms, 3);
  EXPECT_EQ(s.observables, std::vector<std::string>{"W"});
  EXPECT_DOUBLE_EQ(s.interaction, 200.0);
  const RunResult r = run(s, fast());
  EXPECT_NO_THROW(r.column("pop_W_analytic"));
}

TEST(Scan, LargerNIsMoreRobustAgainstDetuning) {
  ScanSpec spec;
  spec.base = builtin("fig1d");
  spec.axis = "N";
  spec.values = {2, 10};
  spec.reduction = Reduction::kMax;
  const auto rows = scan(spec, fast());
  ASSERT_EQ(rows.size(), 2u);
  ASSERT_TRUE(rows[0].ok && rows[1].ok);
  EXPECT_LT(rows[0].metric, rows[1].metric);
}

TEST(Scan, ZeroGammaMatchesSchrodinger) {
  ScanSpec spec;
  spec.base = builtin("fig1e");
  spec.axis = "gamma";
  spec.values = {0.0};
  spec.reduction = Reduction::kFinal;
  const auto rows = scan(spec, {});
  ASSERT_TRUE(rows.at(0).ok) << rows[0].error;
  Scenario pure = builtin("fig1e");
  pure.gamma = 0.0;
  const RunResult r = run(pure, {});
  EXPECT_NEAR(rows[0].metric, r.column("pop_e_numeric_Delta2").values.back(), 1e-8);
}

TEST(Scan, FailuresAreReportedPerValue) {
  ScanSpec spec;
  spec.base = builtin("fig1c");
  spec.axis = "N";
  spec.values = {2, -1, 1.5, 3};
  spec.reduction = Reduction::kPlateauMean;
  const auto rows = scan(spec, fast());
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_TRUE(rows[0].ok);
  EXPECT_FALSE(rows[1].ok);
  EXPECT_FALSE(rows[1].error.empty());
  EXPECT_FALSE(rows[2].ok);
  EXPECT_TRUE(rows[3].ok);
}

TEST(Scan, SpecValidation) {
  ScanSpec spec;
  spec.base = builtin("fig1a");
  spec.axis = "N";
  EXPECT_THROW(spec.validate(), Error);  // no values
  spec.values = {1};
  spec.axis = "Omega";
  EXPECT_THROW(spec.validate(), Error);
  EXPECT_EQ(parse_reduction("plateau_mean"), Reduction::kPlateauMean);
  EXPECT_THROW(parse_reduction("median"), Error);
}

TEST(Scan, InteractionAxisShrinksBlockadeError) {
  ScanSpec spec;
  spec.base = builtin("fig2a");
  spec.base.grid = {0.0, 3.0, 301};
  spec.axis = "U";
  spec.values = {50, 400};
  spec.reduction = Reduction::kMaxDeviation;
  const auto rows = scan(spec, fast());
  ASSERT_TRUE(rows[0].ok && rows[1].ok);
  EXPECT_GT(rows[0].metric, rows[1].metric);
}

TEST(Plateau, InteriorIsCentralHalf) {
  const double two_pi = 2.0 * std::numbers::pi;
  EXPECT_FALSE(in_plateau_interior(0.1));
  EXPECT_TRUE(in_plateau_interior(0.25 * two_pi));
  EXPECT_TRUE(in_plateau_interior(0.5 * two_pi));
  EXPECT_FALSE(in_plateau_interior(0.8 * two_pi));
  EXPECT_TRUE(in_plateau_interior(3.5 * two_pi));
  const std::vector<double> t = {0.5, 1.0, 1.5, 4.0};
  const std::vector<double> v = {10.0, 1.0, 3.0, 7.0};
  // spacing 2 pi / 2: phases 0.25, 0.5, 0.75, 2.0 turns.
  EXPECT_DOUBLE_EQ(plateau_mean(t, v, std::numbers::pi, 0), (10.0 + 1.0 + 3.0) / 3.0);
  EXPECT_THROW(plateau_mean(t, v, std::numbers::pi, 5), Error);
}

}  // namespace
}  // namespace polydrive
