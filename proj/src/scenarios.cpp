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

#include "polydrive/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <functional>
#include <future>
#include <numbers>
#include <optional>
#include <set>

#include <json.hpp>

#include "polydrive/analytic.hpp"
#include "polydrive/error.hpp"
#include "polydrive/models.hpp"

namespace polydrive {
namespace {

using Json = nlohmann::json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Shortest decimal that reads back to the same double.
std::string num(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

DriveParams drive(int pairs, Rational ratio, int scale_root = 1, double omega = 1.0,
                  double detuning = 0.0) {
  DriveParams p;
  p.omega = omega;
  p.ratio = ratio;
  p.scale_root = scale_root;
  p.pairs = pairs;
  p.detuning = detuning;
  return p;
}

Scenario two_level_preset(std::string id, std::vector<CurveSpec> curves, double gamma,
                          bool analytic) {
  Scenario s;
  s.id = std::move(id);
  s.model = ModelKind::kTwoLevel;
  s.curves = std::move(curves);
  s.gamma = gamma;
  s.grid = {0.0, 30.0, 3001};
  s.observables = {"e"};
  s.analytic = analytic;
  s.baseline = true;
  s.assumptions = {"time range Omega t in [0, 30] chosen to cover several plateau windows"};
  return s;
}

Scenario rydberg_preset(std::string id, int atoms, Rational ratio) {
  Scenario s;
  s.id = std::move(id);
  s.model = ModelKind::kRydberg;
  s.curves = {{"", drive(10, ratio, atoms)}};
  s.interaction = 400.0;
  s.atoms = atoms;
  s.grid = {0.0, 15.0, 1501};
  s.observables = {atoms == 2 ? "T" : "W"};
  s.analytic = true;
  s.assumptions = {"time range Omega t in [0, 15] chosen to cover several plateau windows"};
  return s;
}

// sqrt(2) Omega / Delta = p / q is stored as M = 2 with ratio 2p / q.
Scenario lambda_preset(std::string id, std::vector<CurveSpec> curves, double gamma) {
  Scenario s;
  s.id = std::move(id);
  s.model = ModelKind::kLambda;
  s.curves = std::move(curves);
  s.gamma = gamma;
  s.grid = {0.0, 30.0, 3001};
  s.observables = {"e"};
  s.analytic = gamma == 0.0;
  s.baseline = true;
  s.assumptions = {"time range Omega t in [0, 30] chosen to cover several plateau windows"};
  return s;
}

Scenario feasibility_preset() {
  const double omega = kTwoPi;  // rad/us for a 1 MHz Rabi frequency
  Scenario s;
  s.id = "feasibility";
  s.model = ModelKind::kRydberg;
  s.curves = {{"", drive(4, Rational(1, 1), 2, omega)}};
  s.gamma = kTwoPi * 0.001;
  s.interaction = 400.0 * omega;
  s.atoms = 2;
  s.grid = {0.0, 150.0, 15001};
  s.unit = TimeUnit::kMicroseconds;
  s.observables = {"T"};
  s.assumptions = {"time range t in [0, 150] us chosen to extend past 138 us",
                   "decay acts independently on each atom at rate gamma"};
  return s;
}

using Factory = std::function<Scenario()>;

const std::vector<std::pair<std::string, Factory>>& registry() {
  static const std::vector<std::pair<std::string, Factory>> table = {
      {"fig1a",
       [] {
         return two_level_preset("fig1a",
                                 {{"Delta2", drive(2, Rational(1, 1))},
                                  {"Delta2over3", drive(2, Rational(3, 1))}},
                                 0.0, true);
       }},
      {"fig1b",
       [] {
         return two_level_preset("fig1b",
                                 {{"Delta2", drive(10, Rational(1, 1))},
                                  {"Delta2over3", drive(10, Rational(3, 1))}},
                                 0.0, true);
       }},
      {"fig1c",
       [] {
         Scenario s = two_level_preset("fig1c", {{"", drive(2, Rational(1, 3))}}, 0.0, true);
         s.assumptions.push_back("Delta = 6 Omega chosen as the conclusion (ii) example, k = 1");
         return s;
       }},
      {"fig1d",
       [] {
         return two_level_preset("fig1d",
                                 {{"N2", drive(2, Rational(1, 1), 1, 1.0, 10.0)},
                                  {"N10", drive(10, Rational(1, 1), 1, 1.0, 10.0)}},
                                 0.0, false);
       }},
      {"fig1e",
       [] {
         return two_level_preset("fig1e",
                                 {{"Delta2", drive(2, Rational(1, 1))},
                                  {"Delta6", drive(2, Rational(1, 3))}},
                                 0.1, false);
       }},
      {"fig2a", [] { return rydberg_preset("fig2a", 2, Rational(1, 1)); }},
      {"fig2b", [] { return rydberg_preset("fig2b", 2, Rational(1, 3)); }},
      {"fig2c", [] { return rydberg_preset("fig2c", 3, Rational(1, 1)); }},
      {"fig2d", [] { return rydberg_preset("fig2d", 5, Rational(1, 1)); }},
      {"fig3a",
       [] {
         Scenario s = lambda_preset("fig3a",
                                    {{"Delta_sqrt2", drive(10, Rational(2, 1), 2)},
                                     {"Delta_sqrt2over3", drive(10, Rational(6, 1), 2)}},
                                    0.0);
         s.assumptions.push_back("Delta values sqrt(2) Omega and sqrt(2) Omega / 3");
         return s;
       }},
      {"fig3b",
       [] {
         Scenario s = lambda_preset("fig3b", {{"", drive(10, Rational(2, 3), 2)}}, 0.0);
         s.assumptions.push_back("Delta = 3 sqrt(2) Omega as the conclusion (ii) example");
         return s;
       }},
      {"fig3c",
       [] {
         Scenario s = lambda_preset("fig3c", {{"", drive(10, Rational(2, 1), 2)}}, 0.1);
         s.assumptions.push_back("gamma = 0.1 Omega mirrors the two-level dissipative panel");
         return s;
       }},
      {"fig3d",
       [] {
         Scenario s = lambda_preset("fig3d", {{"", drive(10, Rational(2, 3), 2)}}, 0.1);
         s.assumptions.push_back("gamma = 0.1 Omega mirrors the two-level dissipative panel");
         s.assumptions.push_back("Delta = 3 sqrt(2) Omega as the conclusion (ii) example");
         return s;
       }},
      {"feasibility", feasibility_preset},
  };
  return table;
}

std::string suffix(const std::string& tag) { return tag.empty() ? "" : "_" + tag; }

struct Built {
  TimeDependentModel model;
  std::size_t initial_index = 0;
};

Built build_model(const Scenario& s, const DriveParams& p) {
  switch (s.model) {
    case ModelKind::kTwoLevel: return {two_level_model(p, s.gamma), 0};
    case ModelKind::kRydberg:
      return {rydberg_model(RydbergParams{p, s.atoms, s.interaction}, s.gamma), 0};
    case ModelKind::kEffectiveW:
      if (s.gamma != 0.0) {
        throw Error(ErrorCode::kInvalidArgument, "effective-w model has no decay channels");
      }
      return {effective_w_model(p, s.atoms), 0};
    case ModelKind::kLambda: return {lambda_model(p, s.gamma), 0};
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown model kind");
}

// Closed-form population for one observable, or nullopt when none applies.
std::optional<std::function<double(double)>> analytic_for(const Scenario& s,
                                                         const DriveParams& p,
                                                         const std::string& obs) {
  if (s.gamma != 0.0 || p.detuning != 0.0) return std::nullopt;
  switch (s.model) {
    case ModelKind::kTwoLevel:
      if (obs == "e") return [p](double t) { return analytic::two_level(t, p).pe; };
      if (obs == "g") return [p](double t) { return analytic::two_level(t, p).pg; };
      return std::nullopt;
    case ModelKind::kRydberg:
    case ModelKind::kEffectiveW: {
      const int m = s.atoms;
      const bool excited = obs == "W" || (obs == "T" && m == 2);
      const bool ground = obs == "G" || obs == std::string(static_cast<std::size_t>(m), 'g');
      if (excited) return [p, m](double t) { return analytic::w_population(t, p, m); };
      if (ground) return [p, m](double t) { return 1.0 - analytic::w_population(t, p, m); };
      return std::nullopt;
    }
    case ModelKind::kLambda:
      if (obs == "g") return [p](double t) { return analytic::lambda_populations(t, p).pg; };
      if (obs == "e") return [p](double t) { return analytic::lambda_populations(t, p).pe; };
      if (obs == "r") return [p](double t) { return analytic::lambda_populations(t, p).pr; };
      return std::nullopt;
  }
  return std::nullopt;
}

struct Job {
  std::string name;  // column suffix without the leading underscore
  DriveParams drive;
  bool baseline = false;
};

struct JobOutput {
  std::vector<Column> columns;
  CurveDiagnostics diagnostics;
};

JobOutput run_job(const Scenario& s, const Job& job, const IntegratorConfig& cfg,
                  const std::vector<double>& display) {
  const std::string label = job.baseline ? "baseline" : job.name.empty() ? "main" : job.name;
  try {
    const Built built = build_model(s, job.drive);
    std::vector<double> grid(display.size());
    for (std::size_t i = 0; i < display.size(); ++i) {
      grid[i] = s.model_time(display[i], job.drive.omega);
    }
    const StateVector psi0 = StateVector::basis(built.model.basis_labels, built.initial_index);
    const Trajectory traj =
        built.model.channels.empty()
            ? integrate_schrodinger(built.model, psi0, grid, cfg)
            : integrate_lindblad(built.model, DensityMatrix::pure(psi0), grid, cfg);

    JobOutput out;
    out.diagnostics = {label, traj.kind == Trajectory::Kind::kMixed, traj.diagnostics};
    for (const std::string& obs : s.observables) {
      const std::string kind = job.baseline ? "baseline" : "numeric";
      out.columns.push_back(
          {"pop_" + obs + "_" + kind + suffix(job.name), population_series(traj, obs)});
      if (job.baseline || !s.analytic) continue;
      const auto closed = analytic_for(s, job.drive, obs);
      if (!closed) continue;
      std::vector<double> values(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i) values[i] = (*closed)(grid[i]);
      out.columns.push_back({"pop_" + obs + "_analytic" + suffix(job.name), std::move(values)});
    }
    return out;
  } catch (const Error& e) {
    throw Error(e.code(), "curve '" + label + "': " + e.what());
  }
}

std::string describe(const DriveParams& p) {
  return "omega=" + num(p.omega) + " ratio=" + p.ratio.str() +
         " M=" + std::to_string(p.scale_root) + " N=" + std::to_string(p.pairs) +
         " delta=" + num(p.detuning) + " Delta=" + num(p.spacing()) +
         " class=" + classify(p).str();
}

std::string describe(const IntegratorDiagnostics& d) {
  return "max_norm_drift=" + num(d.max_norm_drift) + " min_eigenvalue=" + num(d.min_eigenvalue) +
         " steps=" + std::to_string(d.steps) + " rejected=" + std::to_string(d.rejected_steps) +
         " renormalizations=" + std::to_string(d.renormalizations);
}

double reduce(const ScanSpec& spec, const Scenario& s, const RunResult& r) {
  const CurveSpec& curve = s.curves.front();
  const std::string& obs = s.observables.front();
  const Column& numeric = r.column("pop_" + obs + "_numeric" + suffix(curve.tag));
  const std::vector<double>& v = numeric.values;
  switch (spec.reduction) {
    case Reduction::kMax: return *std::max_element(v.begin(), v.end());
    case Reduction::kFinal: return v.back();
    case Reduction::kPlateauMean: {
      std::vector<double> t(r.times.size());
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = s.model_time(r.times[i], curve.drive.omega);
      return plateau_mean(t, v, curve.drive.spacing());
    }
    case Reduction::kMaxDeviation: {
      const Column& closed = r.column("pop_" + obs + "_analytic" + suffix(curve.tag));
      double worst = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        worst = std::max(worst, std::abs(v[i] - closed.values[i]));
      }
      return worst;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown reduction");
}

template <typename T>
T field(const Json& j, const char* key, T fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("config field '") + key + "': " + e.what());
  }
}

}  // namespace

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::kTwoLevel: return "two-level";
    case ModelKind::kRydberg: return "rydberg";
    case ModelKind::kEffectiveW: return "effective-w";
    case ModelKind::kLambda: return "lambda";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
  for (ModelKind k : {ModelKind::kTwoLevel, ModelKind::kRydberg, ModelKind::kEffectiveW,
                      ModelKind::kLambda}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown model '" + std::string(name) +
                  "' (expected two-level, rydberg, effective-w or lambda)");
}

void Scenario::validate() const {
  if (id.empty()) throw Error(ErrorCode::kInvalidArgument, "scenario: empty id");
  if (curves.empty()) throw Error(ErrorCode::kInvalidArgument, "scenario: no curves");
  if (observables.empty()) throw Error(ErrorCode::kInvalidArgument, "scenario: no observables");
  if (grid.samples < 2) throw Error(ErrorCode::kInvalidArgument, "scenario: need >= 2 samples");
  if (!std::isfinite(grid.start) || !std::isfinite(grid.stop) || !(grid.stop > grid.start)) {
    throw Error(ErrorCode::kInvalidArgument, "scenario: need finite start < stop");
  }
  if (grid.start < 0.0) throw Error(ErrorCode::kInvalidArgument, "scenario: start must be >= 0");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw Error(ErrorCode::kInvalidArgument, "scenario: gamma must be finite and >= 0");
  }
  std::set<std::string> tags;
  for (const CurveSpec& c : curves) {
    c.drive.validate();
    if (!tags.insert(c.tag).second) {
      throw Error(ErrorCode::kInvalidArgument, "scenario: duplicate curve tag '" + c.tag + "'");
    }
  }
  if (std::set<std::string>(observables.begin(), observables.end()).size() != observables.size()) {
    throw Error(ErrorCode::kInvalidArgument, "scenario: duplicate observable");
  }
  if (model == ModelKind::kRydberg) {
    RydbergParams{curves.front().drive, atoms, interaction}.validate();
  }
  if (model == ModelKind::kEffectiveW && atoms < 2) {
    throw Error(ErrorCode::kInvalidArgument, "scenario: effective-w needs M >= 2");
  }
}

std::vector<double> Scenario::display_times() const {
  return uniform_grid(grid.start, grid.stop, grid.samples);
}

double Scenario::model_time(double display_time, double omega) const {
  return unit == TimeUnit::kOmegaT ? display_time / omega : display_time;
}

const Column& RunResult::column(std::string_view name) const {
  for (const Column& c : columns) {
    if (c.name == name) return c;
  }
  throw Error(ErrorCode::kUnknownLabel, "no column '" + std::string(name) + "'");
}

std::vector<std::string> builtin_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, _] : registry()) ids.push_back(id);
  return ids;
}

Scenario builtin(std::string_view id) {
  for (const auto& [name, make] : registry()) {
    if (name == id) return make();
  }
  std::string valid;
  for (const std::string& n : builtin_ids()) valid += (valid.empty() ? "" : ", ") + n;
  throw Error(ErrorCode::kUnknownScenario,
              "unknown scenario '" + std::string(id) + "'; valid ids: " + valid);
}

Scenario scenario_from_json(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kInvalidArgument, "config: expected a JSON object");

  static const std::set<std::string> known = {
      "id",      "model",  "omega",      "ratio_p",  "ratio_q",          "M",
      "N",       "atoms",  "delta_over_omega",       "gamma_over_omega", "U_over_omega",
      "t_start", "t_stop", "samples",    "observables", "analytic",      "baseline",
      "time_unit"};
  for (const auto& [key, _] : j.items()) {
    if (!known.contains(key)) {
      throw Error(ErrorCode::kInvalidArgument, "config: unknown field '" + key + "'");
    }
  }

  Scenario s;
  s.id = field<std::string>(j, "id", "custom");
  s.model = parse_model_kind(field<std::string>(j, "model", "two-level"));
  const double omega = field<double>(j, "omega", 1.0);
  const auto p = field<std::int64_t>(j, "ratio_p", 1);
  const auto q = field<std::int64_t>(j, "ratio_q", 1);
  const int m = field<int>(j, "M", 1);
  const int pairs = field<int>(j, "N", 0);
  DriveParams d = drive(pairs, Rational(p, q), m, omega,
                        field<double>(j, "delta_over_omega", 0.0) * omega);
  s.curves = {{"", d}};
  s.gamma = field<double>(j, "gamma_over_omega", 0.0) * omega;
  s.interaction = field<double>(j, "U_over_omega", 400.0) * omega;
  const bool multi_atom = s.model == ModelKind::kRydberg || s.model == ModelKind::kEffectiveW;
  s.atoms = field<int>(j, "atoms", multi_atom ? m : 1);
  s.grid = {field<double>(j, "t_start", 0.0), field<double>(j, "t_stop", 30.0),
            field<std::size_t>(j, "samples", 3001)};
  const std::string unit = field<std::string>(j, "time_unit", "omega_t");
  if (unit == "us") {
    s.unit = TimeUnit::kMicroseconds;
  } else if (unit != "omega_t") {
    throw Error(ErrorCode::kInvalidArgument, "config: time_unit must be omega_t or us");
  }
  std::string fallback = "e";
  if (multi_atom) fallback = s.atoms == 2 ? "T" : "W";
  s.observables = field<std::vector<std::string>>(j, "observables", {fallback});
  s.analytic = field<bool>(j, "analytic", true);
  s.baseline = field<bool>(j, "baseline", false);
  s.validate();
  return s;
}

RunResult run(const Scenario& s, const IntegratorConfig& cfg) {
  s.validate();
  cfg.validate();
  const std::vector<double> display = s.display_times();

  std::vector<Job> jobs;
  for (const CurveSpec& c : s.curves) jobs.push_back({c.tag, c.drive, false});
  if (s.baseline) {
    DriveParams single = s.curves.front().drive;
    single.pairs = 0;
    jobs.push_back({"", single, true});
  }

  std::vector<std::future<JobOutput>> pending;
  pending.reserve(jobs.size());
  for (const Job& job : jobs) {
    pending.push_back(std::async(std::launch::async,
                                 [&s, &cfg, &display, job] { return run_job(s, job, cfg, display); }));
  }
  // Every future is drained before the first error is rethrown.
  std::vector<JobOutput> outputs;
  std::exception_ptr failure;
  for (auto& f : pending) {
    try {
      outputs.push_back(f.get());
    } catch (...) {
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  RunResult r;
  r.scenario_id = s.id;
  r.time_label = s.unit == TimeUnit::kOmegaT ? "Ωt" : "t_us";
  r.times = display;
  for (JobOutput& o : outputs) {
    for (Column& c : o.columns) r.columns.push_back(std::move(c));
    r.diagnostics.push_back(o.diagnostics);
  }

  auto& md = r.metadata;
  md.emplace_back("scenario", s.id);
  md.emplace_back("model", std::string(to_string(s.model)));
  md.emplace_back("time_unit", s.unit == TimeUnit::kOmegaT ? "omega_t" : "us");
  md.emplace_back("grid", num(s.grid.start) + ":" + num(s.grid.stop) + ":" +
                              std::to_string(s.grid.samples));
  md.emplace_back("gamma", num(s.gamma));
  if (s.model == ModelKind::kRydberg) md.emplace_back("U", num(s.interaction));
  if (s.model == ModelKind::kRydberg || s.model == ModelKind::kEffectiveW) {
    md.emplace_back("atoms", std::to_string(s.atoms));
  }
  for (const Job& job : jobs) {
    const std::string key = job.baseline ? "baseline" : "curve" + suffix(job.name);
    md.emplace_back(key, describe(job.drive));
  }
  md.emplace_back("rel_tol", num(cfg.rel_tol));
  md.emplace_back("abs_tol", num(cfg.abs_tol));
  for (const std::string& a : s.assumptions) md.emplace_back("assumption", a);
  for (const CurveDiagnostics& d : r.diagnostics) {
    md.emplace_back("diagnostics_" + d.curve, describe(d.integrator));
  }
  return r;
}

Reduction parse_reduction(std::string_view name) {
  if (name == "plateau_mean") return Reduction::kPlateauMean;
  if (name == "max") return Reduction::kMax;
  if (name == "final") return Reduction::kFinal;
  if (name == "max_deviation") return Reduction::kMaxDeviation;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown reduction '" + std::string(name) +
                  "' (expected plateau_mean, max, final or max_deviation)");
}

void ScanSpec::validate() const {
  base.validate();
  if (values.empty()) throw Error(ErrorCode::kInvalidArgument, "scan: no values");
  static const std::set<std::string> axes = {"N", "U", "gamma", "delta", "M"};
  if (!axes.contains(axis)) {
    throw Error(ErrorCode::kInvalidArgument,
                "scan: unknown axis '" + axis + "' (expected N, U, gamma, delta or M)");
  }
}

Scenario with_axis_value(const Scenario& base, std::string_view axis, double value) {
  Scenario s = base;
  const double omega = s.curves.front().drive.omega;
  auto as_count = [&](const char* what) {
    if (!(value >= 0.0) || value != std::floor(value) || value > 1e6) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("scan: ") + what + " must be a non-negative integer");
    }
    return static_cast<int>(value);
  };
  if (axis == "N") {
    const int n = as_count("N");
    for (CurveSpec& c : s.curves) c.drive.pairs = n;
  } else if (axis == "U") {
    s.interaction = value * omega;
  } else if (axis == "gamma") {
    s.gamma = value * omega;
  } else if (axis == "delta") {
    for (CurveSpec& c : s.curves) c.drive.detuning = value * omega;
  } else if (axis == "M") {
    const int m = as_count("M");
    s.atoms = m;
    for (CurveSpec& c : s.curves) c.drive.scale_root = m;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "scan: unknown axis '" + std::string(axis) + "'");
  }
  return s;
}

std::vector<ScanRow> scan(const ScanSpec& spec, const IntegratorConfig& cfg) {
  spec.validate();
  std::vector<std::future<double>> pending;
  for (double v : spec.values) {
    pending.push_back(std::async(std::launch::async, [&spec, &cfg, v] {
      const Scenario s = with_axis_value(spec.base, spec.axis, v);
      return reduce(spec, s, run(s, cfg));
    }));
  }
  std::vector<ScanRow> rows;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    ScanRow row;
    row.value = spec.values[i];
    try {
      row.metric = pending[i].get();
      row.ok = true;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool in_plateau_interior(double delta_t_phase) {
  const double turns = delta_t_phase / kTwoPi;
  const double frac = turns - std::floor(turns);
  return frac >= 0.25 && frac <= 0.75;
}

double plateau_mean(std::span<const double> model_times, std::span<const double> values,
                    double spacing, long window) {
  if (model_times.size() != values.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "plateau_mean: times and values differ in length");
  }
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double phase = spacing * model_times[i];
    if (!in_plateau_interior(phase)) continue;
    if (window >= 0 && branch_index(phase) != window) continue;
    sum += values[i];
    ++count;
  }
  if (count == 0) throw Error(ErrorCode::kInvalidArgument, "plateau_mean: no plateau samples");
  return sum / static_cast<double>(count);
}

}  // namespace polydrive
