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

// polydrive command-line front end. Uses only the C interface.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polydrive/polydrive.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIntegration = 3;
constexpr int kExitIo = 4;

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v, const char* spec = "%.10g") {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void report(pd_status status) {
  std::cerr << "error (" << pd_status_string(status) << "): " << pd_last_error() << '\n';
}

// Integrator settings: --rel-tol, then POLYDRIVE_TOLERANCE, then the default.
std::optional<pd_integrator_config> integrator(const std::optional<double>& rel_tol) {
  pd_integrator_config cfg;
  pd_integrator_config_default(&cfg);
  if (rel_tol) {
    cfg.rel_tol = *rel_tol;
  } else if (const char* env = std::getenv("POLYDRIVE_TOLERANCE"); env && *env) {
    double v = 0.0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec != std::errc() || ptr != end || !(v > 0.0)) {
      std::cerr << "error: POLYDRIVE_TOLERANCE='" << env << "' is not a positive number\n";
      return std::nullopt;
    }
    cfg.rel_tol = v;
  }
  return cfg;
}

bool parse_int(const std::string& text, std::int64_t& out) {
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end && !text.empty();
}

std::string id_list() {
  std::string out;
  for (std::size_t i = 0; i < pd_builtin_count(); ++i) {
    out += (i ? ", " : "") + std::string(pd_builtin_id(i));
  }
  return out;
}

struct SimulateArgs {
  std::string scenario;
  std::string config;
  std::string out;
  std::string format = "csv";
  std::optional<double> rel_tol;
};

int cmd_simulate(const SimulateArgs& a) {
  pd_scenario* scenario = nullptr;
  pd_status st = PD_OK;
  if (!a.config.empty()) {
    std::ifstream in(a.config);
    if (!in) {
      std::cerr << "error: cannot read config '" << a.config << "'\n";
      return kExitUsage;
    }
    std::stringstream text;
    text << in.rdbuf();
    st = pd_scenario_from_json(text.str().c_str(), &scenario);
  } else {
    st = pd_scenario_builtin(a.scenario.c_str(), &scenario);
  }
  if (st != PD_OK) {
    report(st);
    if (st == PD_UNKNOWN_SCENARIO) std::cerr << "valid scenario ids: " << id_list() << '\n';
    return kExitUsage;
  }
  const auto cfg = integrator(a.rel_tol);
  if (!cfg) {
    pd_scenario_free(scenario);
    return kExitUsage;
  }

  pd_result* result = nullptr;
  st = pd_run(scenario, &*cfg, &result);
  const std::string id = pd_scenario_id(scenario);
  pd_scenario_free(scenario);
  if (st != PD_OK) {
    report(st);
    const bool usage = st == PD_INVALID_ARGUMENT || st == PD_UNKNOWN_LABEL;
    return usage ? kExitUsage : kExitIntegration;
  }

  const std::string path = a.out.empty() ? id + "." + a.format : a.out;
  st = pd_result_write(result, path.c_str(), a.format.c_str());
  const std::size_t samples = pd_result_samples(result);
  const std::size_t columns = pd_result_column_count(result);
  pd_result_free(result);
  if (st != PD_OK) {
    report(st);
    return st == PD_IO ? kExitIo : kExitUsage;
  }
  std::cout << "wrote " << path << " (" << samples << " samples, " << columns + 1
            << " columns)\n";
  return kExitOk;
}

int cmd_classify(const std::string& ratio, int m) {
  std::int64_t p = 0;
  std::int64_t q = 1;
  const auto slash = ratio.find('/');
  const bool ok = slash == std::string::npos
                      ? parse_int(ratio, p)
                      : parse_int(ratio.substr(0, slash), p) && parse_int(ratio.substr(slash + 1), q);
  if (!ok) {
    std::cerr << "error: --ratio expects p/q with integers, got '" << ratio << "'\n";
    return kExitUsage;
  }
  if (q == 0) {
    std::cerr << "error: zero denominator in --ratio\n";
    return kExitUsage;
  }
  if (m < 1) {
    std::cerr << "error: --M must be >= 1\n";
    return kExitUsage;
  }
  pd_ratio_class cls;
  pd_status st = pd_classify(p, q, &cls);
  double spacing = 0.0;
  if (st == PD_OK) st = pd_spacing(1.0, p, q, m, &spacing);
  if (st != PD_OK) {
    report(st);
    return kExitUsage;
  }
  char name[96];
  pd_ratio_class_string(&cls, name, sizeof name);
  std::cout << name << '\n';
  std::cout << "Delta/Omega = " << fmt(spacing) << '\n';
  if (cls.kind == PD_CONCLUSION_II) {
    constexpr int kWindows = 5;
    double starts[kWindows];
    double ends[kWindows];
    st = pd_stabilization_windows(cls.k, kWindows, starts, ends);
    if (st != PD_OK) {
      report(st);
      return kExitUsage;
    }
    std::cout << "stabilization windows (Delta t):\n";
    for (int i = 0; i < kWindows; ++i) {
      std::cout << "  [" << fmt(starts[i] / kPi, "%.6g") << "pi, " << fmt(ends[i] / kPi, "%.6g")
                << "pi)  [" << fmt(starts[i], "%.17g") << ", " << fmt(ends[i], "%.17g") << ")\n";
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, const std::optional<double>& u,
               const std::optional<double>& rel_tol) {
  const auto cfg = integrator(rel_tol);
  if (!cfg) return kExitUsage;
  pd_verify_overrides o{};
  if (u) {
    o.has_interaction = 1;
    o.interaction = *u;
  }
  o.has_rel_tol = 1;
  o.rel_tol = cfg->rel_tol;

  pd_verify_report* rep = nullptr;
  const pd_status st = pd_verify(suite.c_str(), &o, &rep);
  if (st != PD_OK) {
    report(st);
    return kExitUsage;
  }
  const std::size_t n = pd_verify_report_count(rep);
  for (std::size_t i = 0; i < n; ++i) {
    pd_check c;
    pd_verify_report_check(rep, i, &c);
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << fmt(c.value, "%.3e")
              << (c.at_least ? " >= " : " <= ") << fmt(c.threshold, "%.3g");
    if (c.error[0] != '\0') std::cout << " (" << c.error << ")";
    std::cout << '\n';
  }
  const bool passed = pd_verify_report_passed(rep) != 0;
  pd_verify_report_free(rep);
  std::cout << (passed ? "all checks passed" : "verification FAILED") << '\n';
  return passed ? kExitOk : kExitCheckFailed;
}

struct ScanArgs {
  std::string scenario;
  std::string axis;
  std::vector<double> values;
  std::string reduction = "max";
  std::optional<double> rel_tol;
};

int cmd_scan(const ScanArgs& a) {
  pd_scenario* scenario = nullptr;
  pd_status st = pd_scenario_builtin(a.scenario.c_str(), &scenario);
  if (st != PD_OK) {
    report(st);
    if (st == PD_UNKNOWN_SCENARIO) std::cerr << "valid scenario ids: " << id_list() << '\n';
    return kExitUsage;
  }
  const auto cfg = integrator(a.rel_tol);
  if (!cfg) {
    pd_scenario_free(scenario);
    return kExitUsage;
  }
  std::vector<pd_scan_row> rows(a.values.size());
  st = pd_scan(scenario, a.axis.c_str(), a.values.data(), a.values.size(), a.reduction.c_str(),
               &*cfg, rows.data());
  pd_scenario_free(scenario);
  if (st != PD_OK) {
    report(st);
    return kExitUsage;
  }
  std::cout << a.axis << ',' << a.reduction << ",error\n";
  bool all_ok = true;
  for (const pd_scan_row& r : rows) {
    all_ok = all_ok && r.ok;
    std::cout << fmt(r.value, "%.17g") << ',' << (r.ok ? fmt(r.metric, "%.17g") : "nan") << ','
              << r.error << '\n';
  }
  return all_ok ? kExitOk : kExitIntegration;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polychromatic drive simulator"};
  app.set_version_flag("--version", std::string(pd_version()));
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run a scenario and write its time series");
  auto* scenario_opt = simulate->add_option("--scenario", sim.scenario, "Builtin scenario id");
  auto* config_opt = simulate->add_option("--config", sim.config, "JSON scenario config file");
  scenario_opt->excludes(config_opt);
  simulate->add_option("--out", sim.out, "Output path (default <id>.<format>)");
  simulate->add_option("--format", sim.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  simulate->add_option("--rel-tol", sim.rel_tol, "Integrator relative tolerance");

  std::string ratio;
  int m = 1;
  auto* classify = app.add_subcommand("classify", "Classify a ratio 2 sqrt(M) Omega / Delta = p/q");
  classify->add_option("--ratio", ratio, "p/q")->required();
  classify->add_option("--M", m, "Atom count in the sqrt(M) factor");

  std::string suite = "all";
  std::optional<double> u;
  std::optional<double> verify_tol;
  auto* verify = app.add_subcommand("verify", "Compare closed forms against numerics");
  verify->add_option("--suite", suite, "two-level, bell, w, lambda or all");
  verify->add_option("--U", u, "Override the interaction U in units of Omega");
  verify->add_option("--rel-tol", verify_tol, "Integrator relative tolerance");

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Sweep one parameter of a builtin scenario");
  scan->add_option("--scenario", scan_args.scenario, "Builtin scenario id")->required();
  scan->add_option("--axis", scan_args.axis, "N, U, gamma, delta or M")->required();
  scan->add_option("--values", scan_args.values, "Comma separated values")
      ->required()
      ->delimiter(',');
  scan->add_option("--reduction", scan_args.reduction,
                   "plateau_mean, max, final or max_deviation");
  scan->add_option("--rel-tol", scan_args.rel_tol, "Integrator relative tolerance");

  app.add_subcommand("list", "List builtin scenario ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (simulate->parsed()) {
    if (sim.scenario.empty() && sim.config.empty()) {
      std::cerr << "error: simulate needs --scenario or --config\n"
                << "valid scenario ids: " << id_list() << '\n';
      return kExitUsage;
    }
    return cmd_simulate(sim);
  }
  if (classify->parsed()) return cmd_classify(ratio, m);
  if (verify->parsed()) return cmd_verify(suite, u, verify_tol);
  if (scan->parsed()) return cmd_scan(scan_args);
  for (std::size_t i = 0; i < pd_builtin_count(); ++i) std::cout << pd_builtin_id(i) << '\n';
  return kExitOk;
}
