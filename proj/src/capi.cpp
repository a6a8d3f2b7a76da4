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

#include "polydrive/polydrive.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "polydrive/drive.hpp"
#include "polydrive/error.hpp"
#include "polydrive/output.hpp"
#include "polydrive/scenarios.hpp"
#include "polydrive/verify.hpp"

struct pd_scenario {
  polydrive::Scenario value;
};

struct pd_result {
  polydrive::RunResult value;
};

struct pd_verify_report {
  polydrive::VerifyReport value;
};

namespace {

thread_local std::string g_last_error;

pd_status to_status(polydrive::ErrorCode code) {
  using polydrive::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return PD_INVALID_ARGUMENT;
    case ErrorCode::kDimensionMismatch: return PD_DIMENSION_MISMATCH;
    case ErrorCode::kNotHermitian: return PD_NOT_HERMITIAN;
    case ErrorCode::kNearSingular: return PD_NEAR_SINGULAR;
    case ErrorCode::kCorruptedState: return PD_CORRUPTED_STATE;
    case ErrorCode::kStepUnderflow: return PD_STEP_UNDERFLOW;
    case ErrorCode::kNonFinite: return PD_NON_FINITE;
    case ErrorCode::kNegativeDensity: return PD_NEGATIVE_DENSITY;
    case ErrorCode::kUnknownLabel: return PD_UNKNOWN_LABEL;
    case ErrorCode::kUnknownScenario: return PD_UNKNOWN_SCENARIO;
    case ErrorCode::kIo: return PD_IO;
  }
  return PD_INTERNAL;
}

pd_status fail(pd_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename F>
pd_status guard(F&& body) {
  try {
    body();
    return PD_OK;
  } catch (const polydrive::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PD_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PD_INTERNAL, e.what());
  } catch (...) {
    return fail(PD_INTERNAL, "unknown failure");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw polydrive::Error(polydrive::ErrorCode::kInvalidArgument, what);
}

polydrive::IntegratorConfig convert(const pd_integrator_config* cfg) {
  polydrive::IntegratorConfig out;
  if (cfg != nullptr) {
    out.rel_tol = cfg->rel_tol;
    out.abs_tol = cfg->abs_tol;
    out.initial_step = cfg->initial_step;
    out.max_step = cfg->max_step;
    out.norm_check_interval = cfg->norm_check_interval;
  }
  return out;
}

const std::vector<std::string>& ids() {
  static const std::vector<std::string> table = polydrive::builtin_ids();
  return table;
}

}  // namespace

extern "C" {

const char* pd_version(void) { return POLYDRIVE_VERSION; }

const char* pd_last_error(void) { return g_last_error.c_str(); }

const char* pd_status_string(pd_status status) {
  switch (status) {
    case PD_OK: return "ok";
    case PD_INVALID_ARGUMENT: return "invalid argument";
    case PD_DIMENSION_MISMATCH: return "dimension mismatch";
    case PD_NOT_HERMITIAN: return "not hermitian";
    case PD_NEAR_SINGULAR: return "near singular";
    case PD_CORRUPTED_STATE: return "corrupted state";
    case PD_STEP_UNDERFLOW: return "step underflow";
    case PD_NON_FINITE: return "non-finite value";
    case PD_NEGATIVE_DENSITY: return "negative density";
    case PD_UNKNOWN_LABEL: return "unknown label";
    case PD_UNKNOWN_SCENARIO: return "unknown scenario";
    case PD_IO: return "i/o failure";
    case PD_INTERNAL: return "internal error";
  }
  return "unknown status";
}

int pd_status_is_integration_failure(pd_status status) {
  return status == PD_STEP_UNDERFLOW || status == PD_NON_FINITE || status == PD_NEGATIVE_DENSITY;
}

void pd_integrator_config_default(pd_integrator_config* cfg) {
  if (cfg == nullptr) return;
  const polydrive::IntegratorConfig d;
  cfg->rel_tol = d.rel_tol;
  cfg->abs_tol = d.abs_tol;
  cfg->initial_step = d.initial_step;
  cfg->max_step = d.max_step;
  cfg->norm_check_interval = d.norm_check_interval;
}

pd_status pd_classify(int64_t p, int64_t q, pd_ratio_class* out) {
  return guard([&] {
    require(out != nullptr, "pd_classify: null output");
    require(p > 0 && q > 0, "pd_classify: p and q must be positive");
    const polydrive::RatioClass c = polydrive::classify(polydrive::Rational(p, q));
    using Kind = polydrive::RatioClass::Kind;
    out->kind = c.kind == Kind::kConclusionI    ? PD_CONCLUSION_I
                : c.kind == Kind::kConclusionII ? PD_CONCLUSION_II
                                                : PD_GENERIC;
    out->j = c.j;
    out->k = c.k;
  });
}

pd_status pd_ratio_class_string(const pd_ratio_class* cls, char* buffer, size_t capacity) {
  return guard([&] {
    require(cls != nullptr && buffer != nullptr, "pd_ratio_class_string: null argument");
    polydrive::RatioClass c;
    using Kind = polydrive::RatioClass::Kind;
    c.kind = cls->kind == PD_CONCLUSION_I    ? Kind::kConclusionI
             : cls->kind == PD_CONCLUSION_II ? Kind::kConclusionII
                                             : Kind::kGeneric;
    c.j = cls->j;
    c.k = cls->k;
    const std::string text = c.str();
    require(text.size() < capacity, "pd_ratio_class_string: buffer too small");
    std::memcpy(buffer, text.c_str(), text.size() + 1);
  });
}

pd_status pd_stabilization_windows(int64_t k, int count, double* starts, double* ends) {
  return guard([&] {
    require(count >= 0, "pd_stabilization_windows: negative count");
    require(count == 0 || (starts != nullptr && ends != nullptr),
            "pd_stabilization_windows: null output");
    const auto w = polydrive::stabilization_windows(k, count);
    for (std::size_t i = 0; i < w.size(); ++i) {
      starts[i] = w[i].start;
      ends[i] = w[i].end;
    }
  });
}

pd_status pd_spacing(double omega, int64_t p, int64_t q, int m, double* out) {
  return guard([&] {
    require(out != nullptr, "pd_spacing: null output");
    polydrive::DriveParams d;
    d.omega = omega;
    d.ratio = polydrive::Rational(p, q);
    d.scale_root = m;
    d.validate();
    *out = d.spacing();
  });
}

size_t pd_builtin_count(void) { return ids().size(); }

const char* pd_builtin_id(size_t index) {
  return index < ids().size() ? ids()[index].c_str() : nullptr;
}

pd_status pd_scenario_builtin(const char* id, pd_scenario** out) {
  return guard([&] {
    require(id != nullptr && out != nullptr, "pd_scenario_builtin: null argument");
    *out = new pd_scenario{polydrive::builtin(id)};
  });
}

pd_status pd_scenario_from_json(const char* json, pd_scenario** out) {
  return guard([&] {
    require(json != nullptr && out != nullptr, "pd_scenario_from_json: null argument");
    *out = new pd_scenario{polydrive::scenario_from_json(json)};
  });
}

pd_status pd_scenario_set(pd_scenario* s, const char* axis, double value) {
  return guard([&] {
    require(s != nullptr && axis != nullptr, "pd_scenario_set: null argument");
    polydrive::Scenario next = polydrive::with_axis_value(s->value, axis, value);
    next.validate();
    s->value = std::move(next);
  });
}

const char* pd_scenario_id(const pd_scenario* s) { return s ? s->value.id.c_str() : nullptr; }

void pd_scenario_free(pd_scenario* s) { delete s; }

pd_status pd_run(const pd_scenario* s, const pd_integrator_config* cfg, pd_result** out) {
  return guard([&] {
    require(s != nullptr && out != nullptr, "pd_run: null argument");
    *out = new pd_result{polydrive::run(s->value, convert(cfg))};
  });
}

pd_status pd_scan(const pd_scenario* base, const char* axis, const double* values, size_t count,
                  const char* reduction, const pd_integrator_config* cfg, pd_scan_row* rows) {
  return guard([&] {
    require(base != nullptr && axis != nullptr && reduction != nullptr,
            "pd_scan: null argument");
    require(count == 0 || (values != nullptr && rows != nullptr), "pd_scan: null array");
    polydrive::ScanSpec spec;
    spec.base = base->value;
    spec.axis = axis;
    spec.values.assign(values, values + count);
    spec.reduction = polydrive::parse_reduction(reduction);
    const auto result = polydrive::scan(spec, convert(cfg));
    for (std::size_t i = 0; i < result.size(); ++i) {
      rows[i].value = result[i].value;
      rows[i].metric = result[i].metric;
      rows[i].ok = result[i].ok ? 1 : 0;
      std::strncpy(rows[i].error, result[i].error.c_str(), sizeof rows[i].error - 1);
      rows[i].error[sizeof rows[i].error - 1] = '\0';
    }
  });
}

size_t pd_result_samples(const pd_result* r) { return r ? r->value.times.size() : 0; }

const char* pd_result_time_label(const pd_result* r) {
  return r ? r->value.time_label.c_str() : nullptr;
}

const double* pd_result_times(const pd_result* r) { return r ? r->value.times.data() : nullptr; }

size_t pd_result_column_count(const pd_result* r) { return r ? r->value.columns.size() : 0; }

const char* pd_result_column_name(const pd_result* r, size_t index) {
  if (r == nullptr || index >= r->value.columns.size()) return nullptr;
  return r->value.columns[index].name.c_str();
}

const double* pd_result_column(const pd_result* r, size_t index) {
  if (r == nullptr || index >= r->value.columns.size()) return nullptr;
  return r->value.columns[index].values.data();
}

pd_status pd_result_find_column(const pd_result* r, const char* name, size_t* index) {
  return guard([&] {
    require(r != nullptr && name != nullptr && index != nullptr,
            "pd_result_find_column: null argument");
    const auto& cols = r->value.columns;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (cols[i].name == name) {
        *index = i;
        return;
      }
    }
    throw polydrive::Error(polydrive::ErrorCode::kUnknownLabel,
                           std::string("no column '") + name + "'");
  });
}

size_t pd_result_metadata_count(const pd_result* r) { return r ? r->value.metadata.size() : 0; }

const char* pd_result_metadata_key(const pd_result* r, size_t index) {
  if (r == nullptr || index >= r->value.metadata.size()) return nullptr;
  return r->value.metadata[index].first.c_str();
}

const char* pd_result_metadata_value(const pd_result* r, size_t index) {
  if (r == nullptr || index >= r->value.metadata.size()) return nullptr;
  return r->value.metadata[index].second.c_str();
}

size_t pd_result_diagnostics_count(const pd_result* r) {
  return r ? r->value.diagnostics.size() : 0;
}

pd_status pd_result_diagnostics(const pd_result* r, size_t index, pd_diagnostics* out) {
  return guard([&] {
    require(r != nullptr && out != nullptr, "pd_result_diagnostics: null argument");
    require(index < r->value.diagnostics.size(), "pd_result_diagnostics: index out of range");
    const auto& d = r->value.diagnostics[index];
    out->curve = d.curve.c_str();
    out->mixed = d.mixed ? 1 : 0;
    out->max_norm_drift = d.integrator.max_norm_drift;
    out->min_eigenvalue = d.integrator.min_eigenvalue;
    out->steps = d.integrator.steps;
    out->rejected_steps = d.integrator.rejected_steps;
    out->renormalizations = d.integrator.renormalizations;
  });
}

pd_status pd_result_write(const pd_result* r, const char* path, const char* format) {
  return guard([&] {
    require(r != nullptr && path != nullptr, "pd_result_write: null argument");
    const auto fmt = polydrive::parse_output_format(format ? format : "csv");
    polydrive::write_file(path, r->value, fmt);
  });
}

void pd_result_free(pd_result* r) { delete r; }

pd_status pd_verify(const char* suite, const pd_verify_overrides* overrides,
                    pd_verify_report** out) {
  return guard([&] {
    require(suite != nullptr && out != nullptr, "pd_verify: null argument");
    polydrive::VerifyOverrides o;
    if (overrides != nullptr) {
      if (overrides->has_interaction) o.interaction = overrides->interaction;
      if (overrides->has_rel_tol) o.rel_tol = overrides->rel_tol;
    }
    *out = new pd_verify_report{polydrive::run_verify(suite, o)};
  });
}

int pd_verify_report_passed(const pd_verify_report* report) {
  return report != nullptr && report->value.passed() ? 1 : 0;
}

size_t pd_verify_report_count(const pd_verify_report* report) {
  return report ? report->value.checks.size() : 0;
}

pd_status pd_verify_report_check(const pd_verify_report* report, size_t index, pd_check* out) {
  return guard([&] {
    require(report != nullptr && out != nullptr, "pd_verify_report_check: null argument");
    require(index < report->value.checks.size(), "pd_verify_report_check: index out of range");
    const auto& c = report->value.checks[index];
    out->name = c.name.c_str();
    out->value = c.value;
    out->threshold = c.threshold;
    out->at_least = c.at_least ? 1 : 0;
    out->passed = c.passed ? 1 : 0;
    out->error = c.error.c_str();
  });
}

void pd_verify_report_free(pd_verify_report* report) { delete report; }

}  // extern "C"
