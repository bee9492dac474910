// Copyright 2026 The qecc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qecc/qecc.h"

#include <cstring>
#include <exception>
#include <ios>
#include <new>
#include <string>

#include "qecc/codes.hpp"
#include "qecc/config.hpp"
#include "qecc/error.hpp"
#include "qecc/harness.hpp"
#include "qecc/theory.hpp"

struct qecc_config {
  qecc::RunConfig value;
};

struct qecc_result {
  qecc::RunOutput value;
};

struct qecc_code {
  qecc::StabilizerCode value;
};

namespace {

thread_local std::string g_last_error;

qecc_status fail(qecc_status status, const char* what) {
  g_last_error = what;
  return status;
}

template <typename Fn>
qecc_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return QECC_OK;
  } catch (const qecc::ConfigError& e) {
    return fail(QECC_ERR_CONFIG, e.what());
  } catch (const qecc::NumericalError& e) {
    return fail(QECC_ERR_NUMERICAL, e.what());
  } catch (const std::ios_base::failure& e) {
    return fail(QECC_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QECC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QECC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QECC_ERR_INTERNAL, "unknown error");
  }
}

bool null_args(const void* a, const void* b = reinterpret_cast<const void*>(1)) {
  if (a == nullptr || b == nullptr) {
    g_last_error = "null argument";
    return true;
  }
  return false;
}

qecc::TheoryParams theory_params(size_t n, size_t d, double kappa, double b2, double j2) {
  qecc::TheoryParams p;
  p.n_spins = n;
  p.degree = d;
  p.kappa = kappa;
  p.b2 = b2;
  p.j2 = j2;
  p.validate();
  return p;
}

}  // namespace

extern "C" {

const char* qecc_last_error(void) { return g_last_error.c_str(); }

const char* qecc_version(void) { return qecc::kVersion; }

qecc_status qecc_config_create(qecc_config** out) {
  if (null_args(out)) return QECC_ERR_CONFIG;
  return guarded([&] { *out = new qecc_config{}; });
}

qecc_status qecc_config_parse(const char* text, qecc_config** out) {
  if (null_args(text, out)) return QECC_ERR_CONFIG;
  return guarded([&] { *out = new qecc_config{qecc::RunConfig::parse(text)}; });
}

qecc_status qecc_config_load(const char* path, qecc_config** out) {
  if (null_args(path, out)) return QECC_ERR_CONFIG;
  return guarded([&] { *out = new qecc_config{qecc::RunConfig::load(path)}; });
}

qecc_status qecc_config_set(qecc_config* config, const char* key, const char* value) {
  if (null_args(config, key) || null_args(value)) return QECC_ERR_CONFIG;
  return guarded([&] { config->value.set(key, value); });
}

qecc_status qecc_config_get(const qecc_config* config, const char* key, char* buf, size_t size,
                            size_t* needed) {
  if (null_args(config, key)) return QECC_ERR_CONFIG;
  std::string v;
  const qecc_status st = guarded([&] { v = config->value.get(key); });
  if (st != QECC_OK) return st;
  if (needed != nullptr) *needed = v.size() + 1;
  if (buf == nullptr || size < v.size() + 1) return fail(QECC_ERR_CONFIG, "buffer too small");
  std::memcpy(buf, v.c_str(), v.size() + 1);
  return QECC_OK;
}

void qecc_config_destroy(qecc_config* config) { delete config; }

qecc_status qecc_run(const qecc_config* config, const char* command, qecc_result** out) {
  if (null_args(config, command) || null_args(out)) return QECC_ERR_CONFIG;
  *out = nullptr;
  return guarded([&] { *out = new qecc_result{qecc::run_command(command, config->value)}; });
}

const char* qecc_result_csv(const qecc_result* result) {
  return result == nullptr ? "" : result->value.csv.c_str();
}

const char* qecc_result_summary(const qecc_result* result) {
  return result == nullptr ? "" : result->value.summary.c_str();
}

int qecc_result_passed(const qecc_result* result) {
  return result != nullptr && result->value.passed ? 1 : 0;
}

void qecc_result_destroy(qecc_result* result) { delete result; }

qecc_status qecc_code_open(const char* name_or_path, qecc_code** out) {
  if (null_args(name_or_path, out)) return QECC_ERR_CONFIG;
  *out = nullptr;
  return guarded([&] { *out = new qecc_code{qecc::resolve_code(name_or_path)}; });
}

qecc_status qecc_code_info(const qecc_code* code, size_t* n_spins, size_t* n_logical,
                           size_t* max_errors) {
  if (null_args(code)) return QECC_ERR_CONFIG;
  if (n_spins != nullptr) *n_spins = code->value.n_spins();
  if (n_logical != nullptr) *n_logical = code->value.n_logical();
  if (max_errors != nullptr) *max_errors = code->value.max_errors();
  return QECC_OK;
}

qecc_status qecc_code_verify(const qecc_code* code, double threshold, int* passed,
                             double* max_violation) {
  if (null_args(code, passed)) return QECC_ERR_CONFIG;
  return guarded([&] {
    if (!(threshold > 0.0)) throw qecc::ConfigError("threshold must be > 0");
    const auto r = qecc::verify_nondegeneracy(code->value, threshold);
    *passed = r.passed ? 1 : 0;
    if (max_violation != nullptr) *max_violation = r.max_violation;
  });
}

void qecc_code_destroy(qecc_code* code) { delete code; }

qecc_status qecc_theory_f1(size_t n_spins, size_t degree, double kappa, double b2, double j2,
                           double t, double* exact_sum, double* erf_form) {
  return guarded([&] {
    const auto p = theory_params(n_spins, degree, kappa, b2, j2);
    if (!(t >= 0.0)) throw qecc::ConfigError("t must be >= 0");
    if (exact_sum != nullptr) *exact_sum = qecc::f1_exact_sum(p, t);
    if (erf_form != nullptr) *erf_form = qecc::f1_erf(p, t).fidelity;
  });
}

qecc_status qecc_theory_rates(size_t n_spins, size_t degree, double kappa, double b2, double j2,
                              double* t_r, double* delta_t) {
  return guarded([&] {
    const auto p = theory_params(n_spins, degree, kappa, b2, j2);
    const auto e = qecc::f1_erf(p, 0.0);
    if (t_r != nullptr) *t_r = e.t_r;
    if (delta_t != nullptr) *delta_t = e.delta_t;
  });
}

}  // extern "C"
