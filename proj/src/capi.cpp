// Copyright 2026 The qsep Authors
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

#include "qsep/qsep.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <string>

#include "qsep/criteria.hpp"
#include "qsep/error.hpp"
#include "qsep/fnf.hpp"
#include "qsep/measures.hpp"
#include "qsep/state_io.hpp"
#include "qsep/states.hpp"
#include "qsep/sweep.hpp"
#include "qsep/version.hpp"

struct qsep_state {
  qsep::StateFile file;
};

namespace {

thread_local std::string g_last_error;

qsep_status to_status(qsep::ErrorCode code) {
  using qsep::ErrorCode;
  switch (code) {
    case ErrorCode::kDomain: return QSEP_ERR_DOMAIN;
    case ErrorCode::kDimension: return QSEP_ERR_DIMENSION;
    case ErrorCode::kValidation: return QSEP_ERR_VALIDATION;
    case ErrorCode::kNumerical: return QSEP_ERR_NUMERICAL;
    case ErrorCode::kSingularFilter: return QSEP_ERR_SINGULAR_FILTER;
    case ErrorCode::kSingularReduction: return QSEP_ERR_SINGULAR_REDUCTION;
    case ErrorCode::kIo: return QSEP_ERR_IO;
    case ErrorCode::kParse: return QSEP_ERR_PARSE;
  }
  return QSEP_ERR_INTERNAL;
}

qsep_status fail(qsep_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
qsep_status guarded(F&& body) {
  try {
    return body();
  } catch (const qsep::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QSEP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QSEP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QSEP_ERR_INTERNAL, "unknown exception");
  }
}

#define QSEP_REQUIRE(cond, msg) \
  if (!(cond)) return fail(QSEP_ERR_INVALID_ARGUMENT, msg)

qsep_status emit(qsep::DensityMatrix rho, qsep_state** out) {
  *out = new qsep_state{qsep::StateFile{std::move(rho), std::nullopt, std::nullopt}};
  return QSEP_OK;
}

qsep::ComplexMatrix read_matrix(const double* data, Eigen::Index rows, Eigen::Index cols) {
  qsep::ComplexMatrix x(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      const std::size_t k = 2 * static_cast<std::size_t>(i * cols + j);
      x(i, j) = qsep::Complex(data[k], data[k + 1]);
    }
  return x;
}

void write_matrix(const qsep::ComplexMatrix& x, double* out) {
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      const std::size_t k = 2 * static_cast<std::size_t>(i * x.cols() + j);
      out[k] = x(i, j).real();
      out[k + 1] = x(i, j).imag();
    }
}

bool valid_criterion(qsep_criterion id) {
  return id >= QSEP_CRITERION_PPT && id <= QSEP_CRITERION_CM_HS;
}

qsep::CriterionId to_cpp(qsep_criterion id) {
  return static_cast<qsep::CriterionId>(static_cast<int>(id));
}

qsep_criterion_report to_c(const qsep::CriterionReport& rep) {
  return qsep_criterion_report{
      static_cast<qsep_criterion>(static_cast<int>(rep.id)),
      rep.value,
      rep.threshold,
      rep.margin,
      rep.entangled ? 1 : 0,
      rep.error ? to_status(*rep.error) : QSEP_OK,
  };
}

}  // namespace

extern "C" {

const char* qsep_version(void) { return qsep::kVersion; }

const char* qsep_status_string(qsep_status status) {
  switch (status) {
    case QSEP_OK: return "ok";
    case QSEP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case QSEP_ERR_DOMAIN: return "domain error";
    case QSEP_ERR_DIMENSION: return "dimension error";
    case QSEP_ERR_VALIDATION: return "validation error";
    case QSEP_ERR_NUMERICAL: return "numerical error";
    case QSEP_ERR_SINGULAR_FILTER: return "singular filter";
    case QSEP_ERR_SINGULAR_REDUCTION: return "singular reduction";
    case QSEP_ERR_IO: return "I/O error";
    case QSEP_ERR_PARSE: return "parse error";
    case QSEP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* qsep_last_error(void) { return g_last_error.c_str(); }

qsep_status qsep_state_from_matrix(int dim_a, int dim_b, const double* matrix,
                                   qsep_state** out) {
  QSEP_REQUIRE(matrix && out, "null pointer argument");
  return guarded([&] {
    if (dim_a < 1 || dim_b < 1 || dim_a * dim_b > 4096) {
      return fail(QSEP_ERR_DIMENSION, "dimensions out of range");
    }
    const Eigen::Index d = static_cast<Eigen::Index>(dim_a) * dim_b;
    return emit(qsep::DensityMatrix(dim_a, dim_b, read_matrix(matrix, d, d)), out);
  });
}

qsep_status qsep_state_maximally_mixed(int dim_a, int dim_b, qsep_state** out) {
  QSEP_REQUIRE(out, "null pointer argument");
  return guarded([&] { return emit(qsep::DensityMatrix::maximally_mixed(dim_a, dim_b), out); });
}

qsep_status qsep_state_gentiles2(int m, int n, qsep_state** out) {
  QSEP_REQUIRE(out, "null pointer argument");
  return guarded([&] { return emit(qsep::gentiles2_state(m, n), out); });
}

qsep_status qsep_state_max_entangled(int d, qsep_state** out) {
  QSEP_REQUIRE(out, "null pointer argument");
  return guarded([&] { return emit(qsep::max_entangled(d).projector(), out); });
}

qsep_status qsep_state_random_pure(int m, int n, uint64_t seed, qsep_state** out) {
  QSEP_REQUIRE(out, "null pointer argument");
  return guarded([&] { return emit(qsep::random_pure(m, n, seed).projector(), out); });
}

qsep_status qsep_state_random_mixed(int m, int n, int rank, uint64_t seed,
                                    qsep_state** out) {
  QSEP_REQUIRE(out, "null pointer argument");
  return guarded([&] { return emit(qsep::random_mixed(m, n, rank, seed), out); });
}

qsep_status qsep_state_random_separable(int m, int n, int terms, uint64_t seed,
                                        qsep_state** out) {
  QSEP_REQUIRE(out, "null pointer argument");
  return guarded([&] { return emit(qsep::random_separable(m, n, terms, seed), out); });
}

qsep_status qsep_state_white_noise(const qsep_state* base, double p, qsep_state** out) {
  QSEP_REQUIRE(base && out, "null pointer argument");
  return guarded([&] { return emit(qsep::white_noise_mix(base->file.state, p).mixed, out); });
}

qsep_status qsep_state_clone(const qsep_state* state, qsep_state** out) {
  QSEP_REQUIRE(state && out, "null pointer argument");
  return guarded([&] {
    *out = new qsep_state{state->file};
    return QSEP_OK;
  });
}

void qsep_state_free(qsep_state* state) { delete state; }

qsep_status qsep_state_dims(const qsep_state* state, int* dim_a, int* dim_b) {
  QSEP_REQUIRE(state && dim_a && dim_b, "null pointer argument");
  *dim_a = state->file.state.dim_a();
  *dim_b = state->file.state.dim_b();
  return QSEP_OK;
}

qsep_status qsep_state_copy_matrix(const qsep_state* state, double* out, size_t len) {
  QSEP_REQUIRE(state && out, "null pointer argument");
  const auto& x = state->file.state.matrix();
  QSEP_REQUIRE(len >= 2 * static_cast<size_t>(x.size()), "output buffer too small");
  write_matrix(x, out);
  return QSEP_OK;
}

qsep_status qsep_state_purity(const qsep_state* state, double* out) {
  QSEP_REQUIRE(state && out, "null pointer argument");
  *out = qsep::purity(state->file.state);
  return QSEP_OK;
}

qsep_status qsep_state_set_name(qsep_state* state, const char* name) {
  QSEP_REQUIRE(state, "null pointer argument");
  return guarded([&] {
    if (name) {
      state->file.name = std::string(name);
    } else {
      state->file.name.reset();
    }
    return QSEP_OK;
  });
}

const char* qsep_state_name(const qsep_state* state) {
  if (!state || !state->file.name) return nullptr;
  return state->file.name->c_str();
}

qsep_status qsep_state_set_seed(qsep_state* state, uint64_t seed) {
  QSEP_REQUIRE(state, "null pointer argument");
  state->file.seed = seed;
  return QSEP_OK;
}

qsep_status qsep_state_seed(const qsep_state* state, int* has_seed, uint64_t* seed) {
  QSEP_REQUIRE(state && has_seed && seed, "null pointer argument");
  *has_seed = state->file.seed ? 1 : 0;
  *seed = state->file.seed.value_or(0);
  return QSEP_OK;
}

qsep_status qsep_state_load(const char* path, qsep_state** out) {
  QSEP_REQUIRE(path && out, "null pointer argument");
  return guarded([&] {
    *out = new qsep_state{qsep::read_state_file(path)};
    return QSEP_OK;
  });
}

qsep_status qsep_state_save(const qsep_state* state, const char* path) {
  QSEP_REQUIRE(state && path, "null pointer argument");
  return guarded([&] {
    qsep::write_state_file(path, state->file);
    return QSEP_OK;
  });
}

qsep_status qsep_state_to_json(const qsep_state* state, char* buf, size_t cap,
                               size_t* required) {
  QSEP_REQUIRE(state && required, "null pointer argument");
  return guarded([&] {
    const std::string text = qsep::serialize_state(state->file);
    *required = text.size() + 1;
    if (!buf || cap < *required) {
      if (!buf && cap == 0) return QSEP_OK;
      return fail(QSEP_ERR_INVALID_ARGUMENT, "buffer too small for state text");
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return QSEP_OK;
  });
}

const char* qsep_criterion_name(qsep_criterion id) {
  if (!valid_criterion(id)) return "UNKNOWN";
  return qsep::to_string(to_cpp(id)).data();
}

qsep_status qsep_criteria_evaluate(const qsep_state* state, double detection_tol,
                                   qsep_criterion_report out[4]) {
  QSEP_REQUIRE(state && out, "null pointer argument");
  return guarded([&] {
    const auto reports = qsep::full_report(state->file.state, detection_tol);
    for (std::size_t k = 0; k < reports.size(); ++k) out[k] = to_c(reports[k]);
    return QSEP_OK;
  });
}

qsep_status qsep_criterion_evaluate(const qsep_state* state, qsep_criterion id,
                                    double detection_tol, qsep_criterion_report* out) {
  QSEP_REQUIRE(state && out, "null pointer argument");
  QSEP_REQUIRE(valid_criterion(id), "unknown criterion");
  return guarded([&] {
    *out = to_c(qsep::evaluate(to_cpp(id), state->file.state, detection_tol));
    return QSEP_OK;
  });
}

qsep_fnf_options qsep_fnf_default_options(void) {
  const qsep::FnfOptions d;
  return qsep_fnf_options{d.tol, d.max_iter, d.eps};
}

qsep_status qsep_fnf(const qsep_state* state, const qsep_fnf_options* options,
                     qsep_state** normal_form, double* f_a, double* f_b,
                     qsep_fnf_info* info) {
  QSEP_REQUIRE(state && normal_form, "null pointer argument");
  return guarded([&] {
    qsep::FnfOptions opts;
    if (options) opts = qsep::FnfOptions{options->tol, options->max_iter, options->eps};
    qsep::FilterResult res = qsep::filter_normal_form(state->file.state, opts);
    if (f_a) write_matrix(res.f_a, f_a);
    if (f_b) write_matrix(res.f_b, f_b);
    if (info) *info = qsep_fnf_info{res.iterations, res.converged ? 1 : 0, res.residual};
    return emit(std::move(res.rho_tilde), normal_form);
  });
}

qsep_status qsep_apply_filter(const qsep_state* state, const double* f_a,
                              const double* f_b, qsep_state** out) {
  QSEP_REQUIRE(state && f_a && f_b && out, "null pointer argument");
  return guarded([&] {
    const auto& rho = state->file.state;
    return emit(qsep::apply_filter(rho, read_matrix(f_a, rho.dim_a(), rho.dim_a()),
                                   read_matrix(f_b, rho.dim_b(), rho.dim_b())),
                out);
  });
}

const char* qsep_measure_name(qsep_measure id) {
  if (id < QSEP_MEASURE_CONCURRENCE || id > QSEP_MEASURE_MNB) return "UNKNOWN";
  return qsep::to_string(static_cast<qsep::MeasureId>(static_cast<int>(id))).data();
}

const char* qsep_estimate_kind_name(qsep_estimate_kind kind) {
  if (kind < QSEP_KIND_EXACT_PURE || kind > QSEP_KIND_EXACT_CLOSED_FORM) return "UNKNOWN";
  return qsep::to_string(static_cast<qsep::EstimateKind>(static_cast<int>(kind))).data();
}

const char* qsep_bound_source_name(qsep_bound_source source) {
  if (source < QSEP_SOURCE_PURE_REDUCTION || source > QSEP_SOURCE_WOOTTERS) return "UNKNOWN";
  return qsep::to_string(static_cast<qsep::BoundSource>(static_cast<int>(source))).data();
}

qsep_status qsep_measures_evaluate(const qsep_state* state, qsep_measure_estimate* out,
                                   size_t capacity, size_t* count) {
  QSEP_REQUIRE(state && out && count, "null pointer argument");
  QSEP_REQUIRE(capacity >= QSEP_MAX_ESTIMATES, "capacity below QSEP_MAX_ESTIMATES");
  return guarded([&] {
    const auto estimates = qsep::all_estimates(state->file.state);
    for (std::size_t k = 0; k < estimates.size(); ++k) {
      const auto& e = estimates[k];
      out[k] = qsep_measure_estimate{
          static_cast<qsep_measure>(static_cast<int>(e.measure)),
          static_cast<qsep_estimate_kind>(static_cast<int>(e.kind)),
          static_cast<qsep_bound_source>(static_cast<int>(e.source)),
          e.value,
          e.raw,
          e.swapped ? 1 : 0,
      };
    }
    *count = estimates.size();
    return QSEP_OK;
  });
}

qsep_status qsep_sweep_noise(const qsep_state* state, qsep_criterion id, int resolution,
                             double bisect_tol, double detection_tol,
                             qsep_sweep_result* out) {
  QSEP_REQUIRE(state && out, "null pointer argument");
  QSEP_REQUIRE(valid_criterion(id), "unknown criterion");
  return guarded([&] {
    const qsep::SweepResult res = qsep::sweep_noise(
        state->file.state, to_cpp(id),
        qsep::SweepOptions{resolution, bisect_tol, detection_tol});
    *out = qsep_sweep_result{
        id,
        res.threshold ? 1 : 0,
        res.threshold.value_or(std::numeric_limits<double>::quiet_NaN()),
        res.monotone ? 1 : 0,
        res.evaluations,
    };
    return QSEP_OK;
  });
}

}  // extern "C"
