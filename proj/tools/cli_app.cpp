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

#include "cli_app.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "analysis_document.hpp"
#include "qsep/qsep.h"

namespace qsep::cli {
namespace {

using StatePtr = std::unique_ptr<qsep_state, decltype(&qsep_state_free)>;

constexpr const char* kTolEnv = "QSEP_DETECTION_TOL";

/// Carries an exit code out of a command.
struct CliFailure {
  int exit_code;
  std::string message;
};

int exit_code_for(qsep_status s) {
  switch (s) {
    case QSEP_OK: return kExitOk;
    case QSEP_ERR_NUMERICAL:
    case QSEP_ERR_SINGULAR_FILTER:
    case QSEP_ERR_SINGULAR_REDUCTION:
    case QSEP_ERR_INTERNAL: return kExitNumerical;
    default: return kExitUsage;
  }
}

void check(qsep_status s, const std::string& context) {
  if (s != QSEP_OK) {
    throw CliFailure{exit_code_for(s), context + ": " + qsep_status_string(s) + ": " +
                                           qsep_last_error()};
  }
}

StatePtr adopt(qsep_state* raw) { return StatePtr(raw, &qsep_state_free); }

StatePtr load(const std::string& path) {
  qsep_state* raw = nullptr;
  check(qsep_state_load(path.c_str(), &raw), "cannot load " + path);
  return adopt(raw);
}

std::string descriptor(const qsep_state* state, const std::string& path) {
  const char* name = qsep_state_name(state);
  return name ? std::string(name) : path;
}

std::pair<int, int> dims(const qsep_state* state) {
  int a = 0;
  int b = 0;
  check(qsep_state_dims(state, &a, &b), "dims");
  return {a, b};
}

std::string now_utc() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double default_detection_tol() {
  if (const char* env = std::getenv(kTolEnv)) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v >= 0.0) return v;
    throw CliFailure{kExitUsage, std::string("invalid ") + kTolEnv + " value '" + env + "'"};
  }
  return 1e-9;
}

std::vector<CriterionEntry> criteria_entries(const qsep_state* state, double tol) {
  qsep_criterion_report reports[QSEP_CRITERION_COUNT];
  check(qsep_criteria_evaluate(state, tol, reports), "criteria");
  std::vector<CriterionEntry> out;
  for (const auto& r : reports) {
    if (r.status != QSEP_OK) throw CliFailure{exit_code_for(r.status),
                                              std::string("criterion ") + qsep_criterion_name(r.id) +
                                                  " failed: " + qsep_status_string(r.status)};
    out.push_back(CriterionEntry{qsep_criterion_name(r.id), r.value, r.threshold, r.margin,
                                 r.entangled != 0, "ok"});
  }
  return out;
}

std::vector<MeasureEntry> measure_entries(const qsep_state* state) {
  qsep_measure_estimate est[QSEP_MAX_ESTIMATES];
  std::size_t count = 0;
  check(qsep_measures_evaluate(state, est, QSEP_MAX_ESTIMATES, &count), "measures");
  std::vector<MeasureEntry> out;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(MeasureEntry{qsep_measure_name(est[k].measure),
                               qsep_estimate_kind_name(est[k].kind),
                               qsep_bound_source_name(est[k].source), est[k].value, est[k].raw,
                               est[k].swapped != 0});
  }
  return out;
}

struct FnfFlags {
  bool enabled = false;
  double tol = 1e-9;
  int max_iter = 10000;
  double eps = 0.0;
};

void add_fnf_flags(CLI::App* cmd, FnfFlags& f, const std::string& what) {
  cmd->add_flag("--fnf", f.enabled, what);
  cmd->add_option("--fnf-tol", f.tol, "FNF convergence tolerance on max(|r|,|s|)")
      ->capture_default_str();
  cmd->add_option("--fnf-max-iter", f.max_iter, "FNF iteration limit")->capture_default_str();
  cmd->add_option("--fnf-eps", f.eps,
                  "regularizer for singular reductions (rank-deficient states)")
      ->capture_default_str();
}

struct FnfRun {
  StatePtr state;
  qsep_fnf_info info;
};

FnfRun run_fnf(const qsep_state* state, const FnfFlags& f, std::ostream& err) {
  const qsep_fnf_options opts{f.tol, f.max_iter, f.eps};
  qsep_state* raw = nullptr;
  qsep_fnf_info info{};
  check(qsep_fnf(state, &opts, &raw, nullptr, nullptr, &info), "filter normal form");
  if (!info.converged) {
    err << "warning: filter normal form did not converge after " << info.iterations
        << " iterations (residual " << info.residual << ")\n";
  }
  return FnfRun{adopt(raw), info};
}

enum class Format { kText, kJson, kCsv };

void add_format(CLI::App* cmd, std::string& fmt) {
  cmd->add_option("--format", fmt, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  return Format::kText;
}

// ---- gen -----------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::vector<int> dims;
  std::string output;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int terms = 10;
  int rank = 2;
  double noise = 1.0;
  bool noise_given = false;
  std::string name;
};

StatePtr make_state(const GenArgs& a) {
  auto need = [&](std::size_t k) {
    if (a.dims.size() != k) {
      throw CliFailure{kExitUsage, "gen " + a.kind + " expects " + std::to_string(k) +
                                       " integer argument(s)"};
    }
  };
  qsep_state* raw = nullptr;
  if (a.kind == "gentiles2") {
    need(2);
    check(qsep_state_gentiles2(a.dims[0], a.dims[1], &raw), "gen gentiles2");
  } else if (a.kind == "maxent") {
    need(1);
    check(qsep_state_max_entangled(a.dims[0], &raw), "gen maxent");
  } else if (a.kind == "mixed") {
    need(2);
    check(qsep_state_maximally_mixed(a.dims[0], a.dims[1], &raw), "gen mixed");
  } else if (a.kind == "random-pure") {
    need(2);
    check(qsep_state_random_pure(a.dims[0], a.dims[1], a.seed, &raw), "gen random-pure");
  } else if (a.kind == "random-mixed") {
    need(2);
    check(qsep_state_random_mixed(a.dims[0], a.dims[1], a.rank, a.seed, &raw),
          "gen random-mixed");
  } else if (a.kind == "random-separable") {
    need(2);
    check(qsep_state_random_separable(a.dims[0], a.dims[1], a.terms, a.seed, &raw),
          "gen random-separable");
  } else {
    throw CliFailure{kExitUsage, "unknown state kind '" + a.kind + "'"};
  }
  StatePtr state = adopt(raw);
  if (a.noise_given) {
    qsep_state* mixed = nullptr;
    check(qsep_state_white_noise(state.get(), a.noise, &mixed), "gen --noise");
    state = adopt(mixed);
  }
  std::string name = a.name;
  if (name.empty()) {
    name = a.kind;
    for (int d : a.dims) name += " " + std::to_string(d);
    if (a.noise_given) name += " noise " + nlohmann::json(a.noise).dump();
  }
  check(qsep_state_set_name(state.get(), name.c_str()), "gen");
  if (a.kind.rfind("random-", 0) == 0) check(qsep_state_set_seed(state.get(), a.seed), "gen");
  return state;
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  StatePtr state = make_state(a);
  if (a.output.empty() || a.output == "-") {
    std::size_t required = 0;
    check(qsep_state_to_json(state.get(), nullptr, 0, &required), "serialize");
    std::string buf(required, '\0');
    check(qsep_state_to_json(state.get(), buf.data(), buf.size(), &required), "serialize");
    buf.resize(required - 1);
    out << buf;
  } else {
    check(qsep_state_save(state.get(), a.output.c_str()), "cannot write " + a.output);
  }
  return kExitOk;
}

// ---- analyze / bounds ----------------------------------------------------

struct AnalyzeArgs {
  std::string input;
  FnfFlags fnf;
  bool bounds = false;
  std::string format = "text";
  bool deterministic = false;
  std::optional<double> tol;
};

std::string render(const AnalysisDocument& doc, Format f) {
  switch (f) {
    case Format::kJson: return to_json(doc);
    case Format::kCsv: return to_csv(doc);
    case Format::kText: break;
  }
  return to_text(doc);
}

AnalysisDocument analyze(const AnalyzeArgs& a, bool criteria, bool measures,
                         std::ostream& err) {
  const double tol = a.tol.value_or(default_detection_tol());
  StatePtr state = load(a.input);
  AnalysisDocument doc;
  doc.state = descriptor(state.get(), a.input);
  std::tie(doc.dim_a, doc.dim_b) = dims(state.get());
  if (criteria) doc.criteria = criteria_entries(state.get(), tol);
  if (measures) doc.measures = measure_entries(state.get());
  if (a.fnf.enabled) {
    FnfRun fnf = run_fnf(state.get(), a.fnf, err);
    FnfSummary summary;
    summary.iterations = fnf.info.iterations;
    summary.converged = fnf.info.converged != 0;
    summary.residual = fnf.info.residual;
    if (criteria) summary.criteria = criteria_entries(fnf.state.get(), tol);
    if (measures) summary.measures = measure_entries(fnf.state.get());
    doc.fnf = std::move(summary);
  }
  doc.tool_version = qsep_version();
  if (!a.deterministic) doc.timestamp = now_utc();
  return doc;
}

// ---- sweep-noise ---------------------------------------------------------

struct SweepArgs {
  std::string input;
  FnfFlags fnf;
  std::string criterion = "all";
  int resolution = 100;
  double bisect_tol = 1e-6;
  std::string format = "text";
  std::optional<double> tol;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  const double tol = a.tol.value_or(default_detection_tol());
  StatePtr state = load(a.input);
  std::string label = descriptor(state.get(), a.input);
  if (a.fnf.enabled) {
    FnfRun fnf = run_fnf(state.get(), a.fnf, err);
    state = std::move(fnf.state);
    label += " [filter normal form]";
  }
  std::vector<qsep_criterion> ids;
  if (a.criterion == "all") {
    ids = {QSEP_CRITERION_PPT, QSEP_CRITERION_CCNR, QSEP_CRITERION_CM_TRACE,
           QSEP_CRITERION_CM_HS};
  } else if (a.criterion == "ppt") {
    ids = {QSEP_CRITERION_PPT};
  } else if (a.criterion == "ccnr") {
    ids = {QSEP_CRITERION_CCNR};
  } else if (a.criterion == "cm") {
    ids = {QSEP_CRITERION_CM_TRACE};
  } else {
    ids = {QSEP_CRITERION_CM_HS};
  }

  std::vector<qsep_sweep_result> results;
  for (qsep_criterion id : ids) {
    qsep_sweep_result r{};
    check(qsep_sweep_noise(state.get(), id, a.resolution, a.bisect_tol, tol, &r),
          std::string("sweep ") + qsep_criterion_name(id));
    if (!r.monotone) {
      err << "warning: " << qsep_criterion_name(id)
          << " value is not monotone in p; the reported crossing may not be unique\n";
    }
    results.push_back(r);
  }

  const auto [m, n] = dims(state.get());
  switch (parse_format(a.format)) {
    case Format::kJson: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : results) {
        rows.push_back({{"criterion", qsep_criterion_name(r.id)},
                        {"detected", r.detected != 0},
                        {"threshold", r.detected ? nlohmann::json(r.threshold) : nullptr},
                        {"monotone", r.monotone != 0}});
      }
      nlohmann::json doc{{"state", label},       {"dim_a", m},
                         {"dim_b", n},           {"bisect_tol", a.bisect_tol},
                         {"resolution", a.resolution}, {"sweep", rows},
                         {"tool_version", qsep_version()}};
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      out << "criterion,detected,threshold,monotone\n";
      for (const auto& r : results) {
        out << qsep_criterion_name(r.id) << "," << (r.detected ? "true" : "false") << ","
            << (r.detected ? format_number(r.threshold) : "never") << ","
            << (r.monotone ? "true" : "false") << "\n";
      }
      break;
    case Format::kText: {
      out << "white-noise sweep: " << label << " (" << m << "x" << n << ")\n";
      for (const auto& r : results) {
        char line[128];
        if (r.detected) {
          std::snprintf(line, sizeof line, "  %-9s detects for p >= %.10f%s\n",
                        qsep_criterion_name(r.id), r.threshold,
                        r.monotone ? "" : "  (non-monotone)");
        } else {
          std::snprintf(line, sizeof line, "  %-9s never in [0,1]\n", qsep_criterion_name(r.id));
        }
        out << line;
      }
      break;
    }
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qsep: bipartite entanglement detection (PPT, CCNR, correlation matrix),\n"
               "filter normal form, and concurrence/tangle bounds.\n\n"
               "Environment:\n  " +
               std::string(kTolEnv) +
               "  default detection tolerance on criterion margins (1e-9)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qsep_version()));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand(
      "gen", "write a state file: gentiles2 M N | maxent D | mixed M N | random-pure M N |\n"
             "random-mixed M N | random-separable M N");
  gen_cmd->add_option("kind", gen.kind, "state family")->required();
  gen_cmd->add_option("dims", gen.dims, "integer parameters of the family")->required();
  gen_cmd->add_option("-o,--output", gen.output, "output path (default: stdout)");
  gen_cmd->add_option("--seed", gen.seed, "seed for random families")->capture_default_str();
  gen_cmd->add_option("--terms", gen.terms, "product terms for random-separable")
      ->capture_default_str();
  gen_cmd->add_option("--rank", gen.rank, "pure components for random-mixed")
      ->capture_default_str();
  auto* noise_opt = gen_cmd->add_option("--noise", gen.noise,
                                        "mix with white noise: p*state + (1-p)*I/MN");
  gen_cmd->add_option("--name", gen.name, "name recorded in the file");

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "run all criteria on a state file");
  analyze_cmd->add_option("input", analyze_args.input, "state file")->required();
  add_fnf_flags(analyze_cmd, analyze_args.fnf, "also analyze the filter normal form");
  analyze_cmd->add_flag("--bounds", analyze_args.bounds, "include concurrence/tangle estimates");
  add_format(analyze_cmd, analyze_args.format);
  analyze_cmd->add_flag("--deterministic", analyze_args.deterministic, "omit the timestamp");
  analyze_cmd->add_option("--tol", analyze_args.tol, "detection tolerance on margins");

  AnalyzeArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand("bounds", "concurrence / tangle / MNB estimates");
  bounds_cmd->add_option("input", bounds_args.input, "state file")->required();
  add_fnf_flags(bounds_cmd, bounds_args.fnf, "also bound the filter normal form");
  add_format(bounds_cmd, bounds_args.format);
  bounds_cmd->add_flag("--deterministic", bounds_args.deterministic, "omit the timestamp");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand(
      "sweep-noise", "white-noise thresholds: minimal p detected on p*state + (1-p)*I/MN");
  sweep_cmd->add_option("input", sweep.input, "state file")->required();
  add_fnf_flags(sweep_cmd, sweep.fnf, "sweep the filter normal form instead of the state");
  sweep_cmd->add_option("--criterion", sweep.criterion, "criterion to sweep")
      ->check(CLI::IsMember({"ppt", "ccnr", "cm", "cm_hs", "all"}))
      ->capture_default_str();
  sweep_cmd->add_option("--resolution", sweep.resolution, "pre-scan grid points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep_cmd->add_option("--bisect-tol", sweep.bisect_tol, "bisection tolerance in p")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(sweep_cmd, sweep.format);
  sweep_cmd->add_option("--tol", sweep.tol, "detection tolerance on margins");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) {
      gen.seed_given = gen_cmd->count("--seed") > 0;
      gen.noise_given = noise_opt->count() > 0;
      return cmd_gen(gen, out);
    }
    if (analyze_cmd->parsed()) {
      const AnalysisDocument doc = analyze(analyze_args, true, analyze_args.bounds, err);
      out << render(doc, parse_format(analyze_args.format));
      return kExitOk;
    }
    if (bounds_cmd->parsed()) {
      const AnalysisDocument doc = analyze(bounds_args, false, true, err);
      out << render(doc, parse_format(bounds_args.format));
      return kExitOk;
    }
    if (sweep_cmd->parsed()) return cmd_sweep(sweep, out, err);
  } catch (const CliFailure& f) {
    err << "qsep: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    err << "qsep: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace qsep::cli
