#include "secant/secant.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "problem/runner.hpp"

struct secant_problem {
  secant::ProblemSpec spec;
};

namespace {

thread_local std::string last_error;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

secant_status fail(secant_status status, const std::string& message) {
  last_error = message;
  return status;
}

secant_status deliver(const secant::RunResult& r, char** json, char** explain) {
  if (json) *json = r.output.is_null() ? nullptr : duplicate(r.output.dump(2) + "\n");
  if (explain) *explain = duplicate(r.summary.empty() ? r.explain : r.summary + "\n" + r.explain);
  if (r.status == secant::kPositive) {
    last_error.clear();
  } else {
    last_error = r.error.empty() ? r.summary : r.error;
  }
  return static_cast<secant_status>(r.status);
}

}  // namespace

extern "C" {

void secant_options_init(secant_options* options) {
  if (!options) return;
  options->order = nullptr;
  options->ideals = nullptr;
  options->ideal_count = 0;
  options->max_degree = -1;
  options->grade = -1;
}

secant_status secant_problem_parse(const char* text, secant_problem** out) {
  if (!text || !out) return fail(SECANT_INPUT_ERROR, "null argument");
  *out = nullptr;
  try {
    *out = new secant_problem{secant::parse_problem(text)};
    last_error.clear();
    return SECANT_OK;
  } catch (const secant::Error& e) {
    return fail(e.code() == secant::ErrorCode::Internal ? SECANT_INTERNAL_ERROR : SECANT_INPUT_ERROR,
                std::string(secant::error_code_name(e.code())) + ": " + e.what());
  } catch (const std::exception& e) {
    return fail(SECANT_INTERNAL_ERROR, e.what());
  }
}

void secant_problem_free(secant_problem* problem) { delete problem; }

secant_status secant_problem_to_text(const secant_problem* problem, char** out) {
  if (!problem || !out) return fail(SECANT_INPUT_ERROR, "null argument");
  *out = duplicate(secant::print_problem(problem->spec));
  return SECANT_OK;
}

secant_status secant_run(const secant_problem* problem, const char* command, const secant_options* options,
                         char** json, char** explain) {
  if (json) *json = nullptr;
  if (explain) *explain = nullptr;
  if (!problem || !command) return fail(SECANT_INPUT_ERROR, "null argument");
  secant::RunOptions opts;
  try {
    if (options) {
      if (options->order) opts.order = secant::parse_order(options->order);
      for (size_t i = 0; i < options->ideal_count; ++i) opts.ideals.emplace_back(options->ideals[i]);
      if (options->max_degree >= 0) opts.max_degree = static_cast<std::uint32_t>(options->max_degree);
      if (options->grade >= 0) opts.grade = static_cast<std::uint32_t>(options->grade);
    }
  } catch (const secant::Error& e) {
    return fail(SECANT_INPUT_ERROR, e.what());
  }
  if (std::string(command) == "verify") return fail(SECANT_INPUT_ERROR, "use secant_verify for certificates");
  return deliver(secant::run_command(command, problem->spec, opts), json, explain);
}

secant_status secant_verify(const char* certificate_json, char** json, char** explain) {
  if (json) *json = nullptr;
  if (explain) *explain = nullptr;
  if (!certificate_json) return fail(SECANT_INPUT_ERROR, "null argument");
  return deliver(secant::run_verify(certificate_json), json, explain);
}

const char* secant_last_error(void) { return last_error.c_str(); }

void secant_free_string(char* s) { std::free(s); }

const char* secant_version(void) { return "1.0.0"; }

}  // extern "C"
