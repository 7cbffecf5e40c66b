#include "ahcert/ahcert.h"

#include <new>
#include <string>

#include "experiments.hpp"

struct ahc_result {
  int status = 1;
  std::string certificate;
  std::string summary;
};

extern "C" {

ahc_status ahc_run(const char* command, const char* config_json, ahc_result** out) {
  if (out == nullptr) return AHC_USAGE;
  *out = nullptr;
  auto* result = new (std::nothrow) ahc_result;
  if (result == nullptr) return AHC_USAGE;
  try {
    ahcert::RunResult run = ahcert::run_experiment(
        command ? std::string(command) : std::string(),
        config_json ? std::string(config_json) : std::string());
    result->status = run.status;
    result->certificate = std::move(run.certificate_json);
    result->summary = std::move(run.summary);
  } catch (const std::exception& e) {
    result->status = 1;
    result->certificate = std::string("{\"schema\":1,\"verdict\":\"usage-error\",\"error\":\"") +
                          e.what() + "\"}";
    result->summary = e.what();
  } catch (...) {
    result->status = 1;
    result->certificate = "{\"schema\":1,\"verdict\":\"usage-error\"}";
    result->summary = "unknown error";
  }
  *out = result;
  return static_cast<ahc_status>(result->status == 0   ? AHC_OK
                                 : result->status == 2 ? AHC_HORIZON
                                                       : AHC_USAGE);
}

const char* ahc_result_certificate(const ahc_result* r) {
  return r ? r->certificate.c_str() : "";
}

const char* ahc_result_summary(const ahc_result* r) { return r ? r->summary.c_str() : ""; }

int ahc_result_status(const ahc_result* r) { return r ? r->status : 1; }

void ahc_result_free(ahc_result* r) { delete r; }

const char* ahc_commands(void) {
  static std::string names = [] {
    std::string s;
    for (const auto& n : ahcert::experiment_names()) {
      if (!s.empty()) s += '\n';
      s += n;
    }
    return s;
  }();
  return names.c_str();
}

const char* ahc_version(void) { return "1.0.0"; }

}  // extern "C"
