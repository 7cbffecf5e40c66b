#ifndef AHCERT_EXPERIMENTS_HPP
#define AHCERT_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "step.hpp"

namespace ahcert {

// One CLI/API invocation: a command name plus a JSON config. Every
// experiment echoes its effective config into the certificate, derives all
// randomness from the config seed, and never touches floating point, so a
// fixed config reproduces the verdict payload byte for byte (wall_ms is the
// one excluded field).
struct RunResult {
  int status = 0;  // 0 certified, 1 usage/internal, 2 horizon exhausted
  std::string certificate_json;
  std::string summary;
};

// Commands: ideal-cert, stability, traceless, goodearl, approx-div,
// k0-verify, total-order, embed-check.
RunResult run_experiment(const std::string& command, const std::string& config_json);

std::vector<std::string> experiment_names();

// The fixed 5-function family used by the divisibility experiment: M_2
// valued, constant below 1/4 so the witness search stays shallow; the fifth
// member is seeded.
std::vector<StepFunction> default_approx_div_corpus(std::uint64_t seed);

}  // namespace ahcert

#endif
