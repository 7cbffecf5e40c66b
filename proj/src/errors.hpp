#ifndef AHCERT_ERRORS_HPP
#define AHCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ahcert {

// Thrown when an iterative search ran out of its configured budget.
// Carries the partial progress so callers can report it (CLI exit code 2).
class horizon_exhausted : public std::runtime_error {
public:
  horizon_exhausted(std::string what, std::string detail_json)
      : std::runtime_error(std::move(what)), detail(std::move(detail_json)) {}
  std::string detail;  // JSON fragment describing how far the search got
};

// A condition the underlying proofs rule out. Reaching it means a bug here,
// not bad input.
class internal_inconsistency : public std::logic_error {
public:
  explicit internal_inconsistency(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace ahcert

#endif
