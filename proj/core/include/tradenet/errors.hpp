#ifndef TRADENET_ERRORS_HPP
#define TRADENET_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace tradenet {

/// Input-side failure: malformed document, schema violation, or an instance
/// that fails validation. Maps to CLI exit code 1.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::string message, std::vector<std::string> details = {})
      : std::runtime_error(std::move(message)), details_(std::move(details)) {}

  const std::vector<std::string>& details() const { return details_; }

 private:
  std::vector<std::string> details_;
};

/// Solver-side failure: unpriceable site, singular system, no feasible
/// support. Maps to CLI exit code 2.
class SolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tradenet

#endif
