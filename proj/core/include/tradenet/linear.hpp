#ifndef TRADENET_LINEAR_HPP
#define TRADENET_LINEAR_HPP

#include <string>
#include <vector>

#include "tradenet/rational.hpp"

namespace tradenet {

/// Square system a·x = b over exact rationals.
struct LinearSystem {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;

  std::size_t size() const { return a.size(); }
};

enum class SolveStatus {
  unique,        // exactly one solution, returned
  singular,      // consistent but rank-deficient: no unique solution
  inconsistent,  // no solution at all
};

struct LinearSolution {
  SolveStatus status = SolveStatus::unique;
  std::vector<Rational> values;  // populated only when status == unique

  bool ok() const { return status == SolveStatus::unique; }
};

/// Fraction-preserving Gaussian elimination. Pivot choice is the first
/// nonzero entry in row order; exact arithmetic needs no magnitude-based
/// pivoting. Throws std::invalid_argument on non-square input.
LinearSolution solve_linear_system(LinearSystem system);

/// One equation per line, "c1*x1 + c2*x2 + ... = b"; used in solver errors
/// and reports.
std::string format_system(const LinearSystem& system);

}  // namespace tradenet

#endif
