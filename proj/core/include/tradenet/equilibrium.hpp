#ifndef TRADENET_EQUILIBRIUM_HPP
#define TRADENET_EQUILIBRIUM_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "tradenet/linear.hpp"
#include "tradenet/rational.hpp"

namespace tradenet {

/// Edge whose traversal cost is affine in its total flow: fixed + slope * f.
struct FlowEdge {
  int id = 0;
  Rational fixed;
  Rational slope;
};

/// Paths over affine-cost edges plus a total demand to route. Paths are
/// input data, not derived from a network.
struct FlowProblem {
  std::vector<FlowEdge> edges;
  std::vector<std::vector<int>> paths;  // edge-id sequences
  Rational demand;
};

/// Symbolic per-path costs: cost_i = constants[i] + sum_j coeff[i][j] * x_j,
/// where coeff(i,j) accumulates the slopes of edges shared by paths i and j.
struct PathCostForm {
  std::vector<Rational> constants;
  std::vector<std::vector<Rational>> coefficients;

  Rational cost_of(std::size_t path, const std::vector<Rational>& flows) const;
  /// "11*x1 + 10*x2 + 20"
  std::string render(std::size_t path) const;
};

enum class EquilibriumMode {
  equal_cost,   // all paths equal cost; negative flows permitted
  nonnegative,  // flows >= 0 with complementarity on unused paths
};

struct EquilibriumResult {
  EquilibriumMode mode = EquilibriumMode::equal_cost;
  std::vector<Rational> flows;       // one per path, sums to demand
  Rational common_cost;
  std::vector<std::size_t> support;  // paths with positive flow (nonnegative mode)
};

/// Throws std::invalid_argument listing the first structural problem, or
/// returns silently.
void validate_flow_problem(const FlowProblem& problem);

PathCostForm path_cost_coefficients(const FlowProblem& problem);

/// The system pinning equal costs across the given path set plus the
/// demand row; variables follow support order.
LinearSystem stacked_system(const PathCostForm& form, const std::vector<std::size_t>& support,
                            const Rational& demand);

/// Equal-cost mode stacks k-1 cost-equality equations against path 1 plus
/// the demand equation and solves exactly. Nonnegative mode enumerates
/// supports in ascending bitmask order and accepts the first one satisfying
/// complementarity. Throws SolveError (with the offending system rendered)
/// when the stacked system is singular or no feasible support exists.
EquilibriumResult solve_equilibrium(const FlowProblem& problem, EquilibriumMode mode);

/// Independent checker: recomputes every path cost by direct substitution
/// and tests the mode's invariants exactly. Shares no code with the
/// solver's elimination path. Returns human-readable violations; empty
/// means the result verifies.
std::vector<std::string> verify_equilibrium(const FlowProblem& problem,
                                            const EquilibriumResult& result);

}  // namespace tradenet

#endif
