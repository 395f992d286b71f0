#include "tradenet/equilibrium.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tradenet/errors.hpp"

namespace tradenet {

Rational PathCostForm::cost_of(std::size_t path, const std::vector<Rational>& flows) const {
  Rational cost = constants[path];
  for (std::size_t j = 0; j < flows.size(); ++j) cost += coefficients[path][j] * flows[j];
  return cost;
}

std::string PathCostForm::render(std::size_t path) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coefficients[path].size(); ++j) {
    if (coefficients[path][j].is_zero()) continue;
    if (!first) os << " + ";
    os << coefficients[path][j].str() << "*x" << (j + 1);
    first = false;
  }
  if (!constants[path].is_zero() || first) {
    if (!first) os << " + ";
    os << constants[path].str();
  }
  return os.str();
}

void validate_flow_problem(const FlowProblem& problem) {
  std::set<int> ids;
  for (const FlowEdge& e : problem.edges) {
    if (!ids.insert(e.id).second) {
      throw std::invalid_argument("flow problem: duplicate edge id " + std::to_string(e.id));
    }
  }
  if (problem.paths.empty()) throw std::invalid_argument("flow problem: no paths");
  std::set<std::vector<int>> distinct;
  for (std::size_t i = 0; i < problem.paths.size(); ++i) {
    const auto& path = problem.paths[i];
    if (path.empty()) {
      throw std::invalid_argument("flow problem: path " + std::to_string(i + 1) + " is empty");
    }
    std::set<int> on_path;
    for (int id : path) {
      if (!ids.count(id)) {
        throw std::invalid_argument("flow problem: path " + std::to_string(i + 1) +
                                    " references unknown edge " + std::to_string(id));
      }
      if (!on_path.insert(id).second) {
        throw std::invalid_argument("flow problem: path " + std::to_string(i + 1) +
                                    " repeats edge " + std::to_string(id));
      }
    }
    if (!distinct.insert(path).second) {
      throw std::invalid_argument("flow problem: duplicate path " + std::to_string(i + 1));
    }
  }
  if (problem.demand.is_negative()) throw std::invalid_argument("flow problem: negative demand");
}

PathCostForm path_cost_coefficients(const FlowProblem& problem) {
  std::map<int, const FlowEdge*> by_id;
  for (const FlowEdge& e : problem.edges) by_id[e.id] = &e;

  const std::size_t k = problem.paths.size();
  PathCostForm form;
  form.constants.assign(k, Rational(0));
  form.coefficients.assign(k, std::vector<Rational>(k, Rational(0)));

  std::vector<std::set<int>> edge_sets;
  edge_sets.reserve(k);
  for (const auto& path : problem.paths) edge_sets.emplace_back(path.begin(), path.end());

  for (std::size_t i = 0; i < k; ++i) {
    for (int id : problem.paths[i]) {
      const FlowEdge& e = *by_id.at(id);
      form.constants[i] += e.fixed;
      // The edge carries the combined flow of every path crossing it.
      for (std::size_t j = 0; j < k; ++j) {
        if (edge_sets[j].count(id)) form.coefficients[i][j] += e.slope;
      }
    }
  }
  return form;
}

// cost_{S0} = cost_{Si} for every other i in the support, plus the demand
// row.
LinearSystem stacked_system(const PathCostForm& form, const std::vector<std::size_t>& support,
                            const Rational& demand) {
  const std::size_t m = support.size();
  LinearSystem system;
  system.a.reserve(m);
  for (std::size_t i = 1; i < m; ++i) {
    std::vector<Rational> row(m);
    for (std::size_t j = 0; j < m; ++j) {
      row[j] = form.coefficients[support[0]][support[j]] - form.coefficients[support[i]][support[j]];
    }
    system.a.push_back(std::move(row));
    system.b.push_back(form.constants[support[i]] - form.constants[support[0]]);
  }
  system.a.emplace_back(m, Rational(1));
  system.b.push_back(demand);
  return system;
}

namespace {

std::vector<std::size_t> positive_support(const std::vector<Rational>& flows) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < flows.size(); ++i) {
    if (flows[i] > Rational(0)) support.push_back(i);
  }
  return support;
}

}  // namespace

EquilibriumResult solve_equilibrium(const FlowProblem& problem, EquilibriumMode mode) {
  validate_flow_problem(problem);
  const PathCostForm form = path_cost_coefficients(problem);
  const std::size_t k = problem.paths.size();

  if (mode == EquilibriumMode::equal_cost) {
    std::vector<std::size_t> all(k);
    for (std::size_t i = 0; i < k; ++i) all[i] = i;
    LinearSystem system = stacked_system(form, all, problem.demand);
    LinearSolution solution = solve_linear_system(system);
    if (!solution.ok()) {
      throw SolveError(std::string("equal-cost system is ") +
                       (solution.status == SolveStatus::singular ? "singular" : "inconsistent") +
                       ":\n" + format_system(system));
    }
    EquilibriumResult result;
    result.mode = mode;
    result.flows = std::move(solution.values);
    result.common_cost = form.cost_of(0, result.flows);
    result.support = positive_support(result.flows);
    return result;
  }

  if (k > 16) {
    throw SolveError("nonnegative mode: refusing support enumeration over " + std::to_string(k) +
                     " paths (limit 16)");
  }
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) support.push_back(i);
    }
    LinearSystem system = stacked_system(form, support, problem.demand);
    LinearSolution solution = solve_linear_system(system);
    if (!solution.ok()) continue;

    std::vector<Rational> flows(k, Rational(0));
    for (std::size_t j = 0; j < support.size(); ++j) flows[support[j]] = solution.values[j];
    if (std::any_of(flows.begin(), flows.end(),
                    [](const Rational& f) { return f.is_negative(); })) {
      continue;
    }
    Rational common = form.cost_of(support[0], flows);
    bool feasible = true;
    for (std::size_t i = 0; i < k && feasible; ++i) {
      Rational cost = form.cost_of(i, flows);
      bool in_support = mask >> i & 1;
      if (in_support ? cost != common : cost < common) feasible = false;
    }
    if (!feasible) continue;

    EquilibriumResult result;
    result.mode = mode;
    result.flows = std::move(flows);
    result.common_cost = common;
    result.support = positive_support(result.flows);
    return result;
  }
  throw SolveError("nonnegative mode: no support satisfies the complementarity conditions");
}

std::vector<std::string> verify_equilibrium(const FlowProblem& problem,
                                            const EquilibriumResult& result) {
  std::vector<std::string> violations;
  if (result.flows.size() != problem.paths.size()) {
    violations.push_back("flow vector length " + std::to_string(result.flows.size()) +
                         " does not match path count " + std::to_string(problem.paths.size()));
    return violations;
  }

  const PathCostForm form = path_cost_coefficients(problem);

  Rational total(0);
  for (const Rational& f : result.flows) total += f;
  if (total != problem.demand) {
    violations.push_back("flow conservation: total " + total.str() + " != demand " +
                         problem.demand.str());
  }

  if (result.mode == EquilibriumMode::equal_cost) {
    for (std::size_t i = 0; i < problem.paths.size(); ++i) {
      Rational cost = form.cost_of(i, result.flows);
      if (cost != result.common_cost) {
        violations.push_back("path " + std::to_string(i + 1) + " cost " + cost.str() +
                             " != common cost " + result.common_cost.str());
      }
    }
    return violations;
  }

  for (std::size_t i = 0; i < result.flows.size(); ++i) {
    if (result.flows[i].is_negative()) {
      violations.push_back("path " + std::to_string(i + 1) + " flow " + result.flows[i].str() +
                           " is negative");
    }
  }
  for (std::size_t i = 0; i < problem.paths.size(); ++i) {
    Rational cost = form.cost_of(i, result.flows);
    if (result.flows[i] > Rational(0)) {
      if (cost != result.common_cost) {
        violations.push_back("used path " + std::to_string(i + 1) + " cost " + cost.str() +
                             " != common cost " + result.common_cost.str());
      }
    } else if (cost < result.common_cost) {
      violations.push_back("unused path " + std::to_string(i + 1) + " cost " + cost.str() +
                           " < common cost " + result.common_cost.str());
    }
  }
  return violations;
}

}  // namespace tradenet
