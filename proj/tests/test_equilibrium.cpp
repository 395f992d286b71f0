#include <doctest.h>

#include <random>

#include "tradenet/equilibrium.hpp"
#include "tradenet/errors.hpp"

#include "support/generators.hpp"

using namespace tradenet;

namespace {

FlowProblem segment_0_34() {
  FlowProblem p;
  p.edges = {{1, 0, 10}, {2, 20, 1}, {3, 10, 1}, {4, 20, 1}, {5, 0, 10}};
  p.paths = {{1, 4}, {1, 3, 5}, {2, 5}};
  p.demand = Rational(3);
  return p;
}

FlowProblem segment_12_26() {
  FlowProblem p;
  p.edges = {{1, 0, 10}, {2, 10, 1}, {3, 0, 1}, {4, 5, 1},
             {5, 5, 1},  {6, 0, 1},  {7, 0, 10}, {8, 10, 1}};
  p.paths = {{1, 4, 7}, {1, 3, 5, 6, 7}, {2, 5, 6, 7}, {2, 5, 8}};
  p.demand = Rational(3);
  return p;
}

std::vector<Rational> rationals(std::vector<long long> in) {
  return std::vector<Rational>(in.begin(), in.end());
}

}  // namespace

TEST_CASE("path cost forms of the three-route section") {
  PathCostForm form = path_cost_coefficients(segment_0_34());
  CHECK(form.constants == rationals({20, 10, 20}));
  CHECK(form.coefficients[0] == rationals({11, 10, 0}));
  CHECK(form.coefficients[1] == rationals({10, 21, 10}));
  CHECK(form.coefficients[2] == rationals({0, 10, 11}));
  CHECK(form.render(0) == "11*x1 + 10*x2 + 20");
  CHECK(form.render(1) == "10*x1 + 21*x2 + 10*x3 + 10");
}

TEST_CASE("path cost forms of the four-route section") {
  PathCostForm form = path_cost_coefficients(segment_12_26());
  CHECK(form.constants == rationals({5, 5, 15, 25}));
  CHECK(form.coefficients[0] == rationals({21, 20, 10, 0}));
  CHECK(form.coefficients[1] == rationals({20, 23, 12, 1}));
  CHECK(form.coefficients[2] == rationals({10, 12, 13, 2}));
  CHECK(form.coefficients[3] == rationals({0, 1, 2, 3}));
  CHECK(form.render(3) == "1*x2 + 2*x3 + 3*x4 + 25");
}

TEST_CASE("one path over one affine edge") {
  FlowProblem p;
  p.edges = {{1, 5, 1}};
  p.paths = {{1}};
  p.demand = Rational(2);
  PathCostForm form = path_cost_coefficients(p);
  CHECK(form.constants == rationals({5}));
  CHECK(form.coefficients[0] == rationals({1}));

  EquilibriumResult r = solve_equilibrium(p, EquilibriumMode::equal_cost);
  CHECK(r.flows == rationals({2}));
  CHECK(r.common_cost == Rational(7));
}

TEST_CASE("equal-cost equilibrium of the three-route section") {
  EquilibriumResult r = solve_equilibrium(segment_0_34(), EquilibriumMode::equal_cost);
  CHECK(r.flows == std::vector<Rational>{Rational(23, 13), Rational(-7, 13), Rational(23, 13)});
  CHECK(r.common_cost == Rational(443, 13));
  CHECK(r.common_cost.mixed_str() == "34 1/13");
  CHECK(verify_equilibrium(segment_0_34(), r).empty());
}

TEST_CASE("equal-cost equilibrium of the four-route section") {
  EquilibriumResult r = solve_equilibrium(segment_12_26(), EquilibriumMode::equal_cost);
  CHECK(r.flows == std::vector<Rational>{Rational(31, 23), Rational(-7, 46), Rational(0),
                                         Rational(83, 46)});
  CHECK(r.common_cost == Rational(696, 23));
  CHECK(r.common_cost.mixed_str() == "30 6/23");
  CHECK(verify_equilibrium(segment_12_26(), r).empty());
}

TEST_CASE("nonnegative equilibrium drops the middle route") {
  EquilibriumResult r = solve_equilibrium(segment_0_34(), EquilibriumMode::nonnegative);
  CHECK(r.flows == std::vector<Rational>{Rational(3, 2), Rational(0), Rational(3, 2)});
  CHECK(r.common_cost == Rational(73, 2));
  CHECK(r.support == std::vector<std::size_t>{0, 2});
  CHECK(verify_equilibrium(segment_0_34(), r).empty());

  // The unused path must not be cheaper than the common cost.
  PathCostForm form = path_cost_coefficients(segment_0_34());
  CHECK(form.cost_of(1, r.flows) == Rational(40));
  CHECK(Rational(40) >= r.common_cost);
}

TEST_CASE("nonnegative solutions admit no profitable path switch") {
  // Wardrop check by direct substitution: moving any amount off a used
  // path onto another may only meet or exceed the common cost.
  FlowProblem p = segment_0_34();
  EquilibriumResult r = solve_equilibrium(p, EquilibriumMode::nonnegative);
  PathCostForm form = path_cost_coefficients(p);
  for (std::size_t from = 0; from < r.flows.size(); ++from) {
    if (!(r.flows[from] > Rational(0))) continue;
    for (std::size_t to = 0; to < r.flows.size(); ++to) {
      if (to == from) continue;
      for (Rational amount : {Rational(1), r.flows[from]}) {
        std::vector<Rational> moved = r.flows;
        moved[from] -= amount;
        moved[to] += amount;
        CHECK(form.cost_of(to, moved) >= r.common_cost);
      }
    }
  }
}

TEST_CASE("zero demand routes nothing and verifies") {
  FlowProblem p = segment_0_34();
  p.demand = Rational(0);
  EquilibriumResult r = solve_equilibrium(p, EquilibriumMode::nonnegative);
  CHECK(r.flows == rationals({0, 0, 0}));
  CHECK(r.support.empty());
  CHECK(verify_equilibrium(p, r).empty());
}

TEST_CASE("singular and inconsistent stacked systems are solver errors") {
  // Paths {1} and {1,2} with a zero-slope, zero-cost second edge have
  // identical cost forms: the difference row vanishes.
  FlowProblem p;
  p.edges = {{1, 0, 1}, {2, 0, 0}};
  p.paths = {{1}, {1, 2}};
  p.demand = Rational(1);
  CHECK_THROWS_AS(solve_equilibrium(p, EquilibriumMode::equal_cost), SolveError);

  // With a nonzero fixed cost on the extra edge the same rows contradict.
  p.edges[1].fixed = Rational(5);
  CHECK_THROWS_AS(solve_equilibrium(p, EquilibriumMode::equal_cost), SolveError);

  try {
    solve_equilibrium(p, EquilibriumMode::equal_cost);
  } catch (const SolveError& e) {
    CHECK(std::string(e.what()).find("x1") != std::string::npos);  // offending system included
  }
}

TEST_CASE("nonnegative mode skips supports whose unused paths undercut them") {
  FlowProblem p;
  p.edges = {{1, 0, 1}, {2, 10, -1}};
  p.paths = {{1}, {2}};
  p.demand = Rational(1);
  // cost1 = x1, cost2 = 10 - x2. Support {1}: cost1 = 1, cost2 = 10 >= 1 ok.
  EquilibriumResult r = solve_equilibrium(p, EquilibriumMode::nonnegative);
  CHECK(r.flows == rationals({1, 0}));
  CHECK(r.common_cost == Rational(1));

  // With the unused path cheap enough, the enumeration moves past {1} and
  // settles on {2} instead.
  p.edges[1].fixed = Rational(-10);
  r = solve_equilibrium(p, EquilibriumMode::nonnegative);
  CHECK(r.flows == rationals({0, 1}));
  CHECK(r.common_cost == Rational(-11));
  CHECK(verify_equilibrium(p, r).empty());
}

TEST_CASE("support enumeration is guarded against blowup") {
  FlowProblem p;
  for (int e = 1; e <= 17; ++e) p.edges.push_back({e, 1, 1});
  for (int e = 1; e <= 17; ++e) p.paths.push_back({e});
  p.demand = Rational(1);
  CHECK_THROWS_AS(solve_equilibrium(p, EquilibriumMode::nonnegative), SolveError);
}

TEST_CASE("flow problem validation names the defect") {
  FlowProblem p = segment_0_34();
  p.paths.push_back({9});
  CHECK_THROWS_WITH_AS(validate_flow_problem(p), doctest::Contains("unknown edge"),
                       std::invalid_argument);

  p = segment_0_34();
  p.paths.push_back(p.paths[0]);
  CHECK_THROWS_WITH_AS(validate_flow_problem(p), doctest::Contains("duplicate path"),
                       std::invalid_argument);

  p = segment_0_34();
  p.paths[0] = {1, 1};
  CHECK_THROWS_WITH_AS(validate_flow_problem(p), doctest::Contains("repeats edge"),
                       std::invalid_argument);

  p = segment_0_34();
  p.paths[0] = {};
  CHECK_THROWS_WITH_AS(validate_flow_problem(p), doctest::Contains("is empty"),
                       std::invalid_argument);

  p = segment_0_34();
  p.edges.push_back({1, 0, 0});
  CHECK_THROWS_WITH_AS(validate_flow_problem(p), doctest::Contains("duplicate edge id"),
                       std::invalid_argument);

  p = segment_0_34();
  p.demand = Rational(-1);
  CHECK_THROWS_WITH_AS(validate_flow_problem(p), doctest::Contains("negative demand"),
                       std::invalid_argument);

  p = segment_0_34();
  p.paths.clear();
  CHECK_THROWS_WITH_AS(validate_flow_problem(p), doctest::Contains("no paths"),
                       std::invalid_argument);
}

TEST_CASE("the checker flags unbalanced flows with their real costs") {
  FlowProblem p = segment_0_34();
  EquilibriumResult bogus;
  bogus.mode = EquilibriumMode::equal_cost;
  bogus.flows = rationals({3, 0, 0});
  bogus.common_cost = Rational(53);
  auto violations = verify_equilibrium(p, bogus);
  REQUIRE(violations.size() == 2);  // direct substitution: costs 53, 40, 20
  CHECK(violations[0].find("40") != std::string::npos);
  CHECK(violations[1].find("20") != std::string::npos);

  bogus.flows = rationals({3, 0, 1});
  CHECK_FALSE(verify_equilibrium(p, bogus).empty());  // conservation breaks too
}

TEST_CASE("checker accepts solver output and rejects perturbations") {
  std::mt19937_64 rng(51);
  int solved = 0;
  while (solved < 50) {
    FlowProblem p = testsupport::random_flow_problem(rng);
    EquilibriumResult r;
    try {
      r = solve_equilibrium(p, EquilibriumMode::equal_cost);
    } catch (const SolveError&) {
      continue;
    }
    ++solved;
    CHECK(verify_equilibrium(p, r).empty());

    const Rational epsilon(1, 1000);
    for (std::size_t i = 0; i < r.flows.size(); ++i) {
      EquilibriumResult perturbed = r;
      perturbed.flows[i] += epsilon;
      CHECK_FALSE(verify_equilibrium(p, perturbed).empty());
    }
    EquilibriumResult perturbed = r;
    perturbed.common_cost += epsilon;
    CHECK_FALSE(verify_equilibrium(p, perturbed).empty());
  }
}

TEST_CASE("permuting the paths permutes the flows") {
  FlowProblem p = segment_0_34();
  EquilibriumResult base = solve_equilibrium(p, EquilibriumMode::equal_cost);

  FlowProblem permuted = p;
  permuted.paths = {p.paths[1], p.paths[0], p.paths[2]};
  EquilibriumResult r = solve_equilibrium(permuted, EquilibriumMode::equal_cost);
  CHECK(r.flows == std::vector<Rational>{base.flows[1], base.flows[0], base.flows[2]});
  CHECK(r.common_cost == base.common_cost);
}
