#include <benchmark/benchmark.h>

#include <random>

#include "tradenet/apsp.hpp"
#include "tradenet/compromise.hpp"
#include "tradenet/equilibrium.hpp"
#include "tradenet/market.hpp"
#include "tradenet/model.hpp"

namespace {

using namespace tradenet;

Network random_network(int nodes, int extra_edges, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> weight(0, 20);
  Network net;
  net.node_count = nodes;
  auto random_cost = [&] {
    return EdgeCost{weight(rng), weight(rng), weight(rng), weight(rng)};
  };
  for (int v = 1; v < nodes; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    net.edges.push_back({parent(rng), v, random_cost(), std::nullopt});
  }
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : net.edges) seen.insert(std::minmax(e.u, e.v));
  std::uniform_int_distribution<int> pick(0, nodes - 1);
  while (extra_edges > 0) {
    int u = pick(rng), v = pick(rng);
    if (u == v || !seen.insert(std::minmax(u, v)).second) continue;
    net.edges.push_back({u, v, random_cost(), std::nullopt});
    --extra_edges;
  }
  return net;
}

void BM_floyd_all_pairs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Network net = random_network(n, 3 * n, 7);
  CostView view = cost_view(net, CostRole::retailer);
  for (auto _ : state) {
    CostMatrix m = floyd_all_pairs(view);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_floyd_all_pairs)->Arg(64)->Arg(128)->Arg(256);

void BM_income_matrix(benchmark::State& state) {
  const int sites = static_cast<int>(state.range(0));
  Network net = random_network(40, 120, 11);
  Instance inst;
  inst.network = net;
  inst.producers = {{0, 2}, {1, 3}};
  for (int c = 2; c < 10; ++c) inst.consumers.push_back({c, 1});
  for (int s = 0; s < sites; ++s) inst.candidate_sites.push_back(10 + s);
  inst.retailer_count = 2;
  inst.markup_rate = Rational(1);

  CostMatrix retailer = floyd_all_pairs(cost_view(net, CostRole::retailer));
  CostMatrix consumer = floyd_all_pairs(cost_view(net, CostRole::consumer));
  std::vector<int> producers = {0, 1};
  std::vector<int> consumers;
  for (const Consumer& c : inst.consumers) consumers.push_back(c.node);
  DistanceTable prod = select_distances(retailer, producers, inst.candidate_sites);
  DistanceTable cons = select_distances(consumer, consumers, inst.candidate_sites);

  for (auto _ : state) {
    IncomeMatrix m = income_matrix(inst, prod, cons);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_income_matrix)->Arg(6)->Arg(10);

void BM_compromise_pipeline(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> value(0, 1000);
  IncomeMatrix incomes;
  const int situations = static_cast<int>(state.range(0));
  for (int s = 0; s < situations; ++s) {
    incomes.situations.push_back({{s, s + 1}});
    std::vector<Rational> row;
    for (int j = 0; j < 8; ++j) row.emplace_back(value(rng));
    incomes.incomes.push_back(std::move(row));
  }
  for (auto _ : state) {
    CompromiseResult r = solve_compromise(incomes);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_compromise_pipeline)->Arg(64)->Arg(512);

FlowProblem chain_problem(int paths) {
  // Shared head edge plus one private affine edge per path.
  FlowProblem p;
  p.edges.push_back({0, Rational(0), Rational(1)});
  for (int i = 1; i <= paths; ++i) p.edges.push_back({i, Rational(5 * i), Rational(i)});
  for (int i = 1; i <= paths; ++i) p.paths.push_back({0, i});
  p.demand = Rational(paths);
  return p;
}

void BM_equilibrium_equal_cost(benchmark::State& state) {
  FlowProblem p = chain_problem(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    EquilibriumResult r = solve_equilibrium(p, EquilibriumMode::equal_cost);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_equilibrium_equal_cost)->Arg(4)->Arg(8);

void BM_equilibrium_support_enumeration(benchmark::State& state) {
  FlowProblem p = chain_problem(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    EquilibriumResult r = solve_equilibrium(p, EquilibriumMode::nonnegative);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_equilibrium_support_enumeration)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
