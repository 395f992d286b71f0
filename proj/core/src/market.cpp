#include "tradenet/market.hpp"

#include <stdexcept>

#include "tradenet/errors.hpp"

namespace tradenet {

std::vector<Situation> enumerate_situations(std::span<const int> candidate_sites,
                                            int retailer_count) {
  const int n = static_cast<int>(candidate_sites.size());
  if (retailer_count <= 0) throw std::invalid_argument("enumerate_situations: retailer_count must be positive");
  if (retailer_count > n) throw std::invalid_argument("enumerate_situations: retailer_count exceeds candidate sites");

  std::vector<Situation> out;
  std::vector<int> pick(retailer_count);
  for (int i = 0; i < retailer_count; ++i) pick[i] = i;
  while (true) {
    Situation s;
    s.sites.reserve(retailer_count);
    for (int idx : pick) s.sites.push_back(candidate_sites[idx]);
    out.push_back(std::move(s));

    int i = retailer_count - 1;
    while (i >= 0 && pick[i] == n - retailer_count + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < retailer_count; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

SitePrice site_price(const Instance& instance, int site,
                     const DistanceTable& producer_site_costs) {
  auto col = producer_site_costs.col_of(site);
  if (!col) throw std::invalid_argument("site_price: site " + std::to_string(site) + " not in cost table");

  std::optional<SitePrice> best;
  for (std::size_t p = 0; p < instance.producers.size(); ++p) {
    auto d = producer_site_costs.at(p, *col);
    if (!d) continue;
    std::int64_t base = instance.producers[p].unit_price + *d;
    if (!best || base < best->base_cost) {
      best = SitePrice{site, static_cast<int>(p), instance.producers[p].node, base, {}};
    }
  }
  if (!best) {
    throw SolveError("unpriceable site x" + std::to_string(site) +
                     ": unreachable from every producer");
  }
  best->price = (Rational(1) + instance.markup_rate) * Rational(best->base_cost);
  return *best;
}

std::optional<int> consumer_choice(
    const std::vector<std::pair<int, SitePrice>>& placed,
    const std::vector<std::optional<std::int64_t>>& consumer_costs) {
  if (placed.size() != consumer_costs.size()) {
    throw std::invalid_argument("consumer_choice: placed sites and cost row differ in length");
  }
  std::optional<int> chosen;
  Rational best_total, best_price;
  int best_site = 0;
  for (std::size_t i = 0; i < placed.size(); ++i) {
    if (!consumer_costs[i]) continue;
    const SitePrice& sp = placed[i].second;
    Rational total = sp.price + Rational(*consumer_costs[i]);
    bool better = !chosen || total < best_total ||
                  (total == best_total && (sp.price < best_price ||
                                           (sp.price == best_price && sp.site < best_site)));
    if (better) {
      chosen = placed[i].first;
      best_total = total;
      best_price = sp.price;
      best_site = sp.site;
    }
  }
  return chosen;
}

IncomeMatrix income_matrix(const Instance& instance, const DistanceTable& producer_site_costs,
                           const DistanceTable& consumer_site_costs, PayoffMode mode) {
  IncomeMatrix result;
  result.situations = enumerate_situations(instance.candidate_sites, instance.retailer_count);

  // Sites are priced once; every situation placing a retailer there sells
  // at the same price.
  std::vector<SitePrice> prices;
  prices.reserve(instance.candidate_sites.size());
  for (int site : instance.candidate_sites) {
    prices.push_back(site_price(instance, site, producer_site_costs));
  }
  auto price_of = [&](int site) -> const SitePrice& {
    for (const SitePrice& sp : prices) {
      if (sp.site == site) return sp;
    }
    throw std::logic_error("income_matrix: unknown site");
  };

  for (std::size_t s = 0; s < result.situations.size(); ++s) {
    const Situation& situation = result.situations[s];
    std::vector<std::pair<int, SitePrice>> placed;
    placed.reserve(situation.sites.size());
    for (std::size_t r = 0; r < situation.sites.size(); ++r) {
      placed.emplace_back(static_cast<int>(r), price_of(situation.sites[r]));
    }

    std::vector<Rational> incomes(instance.retailer_count, Rational(0));
    for (std::size_t c = 0; c < instance.consumers.size(); ++c) {
      const Consumer& consumer = instance.consumers[c];
      std::vector<std::optional<std::int64_t>> costs;
      costs.reserve(placed.size());
      for (const auto& [retailer, sp] : placed) {
        auto col = consumer_site_costs.col_of(sp.site);
        if (!col) throw std::invalid_argument("income_matrix: site missing from consumer cost table");
        costs.push_back(consumer_site_costs.at(c, *col));
      }
      auto choice = consumer_choice(placed, costs);
      if (!choice) {
        result.unserved.push_back({s, consumer.node});
        continue;
      }
      const SitePrice& sp = placed[*choice].second;
      Rational units(consumer.demand);
      incomes[*choice] += mode == PayoffMode::revenue ? sp.price * units : units;
    }
    result.incomes.push_back(std::move(incomes));
  }
  return result;
}

}  // namespace tradenet
