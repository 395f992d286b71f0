#ifndef TRADENET_MARKET_HPP
#define TRADENET_MARKET_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tradenet/apsp.hpp"
#include "tradenet/model.hpp"
#include "tradenet/rational.hpp"

namespace tradenet {

/// Price of goods at a delivery site: the cheapest producer's unit price
/// plus its retailer-channel distance, marked up.
struct SitePrice {
  int site = 0;
  int producer_index = 0;  // index into Instance::producers
  int producer_node = 0;
  std::int64_t base_cost = 0;  // l_p + d_retailer(p, site)
  Rational price;              // (1 + markup) * base_cost, exact

  bool operator==(const SitePrice&) const = default;
};

enum class PayoffMode {
  revenue,  // income = price * units sold (default)
  units,    // income = units sold
};

struct UnservedConsumer {
  std::size_t situation_index = 0;
  int consumer_node = 0;

  bool operator==(const UnservedConsumer&) const = default;
};

/// Per-situation, per-retailer incomes, plus a warning list of consumers
/// that could not reach any placed site.
struct IncomeMatrix {
  std::vector<Situation> situations;
  std::vector<std::vector<Rational>> incomes;  // situations x retailers
  std::vector<UnservedConsumer> unserved;
};

/// All unordered site combinations of the given size, one situation each.
/// Enumeration follows candidate-list order, so the first listed site of a
/// combination belongs to retailer 1. Throws std::invalid_argument when
/// retailer_count exceeds the candidate count.
std::vector<Situation> enumerate_situations(std::span<const int> candidate_sites,
                                            int retailer_count);

/// producer_site_costs: rows follow instance.producers, columns carry site
/// ids. Throws SolveError when no producer reaches the site.
SitePrice site_price(const Instance& instance, int site, const DistanceTable& producer_site_costs);

/// The retailer whose placed site minimizes price + consumer distance.
/// Ties go to the lower price, then the lower site id. Returns nullopt when
/// every placed site is unreachable (the consumer buys nothing).
std::optional<int> consumer_choice(
    const std::vector<std::pair<int, SitePrice>>& placed,
    const std::vector<std::optional<std::int64_t>>& consumer_costs);

/// Income of every retailer in every situation. consumer_site_costs: rows
/// follow instance.consumers, columns carry site ids. Distance tables may
/// come from floyd_all_pairs or from replay input.
IncomeMatrix income_matrix(const Instance& instance, const DistanceTable& producer_site_costs,
                           const DistanceTable& consumer_site_costs,
                           PayoffMode mode = PayoffMode::revenue);

}  // namespace tradenet

#endif
