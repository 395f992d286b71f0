#ifndef TRADENET_MODEL_HPP
#define TRADENET_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tradenet/rational.hpp"

namespace tradenet {

/// Per-edge cost split: pure transportation plus a corruption surcharge,
/// tracked separately for the retailer channel and the consumer channel.
struct EdgeCost {
  std::int64_t transport_retailer = 0;
  std::int64_t corruption_retailer = 0;
  std::int64_t transport_consumer = 0;
  std::int64_t corruption_consumer = 0;

  std::int64_t total_retailer() const { return transport_retailer + corruption_retailer; }
  std::int64_t total_consumer() const { return transport_consumer + corruption_consumer; }

  bool operator==(const EdgeCost&) const = default;
};

struct Edge {
  int u = 0;
  int v = 0;
  EdgeCost cost;
  std::optional<std::int64_t> capacity;  // parsed and retained, consulted by nothing

  bool operator==(const Edge&) const = default;
};

/// Undirected network; node ids are 0..node_count-1.
struct Network {
  int node_count = 0;
  std::vector<Edge> edges;

  bool operator==(const Network&) const = default;
};

struct Producer {
  int node = 0;
  std::int64_t unit_price = 0;

  bool operator==(const Producer&) const = default;
};

struct Consumer {
  int node = 0;
  std::int64_t demand = 1;

  bool operator==(const Consumer&) const = default;
};

struct Instance {
  Network network;
  std::vector<Producer> producers;
  std::vector<Consumer> consumers;
  std::vector<int> candidate_sites;
  int retailer_count = 1;
  Rational markup_rate;  // 1 = 100%

  bool operator==(const Instance&) const = default;
};

/// One joint placement: assignment[j] is retailer j's site. Entries are
/// pairwise distinct candidate sites.
struct Situation {
  std::vector<int> sites;

  /// "(22,15)" - sites in assignment order.
  std::string label() const;

  bool operator==(const Situation&) const = default;
};

struct ValidationIssue {
  std::string field;
  std::string message;

  bool operator==(const ValidationIssue&) const = default;
};

/// Checks every model invariant; an empty result means the instance is
/// valid. Never mutates its argument, so validation is idempotent.
std::vector<ValidationIssue> validate_instance(const Instance& instance);

enum class CostRole { retailer, consumer };

/// Symmetric one-hop weights under a single cost channel. Diagonal is 0;
/// node pairs without an edge are unreachable-in-one-hop.
class CostView {
 public:
  explicit CostView(int node_count)
      : n_(node_count), weights_(static_cast<std::size_t>(node_count) * node_count) {
    for (int v = 0; v < node_count; ++v) weights_[index(v, v)] = 0;
  }

  int node_count() const { return n_; }

  std::optional<std::int64_t> weight(int u, int v) const { return weights_[index(u, v)]; }

  void set_weight(int u, int v, std::int64_t w) {
    weights_[index(u, v)] = w;
    weights_[index(v, u)] = w;
  }

 private:
  std::size_t index(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int n_;
  std::vector<std::optional<std::int64_t>> weights_;
};

/// Projects a validated network onto one channel's total edge weights.
CostView cost_view(const Network& network, CostRole role);

}  // namespace tradenet

#endif
