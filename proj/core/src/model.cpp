#include "tradenet/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace tradenet {

std::string Situation::label() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (i > 0) os << ",";
    os << sites[i];
  }
  os << ")";
  return os.str();
}

namespace {

bool in_range(int node, const Network& net) {
  return node >= 0 && node < net.node_count;
}

std::string node_str(int node) {
  return "x" + std::to_string(node);
}

}  // namespace

std::vector<ValidationIssue> validate_instance(const Instance& instance) {
  std::vector<ValidationIssue> issues;
  auto add = [&](std::string field, std::string message) {
    issues.push_back({std::move(field), std::move(message)});
  };

  const Network& net = instance.network;
  if (net.node_count <= 0) add("network.node_count", "must be positive");

  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < net.edges.size(); ++i) {
    const Edge& e = net.edges[i];
    const std::string field = "edges[" + std::to_string(i) + "]";
    if (!in_range(e.u, net) || !in_range(e.v, net)) {
      add(field, "node out of range: (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
      continue;
    }
    if (e.u == e.v) add(field, "self-loop at " + node_str(e.u));
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) {
      add(field, "duplicate edge {" + std::to_string(key.first) + "," + std::to_string(key.second) + "}");
    }
    if (e.cost.transport_retailer < 0 || e.cost.corruption_retailer < 0 ||
        e.cost.transport_consumer < 0 || e.cost.corruption_consumer < 0) {
      add(field, "negative cost component");
    }
    if (e.capacity && *e.capacity < 0) add(field, "negative capacity");
  }

  for (std::size_t i = 0; i < instance.producers.size(); ++i) {
    const Producer& p = instance.producers[i];
    const std::string field = "producers[" + std::to_string(i) + "]";
    if (!in_range(p.node, net)) add(field, "node out of range: " + std::to_string(p.node));
    if (p.unit_price < 0) add(field, "negative unit price");
  }

  for (std::size_t i = 0; i < instance.consumers.size(); ++i) {
    const Consumer& c = instance.consumers[i];
    const std::string field = "consumers[" + std::to_string(i) + "]";
    if (!in_range(c.node, net)) add(field, "node out of range: " + std::to_string(c.node));
    if (c.demand <= 0) add(field, "demand must be positive");
  }

  if (instance.candidate_sites.empty()) add("candidate_sites", "empty candidate set");
  std::set<int> producer_nodes;
  for (const Producer& p : instance.producers) producer_nodes.insert(p.node);
  std::set<int> sites_seen;
  for (std::size_t i = 0; i < instance.candidate_sites.size(); ++i) {
    int s = instance.candidate_sites[i];
    const std::string field = "candidate_sites[" + std::to_string(i) + "]";
    if (!in_range(s, net)) {
      add(field, "node out of range: " + std::to_string(s));
      continue;
    }
    if (!sites_seen.insert(s).second) add(field, "duplicate site " + node_str(s));
    if (producer_nodes.count(s)) add(field, "site colocated with producer at " + node_str(s));
  }

  if (instance.retailer_count <= 0) {
    add("retailer_count", "must be positive");
  } else if (instance.retailer_count > static_cast<int>(instance.candidate_sites.size())) {
    add("retailer_count", "exceeds number of candidate sites");
  }

  if (instance.markup_rate.is_negative()) add("markup", "must be non-negative");

  return issues;
}

CostView cost_view(const Network& network, CostRole role) {
  CostView view(network.node_count);
  for (const Edge& e : network.edges) {
    std::int64_t w = role == CostRole::retailer ? e.cost.total_retailer() : e.cost.total_consumer();
    view.set_weight(e.u, e.v, w);
  }
  return view;
}

}  // namespace tradenet
