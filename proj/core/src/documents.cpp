#include "tradenet/documents.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

#include "tradenet/errors.hpp"

namespace tradenet {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ParseError(field + ": " + message);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what());
  }
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) fail(where.empty() ? key : where + "." + key, "unknown key");
  }
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where.empty() ? key : where + "." + key, "missing required key");
  return *it;
}

std::int64_t get_int(const json& value, const std::string& field) {
  if (!value.is_number_integer()) fail(field, "expected an integer");
  return value.get<std::int64_t>();
}

std::int64_t get_nonneg(const json& value, const std::string& field) {
  std::int64_t v = get_int(value, field);
  if (v < 0) fail(field, "must be non-negative");
  return v;
}

std::string get_string(const json& value, const std::string& field) {
  if (!value.is_string()) fail(field, "expected a string");
  return value.get<std::string>();
}

Rational get_rational(const json& value, const std::string& field) {
  try {
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    if (value.is_string()) return Rational::parse(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(field, e.what());
  }
  fail(field, "expected an integer or a rational string like \"1/2\"");
}

}  // namespace

DocumentKind detect_document_kind(const std::string& text) {
  json doc = parse_json(text);
  if (doc.is_object() && doc.contains("paths")) return DocumentKind::flow_problem;
  return DocumentKind::instance;
}

InstanceDocument parse_instance(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
  reject_unknown_keys(doc,
                      {"comment", "node_count", "edges", "producers", "consumers",
                       "candidate_sites", "retailer_count", "markup", "payoff_mode"},
                      "");

  InstanceDocument out;
  Instance& inst = out.instance;

  if (doc.contains("comment")) out.comment = get_string(doc["comment"], "comment");

  inst.network.node_count = static_cast<int>(get_int(require(doc, "node_count", ""), "node_count"));

  const json& edges = require(doc, "edges", "");
  if (!edges.is_array()) fail("edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    if (!e.is_object()) fail(where, "expected an object");
    reject_unknown_keys(e,
                        {"u", "v", "ca_transport", "ca_corruption", "cb_transport",
                         "cb_corruption", "capacity"},
                        where);
    Edge edge;
    edge.u = static_cast<int>(get_int(require(e, "u", where), where + ".u"));
    edge.v = static_cast<int>(get_int(require(e, "v", where), where + ".v"));
    edge.cost.transport_retailer = get_nonneg(require(e, "ca_transport", where), where + ".ca_transport");
    edge.cost.corruption_retailer = get_nonneg(require(e, "ca_corruption", where), where + ".ca_corruption");
    edge.cost.transport_consumer = get_nonneg(require(e, "cb_transport", where), where + ".cb_transport");
    edge.cost.corruption_consumer = get_nonneg(require(e, "cb_corruption", where), where + ".cb_corruption");
    if (e.contains("capacity")) edge.capacity = get_nonneg(e["capacity"], where + ".capacity");
    inst.network.edges.push_back(edge);
  }

  const json& producers = require(doc, "producers", "");
  if (!producers.is_array()) fail("producers", "expected an array");
  for (std::size_t i = 0; i < producers.size(); ++i) {
    const std::string where = "producers[" + std::to_string(i) + "]";
    const json& p = producers[i];
    if (!p.is_object()) fail(where, "expected an object");
    reject_unknown_keys(p, {"node", "unit_price"}, where);
    Producer producer;
    producer.node = static_cast<int>(get_int(require(p, "node", where), where + ".node"));
    producer.unit_price = get_nonneg(require(p, "unit_price", where), where + ".unit_price");
    inst.producers.push_back(producer);
  }

  const json& consumers = require(doc, "consumers", "");
  if (!consumers.is_array()) fail("consumers", "expected an array");
  for (std::size_t i = 0; i < consumers.size(); ++i) {
    const std::string where = "consumers[" + std::to_string(i) + "]";
    const json& c = consumers[i];
    if (!c.is_object()) fail(where, "expected an object");
    reject_unknown_keys(c, {"node", "demand"}, where);
    Consumer consumer;
    consumer.node = static_cast<int>(get_int(require(c, "node", where), where + ".node"));
    if (c.contains("demand")) consumer.demand = get_int(c["demand"], where + ".demand");
    inst.consumers.push_back(consumer);
  }

  const json& sites = require(doc, "candidate_sites", "");
  if (!sites.is_array()) fail("candidate_sites", "expected an array");
  for (std::size_t i = 0; i < sites.size(); ++i) {
    inst.candidate_sites.push_back(
        static_cast<int>(get_int(sites[i], "candidate_sites[" + std::to_string(i) + "]")));
  }

  inst.retailer_count =
      static_cast<int>(get_int(require(doc, "retailer_count", ""), "retailer_count"));
  inst.markup_rate = get_rational(require(doc, "markup", ""), "markup");
  if (inst.markup_rate.is_negative()) fail("markup", "must be non-negative");

  if (doc.contains("payoff_mode")) {
    std::string mode = get_string(doc["payoff_mode"], "payoff_mode");
    if (mode == "revenue") {
      out.payoff_mode = PayoffMode::revenue;
    } else if (mode == "units") {
      out.payoff_mode = PayoffMode::units;
    } else {
      fail("payoff_mode", "expected \"revenue\" or \"units\"");
    }
  }

  auto issues = validate_instance(inst);
  if (!issues.empty()) {
    std::vector<std::string> details;
    details.reserve(issues.size());
    for (const auto& issue : issues) details.push_back(issue.field + ": " + issue.message);
    throw ParseError("instance failed validation (" + std::to_string(issues.size()) + " issue(s))",
                     details);
  }
  return out;
}

namespace {

ReplayMatrix parse_replay_matrix(const json& node, const std::string& where, bool with_convention,
                                 std::size_t rows, std::size_t cols) {
  if (!node.is_object()) fail(where, "expected an object");
  std::set<std::string> allowed = {"values"};
  if (with_convention) allowed.insert("convention");
  reject_unknown_keys(node, allowed, where);

  ReplayMatrix matrix;
  if (with_convention && node.contains("convention")) {
    std::string conv = get_string(node["convention"], where + ".convention");
    if (conv == "d") {
      matrix.convention = MatrixConvention::distance_only;
    } else if (conv == "l_plus_d") {
      matrix.convention = MatrixConvention::price_plus_distance;
    } else {
      fail(where + ".convention", "expected \"d\" or \"l_plus_d\"");
    }
  }

  const json& values = require(node, "values", where);
  if (!values.is_array() || values.size() != rows) {
    fail(where + ".values", "expected " + std::to_string(rows) + " rows");
  }
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = values[r];
    const std::string row_where = where + ".values[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != cols) {
      fail(row_where, "expected " + std::to_string(cols) + " columns");
    }
    std::vector<std::int64_t> out_row;
    out_row.reserve(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      out_row.push_back(get_nonneg(row[c], row_where + "[" + std::to_string(c) + "]"));
    }
    matrix.values.push_back(std::move(out_row));
  }
  return matrix;
}

}  // namespace

ReplayDocument parse_replay(const std::string& text, const Instance& instance) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("replay document must be a JSON object");
  reject_unknown_keys(doc, {"comment", "producer_site_matrix", "consumer_site_matrix"}, "");

  ReplayDocument out;
  if (doc.contains("comment")) out.comment = get_string(doc["comment"], "comment");
  const std::size_t sites = instance.candidate_sites.size();
  if (doc.contains("producer_site_matrix")) {
    out.producer_site_matrix = parse_replay_matrix(doc["producer_site_matrix"],
                                                   "producer_site_matrix", true,
                                                   instance.producers.size(), sites);
    if (out.producer_site_matrix->convention == MatrixConvention::price_plus_distance) {
      // l+d entries must cover the producer's own unit price.
      for (std::size_t p = 0; p < instance.producers.size(); ++p) {
        for (std::size_t s = 0; s < sites; ++s) {
          if (out.producer_site_matrix->values[p][s] < instance.producers[p].unit_price) {
            fail("producer_site_matrix.values[" + std::to_string(p) + "][" + std::to_string(s) + "]",
                 "l+d value below the producer's unit price");
          }
        }
      }
    }
  }
  if (doc.contains("consumer_site_matrix")) {
    out.consumer_site_matrix = parse_replay_matrix(doc["consumer_site_matrix"],
                                                   "consumer_site_matrix", false,
                                                   instance.consumers.size(), sites);
  }
  return out;
}

FlowProblemDocument parse_flow_problem(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("flow problem document must be a JSON object");
  reject_unknown_keys(doc, {"comment", "edges", "paths", "demand"}, "");

  FlowProblemDocument out;
  if (doc.contains("comment")) out.comment = get_string(doc["comment"], "comment");

  const json& edges = require(doc, "edges", "");
  if (!edges.is_array()) fail("edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    if (!e.is_object()) fail(where, "expected an object");
    reject_unknown_keys(e, {"id", "fixed", "slope"}, where);
    FlowEdge edge;
    edge.id = static_cast<int>(get_int(require(e, "id", where), where + ".id"));
    edge.fixed = get_rational(require(e, "fixed", where), where + ".fixed");
    edge.slope = get_rational(require(e, "slope", where), where + ".slope");
    out.problem.edges.push_back(edge);
  }

  const json& paths = require(doc, "paths", "");
  if (!paths.is_array()) fail("paths", "expected an array");
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const std::string where = "paths[" + std::to_string(i) + "]";
    const json& p = paths[i];
    if (!p.is_array()) fail(where, "expected an array of edge ids");
    std::vector<int> path;
    for (std::size_t j = 0; j < p.size(); ++j) {
      path.push_back(static_cast<int>(get_int(p[j], where + "[" + std::to_string(j) + "]")));
    }
    out.problem.paths.push_back(std::move(path));
  }

  out.problem.demand = get_rational(require(doc, "demand", ""), "demand");

  try {
    validate_flow_problem(out.problem);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return out;
}

namespace {

json rational_value(const Rational& r) {
  if (r.is_integer()) {
    // Keep integers as JSON numbers when they fit; exactness is preserved
    // either way because rendering falls back to strings.
    mpz_class num = r.numerator();
    if (num.fits_slong_p()) return json(num.get_si());
  }
  return json(r.str());
}

}  // namespace

std::string render_instance(const InstanceDocument& doc) {
  json out;
  if (!doc.comment.empty()) out["comment"] = doc.comment;
  const Instance& inst = doc.instance;
  out["node_count"] = inst.network.node_count;
  out["edges"] = json::array();
  for (const Edge& e : inst.network.edges) {
    json edge = {{"u", e.u},
                 {"v", e.v},
                 {"ca_transport", e.cost.transport_retailer},
                 {"ca_corruption", e.cost.corruption_retailer},
                 {"cb_transport", e.cost.transport_consumer},
                 {"cb_corruption", e.cost.corruption_consumer}};
    if (e.capacity) edge["capacity"] = *e.capacity;
    out["edges"].push_back(edge);
  }
  out["producers"] = json::array();
  for (const Producer& p : inst.producers) {
    out["producers"].push_back({{"node", p.node}, {"unit_price", p.unit_price}});
  }
  out["consumers"] = json::array();
  for (const Consumer& c : inst.consumers) {
    json consumer = {{"node", c.node}};
    if (c.demand != 1) consumer["demand"] = c.demand;
    out["consumers"].push_back(consumer);
  }
  out["candidate_sites"] = inst.candidate_sites;
  out["retailer_count"] = inst.retailer_count;
  out["markup"] = inst.markup_rate.str();
  if (doc.payoff_mode == PayoffMode::units) out["payoff_mode"] = "units";
  return out.dump(2) + "\n";
}

std::string render_replay(const ReplayDocument& doc) {
  json out;
  if (!doc.comment.empty()) out["comment"] = doc.comment;
  if (doc.producer_site_matrix) {
    out["producer_site_matrix"] = {
        {"convention", doc.producer_site_matrix->convention == MatrixConvention::distance_only
                           ? "d"
                           : "l_plus_d"},
        {"values", doc.producer_site_matrix->values}};
  }
  if (doc.consumer_site_matrix) {
    out["consumer_site_matrix"] = {{"values", doc.consumer_site_matrix->values}};
  }
  return out.dump(2) + "\n";
}

std::string render_flow_problem(const FlowProblemDocument& doc) {
  json out;
  if (!doc.comment.empty()) out["comment"] = doc.comment;
  out["edges"] = json::array();
  for (const FlowEdge& e : doc.problem.edges) {
    out["edges"].push_back(
        {{"id", e.id}, {"fixed", rational_value(e.fixed)}, {"slope", rational_value(e.slope)}});
  }
  out["paths"] = doc.problem.paths;
  out["demand"] = rational_value(doc.problem.demand);
  return out.dump(2) + "\n";
}

}  // namespace tradenet
