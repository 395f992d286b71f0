#ifndef TRADENET_DOCUMENTS_HPP
#define TRADENET_DOCUMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tradenet/equilibrium.hpp"
#include "tradenet/market.hpp"
#include "tradenet/model.hpp"

namespace tradenet {

/// A validated instance plus document-level settings. Parsing is strict:
/// unknown keys are rejected, and diagnostics name the offending field.
struct InstanceDocument {
  Instance instance;
  PayoffMode payoff_mode = PayoffMode::revenue;
  std::string comment;

  bool operator==(const InstanceDocument&) const = default;
};

enum class MatrixConvention {
  distance_only,        // "d": plain shortest-path distances
  price_plus_distance,  // "l_plus_d": producer unit price already added
};

struct ReplayMatrix {
  MatrixConvention convention = MatrixConvention::distance_only;
  std::vector<std::vector<std::int64_t>> values;

  bool operator==(const ReplayMatrix&) const = default;
};

/// Pre-tabulated distance tables that replace recomputed ones, so every
/// downstream table reproduces its source bit-exactly.
struct ReplayDocument {
  std::optional<ReplayMatrix> producer_site_matrix;
  std::optional<ReplayMatrix> consumer_site_matrix;  // always plain distances
  std::string comment;

  bool operator==(const ReplayDocument&) const = default;
};

struct FlowProblemDocument {
  FlowProblem problem;
  std::string comment;
};

enum class DocumentKind { instance, flow_problem };

/// Flow-problem documents carry a "paths" key; everything else is treated
/// as an instance. Throws ParseError on malformed JSON.
DocumentKind detect_document_kind(const std::string& text);

/// All parsers throw ParseError carrying field-precise details.
InstanceDocument parse_instance(const std::string& text);
ReplayDocument parse_replay(const std::string& text, const Instance& instance);
FlowProblemDocument parse_flow_problem(const std::string& text);

std::string render_instance(const InstanceDocument& doc);
std::string render_replay(const ReplayDocument& doc);
std::string render_flow_problem(const FlowProblemDocument& doc);

}  // namespace tradenet

#endif
