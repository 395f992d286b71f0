#ifndef TRADENET_REPORT_HPP
#define TRADENET_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tradenet/compromise.hpp"
#include "tradenet/documents.hpp"
#include "tradenet/equilibrium.hpp"

namespace tradenet {

/// Reports are built as structured sections holding exactly-rendered cell
/// strings, so text, CSV and JSON output carry identical values by
/// construction.
struct TableSection {
  std::string title;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<std::string>> cells;
};

struct KeyValueSection {
  std::string title;
  std::vector<std::pair<std::string, std::string>> items;
};

struct Report {
  std::vector<std::variant<TableSection, KeyValueSection>> sections;
};

enum class ReportFormat { text, csv, json };

std::string render_report(const Report& report, ReportFormat format);

struct ReportOptions {
  MatrixConvention display = MatrixConvention::distance_only;
  std::optional<PayoffMode> payoff_override;
  TiePolicy tie_policy = TiePolicy::first_in_enumeration;
};

/// One recompute-vs-replay disagreement, in the replay matrix's own
/// display convention.
struct DiffEntry {
  std::string table;
  std::string row;
  std::string col;
  std::string replay_value;
  std::string recomputed_value;
};

/// Everything the compromise pipeline produced, exact and structured;
/// compromise_report turns it into printable sections.
struct CompromiseRun {
  DistanceTable producer_site;  // plain distances, replayed or recomputed
  DistanceTable consumer_site;
  bool producer_from_replay = false;
  bool consumer_from_replay = false;
  std::vector<std::vector<std::optional<Rational>>> price_table;  // producers x sites
  std::vector<SitePrice> site_prices;                             // one per candidate site
  IncomeMatrix incomes;
  CompromiseResult compromise;
  std::vector<int> selected_sites_sorted;
  std::vector<DiffEntry> diffs;  // only populated in replay mode
};

CompromiseRun run_compromise(const InstanceDocument& doc,
                             const std::optional<ReplayDocument>& replay,
                             const ReportOptions& options = {});

Report compromise_report(const InstanceDocument& doc, const CompromiseRun& run,
                         const ReportOptions& options = {});

struct EquilibriumRun {
  PathCostForm form;
  LinearSystem system;  // the stacked system that pinned the solution
  EquilibriumResult result;
  std::vector<std::string> violations;  // from verify_equilibrium
};

EquilibriumRun run_equilibrium(const FlowProblemDocument& doc, EquilibriumMode mode);

Report equilibrium_report(const FlowProblemDocument& doc, const EquilibriumRun& run);

struct DistancesRun {
  CostRole metric = CostRole::retailer;
  DistanceTable table;  // plain distances
};

DistancesRun run_distances(const InstanceDocument& doc, CostRole metric);

Report distances_report(const InstanceDocument& doc, const DistancesRun& run,
                        const ReportOptions& options = {});

}  // namespace tradenet

#endif
