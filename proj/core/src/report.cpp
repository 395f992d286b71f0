#include "tradenet/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "tradenet/errors.hpp"

namespace tradenet {

namespace {

std::string node_label(int node) { return "x" + std::to_string(node); }

std::string cell(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "unreachable";
}

std::string cell(const std::optional<Rational>& v) {
  return v ? v->str() : "unreachable";
}

std::vector<int> producer_nodes(const Instance& inst) {
  std::vector<int> nodes;
  nodes.reserve(inst.producers.size());
  for (const Producer& p : inst.producers) nodes.push_back(p.node);
  return nodes;
}

std::vector<int> consumer_nodes(const Instance& inst) {
  std::vector<int> nodes;
  nodes.reserve(inst.consumers.size());
  for (const Consumer& c : inst.consumers) nodes.push_back(c.node);
  return nodes;
}

DistanceTable table_from_replay(const ReplayMatrix& matrix, const std::vector<int>& rows,
                                const std::vector<int>& cols, const Instance& inst,
                                bool producer_rows) {
  DistanceTable table;
  table.row_nodes = rows;
  table.col_nodes = cols;
  for (std::size_t r = 0; r < matrix.values.size(); ++r) {
    std::vector<std::optional<std::int64_t>> row;
    row.reserve(matrix.values[r].size());
    for (std::int64_t v : matrix.values[r]) {
      if (producer_rows && matrix.convention == MatrixConvention::price_plus_distance) {
        v -= inst.producers[r].unit_price;
      }
      row.push_back(v);
    }
    table.dist.push_back(std::move(row));
  }
  return table;
}

void append_diffs(std::vector<DiffEntry>& diffs, const std::string& table_name,
                  const ReplayMatrix& replay, const DistanceTable& recomputed,
                  const Instance& inst, bool producer_rows) {
  for (std::size_t r = 0; r < replay.values.size(); ++r) {
    for (std::size_t c = 0; c < replay.values[r].size(); ++c) {
      std::int64_t shift =
          producer_rows && replay.convention == MatrixConvention::price_plus_distance
              ? inst.producers[r].unit_price
              : 0;
      auto recomputed_d = recomputed.dist[r][c];
      std::optional<std::int64_t> recomputed_in_convention;
      if (recomputed_d) recomputed_in_convention = *recomputed_d + shift;
      if (recomputed_in_convention != std::optional<std::int64_t>(replay.values[r][c])) {
        diffs.push_back({table_name, node_label(recomputed.row_nodes[r]),
                         node_label(recomputed.col_nodes[c]), std::to_string(replay.values[r][c]),
                         cell(recomputed_in_convention)});
      }
    }
  }
}

}  // namespace

CompromiseRun run_compromise(const InstanceDocument& doc,
                             const std::optional<ReplayDocument>& replay,
                             const ReportOptions& options) {
  const Instance& inst = doc.instance;
  CompromiseRun run;

  const std::vector<int> prod_nodes = producer_nodes(inst);
  const std::vector<int> cons_nodes = consumer_nodes(inst);

  // Recomputed distances are always available; replay tables, when given,
  // replace them downstream and are diffed against them.
  const CostMatrix retailer_matrix = floyd_all_pairs(cost_view(inst.network, CostRole::retailer));
  const CostMatrix consumer_matrix = floyd_all_pairs(cost_view(inst.network, CostRole::consumer));
  const DistanceTable recomputed_producer =
      select_distances(retailer_matrix, prod_nodes, inst.candidate_sites);
  const DistanceTable recomputed_consumer =
      select_distances(consumer_matrix, cons_nodes, inst.candidate_sites);

  if (replay && replay->producer_site_matrix) {
    run.producer_site =
        table_from_replay(*replay->producer_site_matrix, prod_nodes, inst.candidate_sites, inst, true);
    run.producer_from_replay = true;
    append_diffs(run.diffs, "producer-to-site", *replay->producer_site_matrix, recomputed_producer,
                 inst, true);
  } else {
    run.producer_site = recomputed_producer;
  }

  if (replay && replay->consumer_site_matrix) {
    run.consumer_site =
        table_from_replay(*replay->consumer_site_matrix, cons_nodes, inst.candidate_sites, inst, false);
    run.consumer_from_replay = true;
    append_diffs(run.diffs, "consumer-to-site", *replay->consumer_site_matrix, recomputed_consumer,
                 inst, false);
  } else {
    run.consumer_site = recomputed_consumer;
  }

  // Full per-producer price table (the effective site price is the column
  // minimum, computed separately below).
  Rational factor = Rational(1) + inst.markup_rate;
  for (std::size_t p = 0; p < inst.producers.size(); ++p) {
    std::vector<std::optional<Rational>> row;
    row.reserve(inst.candidate_sites.size());
    for (std::size_t s = 0; s < inst.candidate_sites.size(); ++s) {
      auto d = run.producer_site.dist[p][s];
      if (d) {
        row.push_back(factor * Rational(inst.producers[p].unit_price + *d));
      } else {
        row.push_back(std::nullopt);
      }
    }
    run.price_table.push_back(std::move(row));
  }

  for (int site : inst.candidate_sites) {
    run.site_prices.push_back(site_price(inst, site, run.producer_site));
  }

  PayoffMode payoff = options.payoff_override.value_or(doc.payoff_mode);
  run.incomes = income_matrix(inst, run.producer_site, run.consumer_site, payoff);
  run.compromise = solve_compromise(run.incomes, options.tie_policy);

  run.selected_sites_sorted = run.incomes.situations[run.compromise.selected].sites;
  std::sort(run.selected_sites_sorted.begin(), run.selected_sites_sorted.end());
  return run;
}

namespace {

std::vector<std::string> retailer_labels(std::size_t count) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t j = 0; j < count; ++j) labels.push_back("R" + std::to_string(j + 1));
  return labels;
}

std::vector<std::string> situation_labels(const std::vector<Situation>& situations) {
  std::vector<std::string> labels;
  labels.reserve(situations.size());
  for (const Situation& s : situations) labels.push_back(s.label());
  return labels;
}

std::vector<std::string> node_labels(const std::vector<int>& nodes) {
  std::vector<std::string> labels;
  labels.reserve(nodes.size());
  for (int n : nodes) labels.push_back(node_label(n));
  return labels;
}

TableSection distance_section(std::string title, const DistanceTable& table,
                              const Instance& inst, bool producer_rows,
                              MatrixConvention convention) {
  TableSection section;
  section.title = std::move(title);
  section.row_labels = node_labels(table.row_nodes);
  section.col_labels = node_labels(table.col_nodes);
  for (std::size_t r = 0; r < table.dist.size(); ++r) {
    std::vector<std::string> row;
    row.reserve(table.dist[r].size());
    for (const auto& d : table.dist[r]) {
      std::optional<std::int64_t> shown = d;
      if (shown && producer_rows && convention == MatrixConvention::price_plus_distance) {
        *shown += inst.producers[r].unit_price;
      }
      row.push_back(cell(shown));
    }
    section.cells.push_back(std::move(row));
  }
  return section;
}

}  // namespace

Report compromise_report(const InstanceDocument& doc, const CompromiseRun& run,
                         const ReportOptions& options) {
  const Instance& inst = doc.instance;
  Report report;

  const bool l_plus_d = options.display == MatrixConvention::price_plus_distance;
  report.sections.push_back(distance_section(
      std::string("producer-to-site costs (") + (l_plus_d ? "l+d" : "d") + ")" +
          (run.producer_from_replay ? " [replay]" : ""),
      run.producer_site, inst, true, options.display));

  TableSection prices;
  prices.title = "prices";
  prices.row_labels = node_labels(producer_nodes(inst));
  prices.col_labels = node_labels(inst.candidate_sites);
  for (const auto& row : run.price_table) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (const auto& price : row) cells.push_back(cell(price));
    prices.cells.push_back(std::move(cells));
  }
  report.sections.push_back(std::move(prices));

  report.sections.push_back(distance_section(
      std::string("consumer-to-site costs (d)") + (run.consumer_from_replay ? " [replay]" : ""),
      run.consumer_site, inst, false, MatrixConvention::distance_only));

  TableSection incomes;
  incomes.title = "income matrix";
  incomes.row_labels = situation_labels(run.incomes.situations);
  incomes.col_labels = retailer_labels(inst.retailer_count);
  for (const auto& row : run.incomes.incomes) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (const Rational& r : row) cells.push_back(r.str());
    incomes.cells.push_back(std::move(cells));
  }
  report.sections.push_back(std::move(incomes));

  TableSection ideal;
  ideal.title = "ideal vector";
  ideal.row_labels = {"M"};
  ideal.col_labels = retailer_labels(inst.retailer_count);
  {
    std::vector<std::string> cells;
    cells.reserve(run.compromise.ideal.size());
    for (const Rational& r : run.compromise.ideal) cells.push_back(r.str());
    ideal.cells.push_back(std::move(cells));
  }
  report.sections.push_back(std::move(ideal));

  TableSection residuals;
  residuals.title = "residual matrix";
  residuals.row_labels = situation_labels(run.incomes.situations);
  residuals.col_labels = retailer_labels(inst.retailer_count);
  for (const auto& row : run.compromise.residuals) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (const Rational& r : row) cells.push_back(r.str());
    residuals.cells.push_back(std::move(cells));
  }
  report.sections.push_back(std::move(residuals));

  TableSection row_max;
  row_max.title = "row maxima";
  row_max.row_labels = situation_labels(run.incomes.situations);
  row_max.col_labels = {"max residual"};
  for (const Rational& r : run.compromise.row_max) row_max.cells.push_back({r.str()});
  report.sections.push_back(std::move(row_max));

  KeyValueSection selection;
  selection.title = "selection";
  selection.items.emplace_back("situation",
                               run.incomes.situations[run.compromise.selected].label());
  {
    std::string points;
    for (std::size_t i = 0; i < run.selected_sites_sorted.size(); ++i) {
      if (i > 0) points += ", ";
      points += node_label(run.selected_sites_sorted[i]);
    }
    selection.items.emplace_back("delivery points", points);
  }
  selection.items.emplace_back("value", run.compromise.value.str());
  report.sections.push_back(std::move(selection));

  if (!run.diffs.empty()) {
    TableSection diffs;
    diffs.title = "replay diff (recomputed vs replay)";
    diffs.col_labels = {"table", "row", "col", "replay", "recomputed"};
    for (std::size_t i = 0; i < run.diffs.size(); ++i) {
      const DiffEntry& d = run.diffs[i];
      diffs.row_labels.push_back(std::to_string(i + 1));
      diffs.cells.push_back({d.table, d.row, d.col, d.replay_value, d.recomputed_value});
    }
    report.sections.push_back(std::move(diffs));
  } else if (run.producer_from_replay || run.consumer_from_replay) {
    KeyValueSection diffs;
    diffs.title = "replay diff (recomputed vs replay)";
    diffs.items.emplace_back("status", "no disagreements");
    report.sections.push_back(std::move(diffs));
  }

  if (!run.incomes.unserved.empty()) {
    TableSection warnings;
    warnings.title = "warnings: consumers unable to reach any placed site";
    warnings.col_labels = {"situation", "consumer"};
    for (std::size_t i = 0; i < run.incomes.unserved.size(); ++i) {
      const UnservedConsumer& u = run.incomes.unserved[i];
      warnings.row_labels.push_back(std::to_string(i + 1));
      warnings.cells.push_back(
          {run.incomes.situations[u.situation_index].label(), node_label(u.consumer_node)});
    }
    report.sections.push_back(std::move(warnings));
  }

  return report;
}

EquilibriumRun run_equilibrium(const FlowProblemDocument& doc, EquilibriumMode mode) {
  EquilibriumRun run;
  run.form = path_cost_coefficients(doc.problem);
  run.result = solve_equilibrium(doc.problem, mode);

  std::vector<std::size_t> system_paths;
  if (mode == EquilibriumMode::equal_cost) {
    system_paths.resize(doc.problem.paths.size());
    for (std::size_t i = 0; i < system_paths.size(); ++i) system_paths[i] = i;
  } else {
    system_paths = run.result.support.empty() ? std::vector<std::size_t>{0} : run.result.support;
  }
  run.system = stacked_system(run.form, system_paths, doc.problem.demand);
  run.violations = verify_equilibrium(doc.problem, run.result);
  return run;
}

Report equilibrium_report(const FlowProblemDocument& doc, const EquilibriumRun& run) {
  Report report;

  TableSection forms;
  forms.title = "path cost forms";
  forms.col_labels = {"cost"};
  for (std::size_t i = 0; i < doc.problem.paths.size(); ++i) {
    forms.row_labels.push_back("path " + std::to_string(i + 1));
    forms.cells.push_back({run.form.render(i)});
  }
  report.sections.push_back(std::move(forms));

  TableSection system;
  system.title = "stacked system";
  for (std::size_t j = 0; j < run.system.size(); ++j) {
    system.col_labels.push_back("x" + std::to_string(j + 1));
  }
  system.col_labels.push_back("rhs");
  for (std::size_t i = 0; i < run.system.size(); ++i) {
    system.row_labels.push_back("eq " + std::to_string(i + 1));
    std::vector<std::string> cells;
    for (const Rational& a : run.system.a[i]) cells.push_back(a.str());
    cells.push_back(run.system.b[i].str());
    system.cells.push_back(std::move(cells));
  }
  report.sections.push_back(std::move(system));

  TableSection flows;
  flows.title = "flows";
  flows.col_labels = {"flow"};
  for (std::size_t i = 0; i < run.result.flows.size(); ++i) {
    flows.row_labels.push_back("x" + std::to_string(i + 1));
    flows.cells.push_back({run.result.flows[i].str()});
  }
  report.sections.push_back(std::move(flows));

  KeyValueSection solution;
  solution.title = "solution";
  solution.items.emplace_back(
      "mode", run.result.mode == EquilibriumMode::equal_cost ? "equal-cost" : "nonnegative");
  solution.items.emplace_back("common cost", run.result.common_cost.str());
  solution.items.emplace_back("common cost (mixed)", run.result.common_cost.mixed_str());
  if (run.result.mode == EquilibriumMode::nonnegative) {
    std::string support;
    for (std::size_t i = 0; i < run.result.support.size(); ++i) {
      if (i > 0) support += ", ";
      support += std::to_string(run.result.support[i] + 1);
    }
    solution.items.emplace_back("support", support.empty() ? "(empty)" : support);
  }
  report.sections.push_back(std::move(solution));

  KeyValueSection verification;
  verification.title = "verification";
  if (run.violations.empty()) {
    verification.items.emplace_back("status", "ok");
  } else {
    for (std::size_t i = 0; i < run.violations.size(); ++i) {
      verification.items.emplace_back("violation " + std::to_string(i + 1), run.violations[i]);
    }
  }
  report.sections.push_back(std::move(verification));

  return report;
}

DistancesRun run_distances(const InstanceDocument& doc, CostRole metric) {
  const Instance& inst = doc.instance;
  DistancesRun run;
  run.metric = metric;
  const CostMatrix matrix = floyd_all_pairs(cost_view(inst.network, metric));
  const std::vector<int> rows =
      metric == CostRole::retailer ? producer_nodes(inst) : consumer_nodes(inst);
  run.table = select_distances(matrix, rows, inst.candidate_sites);
  return run;
}

Report distances_report(const InstanceDocument& doc, const DistancesRun& run,
                        const ReportOptions& options) {
  Report report;
  const bool producer_rows = run.metric == CostRole::retailer;
  MatrixConvention convention =
      producer_rows ? options.display : MatrixConvention::distance_only;
  const bool l_plus_d = convention == MatrixConvention::price_plus_distance;
  report.sections.push_back(distance_section(
      std::string(producer_rows ? "producer-to-site distances (" : "consumer-to-site distances (") +
          (l_plus_d ? "l+d" : "d") + ")",
      run.table, doc.instance, producer_rows, convention));
  return report;
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void render_text(std::ostream& os, const TableSection& t) {
  os << "# " << t.title << "\n";
  std::size_t label_width = 0;
  for (const auto& label : t.row_labels) label_width = std::max(label_width, label.size());
  std::vector<std::size_t> widths(t.col_labels.size());
  for (std::size_t c = 0; c < t.col_labels.size(); ++c) {
    widths[c] = t.col_labels[c].size();
    for (const auto& row : t.cells) widths[c] = std::max(widths[c], row[c].size());
  }
  os << std::string(label_width, ' ');
  for (std::size_t c = 0; c < t.col_labels.size(); ++c) {
    os << "  " << std::string(widths[c] - t.col_labels[c].size(), ' ') << t.col_labels[c];
  }
  os << "\n";
  for (std::size_t r = 0; r < t.cells.size(); ++r) {
    const std::string& label = r < t.row_labels.size() ? t.row_labels[r] : "";
    os << label << std::string(label_width - label.size(), ' ');
    for (std::size_t c = 0; c < t.cells[r].size(); ++c) {
      os << "  " << std::string(widths[c] - t.cells[r][c].size(), ' ') << t.cells[r][c];
    }
    os << "\n";
  }
}

void render_text(std::ostream& os, const KeyValueSection& kv) {
  os << "# " << kv.title << "\n";
  for (const auto& [key, value] : kv.items) os << key << ": " << value << "\n";
}

void render_csv(std::ostream& os, const TableSection& t) {
  os << "# " << t.title << "\n";
  for (const auto& col : t.col_labels) os << "," << csv_quote(col);
  os << "\n";
  for (std::size_t r = 0; r < t.cells.size(); ++r) {
    os << csv_quote(r < t.row_labels.size() ? t.row_labels[r] : "");
    for (const auto& c : t.cells[r]) os << "," << csv_quote(c);
    os << "\n";
  }
}

void render_csv(std::ostream& os, const KeyValueSection& kv) {
  os << "# " << kv.title << "\n";
  for (const auto& [key, value] : kv.items) {
    os << csv_quote(key) << "," << csv_quote(value) << "\n";
  }
}

}  // namespace

std::string render_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::json sections = nlohmann::json::array();
    for (const auto& section : report.sections) {
      if (const auto* t = std::get_if<TableSection>(&section)) {
        sections.push_back({{"type", "table"},
                            {"title", t->title},
                            {"row_labels", t->row_labels},
                            {"col_labels", t->col_labels},
                            {"cells", t->cells}});
      } else {
        const auto& kv = std::get<KeyValueSection>(section);
        nlohmann::json items = nlohmann::json::array();
        for (const auto& [key, value] : kv.items) {
          items.push_back({{"key", key}, {"value", value}});
        }
        sections.push_back({{"type", "keyvalue"}, {"title", kv.title}, {"items", items}});
      }
    }
    return nlohmann::json{{"sections", sections}}.dump(2) + "\n";
  }

  std::ostringstream os;
  bool first = true;
  for (const auto& section : report.sections) {
    if (!first) os << "\n";
    first = false;
    std::visit([&](const auto& s) {
      if (format == ReportFormat::text) {
        render_text(os, s);
      } else {
        render_csv(os, s);
      }
    }, section);
  }
  return os.str();
}

}  // namespace tradenet
