#include "tradenet/compromise.hpp"

#include <stdexcept>

namespace tradenet {

std::vector<Rational> ideal_vector(const std::vector<std::vector<Rational>>& incomes) {
  if (incomes.empty()) throw std::invalid_argument("ideal_vector: empty income matrix");
  std::vector<Rational> ideal = incomes.front();
  for (const auto& row : incomes) {
    if (row.size() != ideal.size()) throw std::invalid_argument("ideal_vector: ragged income matrix");
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] > ideal[j]) ideal[j] = row[j];
    }
  }
  return ideal;
}

std::vector<std::vector<Rational>> residual_matrix(
    const std::vector<std::vector<Rational>>& incomes, const std::vector<Rational>& ideal) {
  std::vector<std::vector<Rational>> residuals;
  residuals.reserve(incomes.size());
  for (const auto& row : incomes) {
    if (row.size() != ideal.size()) {
      throw std::invalid_argument("residual_matrix: dimension mismatch");
    }
    std::vector<Rational> r(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) r[j] = ideal[j] - row[j];
    residuals.push_back(std::move(r));
  }
  return residuals;
}

CompromiseSelection compromise_select(const std::vector<std::vector<Rational>>& residuals,
                                      TiePolicy policy,
                                      const std::vector<Situation>* situations) {
  if (residuals.empty()) throw std::invalid_argument("compromise_select: empty residual matrix");
  if (policy == TiePolicy::lowest_site_tuple &&
      (situations == nullptr || situations->size() != residuals.size())) {
    throw std::invalid_argument("compromise_select: lowest_site_tuple needs the situation list");
  }

  CompromiseSelection out;
  out.row_max.reserve(residuals.size());
  for (const auto& row : residuals) {
    if (row.empty()) throw std::invalid_argument("compromise_select: empty residual row");
    Rational m = row.front();
    for (const Rational& r : row) {
      if (r > m) m = r;
    }
    out.row_max.push_back(m);
  }

  std::size_t best = 0;
  for (std::size_t s = 1; s < out.row_max.size(); ++s) {
    if (out.row_max[s] < out.row_max[best]) {
      best = s;
    } else if (out.row_max[s] == out.row_max[best] && policy == TiePolicy::lowest_site_tuple &&
               (*situations)[s].sites < (*situations)[best].sites) {
      best = s;
    }
  }
  out.selected = best;
  out.value = out.row_max[best];
  return out;
}

CompromiseResult solve_compromise(const IncomeMatrix& incomes, TiePolicy policy) {
  CompromiseResult result;
  result.ideal = ideal_vector(incomes.incomes);
  result.residuals = residual_matrix(incomes.incomes, result.ideal);
  auto selection = compromise_select(result.residuals, policy, &incomes.situations);
  result.row_max = std::move(selection.row_max);
  result.selected = selection.selected;
  result.value = selection.value;
  return result;
}

std::pair<std::size_t, Rational> compromise_oracle(
    const std::vector<std::vector<Rational>>& incomes) {
  if (incomes.empty() || incomes.front().empty()) {
    throw std::invalid_argument("compromise_oracle: empty income matrix");
  }
  const std::size_t players = incomes.front().size();
  std::vector<Rational> column_max(players);
  for (std::size_t j = 0; j < players; ++j) {
    column_max[j] = incomes.front()[j];
    for (const auto& row : incomes) {
      if (row[j] > column_max[j]) column_max[j] = row[j];
    }
  }
  std::size_t best = 0;
  Rational best_regret;
  for (std::size_t s = 0; s < incomes.size(); ++s) {
    Rational regret = column_max[0] - incomes[s][0];
    for (std::size_t j = 1; j < players; ++j) {
      Rational r = column_max[j] - incomes[s][j];
      if (r > regret) regret = r;
    }
    if (s == 0 || regret < best_regret) {
      best = s;
      best_regret = regret;
    }
  }
  return {best, best_regret};
}

}  // namespace tradenet
