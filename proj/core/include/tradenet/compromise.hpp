#ifndef TRADENET_COMPROMISE_HPP
#define TRADENET_COMPROMISE_HPP

#include <cstddef>
#include <vector>

#include "tradenet/market.hpp"
#include "tradenet/rational.hpp"

namespace tradenet {

/// Minimax-regret selection over an income matrix: the chosen situation
/// minimizes the largest per-player shortfall from the ideal vector.
struct CompromiseResult {
  std::vector<Rational> ideal;                     // per-player maximum income
  std::vector<std::vector<Rational>> residuals;    // ideal - income, situations x players
  std::vector<Rational> row_max;                   // worst shortfall per situation
  std::size_t selected = 0;
  Rational value;                                  // row_max[selected]
};

enum class TiePolicy {
  first_in_enumeration,  // default: earliest situation wins
  lowest_site_tuple,     // lexicographically smallest site assignment wins
};

struct CompromiseSelection {
  std::size_t selected = 0;
  Rational value;
  std::vector<Rational> row_max;
};

/// Per-player maxima. Throws std::invalid_argument on an empty matrix.
std::vector<Rational> ideal_vector(const std::vector<std::vector<Rational>>& incomes);

/// Entry (s, j) = ideal[j] - incomes[s][j]; all entries are >= 0 by
/// construction of the ideal. Throws std::invalid_argument on dimension
/// mismatch.
std::vector<std::vector<Rational>> residual_matrix(
    const std::vector<std::vector<Rational>>& incomes, const std::vector<Rational>& ideal);

/// The argmin over situations of the row maximum. lowest_site_tuple needs
/// the situations themselves and throws without them.
CompromiseSelection compromise_select(const std::vector<std::vector<Rational>>& residuals,
                                      TiePolicy policy = TiePolicy::first_in_enumeration,
                                      const std::vector<Situation>* situations = nullptr);

/// Full pipeline: ideal, residuals, selection.
CompromiseResult solve_compromise(const IncomeMatrix& incomes,
                                  TiePolicy policy = TiePolicy::first_in_enumeration);

/// Independent re-derivation: a direct min-max scan that materializes no
/// intermediate matrices. Used to cross-check the pipeline.
std::pair<std::size_t, Rational> compromise_oracle(
    const std::vector<std::vector<Rational>>& incomes);

}  // namespace tradenet

#endif
