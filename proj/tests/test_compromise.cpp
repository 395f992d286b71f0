#include <doctest.h>

#include <random>

#include "tradenet/compromise.hpp"

#include "support/generators.hpp"

using namespace tradenet;

namespace {

std::vector<std::vector<Rational>> rows(std::vector<std::vector<long long>> in) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : in) out.emplace_back(row.begin(), row.end());
  return out;
}

// Income matrices of the two bundled examples.
const std::vector<std::vector<Rational>> kIncomesA =
    rows({{304, 0}, {152, 156}, {0, 200}, {0, 312}, {0, 200}, {0, 200}});
const std::vector<std::vector<Rational>> kIncomesB =
    rows({{292, 560}, {0, 540}, {0, 432}, {0, 540}, {0, 432}, {0, 432}});

IncomeMatrix with_situations(std::vector<std::vector<Rational>> incomes) {
  IncomeMatrix m;
  m.incomes = std::move(incomes);
  for (std::size_t s = 0; s < m.incomes.size(); ++s) {
    m.situations.push_back({{static_cast<int>(s), static_cast<int>(s + 100)}});
  }
  return m;
}

}  // namespace

TEST_CASE("ideal vector is the per-player maximum") {
  CHECK(ideal_vector(kIncomesA) == std::vector<Rational>{304, 312});
  CHECK(ideal_vector(kIncomesB) == std::vector<Rational>{292, 560});
  CHECK(ideal_vector(rows({{7, 9}})) == std::vector<Rational>{7, 9});
  CHECK_THROWS_AS(ideal_vector({}), std::invalid_argument);
}

TEST_CASE("residual matrices of both examples") {
  CHECK(residual_matrix(kIncomesA, ideal_vector(kIncomesA)) ==
        rows({{0, 312}, {152, 156}, {304, 112}, {304, 0}, {304, 112}, {304, 112}}));
  auto residuals_b = residual_matrix(kIncomesB, ideal_vector(kIncomesB));
  CHECK(residuals_b[0] == std::vector<Rational>{0, 0});
  CHECK(residuals_b ==
        rows({{0, 0}, {292, 20}, {292, 128}, {292, 20}, {292, 128}, {292, 128}}));

  CHECK(residual_matrix(rows({{5, 5}, {5, 5}}), {Rational(5), Rational(5)}) ==
        rows({{0, 0}, {0, 0}}));
  CHECK_THROWS_AS(residual_matrix(kIncomesA, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("selection minimizes the worst shortfall") {
  auto a = compromise_select(residual_matrix(kIncomesA, ideal_vector(kIncomesA)));
  CHECK(a.selected == 1);  // situation (22,12)
  CHECK(a.value == Rational(156));
  CHECK(a.row_max == std::vector<Rational>{312, 156, 304, 304, 304, 304});

  auto b = compromise_select(residual_matrix(kIncomesB, ideal_vector(kIncomesB)));
  CHECK(b.selected == 0);  // situation (5,21)
  CHECK(b.value == Rational(0));

  auto trivial = compromise_select(rows({{0, 0}}));
  CHECK(trivial.selected == 0);
  CHECK(trivial.value == Rational(0));

  CHECK_THROWS_AS(compromise_select({}), std::invalid_argument);
}

TEST_CASE("ties fall to the earliest situation by default") {
  auto residuals = rows({{5, 3}, {4, 5}, {5, 2}});
  auto selection = compromise_select(residuals);
  CHECK(selection.selected == 0);
  CHECK(selection.value == Rational(5));
}

TEST_CASE("the site-tuple tie policy needs situations and uses them") {
  auto residuals = rows({{5, 3}, {4, 5}, {5, 2}});
  CHECK_THROWS_AS(compromise_select(residuals, TiePolicy::lowest_site_tuple),
                  std::invalid_argument);

  std::vector<Situation> situations = {{{9, 4}}, {{9, 1}}, {{2, 8}}};
  auto selection = compromise_select(residuals, TiePolicy::lowest_site_tuple, &situations);
  CHECK(selection.selected == 2);  // (2,8) beats (9,4) lexicographically
  CHECK(selection.value == Rational(5));
}

TEST_CASE("full pipeline result carries every intermediate") {
  CompromiseResult r = solve_compromise(with_situations(kIncomesA));
  CHECK(r.ideal == std::vector<Rational>{304, 312});
  CHECK(r.residuals[1] == std::vector<Rational>{152, 156});
  CHECK(r.row_max[1] == Rational(156));
  CHECK(r.selected == 1);
  CHECK(r.value == Rational(156));
}

TEST_CASE("direct scan oracle matches the pipeline on the examples") {
  auto a = compromise_oracle(kIncomesA);
  CHECK(a.first == 1);
  CHECK(a.second == Rational(156));
  auto b = compromise_oracle(kIncomesB);
  CHECK(b.first == 0);
  CHECK(b.second == Rational(0));
  auto one = compromise_oracle(rows({{5}}));
  CHECK(one.first == 0);
  CHECK(one.second == Rational(0));
}

TEST_CASE("oracle equals the pipeline on random matrices") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 100; ++iter) {
    auto incomes = testsupport::random_income_rows(rng);
    CompromiseResult pipeline = solve_compromise(with_situations(incomes));
    auto oracle = compromise_oracle(incomes);
    CHECK(pipeline.selected == oracle.first);
    CHECK(pipeline.value == oracle.second);

    // Structural invariants: nothing below zero, every ideal attained.
    for (std::size_t j = 0; j < pipeline.ideal.size(); ++j) {
      bool attained = false;
      for (const auto& row : pipeline.residuals) {
        CHECK(row[j] >= Rational(0));
        if (row[j] == Rational(0)) attained = true;
      }
      CHECK(attained);
    }
  }
}

TEST_CASE("adding a per-player constant changes nothing") {
  std::mt19937_64 rng(32);
  for (int iter = 0; iter < 60; ++iter) {
    auto incomes = testsupport::random_income_rows(rng);
    CompromiseResult before = solve_compromise(with_situations(incomes));

    std::vector<Rational> shift;
    for (std::size_t j = 0; j < incomes.front().size(); ++j) {
      shift.push_back(testsupport::rand_rational(rng, 30, 4));
    }
    auto shifted = incomes;
    for (auto& row : shifted) {
      for (std::size_t j = 0; j < row.size(); ++j) row[j] += shift[j];
    }
    CompromiseResult after = solve_compromise(with_situations(shifted));
    CHECK(after.residuals == before.residuals);
    CHECK(after.selected == before.selected);
    CHECK(after.value == before.value);
  }
}

TEST_CASE("positive scaling keeps the argmin and scales the numbers") {
  std::mt19937_64 rng(33);
  for (int iter = 0; iter < 60; ++iter) {
    auto incomes = testsupport::random_income_rows(rng);
    CompromiseResult before = solve_compromise(with_situations(incomes));

    Rational factor = testsupport::rand_positive_rational(rng);
    auto scaled = incomes;
    for (auto& row : scaled) {
      for (auto& v : row) v *= factor;
    }
    CompromiseResult after = solve_compromise(with_situations(scaled));
    CHECK(after.selected == before.selected);
    CHECK(after.value == before.value * factor);
    for (std::size_t j = 0; j < before.ideal.size(); ++j) {
      CHECK(after.ideal[j] == before.ideal[j] * factor);
    }
    for (std::size_t s = 0; s < before.residuals.size(); ++s) {
      for (std::size_t j = 0; j < before.residuals[s].size(); ++j) {
        CHECK(after.residuals[s][j] == before.residuals[s][j] * factor);
      }
    }
  }
}

TEST_CASE("a situation attaining every ideal is selected at value zero") {
  std::mt19937_64 rng(34);
  for (int iter = 0; iter < 60; ++iter) {
    auto incomes = testsupport::random_income_rows(rng);
    auto ideal = ideal_vector(incomes);
    incomes[incomes.size() / 2] = ideal;  // plant a row that attains every maximum
    CompromiseResult r = solve_compromise(with_situations(incomes));
    CHECK(r.value == Rational(0));
    for (const Rational& residual : r.residuals[r.selected]) CHECK(residual == Rational(0));
  }
}
