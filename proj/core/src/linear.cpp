#include "tradenet/linear.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace tradenet {

LinearSolution solve_linear_system(LinearSystem system) {
  const std::size_t m = system.a.size();
  if (system.b.size() != m) throw std::invalid_argument("linear: dimension mismatch between a and b");
  for (const auto& row : system.a) {
    if (row.size() != m) throw std::invalid_argument("linear: matrix is not square");
  }

  auto& a = system.a;
  auto& b = system.b;

  // Forward elimination into row echelon form.
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < m && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && a[pivot][col].is_zero()) ++pivot;
    if (pivot == m) continue;
    std::swap(a[rank], a[pivot]);
    std::swap(b[rank], b[pivot]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      if (a[i][col].is_zero()) continue;
      Rational factor = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < m; ++j) a[i][j] -= factor * a[rank][j];
      b[i] -= factor * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  // Rows beyond the rank have all-zero coefficients; a nonzero right-hand
  // side there means the system has no solution at all.
  for (std::size_t i = rank; i < m; ++i) {
    if (!b[i].is_zero()) return {SolveStatus::inconsistent, {}};
  }
  if (rank < m) return {SolveStatus::singular, {}};

  std::vector<Rational> x(m);
  for (std::size_t i = m; i-- > 0;) {
    Rational sum = b[i];
    for (std::size_t j = i + 1; j < m; ++j) sum -= a[i][j] * x[j];
    x[i] = sum / a[i][i];
  }
  return {SolveStatus::unique, std::move(x)};
}

std::string format_system(const LinearSystem& system) {
  std::ostringstream os;
  for (std::size_t i = 0; i < system.a.size(); ++i) {
    for (std::size_t j = 0; j < system.a[i].size(); ++j) {
      if (j > 0) os << " + ";
      os << system.a[i][j].str() << "*x" << (j + 1);
    }
    os << " = " << system.b[i].str() << "\n";
  }
  return os.str();
}

}  // namespace tradenet
