#include "fpm/assignment.hpp"

#include <limits>

namespace fpm {

AssignmentProblem::AssignmentProblem(int size)
    : size_(size),
      weight_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0),
      allowed_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0) {}

void AssignmentProblem::set_weight(int row, int col, std::int64_t weight) {
  const auto i = static_cast<std::size_t>(row) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(col);
  weight_[i] = weight;
  allowed_[i] = 1;
}

std::optional<AssignmentProblem::Solution> AssignmentProblem::solve_max() const {
  const int n = size_;
  if (n == 0) return Solution{};

  // Min-cost form on cost = -weight; disallowed entries get a cost large
  // enough that any assignment using one is recognisably worse than all
  // assignments that avoid them.
  std::int64_t spread = 1;
  for (std::size_t i = 0; i < weight_.size(); ++i)
    if (allowed_[i]) spread += weight_[i] < 0 ? -weight_[i] : weight_[i];
  const std::int64_t big = spread * (n + 1);
  auto cost = [&](int r, int c) {
    const auto i = static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c);
    return allowed_[i] ? -weight_[i] : big;
  };

  // 1-based rows and columns; column 0 is the virtual root of each search.
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> row_of_col(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    row_of_col[0] = i;
    int j0 = 0;
    std::vector<std::int64_t> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = row_of_col[j0];
      std::int64_t delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of_col[j0] != 0);
    do {
      const int j1 = way[j0];
      row_of_col[j0] = row_of_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Solution sol;
  sol.col_of_row.assign(static_cast<std::size_t>(n), -1);
  for (int j = 1; j <= n; ++j) sol.col_of_row[row_of_col[j] - 1] = j - 1;
  for (int r = 0; r < n; ++r) {
    const auto i = static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(sol.col_of_row[r]);
    if (!allowed_[i]) return std::nullopt;
    sol.weight += weight_[i];
  }
  return sol;
}

}  // namespace fpm
