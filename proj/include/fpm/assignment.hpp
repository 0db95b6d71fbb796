#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace fpm {

/// Dense square assignment problem, maximizing total weight. Missing entries
/// are disallowed.
class AssignmentProblem {
 public:
  explicit AssignmentProblem(int size);

  int size() const noexcept { return size_; }
  void set_weight(int row, int col, std::int64_t weight);

  struct Solution {
    std::vector<int> col_of_row;
    std::int64_t weight = 0;
  };

  /// Shortest-augmenting-path Hungarian method with row/column potentials,
  /// O(size^3). Empty when no perfect assignment uses only allowed entries.
  std::optional<Solution> solve_max() const;

 private:
  int size_;
  std::vector<std::int64_t> weight_;
  std::vector<std::uint8_t> allowed_;
};

}  // namespace fpm
