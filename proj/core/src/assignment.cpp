// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "assignment.hpp"

#include <limits>

namespace provbench::detail {

// Hungarian method with potentials, O(rows^2 * columns).
Assignment min_cost_assignment(const std::vector<std::int64_t>& cost, int rows,
                               int columns) {
  Assignment result;
  result.columns.assign(rows, -1);
  if (rows == 0) return result;
  if (rows == 1) {
    int best = 0;
    for (int j = 1; j < columns; ++j) {
      if (cost[j] < cost[best]) best = j;
    }
    result.columns[0] = best;
    result.cost = cost[best];
    return result;
  }

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  auto at = [&](int i, int j) { return cost[(i - 1) * columns + (j - 1)]; };

  std::vector<std::int64_t> u(rows + 1, 0), v(columns + 1, 0);
  std::vector<int> owner(columns + 1, 0), way(columns + 1, 0);
  for (int i = 1; i <= rows; ++i) {
    owner[0] = i;
    int j0 = 0;
    std::vector<std::int64_t> minv(columns + 1, kInf);
    std::vector<bool> used(columns + 1, false);
    do {
      used[j0] = true;
      int i0 = owner[j0];
      int j1 = 0;
      std::int64_t delta = kInf;
      for (int j = 1; j <= columns; ++j) {
        if (used[j]) continue;
        std::int64_t cur = at(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= columns; ++j) {
        if (used[j]) {
          u[owner[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      int j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  for (int j = 1; j <= columns; ++j) {
    if (owner[j] != 0) {
      result.columns[owner[j] - 1] = j - 1;
      result.cost += at(owner[j], j);
    }
  }
  return result;
}

}  // namespace provbench::detail
