// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

namespace provbench::detail {

struct Assignment {
  std::int64_t cost = 0;
  /// row -> column
  std::vector<int> columns;
};

/// Minimum-cost assignment of every row to a distinct column. Requires
/// rows <= columns; `cost` is row-major with `columns` entries per row.
Assignment min_cost_assignment(const std::vector<std::int64_t>& cost, int rows,
                               int columns);

}  // namespace provbench::detail
