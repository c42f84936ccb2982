#pragma once

// Ground truth for tiny orders: enumerate every 0-1 matrix of the mode and
// keep the free ones. Independent of the search engines except for sharing
// is_free's capped multiplication.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "walkex/bit_matrix.hpp"
#include "walkex/canonical.hpp"
#include "walkex/walks.hpp"

namespace walkex {

inline constexpr int kMaxOracleOrder = 5;

struct OracleResult {
  int n = 0;
  int k = 0;
  bool loops = false;
  int max_arcs = 0;
  /// Canonical forms of all extremal matrices, sorted.
  std::vector<std::string> extremal_forms;
};

/// Results for every k in 1..k_max from one sweep over all matrices.
inline std::vector<OracleResult> exhaustive_oracle_range(int n, int k_max, bool loops)
{
  if (n < 1 || n > kMaxOracleOrder) throw std::invalid_argument("exhaustive_oracle: need 1 <= n <= 5");
  if (k_max < 1) throw std::invalid_argument("exhaustive_oracle: need k >= 1");

  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (r != c || loops) cells.emplace_back(r, c);
  const std::uint64_t total = std::uint64_t{1} << cells.size();

  // Row r of the matrix is assembled from a contiguous slice of the mask.
  std::vector<int> row_begin(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < cells.size(); ++i) row_begin[cells[i].first + 1] = static_cast<int>(i) + 1;
  for (int r = 1; r <= n; ++r) row_begin[r] = std::max(row_begin[r], row_begin[r - 1]);

  auto rows_of = [&](std::uint64_t mask, Row* rows) {
    for (int r = 0; r < n; ++r) {
      Row row = 0;
      for (int i = row_begin[r]; i < row_begin[r + 1]; ++i)
        if ((mask >> i) & 1U) row |= bit(cells[i].second);
      rows[r] = row;
    }
  };

  // free_mask bit (k-1) set iff A^k is 0-1, for k = 1..k_max.
  auto free_mask = [&](const Row* a) {
    Row ge1[kMaxOracleOrder], ge2[kMaxOracleOrder], nx1[kMaxOracleOrder], nx2[kMaxOracleOrder];
    for (int i = 0; i < n; ++i) {
      ge1[i] = a[i];
      ge2[i] = 0;
    }
    std::uint32_t result = 1;  // k = 1 always free
    for (int k = 2; k <= k_max; ++k) {
      detail::capped_times(n, ge1, ge2, a, nx1, nx2);
      Row twos = 0;
      Row ones = 0;
      for (int i = 0; i < n; ++i) {
        ge1[i] = nx1[i];
        ge2[i] = nx2[i];
        twos |= nx2[i];
        ones |= nx1[i];
      }
      if (!twos) result |= 1U << (k - 1);
      if (!ones) {
        for (int rest = k + 1; rest <= k_max; ++rest) result |= 1U << (rest - 1);
        break;
      }
    }
    return result;
  };

  std::vector<int> best(static_cast<std::size_t>(k_max) + 1, 0);
  Row rows[kMaxOracleOrder];
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const int arcs = std::popcount(mask);
    rows_of(mask, rows);
    const std::uint32_t ok = free_mask(rows);
    for (int k = 1; k <= k_max; ++k)
      if (((ok >> (k - 1)) & 1U) && arcs > best[k]) best[k] = arcs;
  }

  std::vector<std::set<std::string>> forms(static_cast<std::size_t>(k_max) + 1);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const int arcs = std::popcount(mask);
    if (std::find(best.begin() + 1, best.end(), arcs) == best.end()) continue;
    rows_of(mask, rows);
    const std::uint32_t ok = free_mask(rows);
    for (int k = 1; k <= k_max; ++k) {
      if (!((ok >> (k - 1)) & 1U) || arcs != best[k]) continue;
      BitMatrix m(n, loops);
      for (int r = 0; r < n; ++r) m.set_row(r, rows[r]);
      forms[k].insert(canonical_form(m));
    }
  }

  std::vector<OracleResult> out;
  for (int k = 1; k <= k_max; ++k)
    out.push_back({n, k, loops, best[k], std::vector<std::string>(forms[k].begin(), forms[k].end())});
  return out;
}

/// Exact maximum and all extremal classes by brute force (n <= 5).
inline OracleResult exhaustive_oracle(int n, int k, bool loops)
{
  return exhaustive_oracle_range(n, k, loops).back();
}

}  // namespace walkex
