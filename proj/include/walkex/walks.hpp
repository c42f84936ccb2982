#pragma once

// Walk counting with entries saturated at 2, and the F_k-freeness test
// built on it: a digraph is F_k-free iff its k-th adjacency power is 0-1.

#include <bit>
#include <optional>
#include <stdexcept>
#include <vector>

#include "walkex/bit_matrix.hpp"

namespace walkex {

namespace detail {

/// out = lhs * rhs with entries capped at 2. lhs is given as two bit planes
/// (entry >= 1, entry >= 2); rhs is a plain 0-1 matrix. All arrays hold n rows.
inline void capped_times(int n, const Row* lhs_ge1, const Row* lhs_ge2, const Row* rhs, Row* out_ge1,
                         Row* out_ge2)
{
  for (int i = 0; i < n; ++i) {
    Row acc1 = 0;
    Row acc2 = 0;
    Row ones = lhs_ge1[i];
    const Row twos = lhs_ge2[i];
    while (ones) {
      const int j = std::countr_zero(ones);
      ones &= ones - 1;
      const Row r = rhs[j];
      acc2 |= acc1 & r;
      if ((twos >> j) & 1U) acc2 |= r;
      acc1 |= r;
    }
    out_ge1[i] = acc1;
    out_ge2[i] = acc2;
  }
}

/// True iff the k-th power of the n-row 0-1 matrix `a` has no entry >= 2.
/// `scratch` must hold at least 4n rows.
inline bool free_rows(int n, const Row* a, int k, Row* scratch)
{
  Row* ge1 = scratch;
  Row* ge2 = scratch + n;
  Row* nx1 = scratch + 2 * n;
  Row* nx2 = scratch + 3 * n;
  for (int i = 0; i < n; ++i) {
    ge1[i] = a[i];
    ge2[i] = 0;
  }
  for (int step = 1; step < k; ++step) {
    capped_times(n, ge1, ge2, a, nx1, nx2);
    Row any = 0;
    for (int i = 0; i < n; ++i) {
      ge1[i] = nx1[i];
      ge2[i] = nx2[i];
      any |= nx1[i];
    }
    if (!any) return true;  // nilpotent: every later power is zero
  }
  for (int i = 0; i < n; ++i)
    if (ge2[i]) return false;
  return true;
}

}  // namespace detail

/// Entries of A^k capped at 2 ("two or more walks").
class WalkCounts {
 public:
  WalkCounts(int order, int length, std::vector<Row> ge1, std::vector<Row> ge2)
      : order_(order), length_(length), ge1_(std::move(ge1)), ge2_(std::move(ge2))
  {
  }

  int order() const { return order_; }
  int length() const { return length_; }

  /// 0-based entry in {0, 1, 2}.
  int entry(int r, int c) const
  {
    if (r < 0 || r >= order_ || c < 0 || c >= order_) throw std::out_of_range("WalkCounts: index");
    if ((ge2_[r] >> c) & 1U) return 2;
    return static_cast<int>((ge1_[r] >> c) & 1U);
  }

  bool is_zero_one() const
  {
    for (Row r : ge2_)
      if (r) return false;
    return true;
  }

  bool is_zero() const
  {
    for (Row r : ge1_)
      if (r) return false;
    return true;
  }

  /// The 0-1 pattern of entries >= 1.
  BitMatrix support() const
  {
    BitMatrix m(order_, true);
    for (int r = 0; r < order_; ++r) m.set_row(r, ge1_[r]);
    return m;
  }

  std::span<const Row> at_least_one() const { return ge1_; }
  std::span<const Row> at_least_two() const { return ge2_; }

 private:
  int order_;
  int length_;
  std::vector<Row> ge1_;
  std::vector<Row> ge2_;
};

/// A^k with saturation at 2, by k-1 capped multiplications.
inline WalkCounts capped_power(const BitMatrix& a, int k)
{
  if (k < 1) throw std::invalid_argument("capped_power: k must be >= 1");
  const int n = a.order();
  std::vector<Row> ge1(a.rows().begin(), a.rows().end());
  std::vector<Row> ge2(static_cast<std::size_t>(n), 0);
  std::vector<Row> nx1(ge1.size()), nx2(ge1.size());
  for (int step = 1; step < k; ++step) {
    detail::capped_times(n, ge1.data(), ge2.data(), a.rows().data(), nx1.data(), nx2.data());
    ge1.swap(nx1);
    ge2.swap(nx2);
  }
  return WalkCounts(n, k, std::move(ge1), std::move(ge2));
}

/// Membership in Gamma(n,k): at most one walk of length k between any ordered pair.
inline bool is_free(const BitMatrix& a, int k)
{
  if (k < 1) throw std::invalid_argument("is_free: k must be >= 1");
  std::vector<Row> scratch(4 * static_cast<std::size_t>(a.order()));
  return detail::free_rows(a.order(), a.rows().data(), k, scratch.data());
}

/// Two distinct walks of length k with the same endpoints. Vertices are 1-based.
struct Violation {
  int source = 0;
  int target = 0;
  std::vector<int> walk_a;
  std::vector<int> walk_b;

  bool operator==(const Violation&) const = default;
};

/// The lexicographically first saturated entry of A^k together with the two
/// lexicographically first walks realising it; nullopt iff is_free(a, k).
inline std::optional<Violation> find_violation(const BitMatrix& a, int k)
{
  if (k < 1) throw std::invalid_argument("find_violation: k must be >= 1");
  const int n = a.order();

  // reach[r] = support of A^r, with reach[0] = I.
  std::vector<std::vector<Row>> reach;
  reach.reserve(static_cast<std::size_t>(k));
  {
    std::vector<Row> id(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) id[i] = bit(i);
    reach.push_back(std::move(id));
  }
  for (int r = 1; r < k; ++r) {
    std::vector<Row> next(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      Row from = reach.back()[i];
      while (from) {
        const int j = std::countr_zero(from);
        from &= from - 1;
        next[i] |= a.row(j);
      }
    }
    reach.push_back(std::move(next));
  }

  const WalkCounts top = capped_power(a, k);
  int source = -1;
  int target = -1;
  for (int i = 0; i < n && source < 0; ++i) {
    const Row twos = top.at_least_two()[i];
    if (twos) {
      source = i;
      target = std::countr_zero(twos);
    }
  }
  if (source < 0) return std::nullopt;

  auto reaches = [&](int from, int steps) { return (reach[steps][from] >> target) & 1U; };

  std::vector<std::vector<int>> found;
  std::vector<int> walk{source};
  // Depth-first in increasing vertex order; every explored branch can still
  // reach the target in the remaining steps, so no dead ends are visited.
  auto dfs = [&](auto&& self, int v, int remaining) -> void {
    if (found.size() >= 2) return;
    if (remaining == 0) {
      if (v == target) found.push_back(walk);
      return;
    }
    Row next = a.row(v);
    while (next && found.size() < 2) {
      const int w = std::countr_zero(next);
      next &= next - 1;
      if (!reaches(w, remaining - 1)) continue;
      walk.push_back(w);
      self(self, w, remaining - 1);
      walk.pop_back();
    }
  };
  dfs(dfs, source, k);
  if (found.size() < 2) throw std::logic_error("find_violation: saturated entry without two walks");

  Violation v;
  v.source = source + 1;
  v.target = target + 1;
  for (int x : found[0]) v.walk_a.push_back(x + 1);
  for (int x : found[1]) v.walk_b.push_back(x + 1);
  return v;
}

}  // namespace walkex
