#pragma once

// Dense square 0-1 matrices (adjacency matrices of digraphs) with one
// machine word per row.
//
// Index conventions: BitMatrix::test/set/row/column are 0-based, like
// std::bitset. Every vertex-level operation (VertexSet, vertex_weight,
// Permutation, walks reported by find_violation) is 1-based.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace walkex {

using Row = std::uint64_t;

inline constexpr int kMaxOrder = 64;

constexpr Row bit(int j) { return Row{1} << j; }

/// Mask with the low `n` bits set.
constexpr Row low_bits(int n) { return n >= 64 ? ~Row{0} : (Row{1} << n) - 1; }

/// Sorted set of 1-based vertex indices.
class VertexSet {
 public:
  VertexSet() = default;

  VertexSet(std::initializer_list<int> members) : VertexSet(std::vector<int>(members)) {}

  explicit VertexSet(std::vector<int> members) : members_(std::move(members))
  {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      throw std::invalid_argument("VertexSet: duplicate vertex");
    if (!members_.empty() && members_.front() < 1)
      throw std::invalid_argument("VertexSet: vertices are 1-based");
  }

  /// {first, first+1, ..., last}; empty when last < first.
  static VertexSet interval(int first, int last)
  {
    std::vector<int> v;
    for (int i = first; i <= last; ++i) v.push_back(i);
    return VertexSet(std::move(v));
  }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  int max() const { return members_.empty() ? 0 : members_.back(); }
  bool contains(int v) const { return std::binary_search(members_.begin(), members_.end(), v); }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<int>& members() const { return members_; }

  /// {1..n} minus this set.
  VertexSet complement(int n) const
  {
    std::vector<int> rest;
    for (int i = 1; i <= n; ++i)
      if (!contains(i)) rest.push_back(i);
    return VertexSet(std::move(rest));
  }

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<int> members_;
};

class BitMatrix {
 public:
  explicit BitMatrix(int n, bool loops_allowed = false) : loops_allowed_(loops_allowed)
  {
    if (n < 1 || n > kMaxOrder)
      throw std::invalid_argument("BitMatrix: order must be in 1..64, got " + std::to_string(n));
    rows_.assign(static_cast<std::size_t>(n), 0);
  }

  /// Rows given as strings of '0'/'1', e.g. {"011", "001", "000"}.
  static BitMatrix from_strings(std::initializer_list<std::string_view> rows, bool loops_allowed = false)
  {
    BitMatrix m(static_cast<int>(rows.size()), loops_allowed);
    int r = 0;
    for (auto line : rows) {
      if (static_cast<int>(line.size()) != m.order())
        throw std::invalid_argument("BitMatrix: ragged row");
      for (int c = 0; c < m.order(); ++c) {
        if (line[c] == '1')
          m.set(r, c);
        else if (line[c] != '0')
          throw std::invalid_argument("BitMatrix: entries must be 0 or 1");
      }
      ++r;
    }
    return m;
  }

  int order() const { return static_cast<int>(rows_.size()); }
  bool loops_allowed() const { return loops_allowed_; }

  bool test(int r, int c) const { return (rows_[check(r)] >> check(c)) & 1U; }

  void set(int r, int c, bool value = true)
  {
    check(r);
    check(c);
    if (value && r == c && !loops_allowed_)
      throw std::invalid_argument("BitMatrix: diagonal entry in a loop-free matrix");
    if (value)
      rows_[r] |= bit(c);
    else
      rows_[r] &= ~bit(c);
  }

  Row row(int r) const { return rows_[check(r)]; }

  void set_row(int r, Row bits)
  {
    check(r);
    bits &= low_bits(order());
    if (!loops_allowed_ && (bits & bit(r)))
      throw std::invalid_argument("BitMatrix: diagonal entry in a loop-free matrix");
    rows_[r] = bits;
  }

  Row column(int c) const
  {
    check(c);
    Row col = 0;
    for (int r = 0; r < order(); ++r) col |= ((rows_[r] >> c) & 1U) << r;
    return col;
  }

  std::span<const Row> rows() const { return rows_; }

  bool has_loops() const
  {
    for (int r = 0; r < order(); ++r)
      if (rows_[r] & bit(r)) return true;
    return false;
  }

  /// Same entries, possibly different mode flag.
  BitMatrix with_loops_allowed(bool allowed) const
  {
    BitMatrix m(order(), allowed);
    for (int r = 0; r < order(); ++r) m.set_row(r, rows_[r]);
    return m;
  }

  /// Entry-wise equality; the loops_allowed flag is a mode, not an entry.
  friend bool operator==(const BitMatrix& a, const BitMatrix& b) { return a.rows_ == b.rows_; }

 private:
  int check(int i) const
  {
    if (i < 0 || i >= order()) throw std::out_of_range("BitMatrix: index out of range");
    return i;
  }

  std::vector<Row> rows_;
  bool loops_allowed_ = false;
};

/// f(A): number of 1-entries, i.e. the arc count of the digraph.
inline int count_ones(const BitMatrix& a)
{
  int total = 0;
  for (Row r : a.rows()) total += std::popcount(r);
  return total;
}

namespace detail {

inline void check_members(const BitMatrix& a, const VertexSet& alpha)
{
  if (alpha.max() > a.order())
    throw std::out_of_range("vertex " + std::to_string(alpha.max()) + " exceeds order " +
                            std::to_string(a.order()));
}

}  // namespace detail

/// A[alpha]: rows and columns alpha, in increasing order.
inline BitMatrix select_principal(const BitMatrix& a, const VertexSet& alpha)
{
  if (alpha.empty()) throw std::invalid_argument("select_principal: empty vertex set");
  detail::check_members(a, alpha);
  const auto& idx = alpha.members();
  BitMatrix out(static_cast<int>(idx.size()), a.loops_allowed());
  for (std::size_t p = 0; p < idx.size(); ++p) {
    Row src = a.row(idx[p] - 1);
    Row dst = 0;
    for (std::size_t q = 0; q < idx.size(); ++q)
      if ((src >> (idx[q] - 1)) & 1U) dst |= bit(static_cast<int>(q));
    out.set_row(static_cast<int>(p), dst);
  }
  return out;
}

/// A(alpha): A with rows and columns alpha removed.
inline BitMatrix delete_principal(const BitMatrix& a, const VertexSet& alpha)
{
  detail::check_members(a, alpha);
  if (static_cast<int>(alpha.size()) >= a.order())
    throw std::invalid_argument("delete_principal: cannot delete every vertex");
  return select_principal(a, alpha.complement(a.order()));
}

/// delta_i: ones in row i plus column i, the diagonal entry counted once.
inline int vertex_weight(const BitMatrix& a, int i)
{
  if (i < 1 || i > a.order()) throw std::out_of_range("vertex_weight: vertex out of range");
  const int r = i - 1;
  const Row loop = a.row(r) & bit(r);
  return std::popcount(a.row(r)) + std::popcount(a.column(r)) - (loop ? 1 : 0);
}

/// A bijection on {1..n}; image[i-1] is the image of i.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image) : image_(std::move(image))
  {
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
      if (v < 1 || v > static_cast<int>(image_.size()) || seen[v - 1])
        throw std::invalid_argument("Permutation: not a bijection on 1..n");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n)
  {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& image() const { return image_; }

 private:
  std::vector<int> image_;
};

/// P A P^T: the result has entry (pi(i), pi(j)) = A(i, j).
inline BitMatrix apply_permutation(const BitMatrix& a, const Permutation& pi)
{
  if (pi.size() != a.order()) throw std::invalid_argument("apply_permutation: size mismatch");
  BitMatrix out(a.order(), a.loops_allowed());
  for (int i = 0; i < a.order(); ++i) {
    Row src = a.row(i);
    Row dst = 0;
    while (src) {
      int j = std::countr_zero(src);
      src &= src - 1;
      dst |= bit(pi(j + 1) - 1);
    }
    out.set_row(pi(i + 1) - 1, dst);
  }
  return out;
}

}  // namespace walkex
