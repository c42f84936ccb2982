#pragma once

// Canonical labeling of digraphs (0-1 matrices under permutation
// similarity) by individualization and refinement.
//
// The search tree branches on the vertices of the first non-singleton cell
// of an equitable ordered partition; the partition is refined by counting
// out- and in-neighbours per cell. Among the leaves, the relabeled matrix
// with the lexicographically smallest row-major bit string wins. Two
// pruning rules keep the tree small:
//   * vertices interchangeable by a transposition automorphism ("twins")
//     are branched on only once per cell;
//   * a node is cut when a lower bound on its leading rows already exceeds
//     the incumbent's.

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "walkex/bit_matrix.hpp"

namespace walkex {

namespace detail {

inline std::string row_major_string(const BitMatrix& a)
{
  std::string out;
  out.reserve(static_cast<std::size_t>(a.order() * a.order()));
  for (int r = 0; r < a.order(); ++r)
    for (int c = 0; c < a.order(); ++c) out.push_back(a.test(r, c) ? '1' : '0');
  return out;
}

class Canonizer {
 public:
  explicit Canonizer(const BitMatrix& a) : n_(a.order())
  {
    out_.resize(static_cast<std::size_t>(n_));
    in_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      out_[v] = a.row(v);
      in_[v] = a.column(v);
    }
  }

  /// lab[p] = 0-based vertex placed at canonical position p.
  std::vector<int> run()
  {
    std::vector<Row> cells{low_bits(n_)};
    search(std::move(cells));
    return best_lab_;
  }

 private:
  bool loop(int v) const { return (out_[v] >> v) & 1U; }

  bool twins(int u, int v) const
  {
    if (loop(u) != loop(v)) return false;
    if (((out_[u] >> v) & 1U) != ((out_[v] >> u) & 1U)) return false;
    const Row keep = ~(bit(u) | bit(v));
    return (out_[u] & keep) == (out_[v] & keep) && (in_[u] & keep) == (in_[v] & keep);
  }

  void refine(std::vector<Row>& cells) const
  {
    std::vector<std::pair<std::vector<int>, int>> sigs;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        if (std::popcount(cells[ci]) == 1) continue;
        sigs.clear();
        Row members = cells[ci];
        while (members) {
          const int v = std::countr_zero(members);
          members &= members - 1;
          std::vector<int> sig;
          sig.reserve(2 * cells.size() + 1);
          sig.push_back(loop(v) ? 1 : 0);
          for (Row c : cells) {
            sig.push_back(std::popcount(out_[v] & c));
            sig.push_back(std::popcount(in_[v] & c));
          }
          sigs.emplace_back(std::move(sig), v);
        }
        std::sort(sigs.begin(), sigs.end());
        if (sigs.front().first == sigs.back().first) continue;

        std::vector<Row> split;
        for (std::size_t i = 0; i < sigs.size(); ++i) {
          if (i == 0 || sigs[i].first != sigs[i - 1].first) split.push_back(0);
          split.back() |= bit(sigs[i].second);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci), split.begin(), split.end());
        changed = true;
        break;
      }
    }
  }

  /// Row-major bit string of one row, column 0 as the most significant bit.
  Row encode_row(int v, const std::vector<int>& lab) const
  {
    Row value = 0;
    for (int q = 0; q < n_; ++q) value = (value << 1) | ((out_[v] >> lab[q]) & 1U);
    return value;
  }

  /// Smallest value row v can take in any leaf below `cells`.
  Row lower_bound_row(int v, const std::vector<Row>& cells) const
  {
    Row value = 0;
    for (Row c : cells) {
      const int size = std::popcount(c);
      const int ones = std::popcount(out_[v] & c);
      value = (value << size) | low_bits(ones);
    }
    return value;
  }

  void search(std::vector<Row> cells)
  {
    refine(cells);

    if (static_cast<int>(cells.size()) == n_) {
      std::vector<int> lab(static_cast<std::size_t>(n_));
      for (int p = 0; p < n_; ++p) lab[p] = std::countr_zero(cells[p]);
      std::vector<Row> rows(static_cast<std::size_t>(n_));
      for (int p = 0; p < n_; ++p) rows[p] = encode_row(lab[p], lab);
      if (best_rows_.empty() || rows < best_rows_) {
        best_rows_ = std::move(rows);
        best_lab_ = std::move(lab);
      }
      return;
    }

    if (!best_rows_.empty()) {
      for (std::size_t p = 0; p < cells.size() && std::popcount(cells[p]) == 1; ++p) {
        const Row lb = lower_bound_row(std::countr_zero(cells[p]), cells);
        if (lb > best_rows_[p]) return;
        if (lb < best_rows_[p]) break;
      }
    }

    std::size_t target = 0;
    while (std::popcount(cells[target]) == 1) ++target;

    std::vector<int> tried;
    Row members = cells[target];
    while (members) {
      const int v = std::countr_zero(members);
      members &= members - 1;
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);

      std::vector<Row> next;
      next.reserve(cells.size() + 1);
      next.insert(next.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
      next.push_back(bit(v));
      next.push_back(cells[target] & ~bit(v));
      next.insert(next.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
      search(std::move(next));
    }
  }

  int n_;
  std::vector<Row> out_;
  std::vector<Row> in_;
  std::vector<Row> best_rows_;
  std::vector<int> best_lab_;
};

}  // namespace detail

/// Permutation sending each vertex to its canonical position (both 1-based).
inline Permutation canonical_labeling(const BitMatrix& a)
{
  const std::vector<int> lab = detail::Canonizer(a).run();
  std::vector<int> image(lab.size());
  for (std::size_t p = 0; p < lab.size(); ++p) image[static_cast<std::size_t>(lab[p])] = static_cast<int>(p) + 1;
  return Permutation(std::move(image));
}

/// The canonical representative P A P^T; keeps the mode flag of `a`.
inline BitMatrix canonical_matrix(const BitMatrix& a) { return apply_permutation(a, canonical_labeling(a)); }

/// Row-major '0'/'1' string of the canonical representative. Equal strings
/// iff the digraphs are isomorphic.
inline std::string canonical_form(const BitMatrix& a) { return detail::row_major_string(canonical_matrix(a)); }

inline bool is_isomorphic(const BitMatrix& a, const BitMatrix& b)
{
  if (a.order() != b.order()) throw std::invalid_argument("is_isomorphic: dimension mismatch");
  if (count_ones(a) != count_ones(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace walkex
