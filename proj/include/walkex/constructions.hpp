#pragma once

// Builders for the named matrix families of the extremal theory. Every
// builder range-checks its parameters and throws std::invalid_argument
// rather than clamping. All families except the all-ones matrix J are
// loop-free.

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "walkex/bit_matrix.hpp"

namespace walkex {

namespace detail {

inline void require(bool ok, const std::string& what)
{
  if (!ok) throw std::invalid_argument(what);
}

/// Sets the full block rows [r0, r0+rn) x columns [c0, c0+cn).
inline void fill_block(BitMatrix& m, int r0, int rn, int c0, int cn)
{
  const Row mask = low_bits(cn) << c0;
  for (int r = r0; r < r0 + rn; ++r) m.set_row(r, m.row(r) | mask);
}

/// Places T_size on the diagonal block starting at `offset`.
inline void fill_transitive(BitMatrix& m, int offset, int size)
{
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) m.set(offset + i, offset + j);
}

inline long long choose2(long long n) { return n * (n - 1) / 2; }

}  // namespace detail

/// T_n: (i,j) = 1 iff i < j.
inline BitMatrix build_T(int n)
{
  detail::require(n >= 1 && n <= kMaxOrder, "build_T: need 1 <= n <= 64");
  BitMatrix m(n);
  detail::fill_transitive(m, 0, n);
  return m;
}

/// J_n, the all-ones matrix (loops allowed, necessarily).
inline BitMatrix build_J(int n)
{
  detail::require(n >= 1 && n <= kMaxOrder, "build_J: need 1 <= n <= 64");
  BitMatrix m(n, true);
  for (int r = 0; r < n; ++r) m.set_row(r, low_bits(n));
  return m;
}

/// Pi_{m,n} = J_m (x) T_n.
inline BitMatrix build_Pi(int m, int n)
{
  detail::require(m >= 1 && n >= 1, "build_Pi: need m, n >= 1");
  detail::require(m * n <= kMaxOrder, "build_Pi: order m*n exceeds 64");
  BitMatrix out(m * n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.set(a * n + i, b * n + j);
  return out;
}

/// (s,k,t)-completely transitive tournament: Pi_{s+1,k} with the vertices
/// alpha (taken from the last block, |alpha| = k - t) deleted. Order sk + t.
inline BitMatrix build_completely_transitive(int s, int k, int t, const VertexSet& alpha)
{
  detail::require(s >= 0 && k >= 1 && t >= 0 && t < k, "build_completely_transitive: need s >= 0, 0 <= t < k");
  detail::require(s * k + t >= 1, "build_completely_transitive: order sk+t must be >= 1");
  detail::require((s + 1) * k <= kMaxOrder, "build_completely_transitive: (s+1)k exceeds 64");
  detail::require(static_cast<int>(alpha.size()) == k - t, "build_completely_transitive: |alpha| must be k - t");
  for (int v : alpha)
    detail::require(v > s * k && v <= s * k + k, "build_completely_transitive: alpha outside the last block");
  const BitMatrix pi = build_Pi(s + 1, k);
  return alpha.empty() ? pi : delete_principal(pi, alpha);
}

/// Closed-form arc count of an (s,k,t)-completely transitive tournament.
inline long long completely_transitive_arcs(int s, int k, int t)
{
  const long long n = static_cast<long long>(s) * k + t;
  return detail::choose2(n) - detail::choose2(s) * k - static_cast<long long>(s) * t;
}

/// K_n = [[T_{n-2}, J_{n-2,2}], [0, 0]].
inline BitMatrix build_K(int n)
{
  detail::require(n >= 4 && n <= kMaxOrder, "build_K: need 4 <= n <= 64");
  BitMatrix m(n);
  detail::fill_transitive(m, 0, n - 2);
  detail::fill_block(m, 0, n - 2, n - 2, 2);
  return m;
}

/// K'_n = [[0, J_{2,n-2}], [0, T_{n-2}]].
inline BitMatrix build_Kprime(int n)
{
  detail::require(n >= 4 && n <= kMaxOrder, "build_Kprime: need 4 <= n <= 64");
  BitMatrix m(n);
  detail::fill_block(m, 0, 2, 2, n - 2);
  detail::fill_transitive(m, 2, n - 2);
  return m;
}

/// F_n = [[0, J_{2,n-4}, J_{2,2}], [0, T_{n-4}, J_{n-4,2}], [0, 0, 0]].
inline BitMatrix build_F(int n)
{
  detail::require(n >= 7 && n <= kMaxOrder, "build_F: need 7 <= n <= 64");
  BitMatrix m(n);
  detail::fill_block(m, 0, 2, 2, n - 2);
  detail::fill_transitive(m, 2, n - 4);
  detail::fill_block(m, 2, n - 4, n - 2, 2);
  return m;
}

namespace detail {

/// [[0, J_{h,n-h-tail}, J_{h,tail}], [0, T_{n-h-tail}, J_{.,tail}], [0, 0, 0]]
inline BitMatrix head_tail_family(int n, int head, int tail)
{
  const int mid = n - head - tail;
  BitMatrix m(n);
  fill_block(m, 0, head, head, n - head);
  fill_transitive(m, head, mid);
  fill_block(m, head, mid, head + mid, tail);
  return m;
}

}  // namespace detail

/// F_1(n): head of 3 sources, T_{n-5} middle, 2 sinks.
inline BitMatrix build_F1(int n)
{
  detail::require(n >= 9 && n <= kMaxOrder, "build_F1: need 9 <= n <= 64");
  return detail::head_tail_family(n, 3, 2);
}

/// F_2(n): head of 2 sources, T_{n-5} middle, 3 sinks.
inline BitMatrix build_F2(int n)
{
  detail::require(n >= 9 && n <= kMaxOrder, "build_F2: need 9 <= n <= 64");
  return detail::head_tail_family(n, 2, 3);
}

/// F_3(n) with border vectors U_m = (J_{1,m}, 0)^T and U'_m = (0, J_{1,n-m-7}),
/// both of length n - 5, for 0 <= m <= n - 7.
inline BitMatrix build_F3(int n, int m)
{
  detail::require(n >= 9 && n <= kMaxOrder, "build_F3: need 9 <= n <= 64");
  detail::require(m >= 0 && m <= n - 7, "build_F3: need 0 <= m <= n-7");
  const int mid = n - 5;
  const int mid0 = 2;
  const int sink0 = mid0 + mid;  // two sinks
  const int last = n - 1;
  // U'_m is m+2 zeros followed by n-m-7 ones: total length n-5 for every valid m.
  const int tail_ones = n - m - 7;

  BitMatrix a(n);
  detail::fill_block(a, 0, 2, mid0, n - 2);           // J_{2,n-5}, J_{2,2}, J_{2,1}
  detail::fill_transitive(a, mid0, mid);              // T_{n-5}
  detail::fill_block(a, mid0, mid, sink0, 2);         // J_{n-5,2}
  for (int i = 0; i < m; ++i) a.set(mid0 + i, last);  // U_m
  for (int j = mid - tail_ones; j < mid; ++j) a.set(last, mid0 + j);  // U'_m
  a.set(last, sink0);                                 // J_{1,2}
  a.set(last, sink0 + 1);
  return a;
}

/// F_4(n): T_{n-4} followed by four vertices forming T_4, vertex j joined to
/// the tournament by w_j = (J_{1,k_j}, 0)^T and u_j = (0, J_{1,n-k_j-5}).
inline BitMatrix build_F4(int n, int k1, int k2, int k3, int k4)
{
  detail::require(n >= 9 && n <= kMaxOrder, "build_F4: need 9 <= n <= 64");
  detail::require(0 <= k1 && k1 < k2 && k2 < k3 && k3 < k4 && k4 <= n - 5,
                  "build_F4: need 0 <= k1 < k2 < k3 < k4 <= n-5");
  const int base = n - 4;
  const int ks[4] = {k1, k2, k3, k4};
  BitMatrix a(n);
  detail::fill_transitive(a, 0, base);
  detail::fill_transitive(a, base, 4);
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < ks[j]; ++i) a.set(i, base + j);
    for (int c = ks[j] + 1; c < base; ++c) a.set(base + j, c);
  }
  return a;
}

/// T_{n-1} bordered by last column x = (J_{1,s}, 0)^T and last row
/// y = (0, J_{1,n-s-1}), corner 0.
inline BitMatrix build_bordered_tournament(int n, int s)
{
  detail::require(n >= 6 && n <= kMaxOrder, "build_bordered_tournament: need 6 <= n <= 64");
  detail::require(s >= 0 && s <= n - 2, "build_bordered_tournament: need 0 <= s <= n-2");
  BitMatrix a(n);
  detail::fill_transitive(a, 0, n - 1);
  for (int i = 0; i < s; ++i) a.set(i, n - 1);
  for (int j = s; j < n - 1; ++j) a.set(n - 1, j);
  return a;
}

/// Pi_{t,3} with its (1,2) block replaced by T'_3 = [011; 011; 000].
inline BitMatrix build_k3_block(int t)
{
  detail::require(t >= 2 && 3 * t <= kMaxOrder, "build_k3_block: need 2 <= t and 3t <= 64");
  BitMatrix a = build_Pi(t, 3);
  a.set(1, 4);
  return a;
}

/// The 9-vertex, 30-arc F_4-free digraph that is not completely transitive.
inline BitMatrix build_k4_n9_example()
{
  return BitMatrix::from_strings({
      "001111111",
      "001111111",
      "000111101",
      "000011100",
      "000001100",
      "000000000",
      "000000000",
      "000011101",
      "000001100",
  });
}

enum class FamilyTag {
  TransitiveT,
  AllOnesJ,
  Pi,
  CompletelyTransitive,
  K,
  Kprime,
  F,
  F1,
  F2,
  F3,
  F4,
  BorderedTournament,
  K3Block,
  K4N9Example,
};

/// A named construction and its integer parameters:
///
///   TransitiveT, AllOnesJ, K, Kprime, F, F1, F2   {n}
///   Pi                                            {m, n}
///   CompletelyTransitive                          {s, k, t, alpha...}
///   F3                                            {n, m}
///   F4                                            {n, k1, k2, k3, k4}
///   BorderedTournament                            {n, s}
///   K3Block                                       {t}
///   K4N9Example                                   {}
struct FamilyDescriptor {
  FamilyTag tag;
  std::vector<int> params;

  bool operator==(const FamilyDescriptor&) const = default;
};

struct FamilyName {
  FamilyTag tag;
  std::string_view short_name;
  std::string_view long_name;
};

inline constexpr FamilyName kFamilyNames[] = {
    {FamilyTag::TransitiveT, "t", "TransitiveT"},
    {FamilyTag::AllOnesJ, "j", "AllOnesJ"},
    {FamilyTag::Pi, "pi", "Pi"},
    {FamilyTag::CompletelyTransitive, "ct", "CompletelyTransitive"},
    {FamilyTag::K, "k", "K"},
    {FamilyTag::Kprime, "kprime", "Kprime"},
    {FamilyTag::F, "f", "F"},
    {FamilyTag::F1, "f1", "F1"},
    {FamilyTag::F2, "f2", "F2"},
    {FamilyTag::F3, "f3", "F3"},
    {FamilyTag::F4, "f4", "F4"},
    {FamilyTag::BorderedTournament, "bordered", "BorderedTournament"},
    {FamilyTag::K3Block, "k3block", "K3Block"},
    {FamilyTag::K4N9Example, "k4n9", "K4N9Example"},
};

inline std::string_view tag_name(FamilyTag tag)
{
  for (const auto& f : kFamilyNames)
    if (f.tag == tag) return f.short_name;
  return "?";
}

/// Accepts the short CLI spelling or the enum name, case-insensitively.
inline std::optional<FamilyTag> parse_family_tag(std::string_view text)
{
  auto lower = [](std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  };
  const std::string key = lower(text);
  for (const auto& f : kFamilyNames)
    if (key == f.short_name || key == lower(f.long_name)) return f.tag;
  return std::nullopt;
}

inline std::string describe(const FamilyDescriptor& d)
{
  std::string out(tag_name(d.tag));
  out += "(";
  for (std::size_t i = 0; i < d.params.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d.params[i]);
  }
  return out + ")";
}

inline BitMatrix build(const FamilyDescriptor& d)
{
  const auto& p = d.params;
  auto arity = [&](std::size_t want) {
    detail::require(p.size() == want, std::string(tag_name(d.tag)) + ": expected " + std::to_string(want) +
                                          " parameter(s), got " + std::to_string(p.size()));
  };
  switch (d.tag) {
    case FamilyTag::TransitiveT: arity(1); return build_T(p[0]);
    case FamilyTag::AllOnesJ: arity(1); return build_J(p[0]);
    case FamilyTag::Pi: arity(2); return build_Pi(p[0], p[1]);
    case FamilyTag::CompletelyTransitive: {
      detail::require(p.size() >= 3, "ct: expected s,k,t[,alpha...]");
      return build_completely_transitive(p[0], p[1], p[2], VertexSet(std::vector<int>(p.begin() + 3, p.end())));
    }
    case FamilyTag::K: arity(1); return build_K(p[0]);
    case FamilyTag::Kprime: arity(1); return build_Kprime(p[0]);
    case FamilyTag::F: arity(1); return build_F(p[0]);
    case FamilyTag::F1: arity(1); return build_F1(p[0]);
    case FamilyTag::F2: arity(1); return build_F2(p[0]);
    case FamilyTag::F3: arity(2); return build_F3(p[0], p[1]);
    case FamilyTag::F4: arity(5); return build_F4(p[0], p[1], p[2], p[3], p[4]);
    case FamilyTag::BorderedTournament: arity(2); return build_bordered_tournament(p[0], p[1]);
    case FamilyTag::K3Block: arity(1); return build_k3_block(p[0]);
    case FamilyTag::K4N9Example: arity(0); return build_k4_n9_example();
  }
  throw std::invalid_argument("build: unknown family");
}

/// Every (k-t)-subset of the last block {sk+1, ..., sk+k}, in lexicographic order.
inline std::vector<VertexSet> completely_transitive_alphas(int s, int k, int t)
{
  std::vector<VertexSet> out;
  const int size = k - t;
  std::vector<int> pick(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    std::vector<int> alpha;
    for (int i : pick) alpha.push_back(s * k + 1 + i);
    out.emplace_back(std::move(alpha));
    int i = size - 1;
    while (i >= 0 && pick[i] == k - size + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

/// Descriptors of F_1(n), F_2(n), F_3(n) for all m, and F_4(n) for all k-tuples.
inline std::vector<FamilyDescriptor> n_minus_4_candidates(int n)
{
  std::vector<FamilyDescriptor> out{{FamilyTag::F1, {n}}, {FamilyTag::F2, {n}}};
  for (int m = 0; m <= n - 7; ++m) out.push_back({FamilyTag::F3, {n, m}});
  for (int a = 0; a <= n - 5; ++a)
    for (int b = a + 1; b <= n - 5; ++b)
      for (int c = b + 1; c <= n - 5; ++c)
        for (int d = c + 1; d <= n - 5; ++d) out.push_back({FamilyTag::F4, {n, a, b, c, d}});
  return out;
}

}  // namespace walkex
