#pragma once

#include <optional>
#include <set>
#include <string>

#include "walkex/bit_matrix.hpp"
#include "walkex/canonical.hpp"
#include "walkex/constructions.hpp"

namespace walkex {

struct CompletelyTransitiveMatch {
  int s = 0;
  int t = 0;
  /// The deleted vertices of the last block of Pi_{s+1,k}.
  VertexSet alpha;
};

/// Decides whether A is an (s,k,t)-completely transitive tournament, with
/// s = floor(n/k) and t = n - s k, by comparing canonical forms against every
/// choice of deleted vertices.
inline std::optional<CompletelyTransitiveMatch> recognize_completely_transitive(const BitMatrix& a, int k)
{
  if (k < 1) return std::nullopt;
  const int n = a.order();
  const int s = n / k;
  const int t = n % k;
  if ((s + 1) * k > kMaxOrder) return std::nullopt;
  if (a.has_loops() || count_ones(a) != completely_transitive_arcs(s, k, t)) return std::nullopt;

  const std::string target = canonical_form(a);
  std::set<std::string> tried;
  for (const auto& alpha : completely_transitive_alphas(s, k, t)) {
    const std::string form = canonical_form(build_completely_transitive(s, k, t, alpha));
    if (!tried.insert(form).second) continue;
    if (form == target) return CompletelyTransitiveMatch{s, t, alpha};
  }
  return std::nullopt;
}

/// Canonical forms of all (s,k,t)-completely transitive tournaments of order n.
inline std::set<std::string> completely_transitive_forms(int n, int k)
{
  const int s = n / k;
  const int t = n % k;
  std::set<std::string> forms;
  for (const auto& alpha : completely_transitive_alphas(s, k, t))
    forms.insert(canonical_form(build_completely_transitive(s, k, t, alpha)));
  return forms;
}

}  // namespace walkex
