#pragma once

// Cross-checks the closed-form value of ex(n, F_k) against the exact search
// and, where a characterization of the extremal digraphs is known, the
// enumerated extremal classes against the constructed families.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "walkex/canonical.hpp"
#include "walkex/constructions.hpp"
#include "walkex/formulas.hpp"
#include "walkex/search.hpp"

namespace walkex {

struct VerifyOutcome {
  int n = 0;
  int k = 0;
  bool loops = false;
  ExValue formula_value;
  SearchReport search_value;
  /// Formula exact and equal to an exact search result.
  bool value_match = false;
  /// Families whose union is the extremal set, when a characterization applies.
  std::vector<FamilyDescriptor> characterization_expected;
  /// Present only when an enumeration ran and a characterization applies.
  std::optional<bool> characterization_match;
  std::vector<std::string> notes;

  bool complete() const { return search_value.status == SearchStatus::exact; }

  /// A disagreement between a proven statement and the computation.
  bool mismatch() const
  {
    if (!complete()) return false;
    const auto& f = formula_value;
    if (f.status == ExStatus::exact && !value_match) return true;
    if (f.status == ExStatus::lower_bound_only && f.value && search_value.max_arcs < *f.value) return true;
    return characterization_match == false;
  }
};

/// The extremal families for (n, k), or empty where none is asserted.
inline std::vector<FamilyDescriptor> expected_extremal_families(int n, int k)
{
  if (k < 4 || n < 5) return {};
  if (k >= n - 1) return {{FamilyTag::TransitiveT, {n}}};
  if (n == k + 2) return {{FamilyTag::K, {n}}, {FamilyTag::Kprime, {n}}};
  if (n == k + 3) return {{FamilyTag::F, {n}}};
  if (k < 5) return {};
  if (n == k + 4) return n_minus_4_candidates(n);

  const int s = n / k;
  const int t = n % k;
  std::vector<FamilyDescriptor> out;
  for (const auto& alpha : completely_transitive_alphas(s, k, t)) {
    std::vector<int> params{s, k, t};
    params.insert(params.end(), alpha.members().begin(), alpha.members().end());
    out.push_back({FamilyTag::CompletelyTransitive, std::move(params)});
  }
  return out;
}

inline VerifyOutcome verify(int n, int k, bool loops, bool enumerate, std::optional<double> budget_seconds = 600.0,
                            int threads = 1)
{
  VerifyOutcome out;
  out.n = n;
  out.k = k;
  out.loops = loops;
  out.formula_value = ex_value(n, k, loops);

  SearchConfig cfg;
  cfg.n = n;
  cfg.k = k;
  cfg.loops = loops;
  cfg.enumerate = enumerate;
  cfg.budget_seconds = budget_seconds;
  cfg.threads = threads;
  out.search_value = max_search(cfg);
  const SearchReport& rep = out.search_value;

  if (!out.complete()) {
    out.notes.push_back("search stopped at the budget: " + std::to_string(rep.max_arcs) + " <= theta <= " +
                        std::to_string(rep.upper_bound_active));
    return out;
  }

  const auto& f = out.formula_value;
  out.value_match = f.status == ExStatus::exact && f.value && *f.value == rep.max_arcs;
  if (f.status == ExStatus::exact && !out.value_match)
    out.notes.push_back("value mismatch: formula " + std::to_string(*f.value) + ", search " +
                        std::to_string(rep.max_arcs));
  if (f.status == ExStatus::lower_bound_only && f.value) {
    if (rep.max_arcs < *f.value)
      out.notes.push_back("search maximum " + std::to_string(rep.max_arcs) + " is below the constructed lower bound " +
                          std::to_string(*f.value));
    else
      out.notes.push_back("construction gives " + std::to_string(*f.value) + ", search maximum " +
                          std::to_string(rep.max_arcs));
  }
  if (f.status == ExStatus::unknown) out.notes.push_back("no closed form; search maximum " + std::to_string(rep.max_arcs));

  std::set<std::string> found;
  for (const auto& w : rep.witnesses) found.insert(canonical_form(w));

  out.characterization_expected = expected_extremal_families(n, k);
  if (enumerate && !out.characterization_expected.empty()) {
    std::set<std::string> expected;
    for (const auto& d : out.characterization_expected) expected.insert(canonical_form(build(d)));
    out.characterization_match = expected == found;
    if (!*out.characterization_match) {
      int missing = 0;
      int extra = 0;
      for (const auto& e : expected) missing += found.count(e) ? 0 : 1;
      for (const auto& w : found) extra += expected.count(w) ? 0 : 1;
      out.notes.push_back("characterization mismatch: " + std::to_string(missing) + " expected class(es) not found, " +
                          std::to_string(extra) + " unexpected class(es) found");
    }
    out.notes.push_back(std::to_string(out.characterization_expected.size()) + " expected construction(s) give " +
                        std::to_string(expected.size()) + " class(es)");
  }

  if (enumerate && k == 4 && n >= k + 5) {
    out.notes.push_back("no characterization asserted for k = 4, n >= 9; " + std::to_string(found.size()) +
                        " extremal class(es) found");
    if (n == 9) {
      const bool present = found.count(canonical_form(build_k4_n9_example())) > 0;
      out.notes.push_back(std::string("k4n9 example ") + (present ? "is" : "is not") + " among the extremal classes");
    }
  }
  return out;
}

}  // namespace walkex
