#include <set>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "walkex/canonical.hpp"
#include "walkex/constructions.hpp"
#include "walkex/oracle.hpp"
#include "walkex/recognize.hpp"
#include "walkex/search.hpp"

using namespace walkex;

namespace {

SearchReport run(int n, int k, bool loops = false, bool enumerate = false, bool prune = true, int threads = 1)
{
  SearchConfig cfg;
  cfg.n = n;
  cfg.k = k;
  cfg.loops = loops;
  cfg.enumerate = enumerate;
  cfg.prune = prune;
  cfg.threads = threads;
  cfg.budget_seconds = std::nullopt;
  return max_search(cfg);
}

std::vector<std::string> forms(const SearchReport& r)
{
  std::vector<std::string> out;
  for (const auto& w : r.witnesses) out.push_back(canonical_form(w));
  std::sort(out.begin(), out.end());
  return out;
}

void expect_report_invariants(const SearchReport& r)
{
  if (r.status == SearchStatus::exact) EXPECT_EQ(r.upper_bound_active, r.max_arcs);
  ASSERT_FALSE(r.witnesses.empty());
  std::set<std::string> seen;
  for (const auto& w : r.witnesses) {
    EXPECT_EQ(w.order(), r.config.n);
    EXPECT_TRUE(is_free(w, r.config.k));
    EXPECT_EQ(count_ones(w), r.max_arcs);
    EXPECT_TRUE(seen.insert(canonical_form(w)).second) << "duplicate witness class";
    if (!r.config.loops) EXPECT_FALSE(w.has_loops());
  }
}

}  // namespace

TEST(Oracle, Examples)
{
  const OracleResult a = exhaustive_oracle(5, 4, false);
  EXPECT_EQ(a.max_arcs, 10);
  EXPECT_EQ(a.extremal_forms, std::vector<std::string>{canonical_form(build_T(5))});
  EXPECT_EQ(exhaustive_oracle(4, 2, false).max_arcs, 7);

  const OracleResult c = exhaustive_oracle(3, 1, false);
  EXPECT_EQ(c.max_arcs, 6);
  ASSERT_EQ(c.extremal_forms.size(), 1U);
  EXPECT_EQ(c.extremal_forms.front(), "011101110");
  EXPECT_THROW(exhaustive_oracle(6, 2, false), std::invalid_argument);
  EXPECT_THROW(exhaustive_oracle(3, 0, false), std::invalid_argument);
}

TEST(Oracle, RangeMatchesSingleCalls)
{
  const auto range = exhaustive_oracle_range(4, 5, true);
  for (int k = 1; k <= 5; ++k) {
    const auto one = exhaustive_oracle(4, k, true);
    EXPECT_EQ(range[k - 1].max_arcs, one.max_arcs);
    EXPECT_EQ(range[k - 1].extremal_forms, one.extremal_forms);
  }
}

TEST(Oracle, AgreesWithBruteForcePowerOnTinyOrders)
{
  // Independent of the capped multiplication: maxima from exact integer powers.
  for (int n = 1; n <= 3; ++n)
    for (bool loops : {false, true}) {
      std::vector<std::pair<int, int>> cells;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j || loops) cells.emplace_back(i, j);
      for (int k = 1; k <= 4; ++k) {
        int best = 0;
        for (std::uint32_t mask = 0; mask < (1U << cells.size()); ++mask) {
          BitMatrix a(n, loops);
          for (std::size_t c = 0; c < cells.size(); ++c)
            if ((mask >> c) & 1U) a.set(cells[c].first, cells[c].second);
          if (oracle::is_free(a, k)) best = std::max(best, count_ones(a));
        }
        EXPECT_EQ(exhaustive_oracle(n, k, loops).max_arcs, best) << n << "," << k << "," << loops;
      }
    }
}

TEST(MaxSearch, Examples)
{
  const SearchReport r54 = run(5, 4);
  EXPECT_EQ(r54.max_arcs, 10);
  EXPECT_EQ(r54.status, SearchStatus::exact);

  const SearchReport r64 = run(6, 4, false, true);
  EXPECT_EQ(r64.max_arcs, 14);
  std::vector<std::string> want{canonical_form(build_K(6)), canonical_form(build_Kprime(6))};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(forms(r64), want);

  const SearchReport r74 = run(7, 4, false, true);
  EXPECT_EQ(r74.max_arcs, 19);
  EXPECT_EQ(forms(r74), std::vector<std::string>{canonical_form(build_F(7))});

  EXPECT_EQ(run(4, 2).max_arcs, 7);
  const SearchReport r54e = run(5, 4, false, true);
  EXPECT_EQ(forms(r54e), std::vector<std::string>{canonical_form(build_T(5))});
}

TEST(MaxSearch, AgreesWithOracleStrict)
{
  for (int n = 1; n <= 5; ++n) {
    const auto truth = exhaustive_oracle_range(n, 6, false);
    for (int k = 1; k <= 6; ++k) {
      const SearchReport r = run(n, k, false, true);
      EXPECT_EQ(r.max_arcs, truth[k - 1].max_arcs) << n << "," << k;
      EXPECT_EQ(forms(r), truth[k - 1].extremal_forms) << n << "," << k;
      expect_report_invariants(r);
    }
  }
}

TEST(MaxSearch, AgreesWithOracleLoops)
{
  for (int n = 1; n <= 4; ++n) {
    const auto truth = exhaustive_oracle_range(n, 6, true);
    for (int k = 1; k <= 6; ++k) {
      const SearchReport r = run(n, k, true, true);
      EXPECT_EQ(r.max_arcs, truth[k - 1].max_arcs) << n << "," << k;
      EXPECT_EQ(forms(r), truth[k - 1].extremal_forms) << n << "," << k;
      expect_report_invariants(r);
    }
  }
}

TEST(MaxSearch, UnprunedEngineAgrees)
{
  for (int n = 1; n <= 5; ++n)
    for (bool loops : {false, true})
      for (int k = 1; k <= 6; ++k) {
        if (loops && n == 5 && k == 1) continue;  // 2^25 leaves; covered by the pruned/oracle check
        const SearchReport plain = run(n, k, loops, true, false);
        const SearchReport pruned = run(n, k, loops, true, true);
        EXPECT_EQ(plain.max_arcs, pruned.max_arcs) << n << "," << k << "," << loops;
        EXPECT_EQ(forms(plain), forms(pruned)) << n << "," << k << "," << loops;
      }
}

TEST(MaxSearch, UnprunedEngineAgreesAtOrderSix)
{
  for (int k = 2; k <= 6; ++k) EXPECT_EQ(run(6, k, false, false, false).max_arcs, run(6, k).max_arcs) << k;
}

TEST(MaxSearch, StrictAndLoopMaximaAgreeForLongWalks)
{
  // From n = 2 on; a single looped vertex is free for every k.
  for (int n = 2; n <= 7; ++n)
    for (int k = 4; k <= 6; ++k) EXPECT_EQ(run(n, k, false).max_arcs, run(n, k, true).max_arcs) << n << "," << k;
}

TEST(MaxSearch, KTwoEvenOrdersExceedClosedForm)
{
  // Odd orders match (n^2+4n-5)/4. Even orders reach (n^2+4n-4)/4, one more
  // than the even closed form that ex_value reports.
  const std::vector<std::pair<int, int>> want{{3, 4}, {4, 7}, {5, 10}, {6, 14}, {7, 18}, {8, 23}};
  for (auto [n, arcs] : want) EXPECT_EQ(run(n, 2).max_arcs, arcs) << n;
  const BitMatrix w = BitMatrix::from_strings({"000001", "000010", "000100", "111000", "111100", "111100"});
  EXPECT_EQ(count_ones(w), 14);
  EXPECT_TRUE(oracle::is_free(w, 2));
}

TEST(MaxSearch, ThreadsGiveSameAnswer)
{
  for (auto [n, k] : {std::pair{8, 4}, std::pair{9, 5}, std::pair{7, 3}}) {
    const SearchReport one = run(n, k, false, true, true, 1);
    const SearchReport four = run(n, k, false, true, true, 4);
    EXPECT_EQ(one.max_arcs, four.max_arcs);
    EXPECT_EQ(forms(one), forms(four));
  }
}

TEST(MaxSearch, WitnessesAreValid)
{
  for (auto [n, k] : {std::pair{8, 4}, std::pair{8, 5}, std::pair{9, 4}, std::pair{6, 2}, std::pair{6, 3}})
    expect_report_invariants(run(n, k, false, true));
}

TEST(MaxSearch, BudgetExhaustionIsReported)
{
  SearchConfig cfg;
  cfg.n = 13;
  cfg.k = 2;
  cfg.enumerate = true;
  cfg.budget_seconds = 1.0;
  const SearchReport r = max_search(cfg);
  EXPECT_EQ(r.status, SearchStatus::budget_exhausted);
  EXPECT_GE(r.upper_bound_active, r.max_arcs);
  ASSERT_EQ(r.witnesses.size(), 1U);
  EXPECT_TRUE(is_free(r.witnesses.front(), 2));
  EXPECT_EQ(count_ones(r.witnesses.front()), r.max_arcs);
}

TEST(MaxSearch, ConfigValidation)
{
  SearchConfig cfg;
  cfg.n = 0;
  EXPECT_THROW(max_search(cfg), std::invalid_argument);
  cfg.n = 14;
  cfg.k = 4;
  cfg.enumerate = true;
  EXPECT_THROW(max_search(cfg), std::invalid_argument);
  cfg.n = 5;
  cfg.budget_seconds = 0.5;
  EXPECT_THROW(max_search(cfg), std::invalid_argument);
  cfg.budget_seconds = 10;
  cfg.threads = 0;
  EXPECT_THROW(max_search(cfg), std::invalid_argument);
  cfg.threads = 1;
  cfg.k = 0;
  EXPECT_THROW(max_search(cfg), std::invalid_argument);
}

TEST(Recognize, RoundTrip)
{
  const auto m = recognize_completely_transitive(build_completely_transitive(2, 5, 0, VertexSet::interval(11, 15)), 5);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->s, 2);
  EXPECT_EQ(m->t, 0);

  std::mt19937 rng(41);
  for (int k = 2; k <= 6; ++k)
    for (int n = 1; n <= 13; ++n) {
      const int s = n / k, t = n % k;
      for (const auto& alpha : completely_transitive_alphas(s, k, t)) {
        const BitMatrix a = build_completely_transitive(s, k, t, alpha);
        const BitMatrix b = apply_permutation(a, Permutation(oracle::random_permutation(rng, n)));
        const auto got = recognize_completely_transitive(b, k);
        ASSERT_TRUE(got.has_value()) << n << "," << k;
        EXPECT_EQ(got->s, s);
        EXPECT_EQ(got->t, t);
        EXPECT_TRUE(is_isomorphic(build_completely_transitive(s, k, t, got->alpha), b));
      }
    }
}

TEST(Recognize, Negatives)
{
  EXPECT_FALSE(recognize_completely_transitive(build_k4_n9_example(), 4).has_value());
  EXPECT_FALSE(recognize_completely_transitive(build_K(6), 4).has_value());
  EXPECT_FALSE(recognize_completely_transitive(build_T(6), 0).has_value());
  BitMatrix looped = build_T(4).with_loops_allowed(true);
  looped.set(0, 0);
  EXPECT_FALSE(recognize_completely_transitive(looped, 4).has_value());
}

TEST(Recognize, TransitiveTournamentConvention)
{
  // n = k: s = 1, t = 0, alpha is the whole second block.
  const auto m = recognize_completely_transitive(build_T(7), 7);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->s, 1);
  EXPECT_EQ(m->t, 0);
  EXPECT_EQ(m->alpha, VertexSet::interval(8, 14));
  // n < k: s = 0, t = n.
  const auto small = recognize_completely_transitive(build_T(5), 7);
  ASSERT_TRUE(small.has_value());
  EXPECT_EQ(small->s, 0);
  EXPECT_EQ(small->t, 5);
}

TEST(Recognize, ExtremalClassesForLargeOrders)
{
  // For k >= 5 and n >= k + 5 every extremal digraph is completely transitive.
  const SearchReport r = run(10, 5, false, true);
  EXPECT_EQ(r.max_arcs, 40);
  for (const auto& w : r.witnesses) EXPECT_TRUE(recognize_completely_transitive(w, 5).has_value());
  std::set<std::string> want = completely_transitive_forms(10, 5);
  const auto found = forms(r);
  std::set<std::string> got(found.begin(), found.end());
  EXPECT_EQ(got, want);
}
