#include <gtest/gtest.h>

#include "walkex/canonical.hpp"
#include "walkex/constructions.hpp"
#include "walkex/formulas.hpp"
#include "walkex/walks.hpp"

using namespace walkex;

namespace {

long long c2(long long n) { return n * (n - 1) / 2; }

void expect_free(const BitMatrix& a, int k, const std::string& what)
{
  EXPECT_TRUE(is_free(a, k)) << what << " should be free for k=" << k;
}

}  // namespace

TEST(BuildT, Examples)
{
  EXPECT_EQ(build_T(1), BitMatrix(1));
  EXPECT_EQ(build_T(3), BitMatrix::from_strings({"011", "001", "000"}));
  EXPECT_EQ(count_ones(build_T(8)), 28);
  EXPECT_THROW(build_T(0), std::invalid_argument);
}

TEST(BuildJ, AllOnesWithLoops)
{
  const BitMatrix j = build_J(4);
  EXPECT_TRUE(j.loops_allowed());
  EXPECT_EQ(count_ones(j), 16);
}

TEST(BuildPi, Examples)
{
  EXPECT_EQ(build_Pi(1, 5), build_T(5));
  EXPECT_TRUE(capped_power(build_Pi(3, 4), 4).is_zero());
  EXPECT_EQ(count_ones(build_Pi(2, 3)), 12);
  EXPECT_THROW(build_Pi(9, 8), std::invalid_argument);
  EXPECT_THROW(build_Pi(0, 3), std::invalid_argument);
}

TEST(BuildPi, EntryDefinition)
{
  const int m = 3;
  const int n = 4;
  const BitMatrix pi = build_Pi(m, n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) EXPECT_EQ(pi.test(a * n + i, b * n + j), i < j);
}

TEST(BuildCompletelyTransitive, Examples)
{
  EXPECT_EQ(build_completely_transitive(0, 5, 3, {4, 5}), build_T(3));
  const BitMatrix pi25 = build_completely_transitive(2, 5, 0, VertexSet::interval(11, 15));
  EXPECT_EQ(pi25, build_Pi(2, 5));
  EXPECT_EQ(count_ones(pi25), 40);
  for (const auto& alpha : completely_transitive_alphas(3, 4, 1)) {
    const BitMatrix a = build_completely_transitive(3, 4, 1, alpha);
    EXPECT_EQ(a.order(), 13);
    EXPECT_EQ(count_ones(a), 63);
  }
}

TEST(BuildCompletelyTransitive, Errors)
{
  EXPECT_THROW(build_completely_transitive(1, 4, 1, {5, 6}), std::invalid_argument);   // wrong size
  EXPECT_THROW(build_completely_transitive(1, 4, 2, {4, 5}), std::invalid_argument);   // outside last block
  EXPECT_THROW(build_completely_transitive(1, 4, 4, VertexSet{}), std::invalid_argument);  // t >= k
  EXPECT_THROW(build_completely_transitive(0, 3, 0, {1, 2, 3}), std::invalid_argument);   // empty order
}

TEST(BuildCompletelyTransitive, PrincipalSubmatrixOfPi)
{
  for (int k = 1; k <= 6; ++k)
    for (int s = 0; (s + 1) * k <= 20; ++s)
      for (int t = 0; t < k; ++t) {
        if (s * k + t == 0) continue;
        for (const auto& alpha : completely_transitive_alphas(s, k, t)) {
          const BitMatrix a = build_completely_transitive(s, k, t, alpha);
          EXPECT_EQ(a, select_principal(build_Pi(s + 1, k), alpha.complement((s + 1) * k)));
        }
      }
}

TEST(BuildKandKprime, Examples)
{
  EXPECT_EQ(count_ones(build_K(6)), 14);
  EXPECT_TRUE(is_free(build_Kprime(7), 5));
  EXPECT_TRUE(capped_power(build_K(6), 4).is_zero_one());
  EXPECT_THROW(build_K(3), std::invalid_argument);
  EXPECT_THROW(build_Kprime(3), std::invalid_argument);
  EXPECT_FALSE(is_isomorphic(build_K(6), build_Kprime(6)));
}

TEST(BuildF, Examples)
{
  const BitMatrix f7 = build_F(7);
  EXPECT_EQ(count_ones(f7), 19);
  EXPECT_TRUE(is_free(build_F(8), 5));
  EXPECT_EQ(f7.column(0), Row{0});
  EXPECT_EQ(f7.row(5), Row{0});
  EXPECT_EQ(f7.row(6), Row{0});
  EXPECT_THROW(build_F(6), std::invalid_argument);
}

TEST(BuildNMinus4Families, Examples)
{
  EXPECT_EQ(count_ones(build_F1(9)), 32);
  EXPECT_TRUE(capped_power(build_F4(9, 0, 1, 2, 3), 5).is_zero());

  // F_1^{n-4} is J_{3,2} in the top-right corner and zero elsewhere.
  for (int n = 9; n <= 13; ++n) {
    const WalkCounts p = capped_power(build_F1(n), n - 4);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) EXPECT_EQ(p.entry(i, j), (i < 3 && j >= n - 2) ? 1 : 0) << n;
  }
  for (int n = 9; n <= 13; ++n)
    for (const auto& d : n_minus_4_candidates(n))
      if (d.tag == FamilyTag::F4) EXPECT_TRUE(capped_power(build(d), n - 4).is_zero()) << describe(d);
}

TEST(BuildNMinus4Families, Errors)
{
  EXPECT_THROW(build_F1(8), std::invalid_argument);
  EXPECT_THROW(build_F2(8), std::invalid_argument);
  EXPECT_THROW(build_F3(9, 3), std::invalid_argument);
  EXPECT_THROW(build_F3(9, -1), std::invalid_argument);
  EXPECT_THROW(build_F4(9, 0, 0, 1, 2), std::invalid_argument);
  EXPECT_THROW(build_F4(9, 1, 2, 3, 5), std::invalid_argument);
  EXPECT_THROW(build_F4(9, -1, 0, 1, 2), std::invalid_argument);
}

TEST(BuildF4, PrincipalSubmatrixOfPi)
{
  for (int n = 9; n <= 13; ++n)
    for (const auto& d : n_minus_4_candidates(n)) {
      if (d.tag != FamilyTag::F4) continue;
      std::vector<int> alpha;
      for (int i = 1; i <= n - 4; ++i) alpha.push_back(i);
      for (int j = 1; j <= 4; ++j) alpha.push_back(n - 3 + d.params[j]);
      EXPECT_EQ(build(d), select_principal(build_Pi(2, n - 4), VertexSet(alpha))) << describe(d);
    }
}

TEST(BuildBorderedTournament, Examples)
{
  EXPECT_TRUE(is_free(build_bordered_tournament(8, 3), 7));
  for (int n = 6; n <= 10; ++n) {
    EXPECT_TRUE(is_isomorphic(build_bordered_tournament(n, n - 2), build_T(n)));
    for (int s = 0; s <= n - 2; ++s) EXPECT_EQ(count_ones(build_bordered_tournament(n, s)), c2(n - 1) + (n - 1));
  }
  EXPECT_THROW(build_bordered_tournament(5, 1), std::invalid_argument);
  EXPECT_THROW(build_bordered_tournament(8, 7), std::invalid_argument);
}

TEST(BuildK3Block, Examples)
{
  const BitMatrix a = build_k3_block(2);
  EXPECT_EQ(count_ones(a), 13);
  EXPECT_TRUE(is_free(a, 3));
  EXPECT_EQ(capped_power(a, 3).entry(3, 2), 1);
  EXPECT_THROW(build_k3_block(1), std::invalid_argument);
  EXPECT_THROW(build_k3_block(22), std::invalid_argument);
}

TEST(BuildK3Block, CubeSupport)
{
  // Ones exactly at 1-based (3s+1, 3l).
  for (int t = 2; t <= 6; ++t) {
    const WalkCounts p = capped_power(build_k3_block(t), 3);
    for (int i = 0; i < 3 * t; ++i)
      for (int j = 0; j < 3 * t; ++j) EXPECT_EQ(p.entry(i, j), (i % 3 == 0 && j % 3 == 2) ? 1 : 0);
  }
}

TEST(BuildK4N9Example, Properties)
{
  const BitMatrix a = build_k4_n9_example();
  EXPECT_EQ(a.order(), 9);
  EXPECT_EQ(count_ones(a), 30);
  EXPECT_TRUE(is_free(a, 4));
  EXPECT_FALSE(capped_power(a, 4).is_zero());
  EXPECT_FALSE(a.has_loops());
}

// Every builder over every parameter choice with n <= 13: freeness for its
// designated k and the closed-form arc count.
TEST(Builders, ExhaustivePostconditions)
{
  for (int n = 1; n <= 13; ++n) {
    const BitMatrix t = build_T(n);
    EXPECT_EQ(count_ones(t), c2(n));
    expect_free(t, std::max(1, n - 1), "T");
    EXPECT_EQ(count_ones(build_J(n)), n * n);
    expect_free(build_J(n), 1, "J");
  }
  for (int m = 1; m <= 13; ++m)
    for (int n = 1; m * n <= 13; ++n) {
      const BitMatrix pi = build_Pi(m, n);
      EXPECT_EQ(count_ones(pi), m * m * c2(n));
      expect_free(pi, n, "Pi");
    }
  for (int k = 1; k <= 13; ++k)
    for (int s = 0; s * k <= 13; ++s)
      for (int t = 0; t < k && s * k + t <= 13; ++t) {
        if (s * k + t == 0) continue;
        for (const auto& alpha : completely_transitive_alphas(s, k, t)) {
          const BitMatrix a = build_completely_transitive(s, k, t, alpha);
          EXPECT_EQ(count_ones(a), completely_transitive_arcs(s, k, t));
          EXPECT_EQ(count_ones(a), main_formula_value(s * k + t, k));
          expect_free(a, k, "ct");
        }
      }
  for (int n = 4; n <= 13; ++n) {
    EXPECT_EQ(count_ones(build_K(n)), c2(n) - 1);
    EXPECT_EQ(count_ones(build_Kprime(n)), c2(n) - 1);
    expect_free(build_K(n), n - 2, "K");
    expect_free(build_Kprime(n), n - 2, "Kprime");
  }
  for (int n = 7; n <= 13; ++n) {
    EXPECT_EQ(count_ones(build_F(n)), c2(n) - 2);
    expect_free(build_F(n), n - 3, "F");
  }
  for (int n = 9; n <= 13; ++n)
    for (const auto& d : n_minus_4_candidates(n)) {
      const BitMatrix a = build(d);
      EXPECT_EQ(count_ones(a), c2(n) - 4) << describe(d);
      expect_free(a, n - 4, describe(d));
    }
  for (int n = 6; n <= 13; ++n)
    for (int s = 0; s <= n - 2; ++s) expect_free(build_bordered_tournament(n, s), n - 1, "bordered");
  for (int t = 2; 3 * t <= 13; ++t) {
    EXPECT_EQ(count_ones(build_k3_block(t)), 3 * t * t + 1);
    EXPECT_GT(count_ones(build_k3_block(t)), count_ones(build_Pi(t, 3)));
    expect_free(build_k3_block(t), 3, "k3block");
  }
}

TEST(Builders, LoopFree)
{
  for (int n = 9; n <= 11; ++n)
    for (const auto& d : n_minus_4_candidates(n)) EXPECT_FALSE(build(d).loops_allowed());
  EXPECT_FALSE(build_k4_n9_example().loops_allowed());
  EXPECT_FALSE(build_k3_block(3).loops_allowed());
}

TEST(FamilyDescriptor, TagsAndDispatch)
{
  EXPECT_EQ(parse_family_tag("f4"), FamilyTag::F4);
  EXPECT_EQ(parse_family_tag("Kprime"), FamilyTag::Kprime);
  EXPECT_EQ(parse_family_tag("COMPLETELYTRANSITIVE"), FamilyTag::CompletelyTransitive);
  EXPECT_FALSE(parse_family_tag("nope").has_value());
  for (const auto& f : kFamilyNames) EXPECT_EQ(parse_family_tag(tag_name(f.tag)), f.tag);

  EXPECT_EQ(build({FamilyTag::F4, {9, 0, 1, 2, 3}}), build_F4(9, 0, 1, 2, 3));
  EXPECT_EQ(build({FamilyTag::CompletelyTransitive, {1, 4, 2, 7, 8}}), build_completely_transitive(1, 4, 2, {7, 8}));
  EXPECT_EQ(build({FamilyTag::K4N9Example, {}}), build_k4_n9_example());
  EXPECT_THROW(build({FamilyTag::F4, {9, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(build({FamilyTag::TransitiveT, {}}), std::invalid_argument);
  EXPECT_EQ(describe({FamilyTag::F3, {9, 1}}), "f3(9,1)");
}

TEST(Candidates, CountsAtNine)
{
  const auto c = n_minus_4_candidates(9);
  EXPECT_EQ(c.size(), 10U);
  EXPECT_EQ(completely_transitive_alphas(2, 5, 1).size(), 5U);
  EXPECT_EQ(completely_transitive_alphas(1, 6, 0).size(), 1U);
}
