#include <algorithm>
#include <functional>
#include <set>

#include <gtest/gtest.h>

#include "platjones/matchings.hpp"

namespace platjones {
namespace {

PlanarMatching M(int strands, std::vector<std::pair<int, int>> pairs) {
  return PlanarMatching::from_pairs(strands, pairs);
}

// Brute force: every perfect matching of 1..2n, keeping the non-crossing ones.
std::set<std::vector<std::pair<int, int>>> brute_force_noncrossing(int two_n) {
  std::set<std::vector<std::pair<int, int>>> out;
  std::vector<int> partner(static_cast<std::size_t>(two_n) + 1, 0);
  std::function<void()> rec = [&] {
    int p = 1;
    while (p <= two_n && partner[static_cast<std::size_t>(p)] != 0) ++p;
    if (p > two_n) {
      std::vector<std::pair<int, int>> ps;
      for (int x = 1; x <= two_n; ++x)
        if (partner[static_cast<std::size_t>(x)] > x) ps.emplace_back(x, partner[static_cast<std::size_t>(x)]);
      bool crossing = false;
      for (auto [a, b] : ps)
        for (auto [c, d] : ps) crossing |= a < c && c < b && b < d;
      if (!crossing) out.insert(ps);
      return;
    }
    for (int q = p + 1; q <= two_n; ++q) {
      if (partner[static_cast<std::size_t>(q)] != 0) continue;
      partner[static_cast<std::size_t>(p)] = q;
      partner[static_cast<std::size_t>(q)] = p;
      rec();
      partner[static_cast<std::size_t>(p)] = 0;
      partner[static_cast<std::size_t>(q)] = 0;
    }
  };
  rec();
  return out;
}

TEST(Matchings, PsiValues) {
  EXPECT_EQ(psi(0), 1U);
  EXPECT_EQ(psi(6), 5U);
  EXPECT_EQ(psi(8), 14U);
  EXPECT_THROW(psi(3), std::invalid_argument);
  EXPECT_THROW(psi(200), std::overflow_error);
}

TEST(Matchings, PsiIsCatalan) {
  // C_n = binom(2n, n) / (n + 1), computed independently of the recursion.
  for (int n = 0; n <= 20; ++n) {
    std::uint64_t binom = 1;
    for (int i = 1; i <= n; ++i) binom = binom * static_cast<std::uint64_t>(n + i) / static_cast<std::uint64_t>(i);
    EXPECT_EQ(psi(2 * n), binom / static_cast<std::uint64_t>(n + 1)) << n;
  }
}

TEST(Matchings, EnumerateSmall) {
  ASSERT_EQ(enumerate(2).size(), 1U);
  EXPECT_EQ(enumerate(2)[0], M(2, {{1, 2}}));

  const auto four = enumerate_lex(4);
  ASSERT_EQ(four.size(), 2U);
  EXPECT_EQ(four[0], M(4, {{1, 2}, {3, 4}}));
  EXPECT_EQ(four[1], M(4, {{1, 4}, {2, 3}}));

  const auto& six = enumerate(6);
  ASSERT_EQ(six.size(), 5U);
  EXPECT_NO_THROW(six.index_of(M(6, {{1, 2}, {3, 4}, {5, 6}})));
  EXPECT_NO_THROW(six.index_of(M(6, {{1, 6}, {2, 5}, {3, 4}})));
}

TEST(Matchings, EnumerateAgreesWithBruteForce) {
  for (int two_n = 2; two_n <= 12; two_n += 2) {
    const auto expected = brute_force_noncrossing(two_n);
    const auto& b = enumerate(two_n);
    ASSERT_EQ(b.size(), expected.size());
    ASSERT_EQ(b.size(), psi(two_n));
    std::set<std::vector<std::pair<int, int>>> got;
    for (const auto& m : b.order()) got.insert(m.pairs());
    EXPECT_EQ(got, expected);
    EXPECT_EQ(b[b.index_of_cap()], PlanarMatching::caps(two_n));
  }
}

TEST(Matchings, CanonicalOrderIsLexicographicAbove6) {
  for (int two_n : {2, 8, 10}) {
    const auto& order = basis(two_n).order();
    EXPECT_TRUE(std::is_sorted(order.begin(), order.end()));
  }
}

TEST(Matchings, RejectsInvalid) {
  EXPECT_THROW(M(4, {{1, 3}, {2, 4}}), std::invalid_argument);  // crossing
  EXPECT_THROW(M(4, {{1, 2}}), std::invalid_argument);          // not perfect
  EXPECT_THROW(M(4, {{1, 2}, {2, 3}}), std::invalid_argument);
  EXPECT_THROW(M(4, {{1, 5}, {2, 3}}), std::invalid_argument);
}

TEST(Matchings, Rendering) {
  EXPECT_EQ(PlanarMatching::caps(6).to_string(), "(1 2)(3 4)(5 6)");
  EXPECT_EQ(M(6, {{3, 4}, {2, 5}, {1, 6}}).to_string(), "(1 6)(2 5)(3 4)");
}

TEST(Matchings, CloseWith) {
  const auto caps6 = PlanarMatching::caps(6);
  EXPECT_EQ(close_with(caps6, caps6), 3);
  // {16,25,34} traces 1-6-5-2 and 3-4: two circles.
  EXPECT_EQ(close_with(M(6, {{1, 6}, {2, 5}, {3, 4}}), caps6), 2);
  // The unique one-circle matching on six points.
  EXPECT_EQ(close_with(M(6, {{1, 6}, {2, 3}, {4, 5}}), caps6), 1);
  EXPECT_EQ(close_with(M(4, {{1, 4}, {2, 3}}), PlanarMatching::caps(4)), 1);
  int single = 0;
  for (const auto& m : enumerate(6).order()) single += close_with(m, caps6) == 1;
  EXPECT_EQ(single, 1);
}

TEST(Matchings, CapCupExamples) {
  const auto cap4 = M(4, {{1, 2}, {3, 4}});
  const auto nest4 = M(4, {{1, 4}, {2, 3}});
  EXPECT_EQ(apply_capcup(1, cap4), std::make_pair(cap4, true));
  EXPECT_EQ(apply_capcup(2, cap4), std::make_pair(nest4, false));
  EXPECT_EQ(apply_capcup(2, nest4), std::make_pair(nest4, true));
  EXPECT_THROW(apply_capcup(4, cap4), GeneratorOutOfRange);
}

TEST(MatchingsProperty, CapCupInvariants) {
  for (int two_n = 2; two_n <= 12; two_n += 2) {
    const auto caps = PlanarMatching::caps(two_n);
    for (const auto& m : basis(two_n).order()) {
      const int circles = close_with(m, caps);
      EXPECT_GE(circles, 1);
      EXPECT_LE(circles, two_n / 2);
      for (int i = 1; i < two_n; ++i) {
        const auto [once, closed1] = apply_capcup(i, m);
        EXPECT_TRUE(once.is_noncrossing());
        EXPECT_EQ(once.partner(i), i + 1);
        EXPECT_EQ(closed1, m.partner(i) == i + 1);
        const auto [twice, closed2] = apply_capcup(i, once);
        EXPECT_EQ(twice, once);
        EXPECT_TRUE(closed2);
      }
    }
  }
}

}  // namespace
}  // namespace platjones
