#include <random>

#include <gtest/gtest.h>

#include "platjones/plat.hpp"
#include "test_support.hpp"

namespace platjones {
namespace {

BraidWord word(const char* text, int strands) { return parse_braid(text, strands); }

// sigma_2 sigma_4 ... sigma_{2n-2}: every crossing joins two neighbouring caps
// into one unknotted circle.
BraidWord chained_unknot(int strands) {
  std::vector<Syllable> syl;
  for (int i = 2; i < strands; i += 2) syl.push_back({i, 1});
  return BraidWord(strands, syl);
}

TEST(Plat, ClosureBracket) {
  const LaurentPoly k = loop_value();
  EXPECT_EQ(closure_bracket(BracketVector::unit(6, basis(6).index_of_cap())), parse_laurent("a^-4 + 2 + a^4"));
  EXPECT_EQ(closure_bracket(BracketVector{4, {parse_laurent("a - a^-3 + a^-7"), parse_laurent("a^3")}}),
            parse_laurent("-a^5 - a^-3 + a^-7"));
  const LaurentPoly f = parse_laurent("2a^3 - 1");
  const LaurentPoly g = parse_laurent("a^-2 + 5");
  EXPECT_EQ(closure_bracket(BracketVector{4, {f, g}}), f + k * g);
  // 2n = 6 weights: 0_1 -> 1, 0_2, 0_4, 0_5 -> k, 0_3 -> k^2.
  const std::vector<LaurentPoly> weights{1, k, k * k, k, k};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(closure_bracket(BracketVector::unit(6, i)), weights[i]);
  EXPECT_THROW(closure_bracket(BracketVector{6, {1, 2}}), DimensionMismatch);
}

TEST(Plat, Trefoil) {
  const auto inv = invariants_of(word("s2^3", 4));
  EXPECT_EQ(inv.bracket_vector.coeffs, (std::vector<LaurentPoly>{parse_laurent("a - a^-3 + a^-7"), parse_laurent("a^3")}));
  EXPECT_EQ(inv.bracket, parse_laurent("-a^5 - a^-3 + a^-7"));
  EXPECT_EQ(inv.writhe, 3);
  EXPECT_EQ(inv.kauffman_x, parse_laurent("a^-4 + a^-12 - a^-16"));
  EXPECT_EQ(inv.jones.poly, parse_laurent("t + t^3 - t^4", 't'));
  EXPECT_EQ(inv.jones.to_string(), "t + t^3 - t^4");

  const auto m = mirror_invariants(word("s2^3", 4));
  EXPECT_EQ(m.kauffman_x, parse_laurent("a^4 + a^12 - a^16"));
  EXPECT_EQ(m.writhe, -3);
  EXPECT_EQ(m.bracket, mirror(inv.bracket));
}

TEST(Plat, JonesConventions) {
  const auto inv = invariants_of(word("s2^3", 4), JonesConvention::t_eq_a4);
  EXPECT_EQ(inv.jones.poly, parse_laurent("t^-1 + t^-3 - t^-4", 't'));
  EXPECT_EQ(inv.convention, JonesConvention::t_eq_a4);
}

TEST(Plat, UnknotsAndKinks) {
  const auto u = invariants_of(BraidWord(2, {}));
  EXPECT_EQ(u.bracket, LaurentPoly(1));
  EXPECT_EQ(u.writhe, 0);
  EXPECT_EQ(u.kauffman_x, LaurentPoly(1));
  EXPECT_EQ(u.jones.poly, LaurentPoly(1));

  const auto kink = invariants_of(word("s2", 4));
  EXPECT_EQ(kink.bracket, parse_laurent("-a^3"));
  EXPECT_EQ(kink.writhe, 1);
  EXPECT_EQ(kink.kauffman_x, LaurentPoly(1));
  EXPECT_EQ(invariants_of(word("s2^-1", 4)).kauffman_x, LaurentPoly(1));

  for (int s = 2; s <= 8; s += 2) {
    EXPECT_EQ(invariants_of(chained_unknot(s)).kauffman_x, LaurentPoly(1)) << s;
    EXPECT_EQ(mirror_invariants(chained_unknot(s)).kauffman_x, LaurentPoly(1)) << s;
  }
}

TEST(Plat, Links) {
  for (auto [w, comps] : {std::pair{BraidWord(4, {}), 2}, {BraidWord(6, {}), 3}, {word("s2^2", 4), 2}}) {
    try {
      invariants_of(w);
      FAIL() << render(w);
    } catch (const IsLinkError& e) {
      EXPECT_EQ(e.components(), comps);
    }
    EXPECT_THROW(invariants_of(w, kDefaultJonesConvention, Engine::oracle), IsLinkError);
  }
}

TEST(Plat, JsonKeys) {
  const BraidWord w = word("s2^3", 4);
  const auto j = to_json(invariants_of(w), w);
  for (const char* key : {"strands", "word", "bracket_vector", "bracket", "writhe", "kauffman_x", "jones", "convention"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["writhe"], 3);
  EXPECT_EQ(j["word"], "s2^3");
  EXPECT_EQ(j["convention"], "t=a^-4");
  EXPECT_EQ(laurent_from_json(j["jones"]), parse_laurent("t + t^3 - t^4", 't'));
  EXPECT_EQ(j["bracket_vector"].size(), 2U);
}

std::vector<BraidWord> knot_panel(unsigned seed, int count, int max_strands, int max_crossings) {
  std::mt19937 rng(seed);
  std::vector<BraidWord> out;
  while (static_cast<int>(out.size()) < count) {
    const int strands = 2 * (1 + static_cast<int>(rng() % static_cast<unsigned>(max_strands / 2)));
    BraidWord w = testing::random_word(rng, strands, max_crossings);
    if (is_knot(w)) out.push_back(std::move(w));
  }
  return out;
}

TEST(PlatProperty, OracleEngineAgrees) {
  for (const auto& w : knot_panel(5, 150, 8, 10))
    EXPECT_EQ(invariants_of(w), invariants_of(w, kDefaultJonesConvention, Engine::oracle)) << render(w);
}

TEST(PlatProperty, MirrorRule) {
  for (const auto& w : knot_panel(6, 150, 8, 12)) {
    const auto inv = invariants_of(w);
    const auto m = mirror_invariants(w);
    EXPECT_EQ(m.kauffman_x, mirror(inv.kauffman_x));
    EXPECT_EQ(m.bracket, mirror(inv.bracket));
    EXPECT_EQ(m.writhe, -inv.writhe);
    EXPECT_EQ(m.bracket_vector, inv.bracket_vector.mirror());
    EXPECT_EQ(invariants_of(mirror(mirror(w))), inv);
  }
}

TEST(PlatProperty, CancellingPairInsertion) {
  // BraidWord merges sigma_i sigma_i^-1 away, so the pair is applied as raw
  // matrices: v = M(prefix) M_i M_i^-1 M(suffix) e_cap.
  std::mt19937 rng(7);
  for (const auto& w : knot_panel(7, 100, 8, 10)) {
    const auto& syl = w.syllables();
    const auto cut = static_cast<std::ptrdiff_t>(rng() % (syl.size() + 1));
    const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(w.strands() - 1));
    const std::vector<Syllable> prefix(syl.begin(), syl.begin() + cut);
    BracketVector v = word_vector(BraidWord(w.strands(), {syl.begin() + cut, syl.end()}));
    v = apply(generator_matrix(w.strands(), i, -1), v);
    v = apply(generator_matrix(w.strands(), i, 1), v);
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
      for (int t = 0; t < std::abs(it->exponent); ++t)
        v = apply(generator_matrix(w.strands(), it->generator, it->exponent > 0 ? 1 : -1), v);
    EXPECT_EQ(v, word_vector(w)) << render(w);
    EXPECT_EQ(closure_bracket(v), invariants_of(w).bracket);
  }
}

TEST(PlatProperty, ReidemeisterOneKink) {
  // A sigma_1^eps on top twists the cap {1, 2}: one extra kink of writhe
  // -eps, since strands 1 and 2 leave that cap in opposite directions.
  for (const auto& w : knot_panel(9, 100, 8, 10)) {
    const auto base = invariants_of(w);
    for (int eps : {1, -1}) {
      const BraidWord kinked = BraidWord(w.strands(), {{1, eps}}) * w;
      const auto inv = invariants_of(kinked);
      EXPECT_EQ(inv.bracket, base.bracket * LaurentPoly::monomial(-1, -3 * eps)) << render(kinked);
      EXPECT_EQ(inv.bracket, oracle::state_sum_bracket(oracle::PlatDiagram::from_word(kinked)));
      EXPECT_EQ(inv.writhe - base.writhe, -eps);
      EXPECT_EQ(inv.kauffman_x, base.kauffman_x);
    }
  }
}

}  // namespace
}  // namespace platjones
