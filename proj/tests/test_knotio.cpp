#include <gtest/gtest.h>

#include <random>

#include "taftknot/skein.hpp"

using namespace taftknot;

namespace {

// t-polynomial written with s = t^(1/4)
Laurent in_t(std::initializer_list<std::pair<long long, long long>> terms) {
  Laurent r;
  for (auto [c, e] : terms) r += Laurent::q_pow(e, Rational(c));
  return r;
}

int sum_signs(const BraidWord& b) {
  int w = 0;
  for (int l : b.letters) w += l > 0 ? 1 : -1;
  return w;
}

MorseWord random_closure(std::mt19937& rng, int strands, int len) {
  BraidWord b{strands, {}};
  std::uniform_int_distribution<int> gen(1, strands - 1), sgn(0, 1);
  for (int i = 0; i < len; ++i) b.letters.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
  return braid_closure(b);
}

}  // namespace

TEST(Braid, ParseExamples) {
  auto b = parse_braid("1 1 1");
  EXPECT_EQ(b.strands, 2);
  EXPECT_EQ(b.letters, (std::vector<int>{1, 1, 1}));
  auto c = parse_braid("1 -2 1 -2");
  EXPECT_EQ(c.strands, 3);
  EXPECT_EQ(c.letters, (std::vector<int>{1, -2, 1, -2}));
  auto d = parse_braid("s1 s2^-1 s1");
  EXPECT_EQ(d.letters, (std::vector<int>{1, -2, 1}));
  EXPECT_THROW(parse_braid("3", 2), ParseError);
  EXPECT_THROW(parse_braid("1 x"), ParseError);
  EXPECT_THROW(parse_braid("0"), ParseError);
}

TEST(Braid, ClosureCounts) {
  auto hopf = analyze(braid_closure(parse_braid("1 1")));
  EXPECT_EQ(hopf.components.size(), 2u);
  EXPECT_EQ(hopf.writhe, 2);
  auto tre = analyze(braid_closure(parse_braid("1 1 1")));
  EXPECT_EQ(tre.components.size(), 1u);
  EXPECT_EQ(tre.writhe, 3);
  auto o = analyze(braid_closure(BraidWord{1, {}}));
  EXPECT_EQ(o.components.size(), 1u);
  EXPECT_EQ(o.writhe, 0);
  EXPECT_EQ(std::abs(o.whitney2()), 2);
}

TEST(Braid, ComponentsAreCycles) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 1 + trial % 4;
    BraidWord b{m, {}};
    std::uniform_int_distribution<int> gen(1, std::max(1, m - 1)), sgn(0, 1);
    if (m > 1)
      for (int i = 0; i < 6; ++i) b.letters.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
    auto d = analyze(braid_closure(b));
    EXPECT_EQ(static_cast<int>(d.components.size()), permutation_cycles(b));
    EXPECT_EQ(d.writhe, sum_signs(b));
    EXPECT_EQ(d.whitney2(), -2 * m);
  }
}

TEST(Morse, OrientationIsValidated) {
  MorseWord bad{{}, {{Frag::CupCw}, {Frag::CapCcw}}};
  EXPECT_THROW(morse_levels(bad), Error);
  MorseWord good{{}, {{Frag::CupCw}, {Frag::CapCw}}};
  EXPECT_NO_THROW(morse_levels(good));
  EXPECT_THROW(parse_morse("cup+\nwobble\n"), ParseError);
}

TEST(Morse, TextRoundTrip) {
  for (const auto& name : builtin_names()) {
    MorseWord m = builtin_morse(name);
    MorseWord back = parse_morse(morse_to_text(m));
    EXPECT_EQ(back.rows, m.rows) << name;
    EXPECT_EQ(back.bottom, m.bottom) << name;
  }
  auto t = open_closure(builtin_braid("3_1_R"));
  auto back = parse_morse(morse_to_text(t));
  EXPECT_EQ(back.rows, t.rows);
  EXPECT_EQ(back.bottom, t.bottom);
}

TEST(Morse, UnknotCupCap) {
  auto a = analyze(parse_morse("cup-\ncap-\n"));
  EXPECT_EQ(a.writhe, 0);
  EXPECT_EQ(a.whitney2(), -2);
  auto b = analyze(parse_morse("cup+\ncap+\n"));
  EXPECT_EQ(b.whitney2(), 2);
}

TEST(Diagram, MirrorAndReverse) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    MorseWord m = random_closure(rng, 2 + trial % 3, 5);
    auto d = analyze(m);
    auto dm = analyze(mirror(m));
    EXPECT_EQ(dm.writhe, -d.writhe);
    ASSERT_EQ(dm.components.size(), d.components.size());
    for (size_t c = 0; c < d.components.size(); ++c) EXPECT_EQ(dm.components[c].turn2, d.components[c].turn2);
    auto dr = analyze(reverse_orientation(m));
    EXPECT_EQ(dr.writhe, d.writhe);
    EXPECT_EQ(dr.whitney2(), -d.whitney2());
  }
}

TEST(Diagram, CurlParity) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    MorseWord m = random_closure(rng, 2 + trial % 2, 4);
    auto d = analyze(m);
    int parity = (d.writhe + d.whitney2() / 2) % 2;
    auto lv = morse_levels(m);
    std::uniform_int_distribution<int> lvl(0, static_cast<int>(lv.size()) - 1);
    int level = lvl(rng);
    while (lv[level].empty()) level = lvl(rng);
    std::uniform_int_distribution<int> ps(0, static_cast<int>(lv[level].size()) - 1);
    int pos = ps(rng);
    for (auto side : {CurlSide::Left, CurlSide::Right})
      for (int sign : {1, -1}) {
        auto c = analyze(add_curl(m, level, pos, side, sign));
        EXPECT_EQ(c.writhe, d.writhe + sign);
        EXPECT_EQ(std::abs(c.whitney2() - d.whitney2()), 2);
        EXPECT_EQ(((c.writhe + c.whitney2() / 2) % 2 + 2) % 2, (parity + 2) % 2);
      }
  }
}

TEST(Diagram, OpenCurlTangles) {
  for (auto side : {CurlSide::Left, CurlSide::Right})
    for (int sign : {1, -1}) {
      auto t = analyze(add_curl(straight_strand(), 1, 0, side, sign));
      ASSERT_EQ(t.components.size(), 1u);
      EXPECT_FALSE(t.components[0].closed);
      EXPECT_EQ(t.writhe, sign);
      EXPECT_EQ((t.writhe + t.whitney2() / 2) % 2, 0);
    }
}

TEST(Diagram, BasePointsCoverUpwardSegments) {
  auto d = builtin_knot("3_1_R");
  ASSERT_EQ(d.components.size(), 1u);
  const auto& c = d.components[0];
  auto bps = base_points(c);
  EXPECT_FALSE(bps.empty());
  for (size_t b : bps) {
    auto r = rebase(c, b);
    EXPECT_EQ(r.lines.size(), c.lines.size());
    EXPECT_EQ(r.turn2, c.turn2);
  }
}

TEST(Builtins, UnknownName) { EXPECT_THROW(builtin_knot("6_1"), ParseError); }

TEST(Jones, SmallValues) {
  EXPECT_EQ(jones_oracle(builtin_knot("O")), Laurent(1));
  EXPECT_EQ(jones_oracle(builtin_knot("3_1_R")), in_t({{1, 1}, {1, 3}, {-1, 4}}));
  EXPECT_EQ(jones_oracle(builtin_knot("3_1_L")), in_t({{1, -1}, {1, -3}, {-1, -4}}));
  Laurent fig8 = jones_oracle(builtin_knot("4_1"));
  EXPECT_EQ(fig8, fig8.bar());
  EXPECT_EQ(fig8, in_t({{1, -2}, {-1, -1}, {1, 0}, {-1, 1}, {1, 2}}));
}

TEST(Jones, SquaresMatchTableRows) {
  const std::map<std::string, std::string> rows{
      {"Hopf_L", "q^-5 + 2*q^-3 + q^-1"},
      {"Hopf_R", "q + 2*q^3 + q^5"},
      {"3_1_L", "q^-8 - 2*q^-7 + q^-6 - 2*q^-5 + 2*q^-4 + q^-2"},
      {"3_1_R", "q^2 + 2*q^4 - 2*q^5 + q^6 - 2*q^7 + q^8"},
      {"4_1", "q^-4 - 2*q^-3 + 3*q^-2 - 4*q^-1 + 5 - 4*q + 3*q^2 - 2*q^3 + q^4"},
      {"5_1_L", "q^-14 - 2*q^-13 + 3*q^-12 - 4*q^-11 + 3*q^-10 - 4*q^-9 + 3*q^-8 - 2*q^-7 + 2*q^-6 + q^-4"},
      {"5_1_R", "q^4 + 2*q^6 - 2*q^7 + 3*q^8 - 4*q^9 + 3*q^10 - 4*q^11 + 3*q^12 - 2*q^13 + q^14"},
      {"5_2_L", "q^-12 - 2*q^-11 + 3*q^-10 - 6*q^-9 + 7*q^-8 - 8*q^-7 + 8*q^-6 - 6*q^-5 + 5*q^-4 - 2*q^-3 + q^-2"},
      {"5_2_R", "q^2 - 2*q^3 + 5*q^4 - 6*q^5 + 8*q^6 - 8*q^7 + 7*q^8 - 6*q^9 + 3*q^10 - 2*q^11 + q^12"},
  };
  for (const auto& [name, row] : rows) {
    Laurent v = jones_oracle(builtin_knot(name));
    EXPECT_EQ((v * v).str_q(), row) << name;
  }
}

TEST(Jones, BoundsContainValue) {
  for (const auto& name : builtin_names()) {
    auto d = builtin_knot(name);
    Laurent v = jones_oracle(d);
    auto [lo, hi] = jones_s_bounds(d);
    EXPECT_GE(v.min_exp(), lo) << name;
    EXPECT_LE(v.max_exp(), hi) << name;
    for (int n = 1; n <= 3; ++n) {
      auto w = power_window(d, n);
      Laurent p = v.pow(n);
      for (const auto& [k, c] : p.terms()) EXPECT_EQ(((k - w.offset) % 4 + 4) % 4, 0) << name;
      EXPECT_GE(p.min_exp(), 4 * w.lo + w.offset) << name;
      EXPECT_LE(p.max_exp(), 4 * w.hi + w.offset) << name;
    }
  }
}

TEST(Jones, MirrorIsBar) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 15; ++trial) {
    MorseWord m = random_closure(rng, 3, 5);
    EXPECT_EQ(jones_oracle(analyze(mirror(m))), jones_oracle(analyze(m)).bar());
  }
}

TEST(Jones, CrossingBudget) { EXPECT_THROW(jones_oracle(builtin_knot("5_1_R"), 4), Error); }

TEST(Dubrovnik, KinkAndUnknots) {
  auto P = dubrovnik_at_rank_two(7);
  auto kink = port_graph(analyze(add_curl(builtin_morse("O"), 1, 0, CurlSide::Right, 1)));
  EXPECT_EQ(dubrovnik_framed(kink, P), P.a);
  auto nkink = port_graph(analyze(add_curl(builtin_morse("O"), 1, 0, CurlSide::Left, -1)));
  EXPECT_EQ(dubrovnik_framed(nkink, P), P.a_inv);
  EXPECT_EQ(dubrovnik_oracle(builtin_knot("O"), P), P.one);
  auto two = analyze(braid_closure(BraidWord{2, {}}));
  EXPECT_EQ(dubrovnik_oracle(two, P), P.delta);
}

TEST(Dubrovnik, InvariantUnderMoves) {
  auto P = dubrovnik_at_rank_two(7);
  MorseWord m = builtin_morse("3_1_R");
  Cyc base = dubrovnik_oracle(analyze(m), P);
  EXPECT_EQ(dubrovnik_oracle(analyze(add_curl(m, 2, 0, CurlSide::Left, 1)), P), base);
  EXPECT_EQ(dubrovnik_oracle(analyze(add_r2(m, 2, 0, 1)), P), base);
  EXPECT_EQ(dubrovnik_oracle(analyze(mirror(m)), P) == base, false);
}
