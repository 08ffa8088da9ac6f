#include "mpcolor/counting.hpp"

#include <doctest.h>

#include "../support/oracle.hpp"

#include <random>

using namespace mpcolor;
using mpcolor::testing::all_colorings;
using mpcolor::testing::random_coloring;
using mpcolor::testing::random_legal_move;
using mpcolor::testing::random_spec;
using mpcolor::testing::subset_enumeration_mono_count;

namespace {

ColorCounts from_first_color(const HypergraphSpec& spec,
                             std::vector<int> first) {
  ColorCounts c;
  c.counts.resize(spec.num_classes());
  for (int i = 0; i < spec.num_classes(); ++i) {
    c.counts[i] = {first[i], spec.class_sizes[i] - first[i]};
  }
  return c;
}

}  // namespace

TEST_CASE("mono_count matches subset enumeration on the frozen examples") {
  {
    const HypergraphSpec spec = HypergraphSpec::balanced(3, 3, 3, 2);
    const ColorCounts all_red = from_first_color(spec, {3, 3, 3});
    CHECK(subset_enumeration_mono_count(spec, all_red) == 81);
    CHECK(mono_count(spec, all_red) == 81);
  }
  {
    const HypergraphSpec spec = HypergraphSpec::balanced(4, 3, 3, 2);
    const ColorCounts c = from_first_color(spec, {4, 2, 0});
    CHECK(subset_enumeration_mono_count(spec, c) == 32);
    CHECK(mono_count(spec, c) == 32);
  }
  {
    const HypergraphSpec spec = HypergraphSpec::balanced(3, 3, 3, 3);
    const ColorCounts c{{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}};
    CHECK(subset_enumeration_mono_count(spec, c) == 0);
    CHECK(mono_count(spec, c) == 0);
  }
}

TEST_CASE("mono_count agrees with subset enumeration on random instances") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const HypergraphSpec spec = random_spec(rng, /*max_total=*/12);
    const ColorCounts c = random_coloring(spec, rng);
    CHECK(mono_count(spec, c) == subset_enumeration_mono_count(spec, c));
    CHECK(mono_count(spec, c) >= 0);
  }
}

TEST_CASE("recolor delta") {
  const HypergraphSpec spec = HypergraphSpec::balanced(3, 3, 3, 2);
  const ColorCounts all_blue = from_first_color(spec, {0, 0, 0});
  CHECK(mono_count(spec, all_blue) == 81);
  CHECK(delta_recolor(spec, all_blue, 0, 1, 0) == -27);

  const ColorCounts one_red = from_first_color(spec, {1, 0, 0});
  CHECK(mono_count(spec, one_red) == 54);
  CHECK(delta_recolor(spec, one_red, 0, 0, 1) == 27);

  const HypergraphSpec four = HypergraphSpec::balanced(3, 4, 3, 3);
  const ColorCounts split{
      {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}}};
  CHECK(mono_count(four, split) == 9);
  // green -> red in the split class
  CHECK(delta_recolor(four, split, 3, 2, 0) == 3);

  CHECK_THROWS_AS(delta_recolor(spec, all_blue, 0, 0, 1), ValidationError);
  CHECK_THROWS_AS(delta_recolor(spec, all_blue, 0, 1, 1), ValidationError);
}

TEST_CASE("swap delta") {
  const HypergraphSpec spec({3, 4, 5}, 3, 2);
  const ColorCounts c = from_first_color(spec, {2, 2, 0});
  CHECK(mono_count(spec, c) == 50);
  // promote a second-color vertex of class 3, demote a first-color vertex
  // of class 1
  CHECK(delta_swap(spec, c, 2, 0, 0, 1) == 6);
  CHECK(mono_count(spec,
                   apply_move(spec, c, Move{MoveKind::swap, 2, 0, 1, 0})) ==
        56);

  const HypergraphSpec cube = HypergraphSpec::balanced(3, 3, 3, 2);
  const ColorCounts even = from_first_color(cube, {1, 1, 1});
  CHECK(mono_count(cube, even) == 21);
  CHECK(delta_swap(cube, even, 0, 1, 0, 1) == -1);

  const ColorCounts corner = from_first_color(cube, {3, 0, 0});
  CHECK(mono_count(cube, corner) == 18);
  CHECK(delta_swap(cube, corner, 1, 0, 0, 1) == 2);

  CHECK_THROWS_AS(delta_swap(cube, corner, 0, 1, 0, 1), ValidationError);
  CHECK_THROWS_AS(delta_swap(cube, corner, 0, 0, 0, 1), ValidationError);
}

TEST_CASE("total swap delta") {
  const HypergraphSpec spec = HypergraphSpec::balanced(3, 3, 3, 3);
  const ColorCounts c{{{2, 1, 0}, {0, 2, 1}, {0, 0, 3}}};
  CHECK(mono_count(spec, c) == 4);
  CHECK(delta_total_swap(spec, c, 0, 1, 0, 1) == -1);
  CHECK(mono_count(spec, apply_move(spec, c,
                                    Move{MoveKind::total_swap, 0, 1, 0, 1})) ==
        3);

  // A one-vertex total swap is a single swap.
  const HypergraphSpec pair({3, 4, 5}, 3, 2);
  const ColorCounts single = from_first_color(pair, {1, 2, 3});
  CHECK(delta_total_swap(pair, single, 0, 1, 0, 1) ==
        delta_swap(pair, single, 0, 1, 1, 0));

  const ColorCounts empty_source{{{0, 3, 0}, {0, 2, 1}, {0, 0, 3}}};
  CHECK_THROWS_AS(delta_total_swap(spec, empty_source, 0, 1, 0, 1),
                  ValidationError);
  CHECK_THROWS_AS(delta_total_swap(spec, c, 0, 2, 0, 1), ValidationError);
}

TEST_CASE("s_term") {
  const HypergraphSpec spec = HypergraphSpec::balanced(4, 3, 3, 2);
  CHECK(s_term(spec, from_first_color(spec, {0, 0, 0})) == 0);
  CHECK(s_term(spec, from_first_color(spec, {4, 2, 0})) == -4);
  // A fully-colored class contributes nothing.
  CHECK(s_term(spec, from_first_color(spec, {4, 2, 0})) ==
        s_term(spec, from_first_color(spec, {0, 2, 0})));
  const HypergraphSpec three = HypergraphSpec::balanced(3, 3, 3, 3);
  CHECK_THROWS_AS(s_term(three, ColorCounts{{{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}}),
                  ValidationError);
}

TEST_CASE("closed-form deltas equal the two-evaluation difference") {
  std::mt19937 rng(20240603);
  int checked = 0;
  while (checked < 1000) {
    const HypergraphSpec spec = random_spec(rng, /*max_total=*/20);
    const ColorCounts c = random_coloring(spec, rng);
    const auto move = random_legal_move(spec, c, rng);
    if (!move) continue;
    const ColorCounts after = apply_move(spec, c, *move);
    CHECK(delta_move(spec, c, *move) ==
          mono_count(spec, after) - mono_count(spec, c));
    ++checked;
  }
}

TEST_CASE("fixed-total decomposition pairs maximal S with minimal count") {
  for (int n = 3; n <= 5; ++n) {
    for (int k = 2; k <= 3; ++k) {
      const HypergraphSpec spec = HypergraphSpec::balanced(n, k, 3, 2);
      const auto colorings = all_colorings(spec);
      for (int X = 0; X <= n * k; ++X) {
        SignedCount best_s;
        BigCount best_m;
        std::vector<ColorCounts> by_s, by_m;
        for (const auto& c : colorings) {
          if (c.totals()[0] != X) continue;
          const SignedCount s = s_term(spec, c);
          const BigCount value = mono_count(spec, c);
          if (by_s.empty() || s > best_s) {
            best_s = s;
            by_s.clear();
          }
          if (s == best_s) by_s.push_back(c);
          if (by_m.empty() || value < best_m) {
            best_m = value;
            by_m.clear();
          }
          if (value == best_m) by_m.push_back(c);
        }
        CHECK(by_s == by_m);
      }
    }
  }
}
