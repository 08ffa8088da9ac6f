#pragma once

#include "mpcolor/model.hpp"

namespace mpcolor {

enum class MoveKind { recolor, swap, total_swap };

// A single state transition on a coloring. `recolor` moves one vertex of
// class_i from color_from to color_to. For `swap` and `total_swap`, class_i
// trades color_from for color_to while class_i2 compensates in the opposite
// direction, so the color totals stay fixed: `swap` exchanges one vertex on
// each side, `total_swap` moves the whole color_from population of class_i.
struct Move {
  MoveKind kind = MoveKind::recolor;
  int class_i = 0;
  int class_i2 = -1;  // unused for recolor
  int color_from = 0;
  int color_to = 0;
};

std::string to_string(MoveKind kind);

// Number of monochromatic edges: sum over colors l of
// C(X_l, e) - sum_i C(x_{li}, e). Always non-negative.
BigCount mono_count(const HypergraphSpec& spec, const ColorCounts& c);

// Change in mono_count when one vertex of class_i is recolored
// color_from -> color_to, in closed form.
SignedCount delta_recolor(const HypergraphSpec& spec, const ColorCounts& c,
                          int class_i, int color_from, int color_to);

// Change in mono_count for the simultaneous pair recolor that promotes one
// color_b vertex of class_i to color_a and demotes one color_a vertex of
// class_i2 to color_b. The opposite direction is obtained by swapping the
// class arguments, not by a flag.
SignedCount delta_swap(const HypergraphSpec& spec, const ColorCounts& c,
                       int class_i, int class_i2, int color_a, int color_b);

// Change in mono_count when every color_a vertex of class_i becomes color_b
// and equally many color_b vertices of class_i2 become color_a. Requires
// 1 <= counts(class_i, color_a) <= counts(class_i2, color_b); equals the
// telescoped sum of the corresponding single-swap sequence.
SignedCount delta_total_swap(const HypergraphSpec& spec, const ColorCounts& c,
                             int class_i, int class_i2, int color_a,
                             int color_b);

// Two-coloring decomposition term
//   S = sum_i sum_{x=0}^{x_i - 1} [C(x, e-1) - C(n_i - x - 1, e-1)]
// over first-color counts x_i. At a fixed first-color total, mono_count + S
// is constant, so maximizing S minimizes the edge count.
SignedCount s_term(const HypergraphSpec& spec, const ColorCounts& c);

ColorCounts apply_move(const HypergraphSpec& spec, const ColorCounts& c,
                       const Move& move);
SignedCount delta_move(const HypergraphSpec& spec, const ColorCounts& c,
                       const Move& move);

}  // namespace mpcolor
