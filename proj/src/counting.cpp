#include "mpcolor/counting.hpp"

#include <cassert>

namespace mpcolor {

namespace {

void check_class(const HypergraphSpec& spec, int class_i, const char* what) {
  if (class_i < 0 || class_i >= spec.num_classes()) {
    throw ValidationError(std::string(what) + ": class index out of range");
  }
}

void check_color(const HypergraphSpec& spec, int color, const char* what) {
  if (color < 0 || color >= spec.num_colors) {
    throw ValidationError(std::string(what) + ": color index out of range");
  }
}

#ifndef NDEBUG
// Debug builds re-derive every closed-form delta from two full evaluations.
bool delta_matches_difference(const HypergraphSpec& spec, const ColorCounts& c,
                              const Move& move, const SignedCount& delta) {
  const ColorCounts after = apply_move(spec, c, move);
  return mono_count(spec, after) - mono_count(spec, c) == delta;
}
#endif

}  // namespace

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::recolor: return "recolor";
    case MoveKind::swap: return "swap";
    case MoveKind::total_swap: return "total-swap";
  }
  return "?";
}

BigCount mono_count(const HypergraphSpec& spec, const ColorCounts& c) {
  validate(spec, c);
  const int e = spec.edge_size;
  const std::vector<int> totals = c.totals();
  BigCount result = 0;
  for (int l = 0; l < spec.num_colors; ++l) {
    BigCount term = binomial(totals[l], e);
    for (int i = 0; i < spec.num_classes(); ++i) {
      term -= binomial(c.counts[i][l], e);
    }
    result += term;
  }
  return result;
}

SignedCount delta_recolor(const HypergraphSpec& spec, const ColorCounts& c,
                          int class_i, int color_from, int color_to) {
  validate(spec, c);
  check_class(spec, class_i, "recolor");
  check_color(spec, color_from, "recolor");
  check_color(spec, color_to, "recolor");
  if (color_from == color_to) {
    throw ValidationError("recolor: source and target colors must differ");
  }
  if (c.counts[class_i][color_from] < 1) {
    throw ValidationError("recolor: class " + std::to_string(class_i + 1) +
                          " holds no vertex of the source color");
  }
  const int r = spec.edge_size - 1;
  const std::vector<int> totals = c.totals();
  const SignedCount delta =
      (binomial(totals[color_to], r) -
       binomial(c.counts[class_i][color_to], r)) -
      (binomial(totals[color_from] - 1, r) -
       binomial(c.counts[class_i][color_from] - 1, r));
  assert(delta_matches_difference(
      spec, c, Move{MoveKind::recolor, class_i, -1, color_from, color_to},
      delta));
  return delta;
}

SignedCount delta_swap(const HypergraphSpec& spec, const ColorCounts& c,
                       int class_i, int class_i2, int color_a, int color_b) {
  validate(spec, c);
  check_class(spec, class_i, "swap");
  check_class(spec, class_i2, "swap");
  check_color(spec, color_a, "swap");
  check_color(spec, color_b, "swap");
  if (class_i == class_i2) {
    throw ValidationError("swap: classes must differ");
  }
  if (color_a == color_b) {
    throw ValidationError("swap: colors must differ");
  }
  if (c.counts[class_i][color_b] < 1) {
    throw ValidationError("swap: class " + std::to_string(class_i + 1) +
                          " holds no vertex to promote");
  }
  if (c.counts[class_i2][color_a] < 1) {
    throw ValidationError("swap: class " + std::to_string(class_i2 + 1) +
                          " holds no vertex to demote");
  }
  const int r = spec.edge_size - 1;
  const SignedCount delta =
      (binomial(c.counts[class_i2][color_a] - 1, r) +
       binomial(c.counts[class_i][color_b] - 1, r)) -
      (binomial(c.counts[class_i][color_a], r) +
       binomial(c.counts[class_i2][color_b], r));
  assert(delta_matches_difference(
      spec, c, Move{MoveKind::swap, class_i, class_i2, color_b, color_a},
      delta));
  return delta;
}

SignedCount delta_total_swap(const HypergraphSpec& spec, const ColorCounts& c,
                             int class_i, int class_i2, int color_a,
                             int color_b) {
  validate(spec, c);
  check_class(spec, class_i, "total-swap");
  check_class(spec, class_i2, "total-swap");
  check_color(spec, color_a, "total-swap");
  check_color(spec, color_b, "total-swap");
  if (class_i == class_i2) {
    throw ValidationError("total-swap: classes must differ");
  }
  if (color_a == color_b) {
    throw ValidationError("total-swap: colors must differ");
  }
  const int moved = c.counts[class_i][color_a];
  if (moved < 1) {
    throw ValidationError("total-swap: class " + std::to_string(class_i + 1) +
                          " holds no vertex of the moving color");
  }
  if (c.counts[class_i2][color_b] < moved) {
    throw ValidationError("total-swap: class " +
                          std::to_string(class_i2 + 1) +
                          " holds too few partner vertices");
  }
  const int r = spec.edge_size - 1;
  const int b_i = c.counts[class_i][color_b];
  const int a_i2 = c.counts[class_i2][color_a];
  const int b_i2 = c.counts[class_i2][color_b];
  SignedCount delta = 0;
  for (int t = 0; t < moved; ++t) {
    delta += binomial(moved - 1 - t, r) + binomial(b_i2 - 1 - t, r);
    delta -= binomial(b_i + t, r) + binomial(a_i2 + t, r);
  }
  assert(delta_matches_difference(
      spec, c, Move{MoveKind::total_swap, class_i, class_i2, color_a, color_b},
      delta));
  return delta;
}

SignedCount s_term(const HypergraphSpec& spec, const ColorCounts& c) {
  validate(spec, c);
  if (spec.num_colors != 2) {
    throw ValidationError("s_term: defined for two-colorings only");
  }
  const int r = spec.edge_size - 1;
  SignedCount total = 0;
  for (int i = 0; i < spec.num_classes(); ++i) {
    const int n_i = spec.class_sizes[i];
    for (int x = 0; x < c.counts[i][0]; ++x) {
      total += binomial(x, r) - binomial(n_i - x - 1, r);
    }
  }
  return total;
}

ColorCounts apply_move(const HypergraphSpec& spec, const ColorCounts& c,
                       const Move& move) {
  validate(spec, c);
  check_class(spec, move.class_i, "move");
  check_color(spec, move.color_from, "move");
  check_color(spec, move.color_to, "move");
  if (move.color_from == move.color_to) {
    throw ValidationError("move: colors must differ");
  }
  ColorCounts next = c;
  switch (move.kind) {
    case MoveKind::recolor: {
      if (next.counts[move.class_i][move.color_from] < 1) {
        throw ValidationError("move: empty source color");
      }
      --next.counts[move.class_i][move.color_from];
      ++next.counts[move.class_i][move.color_to];
      break;
    }
    case MoveKind::swap: {
      check_class(spec, move.class_i2, "move");
      if (move.class_i == move.class_i2) {
        throw ValidationError("move: classes must differ");
      }
      if (next.counts[move.class_i][move.color_from] < 1 ||
          next.counts[move.class_i2][move.color_to] < 1) {
        throw ValidationError("move: missing vertex on one side of the swap");
      }
      --next.counts[move.class_i][move.color_from];
      ++next.counts[move.class_i][move.color_to];
      --next.counts[move.class_i2][move.color_to];
      ++next.counts[move.class_i2][move.color_from];
      break;
    }
    case MoveKind::total_swap: {
      check_class(spec, move.class_i2, "move");
      if (move.class_i == move.class_i2) {
        throw ValidationError("move: classes must differ");
      }
      const int moved = next.counts[move.class_i][move.color_from];
      if (moved < 1) {
        throw ValidationError("move: empty source color");
      }
      if (next.counts[move.class_i2][move.color_to] < moved) {
        throw ValidationError("move: too few partner vertices");
      }
      next.counts[move.class_i][move.color_from] = 0;
      next.counts[move.class_i][move.color_to] += moved;
      next.counts[move.class_i2][move.color_to] -= moved;
      next.counts[move.class_i2][move.color_from] += moved;
      break;
    }
  }
  return next;
}

SignedCount delta_move(const HypergraphSpec& spec, const ColorCounts& c,
                       const Move& move) {
  switch (move.kind) {
    case MoveKind::recolor:
      return delta_recolor(spec, c, move.class_i, move.color_from,
                           move.color_to);
    case MoveKind::swap:
      return delta_swap(spec, c, move.class_i, move.class_i2, move.color_to,
                        move.color_from);
    case MoveKind::total_swap:
      return delta_total_swap(spec, c, move.class_i, move.class_i2,
                              move.color_from, move.color_to);
  }
  throw std::logic_error("delta_move: unknown move kind");
}

}  // namespace mpcolor
