#include "mpcolor/constructors.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace mpcolor {

namespace {

ColorCounts counts_from_first_color(const std::vector<int>& sizes,
                                    const std::vector<int>& first) {
  ColorCounts c;
  c.counts.resize(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    c.counts[i] = {first[i], sizes[i] - first[i]};
  }
  return c;
}

ConstructionResult finish(HypergraphSpec spec,
                          std::vector<ColorCounts> colorings,
                          std::string regime, bool exact) {
  assert(!colorings.empty());
  const BigCount value = mono_count(spec, colorings.front());
  std::set<CanonicalKey> keys;
  for (const auto& c : colorings) {
    assert(mono_count(spec, c) == value);
    keys.insert(canonicalize(spec, c));
  }
  if (keys.size() != colorings.size()) {
    throw std::logic_error("construction produced equivalent colorings");
  }
  return ConstructionResult{std::move(spec), std::move(colorings), value,
                            std::move(regime), exact};
}

}  // namespace

ConstructionResult construct_balanced_2color(int n, int k, int e) {
  if (e < 3) throw std::invalid_argument("balanced-2color: edge size >= 3");
  if (n < e) {
    throw std::invalid_argument("balanced-2color: class size >= edge size");
  }
  if (k < 2) throw std::invalid_argument("balanced-2color: needs k >= 2");
  HypergraphSpec spec = HypergraphSpec::balanced(n, k, e, 2);
  std::vector<int> first(k, 0);
  for (int i = 0; i < k / 2; ++i) first[i] = n;
  if (k % 2 == 1) first[k / 2] = (n + 1) / 2;
  return finish(std::move(spec),
                {counts_from_first_color(std::vector<int>(k, n), first)},
                "balanced-2color", true);
}

int x_prime(int n1, int n3, int total) {
  if (total <= n1) {
    throw std::invalid_argument("x_prime: degenerate denominator");
  }
  const long long N = total;
  const long long a = n1;
  const long long c = n3;
  const long long num = N * N - 3 * N - a * a - 2 * a * c + 3 * a + 4 * c;
  const long long den = 2 * (N - a);
  // Ceiling division; the numerator can sit below zero for tiny classes.
  if (num >= 0) return static_cast<int>((num + den - 1) / den);
  return static_cast<int>(-((-num) / den));
}

ConstructionResult construct_tripartite_2color(int n1, int n2, int n3) {
  if (!(1 <= n1 && n1 <= n2 && n2 <= n3)) {
    throw std::invalid_argument(
        "tripartite-2color: sizes must satisfy 1 <= n1 <= n2 <= n3");
  }
  if (n3 < 3) {
    throw std::invalid_argument("tripartite-2color: largest class >= 3");
  }
  const std::vector<int> sizes{n1, n2, n3};
  HypergraphSpec spec(sizes, 3, 2);

  // Tiny first classes: the heavy class takes one color outright. For sizes
  // (2, 2, 3) a second minimizer splits the two-vertex class.
  if (n2 <= 2) {
    std::vector<ColorCounts> colorings{
        counts_from_first_color(sizes, {0, 0, n3})};
    std::string regime = "tripartite-2color:small";
    if (n1 == 2 && n2 == 2 && n3 == 3) {
      colorings.push_back(counts_from_first_color(sizes, {1, 0, 3}));
      regime += "+twin";
    }
    return finish(std::move(spec), std::move(colorings), std::move(regime),
                  true);
  }

  if (spec.tripartite_type() == TripartiteType::A) {
    return finish(std::move(spec),
                  {counts_from_first_color(sizes, {n1, n2, 0})},
                  "tripartite-2color:type-a", true);
  }

  const int xp = x_prime(n1, n3, n1 + n2 + n3);
  const int in_first = xp - n3;
  if (in_first < 0 || in_first > n1) {
    throw std::logic_error(
        "tripartite-2color: optimal first-color total fell outside the "
        "feasible band for sizes (" + std::to_string(n1) + "," +
        std::to_string(n2) + "," + std::to_string(n3) + ")");
  }
  std::vector<ColorCounts> colorings{
      counts_from_first_color(sizes, {in_first, 0, n3})};
  std::string regime = "tripartite-2color:type-b";
  if (n1 == 2 && n3 == n2 + 1) {
    colorings.push_back(counts_from_first_color(sizes, {1, 0, n3}));
    regime += "+twin";
  }
  return finish(std::move(spec), std::move(colorings), std::move(regime),
                true);
}

ConstructionResult construct_balanced_3color(int n, int k, int e) {
  if (e < 3) throw std::invalid_argument("balanced-3color: edge size >= 3");
  if (n < e) {
    throw std::invalid_argument("balanced-3color: class size >= edge size");
  }
  if (k < 3) throw std::invalid_argument("balanced-3color: needs k >= 3");
  if (k % 3 == 2) {
    throw RegimeError(
        "balanced-3color: no closed-form construction for k = " +
        std::to_string(k) +
        " (k congruent to 2 mod 3); the minimum 3-coloring in this regime "
        "is an open problem");
  }
  HypergraphSpec spec = HypergraphSpec::balanced(n, k, e, 3);
  ColorCounts c;
  c.counts.assign(k, std::vector<int>(3, 0));
  const int block = k / 3;
  for (int i = 0; i < 3 * block; ++i) c.counts[i][i / block] = n;
  if (k % 3 == 1) {
    // Last class split as equally as possible across the three colors.
    const int q = n / 3;
    const int rem = n % 3;
    for (int l = 0; l < 3; ++l) c.counts[k - 1][l] = q + (l < rem ? 1 : 0);
  }
  return finish(std::move(spec), {std::move(c)},
                k % 3 == 0 ? "balanced-3color:k0" : "balanced-3color:k1",
                true);
}

ConstructionResult construct_degenerate(const HypergraphSpec& spec) {
  const int e = spec.edge_size;
  const int m = spec.num_colors;
  const int k = spec.num_classes();

  const int max_size =
      *std::max_element(spec.class_sizes.begin(), spec.class_sizes.end());
  if (max_size < e) {
    // No class can hold an edge, so the instance is a complete hypergraph
    // and only the color totals matter: split them as equally as possible.
    const int N = spec.total_vertices();
    std::vector<int> target(m, N / m);
    for (int l = 0; l < N % m; ++l) ++target[l];
    ColorCounts c;
    c.counts.assign(k, std::vector<int>(m, 0));
    int color = 0;
    for (int i = 0; i < k; ++i) {
      int left = spec.class_sizes[i];
      while (left > 0) {
        const int take = std::min(left, target[color]);
        c.counts[i][color] += take;
        target[color] -= take;
        left -= take;
        if (target[color] == 0 && color + 1 < m) ++color;
      }
    }
    return finish(spec, {std::move(c)}, "degenerate:complete", false);
  }

  if (k < m) {
    // Enough colors to confine each one to a single class: zero edges.
    ColorCounts c;
    c.counts.assign(k, std::vector<int>(m, 0));
    for (int i = 0; i < k; ++i) c.counts[i][i] = spec.class_sizes[i];
    return finish(spec, {std::move(c)}, "degenerate:class-confined", false);
  }

  if (k % m == 0 && spec.balanced_sizes()) {
    // Equal color totals with every class monochromatic.
    ColorCounts c;
    c.counts.assign(k, std::vector<int>(m, 0));
    const int block = k / m;
    for (int i = 0; i < k; ++i) c.counts[i][i / block] = spec.class_sizes[i];
    return finish(spec, {std::move(c)}, "degenerate:color-blocks", true);
  }

  throw RegimeError(
      "degenerate: instance matches no degenerate regime (needs every class "
      "below the edge size, fewer classes than colors, or a balanced "
      "instance with the color count dividing the class count)");
}

}  // namespace mpcolor
