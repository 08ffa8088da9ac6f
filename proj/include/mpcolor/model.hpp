#pragma once

#include "mpcolor/combinatorics.hpp"

#include <compare>
#include <string>
#include <vector>

namespace mpcolor {

// A coloring that does not fit its instance (dimensions or row sums), or an
// otherwise malformed input.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TripartiteType { A, B };

// A complete multipartite uniform hypergraph instance: class sizes n_1..n_k,
// edge size e and number of available colors m. Edges are all e-subsets of
// the vertex set that are not contained in a single class.
struct HypergraphSpec {
  std::vector<int> class_sizes;
  int edge_size;
  int num_colors;

  HypergraphSpec(std::vector<int> sizes, int edge, int colors);

  static HypergraphSpec balanced(int n, int k, int edge, int colors);
  // k = 3 instance; sizes are normalized to n1 <= n2 <= n3.
  static HypergraphSpec tripartite(int n1, int n2, int n3, int colors = 2);

  int num_classes() const { return static_cast<int>(class_sizes.size()); }
  int total_vertices() const;
  bool balanced_sizes() const;

  // Only defined for k = 3 with nondecreasing sizes: A when n1 + n2 <= n3,
  // otherwise B.
  TripartiteType tripartite_type() const;

  bool operator==(const HypergraphSpec&) const = default;
};

// Per-class per-color vertex tallies: counts[i][l] is the number of vertices
// of color l in class i. This is the full state of a coloring; every quantity
// in the library depends on a coloring only through these counts.
struct ColorCounts {
  std::vector<std::vector<int>> counts;

  int count(int class_i, int color) const { return counts[class_i][color]; }
  int num_classes() const { return static_cast<int>(counts.size()); }

  // Column sums X_l.
  std::vector<int> totals() const;

  bool operator==(const ColorCounts&) const = default;
};

// Throws ValidationError naming the offending class or dimension when the
// counts do not match the spec.
void validate(const HypergraphSpec& spec, const ColorCounts& c);

// Canonical representative of a coloring under any permutation of color
// labels and any exchange of equal-size classes. Two colorings get the same
// key iff one maps to the other by such a symmetry.
struct CanonicalKey {
  std::vector<int> flat;  // canonical counts matrix, row-major

  auto operator<=>(const CanonicalKey&) const = default;
};

CanonicalKey canonicalize(const HypergraphSpec& spec, const ColorCounts& c);

std::string to_string(const CanonicalKey& key);

struct Instance {
  HypergraphSpec spec;
  ColorCounts counts;
};

// JSON interchange used by the CLI:
// {"class_sizes":[...],"edge_size":e,"num_colors":m,"counts":[[...],...]}
std::string instance_to_json(const HypergraphSpec& spec, const ColorCounts& c);
Instance instance_from_json(const std::string& text);

}  // namespace mpcolor
