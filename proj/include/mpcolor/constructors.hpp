#pragma once

#include "mpcolor/counting.hpp"

namespace mpcolor {

// An instance the library has no closed-form extremal coloring for.
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Closed-form extremal coloring(s) for one instance. All members of
// `colorings` attain `value` and are pairwise inequivalent under
// canonicalize. When `minimizer_set_exact` is true, the set is the complete
// list of minimizers up to color and class relabeling; otherwise it holds a
// representative and only `value` is guaranteed minimal.
struct ConstructionResult {
  HypergraphSpec spec;
  std::vector<ColorCounts> colorings;
  BigCount value;
  std::string regime;
  bool minimizer_set_exact = true;
};

// Minimal 2-coloring of the balanced k-partite e-uniform instance with n
// vertices per class (n >= e >= 3, k >= 2): floor(k/2) all-first-color
// classes, floor(k/2) all-second-color classes, and for odd k one class
// split as equally as possible.
ConstructionResult construct_balanced_2color(int n, int k, int e);

// Minimal 2-coloring of the tripartite 3-uniform instance with sizes
// n1 <= n2 <= n3, n3 >= 3. Covers the small-class cases and the size regime
// split; the (2, n, n+1) family yields two inequivalent minimizers.
ConstructionResult construct_tripartite_2color(int n1, int n2, int n3);

// Optimal first-color total for the heavy-class regime of the tripartite
// construction: ceil((N^2 - 3N - n1^2 - 2*n1*n3 + 3*n1 + 4*n3) / (2(N - n1))).
int x_prime(int n1, int n3, int total);

// Minimal 3-coloring of the balanced k-partite e-uniform instance
// (n >= e >= 3, k >= 3, k mod 3 in {0, 1}). k mod 3 == 2 has no known
// construction and raises RegimeError.
ConstructionResult construct_balanced_3color(int n, int k, int e);

// Minimal colorings of degenerate instances: every class smaller than the
// edge size (complete hypergraph), fewer classes than colors (zero edges
// attainable), or balanced with the color count dividing the class count.
ConstructionResult construct_degenerate(const HypergraphSpec& spec);

}  // namespace mpcolor
