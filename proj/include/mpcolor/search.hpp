#pragma once

#include "mpcolor/model.hpp"
#include "mpcolor/counting.hpp"

#include <optional>
#include <vector>

namespace mpcolor {

// Enumeration request larger than the configured budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& message, BigCount required)
      : std::runtime_error(message), required_size(std::move(required)) {}

  BigCount required_size;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000'000;

struct BruteForceOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;
  int jobs = 1;
  std::size_t max_minimizers = 4096;
};

// Certified minimum over all count vectors of an instance. `minimizers`
// holds one representative per canonical key, sorted by key; when more than
// `max_minimizers` keys tie, the smallest keys are kept and `truncated` is
// set. No enumerated vector beats `value`.
struct MinimizerSet {
  struct Entry {
    CanonicalKey key;
    ColorCounts representative;
  };

  BigCount value;
  std::vector<Entry> minimizers;
  std::uint64_t explored = 0;
  bool truncated = false;

  std::vector<CanonicalKey> keys() const;
  bool contains(const CanonicalKey& key) const;
};

// Exhaustive scan over per-class color compositions. With `fixed_totals`
// the scan is restricted to colorings whose color totals equal the given
// length-m vector. Workers partition the first class's compositions; the
// merge is associative, so results do not depend on `jobs`.
MinimizerSet brute_force_min(
    const HypergraphSpec& spec,
    const std::optional<std::vector<int>>& fixed_totals = std::nullopt,
    const BruteForceOptions& options = {});

struct SearchStep {
  Move move;
  SignedCount delta;
  BigCount value_after;
};

// Strictly-improving descent: recolors first, then swaps, then total swaps,
// first improvement accepted, until no legal move lowers the edge count.
// The edge count never increases along the trajectory and the walk always
// terminates.
ColorCounts local_search(const HypergraphSpec& spec, const ColorCounts& start,
                         std::vector<SearchStep>* trace = nullptr);

struct FormLabel {
  enum class Family { tripartite2, threecolor };

  Family family{};
  int form = 0;

  auto operator<=>(const FormLabel&) const = default;
};

std::string to_string(const FormLabel& label);

// All structural patterns a tripartite 2-coloring matches, out of the twelve
// (monochromatic-first-color / monochromatic-second-color / unconstrained)
// row patterns. Empty exactly when two or more classes carry both colors.
std::vector<FormLabel> classify_form_tripartite2(const HypergraphSpec& spec,
                                                 const ColorCounts& c);

// Structural pattern of a 3-coloring: one tri-chromatic class (F1) or one
// bi-chromatic class (F2) with the rest monochromatic, two or three
// bi-chromatic classes with pairwise distinct color pairs (F3, F4), or all
// classes monochromatic (F5). Class positions are immaterial.
std::optional<FormLabel> classify_form_threecolor(const HypergraphSpec& spec,
                                                  const ColorCounts& c);

}  // namespace mpcolor
