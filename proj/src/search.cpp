#include "mpcolor/search.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <limits>
#include <map>
#include <set>
#include <thread>

namespace mpcolor {

namespace {

// One exhaustive scan over count vectors. Int is std::uint64_t whenever the
// largest possible edge count fits comfortably, BigCount otherwise; both
// paths run the same code.
template <class Int>
class Enumerator {
 public:
  struct Result {
    bool has_value = false;
    Int value{};
    std::map<CanonicalKey, ColorCounts> reps;
    std::uint64_t explored = 0;
    bool truncated = false;
  };

  Enumerator(const HypergraphSpec& spec,
             const std::vector<std::vector<std::vector<int>>>& comps,
             const std::vector<std::vector<Int>>& inner,
             const std::vector<Int>& binom_total,
             const std::optional<std::vector<int>>& fixed,
             std::size_t max_minimizers)
      : spec_(spec),
        comps_(comps),
        inner_(inner),
        binom_total_(binom_total),
        fixed_(fixed),
        max_minimizers_(max_minimizers),
        k_(spec.num_classes()),
        m_(spec.num_colors) {
    totals_.assign(m_, 0);
    pick_.assign(k_, 0);
    suffix_capacity_.assign(k_ + 1, 0);
    for (int i = k_ - 1; i >= 0; --i) {
      suffix_capacity_[i] = suffix_capacity_[i + 1] + spec.class_sizes[i];
    }
  }

  Result run(std::size_t top_lo, std::size_t top_hi) {
    Result out;
    descend(0, Int{0}, top_lo, top_hi, out);
    return out;
  }

 private:
  void descend(int level, Int inner_acc, std::size_t lo, std::size_t hi,
               Result& out) {
    if (level == k_) {
      leaf(inner_acc, out);
      return;
    }
    const auto& options = comps_[level];
    const std::size_t begin = level == 0 ? lo : 0;
    const std::size_t end = level == 0 ? hi : options.size();
    for (std::size_t j = begin; j < end; ++j) {
      const auto& comp = options[j];
      if (fixed_ && !feasible(level, comp)) continue;
      for (int l = 0; l < m_; ++l) totals_[l] += comp[l];
      pick_[level] = j;
      descend(level + 1, inner_acc + inner_[level][j], lo, hi, out);
      for (int l = 0; l < m_; ++l) totals_[l] -= comp[l];
    }
  }

  bool feasible(int level, const std::vector<int>& comp) const {
    for (int l = 0; l < m_; ++l) {
      const int placed = totals_[l] + comp[l];
      if (placed > (*fixed_)[l]) return false;
      if ((*fixed_)[l] - placed > suffix_capacity_[level + 1]) return false;
    }
    return true;
  }

  void leaf(const Int& inner_acc, Result& out) {
    ++out.explored;
    Int value{0};
    for (int l = 0; l < m_; ++l) value += binom_total_[totals_[l]];
    value -= inner_acc;
    if (!out.has_value || value < out.value) {
      out.has_value = true;
      out.value = value;
      out.reps.clear();
      out.truncated = false;
      record(out);
    } else if (value == out.value) {
      record(out);
    }
  }

  void record(Result& out) {
    ColorCounts c;
    c.counts.resize(k_);
    for (int i = 0; i < k_; ++i) c.counts[i] = comps_[i][pick_[i]];
    CanonicalKey key = canonicalize(spec_, c);
    if (out.reps.count(key)) return;
    if (out.reps.size() >= max_minimizers_) {
      out.truncated = true;
      return;
    }
    out.reps.emplace(std::move(key), std::move(c));
  }

  const HypergraphSpec& spec_;
  const std::vector<std::vector<std::vector<int>>>& comps_;
  const std::vector<std::vector<Int>>& inner_;
  const std::vector<Int>& binom_total_;
  const std::optional<std::vector<int>>& fixed_;
  std::size_t max_minimizers_;
  int k_;
  int m_;
  std::vector<int> totals_;
  std::vector<std::size_t> pick_;
  std::vector<int> suffix_capacity_;
};

template <class Int>
MinimizerSet run_brute_force(const HypergraphSpec& spec,
                             const std::optional<std::vector<int>>& fixed,
                             const BruteForceOptions& options) {
  const int k = spec.num_classes();
  const int m = spec.num_colors;
  const int e = spec.edge_size;
  const int N = spec.total_vertices();

  std::vector<std::vector<std::vector<int>>> comps(k);
  std::vector<std::vector<Int>> inner(k);
  for (int i = 0; i < k; ++i) {
    for (const auto& comp : CompositionRange(spec.class_sizes[i], m)) {
      Int within{0};
      for (int x : comp) within += static_cast<Int>(binomial(x, e));
      comps[i].push_back(comp);
      inner[i].push_back(within);
    }
  }
  std::vector<Int> binom_total(N + 1);
  for (int x = 0; x <= N; ++x) {
    binom_total[x] = static_cast<Int>(binomial(x, e));
  }

  using Result = typename Enumerator<Int>::Result;
  const std::size_t top = comps[0].size();
  const int jobs = std::max(
      1, std::min<int>(options.jobs, static_cast<int>(top)));

  std::vector<Result> results(jobs);
  if (jobs == 1) {
    Enumerator<Int> worker(spec, comps, inner, binom_total, fixed,
                           options.max_minimizers);
    results[0] = worker.run(0, top);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(jobs);
    const std::size_t chunk = (top + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
      const std::size_t lo = std::min(top, w * chunk);
      const std::size_t hi = std::min(top, lo + chunk);
      threads.emplace_back([&, w, lo, hi] {
        try {
          Enumerator<Int> worker(spec, comps, inner, binom_total, fixed,
                                 options.max_minimizers);
          results[w] = worker.run(lo, hi);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
  }

  // Associative merge in worker order; dedupe keeps the representative from
  // the earliest chunk, matching a single-threaded scan.
  Result merged;
  for (auto& r : results) {
    merged.explored += r.explored;
    if (!r.has_value) continue;
    if (!merged.has_value || r.value < merged.value) {
      merged.has_value = true;
      merged.value = r.value;
      merged.reps = std::move(r.reps);
      merged.truncated = r.truncated;
    } else if (r.value == merged.value) {
      for (auto& [key, rep] : r.reps) merged.reps.emplace(key, rep);
      merged.truncated = merged.truncated || r.truncated;
    }
  }
  while (merged.reps.size() > options.max_minimizers) {
    merged.reps.erase(std::prev(merged.reps.end()));
    merged.truncated = true;
  }

  if (!merged.has_value) {
    throw std::logic_error("brute force: empty enumeration");
  }
  MinimizerSet out;
  out.value = BigCount(merged.value);
  out.explored = merged.explored;
  out.truncated = merged.truncated;
  out.minimizers.reserve(merged.reps.size());
  for (auto& [key, rep] : merged.reps) {
    out.minimizers.push_back(MinimizerSet::Entry{key, std::move(rep)});
  }
  return out;
}

std::optional<Move> find_improving(const HypergraphSpec& spec,
                                   const ColorCounts& c) {
  const int k = spec.num_classes();
  const int m = spec.num_colors;
  for (int i = 0; i < k; ++i) {
    for (int from = 0; from < m; ++from) {
      if (c.counts[i][from] < 1) continue;
      for (int to = 0; to < m; ++to) {
        if (to == from) continue;
        if (delta_recolor(spec, c, i, from, to) < 0) {
          return Move{MoveKind::recolor, i, -1, from, to};
        }
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int i2 = 0; i2 < k; ++i2) {
      if (i2 == i) continue;
      for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
          if (c.counts[i][b] < 1 || c.counts[i2][a] < 1) continue;
          if (delta_swap(spec, c, i, i2, a, b) < 0) {
            return Move{MoveKind::swap, i, i2, b, a};
          }
        }
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int i2 = 0; i2 < k; ++i2) {
      if (i2 == i) continue;
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          if (b == a) continue;
          const int moved = c.counts[i][a];
          if (moved < 1 || c.counts[i2][b] < moved) continue;
          if (delta_total_swap(spec, c, i, i2, a, b) < 0) {
            return Move{MoveKind::total_swap, i, i2, a, b};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<CanonicalKey> MinimizerSet::keys() const {
  std::vector<CanonicalKey> out;
  out.reserve(minimizers.size());
  for (const auto& entry : minimizers) out.push_back(entry.key);
  return out;
}

bool MinimizerSet::contains(const CanonicalKey& key) const {
  return std::any_of(minimizers.begin(), minimizers.end(),
                     [&](const Entry& e) { return e.key == key; });
}

MinimizerSet brute_force_min(const HypergraphSpec& spec,
                             const std::optional<std::vector<int>>& fixed_totals,
                             const BruteForceOptions& options) {
  const int m = spec.num_colors;
  BigCount space = 1;
  for (int n : spec.class_sizes) space *= binomial(n + m - 1, m - 1);
  if (space > options.budget) {
    throw BudgetError("enumeration needs " + space.str() +
                          " count vectors, over the budget of " +
                          std::to_string(options.budget),
                      space);
  }
  if (fixed_totals) {
    if (static_cast<int>(fixed_totals->size()) != m) {
      throw ValidationError("fixed totals: need one entry per color");
    }
    int sum = 0;
    for (int t : *fixed_totals) {
      if (t < 0) throw ValidationError("fixed totals: negative entry");
      sum += t;
    }
    if (sum != spec.total_vertices()) {
      throw ValidationError("fixed totals: entries sum to " +
                            std::to_string(sum) + ", expected " +
                            std::to_string(spec.total_vertices()));
    }
  }

  // Values are bounded by C(N, e); use machine words when that fits with
  // plenty of headroom, exact big integers otherwise.
  const BigCount ceiling = binomial(spec.total_vertices(), spec.edge_size);
  if (ceiling <= std::numeric_limits<std::uint64_t>::max() / 4) {
    return run_brute_force<std::uint64_t>(spec, fixed_totals, options);
  }
  return run_brute_force<BigCount>(spec, fixed_totals, options);
}

ColorCounts local_search(const HypergraphSpec& spec, const ColorCounts& start,
                         std::vector<SearchStep>* trace) {
  validate(spec, start);
  ColorCounts current = start;
  BigCount value = mono_count(spec, current);
  while (auto move = find_improving(spec, current)) {
    const SignedCount delta = delta_move(spec, current, *move);
    current = apply_move(spec, current, *move);
    value += delta;
    assert(value == mono_count(spec, current));
    if (trace) trace->push_back(SearchStep{*move, delta, value});
  }
  return current;
}

std::string to_string(const FormLabel& label) {
  return "F" + std::to_string(label.form);
}

std::vector<FormLabel> classify_form_tripartite2(const HypergraphSpec& spec,
                                                 const ColorCounts& c) {
  validate(spec, c);
  if (spec.num_classes() != 3 || spec.num_colors != 2) {
    throw ValidationError(
        "form classification: needs a tripartite two-coloring");
  }
  // Slot codes per class: 0 = all second color, 1 = all first color,
  // -1 = unconstrained.
  static constexpr std::array<std::array<int, 3>, 12> kPatterns{{
      {-1, 0, 0},   // F1
      {0, -1, 0},   // F2
      {0, 0, -1},   // F3
      {1, -1, 0},   // F4
      {1, 0, -1},   // F5
      {-1, 1, 0},   // F6
      {0, 1, -1},   // F7
      {-1, 0, 1},   // F8
      {0, -1, 1},   // F9
      {1, 1, -1},   // F10
      {1, -1, 1},   // F11
      {-1, 1, 1},   // F12
  }};
  std::vector<FormLabel> labels;
  for (int f = 0; f < 12; ++f) {
    bool match = true;
    for (int i = 0; i < 3 && match; ++i) {
      const int want = kPatterns[f][i];
      if (want == 0) match = c.counts[i][0] == 0;
      if (want == 1) match = c.counts[i][0] == spec.class_sizes[i];
    }
    if (match) {
      labels.push_back(FormLabel{FormLabel::Family::tripartite2, f + 1});
    }
  }
  return labels;
}

std::optional<FormLabel> classify_form_threecolor(const HypergraphSpec& spec,
                                                  const ColorCounts& c) {
  validate(spec, c);
  if (spec.num_colors != 3) {
    throw ValidationError("form classification: needs a three-coloring");
  }
  std::vector<std::vector<int>> palettes;  // colors present per mixed class
  for (const auto& row : c.counts) {
    std::vector<int> present;
    for (int l = 0; l < 3; ++l) {
      if (row[l] > 0) present.push_back(l);
    }
    if (present.size() > 1) palettes.push_back(std::move(present));
  }
  const auto label = [](int form) {
    return FormLabel{FormLabel::Family::threecolor, form};
  };
  if (palettes.empty()) return label(5);
  if (palettes.size() == 1) {
    return label(palettes[0].size() == 3 ? 1 : 2);
  }
  if (palettes.size() > 3) return std::nullopt;
  std::set<std::vector<int>> distinct;
  for (const auto& p : palettes) {
    if (p.size() != 2) return std::nullopt;
    distinct.insert(p);
  }
  if (distinct.size() != palettes.size()) return std::nullopt;
  return label(palettes.size() == 2 ? 3 : 4);
}

}  // namespace mpcolor
