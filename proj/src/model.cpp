#include "mpcolor/model.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace mpcolor {

HypergraphSpec::HypergraphSpec(std::vector<int> sizes, int edge, int colors)
    : class_sizes(std::move(sizes)), edge_size(edge), num_colors(colors) {
  if (class_sizes.empty()) {
    throw ValidationError("spec: at least one vertex class is required");
  }
  for (std::size_t i = 0; i < class_sizes.size(); ++i) {
    if (class_sizes[i] < 1) {
      throw ValidationError("spec: class " + std::to_string(i + 1) +
                            " must hold at least one vertex");
    }
  }
  if (edge_size < 2) throw ValidationError("spec: edge size must be >= 2");
  if (num_colors < 2) throw ValidationError("spec: at least two colors");
}

HypergraphSpec HypergraphSpec::balanced(int n, int k, int edge, int colors) {
  if (k < 1) throw ValidationError("spec: at least one vertex class");
  return HypergraphSpec(std::vector<int>(k, n), edge, colors);
}

HypergraphSpec HypergraphSpec::tripartite(int n1, int n2, int n3, int colors) {
  std::vector<int> sizes{n1, n2, n3};
  std::sort(sizes.begin(), sizes.end());
  return HypergraphSpec(std::move(sizes), 3, colors);
}

int HypergraphSpec::total_vertices() const {
  return std::accumulate(class_sizes.begin(), class_sizes.end(), 0);
}

bool HypergraphSpec::balanced_sizes() const {
  return std::all_of(class_sizes.begin(), class_sizes.end(),
                     [&](int n) { return n == class_sizes.front(); });
}

TripartiteType HypergraphSpec::tripartite_type() const {
  if (num_classes() != 3) {
    throw std::logic_error("tripartite_type: instance is not tripartite");
  }
  if (!std::is_sorted(class_sizes.begin(), class_sizes.end())) {
    throw std::logic_error("tripartite_type: sizes must be nondecreasing");
  }
  return class_sizes[0] + class_sizes[1] <= class_sizes[2] ? TripartiteType::A
                                                           : TripartiteType::B;
}

std::vector<int> ColorCounts::totals() const {
  if (counts.empty()) return {};
  std::vector<int> sums(counts.front().size(), 0);
  for (const auto& row : counts) {
    for (std::size_t l = 0; l < sums.size(); ++l) sums[l] += row[l];
  }
  return sums;
}

void validate(const HypergraphSpec& spec, const ColorCounts& c) {
  const int k = spec.num_classes();
  if (c.num_classes() != k) {
    throw ValidationError("counts: expected " + std::to_string(k) +
                          " class rows, got " +
                          std::to_string(c.num_classes()));
  }
  for (int i = 0; i < k; ++i) {
    const auto& row = c.counts[i];
    if (static_cast<int>(row.size()) != spec.num_colors) {
      throw ValidationError("counts: class " + std::to_string(i + 1) +
                            " has " + std::to_string(row.size()) +
                            " color entries, expected " +
                            std::to_string(spec.num_colors));
    }
    int sum = 0;
    for (int v : row) {
      if (v < 0) {
        throw ValidationError("counts: class " + std::to_string(i + 1) +
                              " holds a negative entry");
      }
      sum += v;
    }
    if (sum != spec.class_sizes[i]) {
      throw ValidationError(
          "counts: class " + std::to_string(i + 1) + " rows sum to " +
          std::to_string(sum) + ", expected " +
          std::to_string(spec.class_sizes[i]));
    }
  }
}

CanonicalKey canonicalize(const HypergraphSpec& spec, const ColorCounts& c) {
  validate(spec, c);
  const int k = spec.num_classes();
  const int m = spec.num_colors;

  // Classes are exchangeable exactly when they have equal sizes; group the
  // row indices by size value.
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < k; ++i) groups[spec.class_sizes[i]].push_back(i);

  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);

  std::vector<int> best;
  std::vector<std::vector<int>> rows(k, std::vector<int>(m));
  std::vector<int> flat(k * m);
  do {
    for (int i = 0; i < k; ++i) {
      for (int l = 0; l < m; ++l) rows[i][l] = c.counts[i][perm[l]];
    }
    // Within each block of equal-size classes, rows are sorted; classes of
    // different sizes keep their positions.
    for (const auto& [size, members] : groups) {
      if (members.size() < 2) continue;
      std::vector<std::vector<int>> block;
      block.reserve(members.size());
      for (int i : members) block.push_back(rows[i]);
      std::sort(block.begin(), block.end());
      for (std::size_t j = 0; j < members.size(); ++j) {
        rows[members[j]] = std::move(block[j]);
      }
    }
    for (int i = 0; i < k; ++i) {
      std::copy(rows[i].begin(), rows[i].end(), flat.begin() + i * m);
    }
    if (best.empty() || flat < best) best = flat;
  } while (std::next_permutation(perm.begin(), perm.end()));

  return CanonicalKey{std::move(best)};
}

std::string to_string(const CanonicalKey& key) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < key.flat.size(); ++i) {
    if (i) out << ',';
    out << key.flat[i];
  }
  out << ']';
  return out.str();
}

std::string instance_to_json(const HypergraphSpec& spec,
                             const ColorCounts& c) {
  nlohmann::json j;
  j["class_sizes"] = spec.class_sizes;
  j["edge_size"] = spec.edge_size;
  j["num_colors"] = spec.num_colors;
  j["counts"] = c.counts;
  return j.dump(2);
}

Instance instance_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("instance: invalid JSON: ") + e.what());
  }
  try {
    HypergraphSpec spec(j.at("class_sizes").get<std::vector<int>>(),
                        j.at("edge_size").get<int>(),
                        j.at("num_colors").get<int>());
    ColorCounts counts{
        j.at("counts").get<std::vector<std::vector<int>>>()};
    validate(spec, counts);
    return Instance{std::move(spec), std::move(counts)};
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("instance: missing or mistyped field: ") +
                          e.what());
  }
}

}  // namespace mpcolor
