// Command-line front end: exact monochromatic-edge counts, move deltas,
// closed-form extremal colorings, brute-force certification, local search
// and sweep tables over instance families.

#include "mpcolor/constructors.hpp"
#include "mpcolor/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace {

using nlohmann::json;
using namespace mpcolor;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("MPCOLOR_BUDGET")) {
    try {
      const unsigned long long parsed = std::stoull(env);
      if (parsed > 0) return parsed;
    } catch (const std::exception&) {
      // fall through to the built-in default
    }
  }
  return kDefaultEnumerationBudget;
}

int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text << "\n";
}

// Colors on the command line are 1-based indices or the usual names.
int parse_color(const std::string& token, int num_colors) {
  static const std::vector<std::string> names = {"red", "blue", "green",
                                                 "yellow"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (token == names[i]) {
      if (static_cast<int>(i) >= num_colors) {
        throw ValidationError("color '" + token +
                              "' is outside this instance's palette");
      }
      return static_cast<int>(i);
    }
  }
  try {
    const int index = std::stoi(token);
    if (index < 1 || index > num_colors) {
      throw ValidationError("color index " + token + " out of range 1.." +
                            std::to_string(num_colors));
    }
    return index - 1;
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception&) {
    throw ValidationError("cannot parse color '" + token + "'");
  }
}

json spec_json(const HypergraphSpec& spec) {
  return json{{"class_sizes", spec.class_sizes},
              {"edge_size", spec.edge_size},
              {"num_colors", spec.num_colors}};
}

json instance_json(const HypergraphSpec& spec, const ColorCounts& c) {
  json j = spec_json(spec);
  j["counts"] = c.counts;
  return j;
}

json construction_json(const ConstructionResult& built) {
  json j = spec_json(built.spec);
  j["regime"] = built.regime;
  j["value"] = built.value.str();
  j["minimizer_set_exact"] = built.minimizer_set_exact;
  j["colorings"] = json::array();
  for (const auto& c : built.colorings) j["colorings"].push_back(c.counts);
  return j;
}

json minimizer_set_json(const HypergraphSpec& spec,
                        const MinimizerSet& result) {
  json j = spec_json(spec);
  j["value"] = result.value.str();
  j["explored"] = result.explored;
  j["truncated"] = result.truncated;
  j["minimizers"] = json::array();
  for (const auto& entry : result.minimizers) {
    json rows = json::array();
    const int m = spec.num_colors;
    for (int i = 0; i < spec.num_classes(); ++i) {
      rows.push_back(std::vector<int>(entry.key.flat.begin() + i * m,
                                      entry.key.flat.begin() + (i + 1) * m));
    }
    j["minimizers"].push_back(
        json{{"counts", entry.representative.counts}, {"canonical", rows}});
  }
  return j;
}

// ---- family selection shared by construct / verify ------------------------

struct FamilyArgs {
  bool balanced2 = false;
  bool balanced3 = false;
  bool degenerate = false;
  std::vector<int> tripartite;  // n1 n2 n3
  std::vector<int> sizes;       // -n/--class-sizes
  int k = 0;
  int e = 3;
  int m = 0;  // 0 = family default
};

void add_family_options(CLI::App* cmd, FamilyArgs& args) {
  cmd->add_flag("--balanced2", args.balanced2,
                "balanced k-partite two-coloring construction");
  cmd->add_flag("--balanced3", args.balanced3,
                "balanced k-partite three-coloring construction");
  cmd->add_option("--tripartite", args.tripartite,
                  "tripartite two-coloring construction; takes n1 n2 n3")
      ->expected(3);
  cmd->add_flag("--degenerate", args.degenerate,
                "degenerate-regime construction (tiny classes, spare colors "
                "or colors dividing classes)");
  cmd->add_option("-n,--class-sizes", args.sizes,
                  "class sizes; a single value with -k means k equal classes");
  cmd->add_option("-k,--classes", args.k, "number of classes");
  cmd->add_option("-e,--edge-size", args.e, "edge size (default 3)");
  cmd->add_option("-m,--colors", args.m, "number of colors");
}

int single_size(const FamilyArgs& args) {
  if (args.sizes.size() != 1) {
    throw ValidationError("this family needs one class size via -n");
  }
  return args.sizes.front();
}

std::vector<int> resolved_sizes(const FamilyArgs& args) {
  if (args.sizes.empty()) {
    throw ValidationError("missing class sizes (-n/--class-sizes)");
  }
  if (args.sizes.size() == 1 && args.k > 1) {
    return std::vector<int>(args.k, args.sizes.front());
  }
  return args.sizes;
}

ConstructionResult run_construction(const FamilyArgs& args) {
  const int selected = (args.balanced2 ? 1 : 0) + (args.balanced3 ? 1 : 0) +
                       (args.degenerate ? 1 : 0) +
                       (args.tripartite.empty() ? 0 : 1);
  if (selected != 1) {
    throw ValidationError(
        "pick exactly one of --balanced2, --balanced3, --tripartite, "
        "--degenerate");
  }
  if (args.balanced2) {
    return construct_balanced_2color(single_size(args), args.k, args.e);
  }
  if (args.balanced3) {
    return construct_balanced_3color(single_size(args), args.k, args.e);
  }
  if (!args.tripartite.empty()) {
    return construct_tripartite_2color(args.tripartite[0], args.tripartite[1],
                                       args.tripartite[2]);
  }
  const int colors = args.m == 0 ? 2 : args.m;
  return construct_degenerate(
      HypergraphSpec(resolved_sizes(args), args.e, colors));
}

// ---- verify ----------------------------------------------------------------

struct VerifyOutcome {
  ConstructionResult built;
  MinimizerSet oracle;
  bool value_match = false;
  bool keys_checked = false;
  bool keys_match = true;

  bool match() const { return value_match && (!keys_checked || keys_match); }
};

VerifyOutcome run_verify(ConstructionResult built,
                         const BruteForceOptions& options) {
  MinimizerSet oracle = brute_force_min(built.spec, std::nullopt, options);
  VerifyOutcome outcome{std::move(built), std::move(oracle)};
  outcome.value_match = outcome.built.value == outcome.oracle.value;
  outcome.keys_checked =
      outcome.built.minimizer_set_exact && !outcome.oracle.truncated;
  if (outcome.keys_checked) {
    std::vector<CanonicalKey> built_keys;
    for (const auto& c : outcome.built.colorings) {
      built_keys.push_back(canonicalize(outcome.built.spec, c));
    }
    std::sort(built_keys.begin(), built_keys.end());
    outcome.keys_match = built_keys == outcome.oracle.keys();
  }
  return outcome;
}

std::string verify_verdict(const VerifyOutcome& outcome) {
  std::ostringstream out;
  const std::size_t count = outcome.oracle.minimizers.size();
  if (outcome.match()) {
    out << "match, " << count << (count == 1 ? " minimizer" : " minimizers")
        << ", value " << outcome.oracle.value.str();
  } else {
    out << "mismatch, constructor value " << outcome.built.value.str()
        << ", oracle value " << outcome.oracle.value.str() << ", "
        << outcome.oracle.minimizers.size() << " minimizers";
    if (outcome.keys_checked && !outcome.keys_match) {
      out << ", minimizer sets differ";
    }
  }
  return out.str();
}

json verify_json(const VerifyOutcome& outcome) {
  json j = spec_json(outcome.built.spec);
  j["regime"] = outcome.built.regime;
  j["construct_value"] = outcome.built.value.str();
  j["oracle_value"] = outcome.oracle.value.str();
  j["minimizers"] = outcome.oracle.minimizers.size();
  j["keys_checked"] = outcome.keys_checked;
  j["match"] = outcome.match();
  return j;
}

// ---- sweep -----------------------------------------------------------------

struct SweepRow {
  std::string class_sizes;
  int edge_size = 0;
  int num_colors = 0;
  std::string regime;
  std::string construct_value;
  std::string oracle_value;
  std::string minimizers;
  std::string match;
  long long elapsed_ms = 0;
};

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

std::string sizes_label(const std::vector<int>& sizes) {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += '|';
    out += std::to_string(sizes[i]);
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "class_sizes,edge_size,num_colors,regime,construct_value,"
         "oracle_value,minimizers,match,elapsed_ms";
  for (const auto& row : rows) {
    out << "\n"
        << csv_escape(row.class_sizes) << ',' << row.edge_size << ','
        << row.num_colors << ',' << csv_escape(row.regime) << ','
        << row.construct_value << ',' << row.oracle_value << ','
        << row.minimizers << ',' << row.match << ',' << row.elapsed_ms;
  }
  return out.str();
}

json sweep_json(const std::vector<SweepRow>& rows) {
  json arr = json::array();
  for (const auto& row : rows) {
    arr.push_back(json{{"class_sizes", row.class_sizes},
                       {"edge_size", row.edge_size},
                       {"num_colors", row.num_colors},
                       {"regime", row.regime},
                       {"construct_value", row.construct_value},
                       {"oracle_value", row.oracle_value},
                       {"minimizers", row.minimizers},
                       {"match", row.match},
                       {"elapsed_ms", row.elapsed_ms}});
  }
  return arr;
}

// "3:5" (inclusive range), "3,4,6" or a single value.
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  try {
    if (const auto colon = text.find(':'); colon != std::string::npos) {
      const int lo = std::stoi(text.substr(0, colon));
      const int hi = std::stoi(text.substr(colon + 1));
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      std::stringstream stream(text);
      std::string item;
      while (std::getline(stream, item, ',')) out.push_back(std::stoi(item));
    }
  } catch (const std::exception&) {
    throw ValidationError("cannot parse range: " + text);
  }
  if (out.empty()) throw ValidationError("empty range: " + text);
  return out;
}

struct SweepArgs {
  std::string family;
  std::string mode = "verify";
  std::string n_range = "3:4";
  std::string k_range;
  std::string e_range = "3";
  std::string m_range;
  int min_size = 1;
  int max_size = 5;
};

SweepRow sweep_one(const std::function<HypergraphSpec()>& make_spec,
                   const std::function<ConstructionResult()>& make_built,
                   const std::string& mode,
                   const BruteForceOptions& options) {
  SweepRow row;
  const auto start = std::chrono::steady_clock::now();
  try {
    const HypergraphSpec spec = make_spec();
    row.class_sizes = sizes_label(spec.class_sizes);
    row.edge_size = spec.edge_size;
    row.num_colors = spec.num_colors;
    if (mode == "brute") {
      const MinimizerSet oracle = brute_force_min(spec, std::nullopt, options);
      row.oracle_value = oracle.value.str();
      row.minimizers = std::to_string(oracle.minimizers.size());
    } else {
      ConstructionResult built = make_built();
      row.regime = built.regime;
      row.construct_value = built.value.str();
      if (mode == "construct") {
        row.minimizers = std::to_string(built.colorings.size());
      } else {
        const VerifyOutcome outcome = run_verify(std::move(built), options);
        row.oracle_value = outcome.oracle.value.str();
        row.minimizers = std::to_string(outcome.oracle.minimizers.size());
        row.match = outcome.match() ? "1" : "0";
      }
    }
  } catch (const std::exception& e) {
    row.regime = std::string("error: ") + e.what();
  }
  row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return row;
}

std::vector<SweepRow> run_sweep(const SweepArgs& args,
                                const BruteForceOptions& options) {
  std::vector<SweepRow> rows;
  const std::string& mode = args.mode;
  if (mode != "verify" && mode != "construct" && mode != "brute") {
    throw ValidationError("unknown sweep mode: " + mode);
  }
  if (args.family == "balanced2") {
    const auto ks = parse_int_list(args.k_range.empty() ? "2:4" : args.k_range);
    for (int n : parse_int_list(args.n_range)) {
      for (int k : ks) {
        for (int e : parse_int_list(args.e_range)) {
          if (e > n) continue;
          rows.push_back(sweep_one(
              [=] { return HypergraphSpec::balanced(n, k, e, 2); },
              [=] { return construct_balanced_2color(n, k, e); }, mode,
              options));
        }
      }
    }
  } else if (args.family == "tripartite") {
    for (int n3 = std::max(3, args.min_size); n3 <= args.max_size; ++n3) {
      for (int n2 = args.min_size; n2 <= n3; ++n2) {
        for (int n1 = args.min_size; n1 <= n2; ++n1) {
          rows.push_back(sweep_one(
              [=] { return HypergraphSpec({n1, n2, n3}, 3, 2); },
              [=] { return construct_tripartite_2color(n1, n2, n3); }, mode,
              options));
        }
      }
    }
  } else if (args.family == "balanced3") {
    const auto ks = parse_int_list(args.k_range.empty() ? "3:4" : args.k_range);
    for (int n : parse_int_list(args.n_range)) {
      for (int k : ks) {
        for (int e : parse_int_list(args.e_range)) {
          if (e > n) continue;
          rows.push_back(sweep_one(
              [=] { return HypergraphSpec::balanced(n, k, e, 3); },
              [=] { return construct_balanced_3color(n, k, e); }, mode,
              options));
        }
      }
    }
  } else if (args.family == "degenerate") {
    const auto ks = parse_int_list(args.k_range.empty() ? "2:4" : args.k_range);
    const auto ms = parse_int_list(args.m_range.empty() ? "2:3" : args.m_range);
    for (int n : parse_int_list(args.n_range)) {
      for (int k : ks) {
        for (int m : ms) {
          for (int e : parse_int_list(args.e_range)) {
            const auto spec = [=] {
              return HypergraphSpec::balanced(n, k, e, m);
            };
            rows.push_back(sweep_one(
                spec, [=] { return construct_degenerate(spec()); }, mode,
                options));
          }
        }
      }
    }
  } else {
    throw ValidationError("unknown family: " + args.family);
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "mpcolor: minimal monochromatic-edge colorings of complete "
      "multipartite uniform hypergraphs"};
  app.require_subcommand(1);

  std::string in_path;
  std::string out_path;
  std::string format;
  std::uint64_t budget = default_budget();
  int jobs = default_jobs();

  const auto add_in = [&](CLI::App* cmd) {
    cmd->add_option("--in", in_path,
                    "instance JSON file ('-' for stdin): class_sizes, "
                    "edge_size, num_colors, counts")
        ->required();
  };
  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path,
                    "write the artifact here (default stdout)");
  };
  const auto add_search_options = [&](CLI::App* cmd) {
    cmd->add_option("--budget", budget,
                    "largest allowed enumeration size (default " +
                        std::to_string(default_budget()) +
                        "; env MPCOLOR_BUDGET overrides the built-in "
                        "default)");
    cmd->add_option("--jobs", jobs, "worker threads for the oracle");
  };

  auto* count_cmd = app.add_subcommand("count", "monochromatic-edge count");
  add_in(count_cmd);
  add_out(count_cmd);

  auto* delta_cmd =
      app.add_subcommand("delta", "closed-form edge-count change of a move");
  add_in(delta_cmd);
  add_out(delta_cmd);
  std::string kind, from_color, to_color;
  int class1 = 0, class2 = 0;
  delta_cmd->add_option("--kind", kind, "recolor | swap | total-swap")
      ->required();
  delta_cmd
      ->add_option("--class1", class1, "class of the moving vertex (1-based)")
      ->required();
  delta_cmd->add_option("--class2", class2,
                        "partner class for swap/total-swap (1-based)");
  delta_cmd->add_option("--from", from_color, "source color (name or 1-based)")
      ->required();
  delta_cmd->add_option("--to", to_color, "target color (name or 1-based)")
      ->required();

  auto* construct_cmd =
      app.add_subcommand("construct", "closed-form extremal coloring");
  FamilyArgs construct_args;
  add_family_options(construct_cmd, construct_args);
  add_out(construct_cmd);

  auto* brute_cmd = app.add_subcommand(
      "brute", "certified minimum by exhaustive count-vector scan");
  FamilyArgs brute_args;
  brute_cmd
      ->add_option("-n,--class-sizes", brute_args.sizes,
                   "class sizes; single value with -k means k classes")
      ->required();
  brute_cmd->add_option("-k,--classes", brute_args.k, "number of classes");
  brute_cmd->add_option("-e,--edge-size", brute_args.e, "edge size");
  brute_cmd->add_option("-m,--colors", brute_args.m, "number of colors")
      ->required();
  std::vector<int> fixed_totals;
  brute_cmd->add_option("--fixed-totals", fixed_totals,
                        "restrict to colorings with these color totals");
  add_search_options(brute_cmd);
  add_out(brute_cmd);

  auto* search_cmd =
      app.add_subcommand("search", "swap-driven strictly-improving descent");
  add_in(search_cmd);
  add_out(search_cmd);

  auto* verify_cmd = app.add_subcommand(
      "verify", "constructor against oracle; nonzero exit on mismatch");
  FamilyArgs verify_args;
  add_family_options(verify_cmd, verify_args);
  add_search_options(verify_cmd);
  verify_cmd->add_option("--format", format, "text (default) or json");
  add_out(verify_cmd);

  auto* sweep_cmd = app.add_subcommand(
      "sweep", "table of construct/verify results over a family");
  SweepArgs sweep_args;
  sweep_cmd
      ->add_option("--family", sweep_args.family,
                   "balanced2 | tripartite | balanced3 | degenerate")
      ->required();
  sweep_cmd->add_option("--mode", sweep_args.mode,
                        "verify (default) | construct | brute");
  sweep_cmd->add_option("--n", sweep_args.n_range,
                        "class sizes, e.g. 3:5 or 3,4");
  sweep_cmd->add_option("--k", sweep_args.k_range,
                        "class counts, e.g. 2:4 or 3,4,6,7");
  sweep_cmd->add_option("--e", sweep_args.e_range, "edge sizes, e.g. 3:5");
  sweep_cmd->add_option("--m", sweep_args.m_range,
                        "color counts (degenerate family)");
  sweep_cmd->add_option("--min-size", sweep_args.min_size,
                        "smallest class size (tripartite family)");
  sweep_cmd->add_option("--max-size", sweep_args.max_size,
                        "largest class size (tripartite family)");
  sweep_cmd->add_option("--format", format, "csv (default) or json");
  add_search_options(sweep_cmd);
  add_out(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return kExitUsage;
  }

  BruteForceOptions options;
  options.budget = budget;
  options.jobs = jobs;

  try {
    if (*count_cmd) {
      const Instance inst = instance_from_json(read_input(in_path));
      json j = spec_json(inst.spec);
      j["value"] = mono_count(inst.spec, inst.counts).str();
      emit(out_path, j.dump(2));
    } else if (*delta_cmd) {
      const Instance inst = instance_from_json(read_input(in_path));
      Move move;
      if (kind == "recolor") {
        move.kind = MoveKind::recolor;
      } else if (kind == "swap") {
        move.kind = MoveKind::swap;
      } else if (kind == "total-swap") {
        move.kind = MoveKind::total_swap;
      } else {
        throw ValidationError("unknown move kind: " + kind);
      }
      move.class_i = class1 - 1;
      move.class_i2 = class2 - 1;
      move.color_from = parse_color(from_color, inst.spec.num_colors);
      move.color_to = parse_color(to_color, inst.spec.num_colors);
      json j = spec_json(inst.spec);
      j["kind"] = kind;
      j["delta"] = delta_move(inst.spec, inst.counts, move).str();
      emit(out_path, j.dump(2));
    } else if (*construct_cmd) {
      const ConstructionResult built = run_construction(construct_args);
      emit(out_path, construction_json(built).dump(2));
    } else if (*brute_cmd) {
      const HypergraphSpec spec(resolved_sizes(brute_args), brute_args.e,
                                brute_args.m);
      const std::optional<std::vector<int>> totals =
          fixed_totals.empty() ? std::nullopt
                               : std::optional<std::vector<int>>(fixed_totals);
      const MinimizerSet result = brute_force_min(spec, totals, options);
      emit(out_path, minimizer_set_json(spec, result).dump(2));
    } else if (*search_cmd) {
      const Instance inst = instance_from_json(read_input(in_path));
      std::vector<SearchStep> trace;
      const ColorCounts end = local_search(inst.spec, inst.counts, &trace);
      json j;
      j["start"] = instance_json(inst.spec, inst.counts);
      j["start_value"] = mono_count(inst.spec, inst.counts).str();
      j["steps"] = json::array();
      for (const auto& step : trace) {
        j["steps"].push_back(json{{"kind", to_string(step.move.kind)},
                                  {"class1", step.move.class_i + 1},
                                  {"class2", step.move.class_i2 + 1},
                                  {"from", step.move.color_from + 1},
                                  {"to", step.move.color_to + 1},
                                  {"delta", step.delta.str()},
                                  {"value_after", step.value_after.str()}});
      }
      j["final"] = instance_json(inst.spec, end);
      j["final_value"] = mono_count(inst.spec, end).str();
      emit(out_path, j.dump(2));
    } else if (*verify_cmd) {
      const VerifyOutcome outcome =
          run_verify(run_construction(verify_args), options);
      if (format == "json") {
        emit(out_path, verify_json(outcome).dump(2));
      } else {
        emit(out_path, verify_verdict(outcome));
      }
      return outcome.match() ? 0 : kExitMismatch;
    } else if (*sweep_cmd) {
      const std::vector<SweepRow> rows = run_sweep(sweep_args, options);
      if (format == "json") {
        emit(out_path, sweep_json(rows).dump(2));
      } else {
        emit(out_path, sweep_csv(rows));
      }
    }
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
