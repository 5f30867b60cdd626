#include "ccl/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "ccl/classify.hpp"
#include "ccl/parallel.hpp"
#include "ccl/report.hpp"
#include "ccl/svg.hpp"

namespace ccl::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kDefaultClassifySteps = 200;
constexpr std::size_t kDefaultTmSteps = 200;
constexpr std::size_t kDefaultTmSample = 10'000;

BigUint parse_big(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ConfigError("rule number '" + text + "' is not a non-negative integer");
  }
  return BigUint(text);
}

BigUint big_from_json(const json& v) {
  if (v.is_number_unsigned()) return BigUint(v.get<std::uint64_t>());
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return BigUint(v.get<std::int64_t>());
  if (v.is_string()) return parse_big(v.get<std::string>());
  throw ConfigError("rule numbers must be non-negative integers or decimal strings");
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      throw ConfigError("unknown key '" + key + "' in " + where);
    }
  }
}

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (!j.contains(key) || j.at(key).is_null()) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

DiffAggregate parse_aggregate(const std::string& s) {
  if (s == "mean") return DiffAggregate::Mean;
  if (s == "max") return DiffAggregate::Max;
  throw ConfigError("aggregate must be mean or max");
}

std::string to_string(DiffAggregate a) { return a == DiffAggregate::Mean ? "mean" : "max"; }

Normalization parse_normalization(const std::string& s) {
  if (s == "time") return Normalization::Time;
  if (s == "volume") return Normalization::Volume;
  throw ConfigError("normalization must be time or volume");
}

std::string to_string(Normalization n) { return n == Normalization::Time ? "time" : "volume"; }

StateSequenceMode parse_state_mode(const std::string& s) {
  if (s == "distinct") return StateSequenceMode::DistinctCount;
  if (s == "state") return StateSequenceMode::StateAtStep;
  throw ConfigError("state mode must be distinct or state");
}

std::string to_string(StateSequenceMode m) { return m == StateSequenceMode::DistinctCount ? "distinct" : "state"; }

// Resolved machine parameters; TM commands default to 2 states, 3 colors.
struct Machine {
  MachineKind kind;
  int colors;
  int states;
};

Machine machine_for(const SweepConfig& cfg) {
  return {cfg.kind, cfg.colors, cfg.kind == MachineKind::CellularAutomaton ? 1 : cfg.states};
}

CompressorConfig compressor_for(const SweepConfig& cfg) {
  if (!cfg.compressor_config) return {};
  try {
    return CompressorConfig::load(*cfg.compressor_config);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

std::vector<RuleSpec> resolve_rules(const SweepConfig& cfg, const Machine& m, std::vector<BigUint> fallback) {
  std::set<BigUint> numbers(cfg.rules.begin(), cfg.rules.end());
  if (cfg.sample.size > 0) {
    for (auto& r : sample_rule_space(m.kind, m.colors, m.states, cfg.sample.size, cfg.sample.seed)) {
      numbers.insert(r.number);
    }
  }
  if (numbers.empty()) numbers.insert(fallback.begin(), fallback.end());
  if (numbers.empty()) throw ConfigError("no rules selected: pass --rules or a sample size");
  std::vector<RuleSpec> rules;
  for (const auto& n : numbers) {
    RuleSpec r{m.kind, m.colors, m.states, n};
    try {
      r.validate();
    } catch (const std::domain_error& e) {
      throw ConfigError(e.what());
    }
    rules.push_back(std::move(r));
  }
  return rules;
}

std::vector<BigUint> all_eca() {
  std::vector<BigUint> out;
  for (unsigned r = 0; r < 256; ++r) out.emplace_back(r);
  return out;
}

std::vector<BigUint> default_ca_rules(const Machine& m) {
  return m.kind == MachineKind::CellularAutomaton && m.colors == 2 ? all_eca() : std::vector<BigUint>{};
}

class OutputDir {
 public:
  explicit OutputDir(const SweepConfig& cfg) : dir_(cfg.output_dir) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir_, ec)) {
      if (!cfg.create_output_dir) {
        throw IoError("output directory " + dir_.string() + " does not exist (pass --create to create it)");
      }
      std::filesystem::create_directories(dir_, ec);
      if (ec) throw IoError("cannot create output directory " + dir_.string() + ": " + ec.message());
    }
  }

  void write(const std::string& name, const std::string& content) {
    std::ofstream out(dir_ / name, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + (dir_ / name).string() + " for writing");
    out << content;
    out.close();
    if (!out) throw IoError("failed writing " + (dir_ / name).string());
    written_.push_back(name);
  }

  void write_json(const std::string& name, const json& j) { write(name, j.dump(2) + "\n"); }

  WrittenFiles files() const { return written_; }

 private:
  std::filesystem::path dir_;
  WrittenFiles written_;
};

void write_manifest(OutputDir& out, const std::string& command, const SweepConfig& cfg, const CompressorConfig& comp) {
  out.write_json("manifest.json", {{"tool", "ccl"},
                                   {"version", CCL_VERSION},
                                   {"command", command},
                                   {"config", config_to_json(cfg)},
                                   {"compressor", compressor_json(comp)}});
}

std::string profile_svg(const IcProfile& p, double spike_q) {
  const auto values = p.values();
  svg::Series curve{"compressed length", {}, svg::SeriesStyle::LineAndMarkers, svg::palette(0)};
  for (std::size_t j = 0; j < values.size(); ++j) curve.points.emplace_back(static_cast<double>(j), values[j]);
  svg::Series spikes{"spikes", {}, svg::SeriesStyle::Markers, svg::palette(1)};
  for (auto j : detect_spikes(values, spike_q)) spikes.points.emplace_back(static_cast<double>(j), values[j]);
  return svg::render({"rule " + p.rule.number.str() + " profile, t = " + std::to_string(p.steps),
                      "initial condition number",
                      p.normalized ? "compressed length / t (bytes)" : "compressed length (bytes)",
                      {curve, spikes}});
}

std::string transition_svg(const TransitionRecord& rec) {
  svg::Series seq{"characteristic exponent", {}, svg::SeriesStyle::LineAndMarkers, svg::palette(0)};
  svg::Series fit{"least-squares fit", {}, svg::SeriesStyle::Line, svg::palette(1)};
  for (std::size_t b = 0; b < rec.sequence.size(); ++b) {
    const double x = static_cast<double>(b + 1);
    seq.points.emplace_back(x, rec.sequence[b]);
    fit.points.emplace_back(x, rec.fit.intercept + rec.fit.slope * x);
  }
  return svg::render({"rule " + rec.rule.number.str() + " transition sequence, C = " + format_double(rec.coefficient),
                      "block (t = block x " + std::to_string(rec.block_steps) + ")", "exponent", {seq, fit}});
}

}  // namespace

void SweepConfig::validate() const {
  try {
    RuleSpec probe{kind, colors, kind == MachineKind::CellularAutomaton ? 1 : states, 0};
    probe.validate();
    transition.validate();
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (clusters < 1) throw ConfigError("clusters must be at least 1");
  if (transition_clusters < 1) throw ConfigError("transition clusters must be at least 1");
  if (profile.ic_count < 1 || profile.steps < 1) throw ConfigError("profile needs ic_count >= 1 and steps >= 1");
  if (!(profile.spike_q > 0)) throw ConfigError("spike_q must be positive");
  if (tm.top_k < 1) throw ConfigError("top_k must be at least 1");
  if (steps && *steps == 0 && kind == MachineKind::TuringMachine) throw ConfigError("steps must be at least 1");
}

SweepConfig config_from_json(const json& j) {
  check_keys(j,
             {"machine", "rules", "sample", "steps", "initial_condition", "clusters", "transition", "profile",
              "interesting", "tm", "compressor_config", "output_dir", "create", "threads"},
             "config");
  SweepConfig cfg;
  if (j.contains("machine")) {
    const auto& m = j.at("machine");
    check_keys(m, {"kind", "colors", "states"}, "machine");
    std::string kind = "ca";
    read(m, "kind", kind);
    try {
      cfg.kind = parse_machine_kind(kind);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    if (cfg.kind == MachineKind::TuringMachine) cfg.colors = 3, cfg.states = 2;
    read(m, "colors", cfg.colors);
    read(m, "states", cfg.states);
  }
  if (j.contains("rules")) {
    const auto& r = j.at("rules");
    if (!r.is_array()) throw ConfigError("rules must be an array");
    for (const auto& v : r) cfg.rules.push_back(big_from_json(v));
  }
  if (j.contains("sample")) {
    const auto& s = j.at("sample");
    check_keys(s, {"size", "seed"}, "sample");
    read(s, "size", cfg.sample.size);
    read(s, "seed", cfg.sample.seed);
  }
  if (j.contains("steps") && !j.at("steps").is_null()) {
    std::size_t steps = 0;
    read(j, "steps", steps);
    cfg.steps = steps;
  }
  read(j, "initial_condition", cfg.initial_condition);
  read(j, "clusters", cfg.clusters);
  if (j.contains("transition")) {
    const auto& t = j.at("transition");
    check_keys(t,
               {"ic_count", "block_steps", "blocks", "aggregate", "normalization", "include_ic_zero",
                "phase_threshold", "clusters"},
               "transition");
    read(t, "ic_count", cfg.transition.ic_count);
    read(t, "block_steps", cfg.transition.block_steps);
    read(t, "blocks", cfg.transition.blocks);
    std::string aggregate, normalization;
    read(t, "aggregate", aggregate);
    read(t, "normalization", normalization);
    if (!aggregate.empty()) cfg.transition.exponent.aggregate = parse_aggregate(aggregate);
    if (!normalization.empty()) cfg.transition.exponent.normalization = parse_normalization(normalization);
    read(t, "include_ic_zero", cfg.transition.exponent.include_ic_zero);
    read(t, "phase_threshold", cfg.transition.phase_threshold);
    read(t, "clusters", cfg.transition_clusters);
  }
  if (j.contains("profile")) {
    const auto& p = j.at("profile");
    check_keys(p, {"ic_count", "steps", "normalize", "spike_q"}, "profile");
    read(p, "ic_count", cfg.profile.ic_count);
    read(p, "steps", cfg.profile.steps);
    read(p, "normalize", cfg.profile.normalize);
    read(p, "spike_q", cfg.profile.spike_q);
  }
  if (j.contains("interesting")) {
    const auto& i = j.at("interesting");
    check_keys(i, {"count", "ic_range"}, "interesting");
    read(i, "count", cfg.interesting.count);
    read(i, "ic_range", cfg.interesting.ic_range);
  }
  if (j.contains("tm")) {
    const auto& t = j.at("tm");
    check_keys(t, {"top_k", "exhaustive", "budget", "mode"}, "tm");
    read(t, "top_k", cfg.tm.top_k);
    read(t, "exhaustive", cfg.tm.exhaustive);
    read(t, "budget", cfg.tm.budget);
    std::string mode;
    read(t, "mode", mode);
    if (!mode.empty()) cfg.tm.mode = parse_state_mode(mode);
  }
  std::string path;
  read(j, "compressor_config", path);
  if (!path.empty()) cfg.compressor_config = path;
  path.clear();
  read(j, "output_dir", path);
  if (!path.empty()) cfg.output_dir = path;
  read(j, "create", cfg.create_output_dir);
  read(j, "threads", cfg.threads);
  return cfg;
}

SweepConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  try {
    return config_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw ConfigError("config file " + path.string() + ": " + e.what());
  }
}

json config_to_json(const SweepConfig& cfg) {
  json rules = json::array();
  for (const auto& r : cfg.rules) rules.push_back(r.str());
  json j = {
      {"machine", {{"kind", to_string(cfg.kind)}, {"colors", cfg.colors}, {"states", cfg.states}}},
      {"rules", rules},
      {"sample", {{"size", cfg.sample.size}, {"seed", cfg.sample.seed}}},
      {"initial_condition", cfg.initial_condition},
      {"clusters", cfg.clusters},
      {"transition",
       {{"ic_count", cfg.transition.ic_count},
        {"block_steps", cfg.transition.block_steps},
        {"blocks", cfg.transition.blocks},
        {"aggregate", to_string(cfg.transition.exponent.aggregate)},
        {"normalization", to_string(cfg.transition.exponent.normalization)},
        {"include_ic_zero", cfg.transition.exponent.include_ic_zero},
        {"phase_threshold", cfg.transition.phase_threshold},
        {"clusters", cfg.transition_clusters}}},
      {"profile",
       {{"ic_count", cfg.profile.ic_count},
        {"steps", cfg.profile.steps},
        {"normalize", cfg.profile.normalize},
        {"spike_q", cfg.profile.spike_q}}},
      {"interesting", {{"count", cfg.interesting.count}, {"ic_range", cfg.interesting.ic_range}}},
      {"tm",
       {{"top_k", cfg.tm.top_k},
        {"exhaustive", cfg.tm.exhaustive},
        {"budget", cfg.tm.budget},
        {"mode", to_string(cfg.tm.mode)}}},
  };
  j["steps"] = cfg.steps ? json(*cfg.steps) : json(nullptr);
  j["compressor_config"] = cfg.compressor_config ? json(cfg.compressor_config->generic_string()) : json(nullptr);
  return j;
}

WrittenFiles cmd_classify(const SweepConfig& cfg) {
  cfg.validate();
  if (cfg.kind != MachineKind::CellularAutomaton) throw ConfigError("classify works on cellular automata");
  const auto comp = compressor_for(cfg);
  const auto machine = machine_for(cfg);
  const auto rules = resolve_rules(cfg, machine, default_ca_rules(machine));
  const std::size_t steps = cfg.steps.value_or(kDefaultClassifySteps);
  OutputDir out(cfg);

  auto report = rank_rules(rules, initial_condition(cfg.initial_condition), steps, comp, cfg.threads);
  std::set<std::size_t> distinct;
  for (const auto& e : report.entries) distinct.insert(e.compressed_length);
  const std::size_t k = std::min(cfg.clusters, distinct.size());
  if (k >= 2) {
    assign_clusters(report, k);
    split_top_cluster(report);
  }

  out.write("classification.csv", classification_csv(report));
  out.write_json("classification.json", classification_json(report));

  std::vector<svg::Series> series(static_cast<std::size_t>(report.cluster_count));
  for (std::size_t c = 0; c < series.size(); ++c) {
    series[c] = {"cluster " + std::to_string(c), {}, svg::SeriesStyle::Markers, svg::palette(c)};
  }
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const auto& e = report.entries[i];
    series[static_cast<std::size_t>(e.cluster)].points.emplace_back(static_cast<double>(i + 1),
                                                                    static_cast<double>(e.compressed_length));
  }
  out.write("ranking.svg", svg::render({"compressed length ranking, t = " + std::to_string(steps), "rank",
                                        "compressed length (bytes)", std::move(series)}));
  write_manifest(out, "classify", cfg, comp);
  return out.files();
}

WrittenFiles cmd_transition(const SweepConfig& cfg) {
  cfg.validate();
  if (cfg.kind != MachineKind::CellularAutomaton) throw ConfigError("transition works on cellular automata");
  const auto comp = compressor_for(cfg);
  const auto machine = machine_for(cfg);
  const auto rules = resolve_rules(cfg, machine, default_ca_rules(machine));
  OutputDir out(cfg);

  TransitionParams params = cfg.transition;
  params.compressor = comp;
  params.threads = cfg.threads;
  const auto entries = coefficient_classification(rules, params, cfg.transition_clusters);
  out.write("coefficients.csv", coefficients_csv(entries));

  json records = json::array();
  for (const auto& e : entries) {
    auto j = transition_record_json(e.record);
    j["cluster"] = e.cluster;
    records.push_back(std::move(j));
  }
  out.write_json("transitions.json", {{"parameters", config_to_json(cfg)["transition"]},
                                      {"compressor", compressor_json(comp)},
                                      {"records", std::move(records)}});

  std::vector<IcProfile> profiles;
  for (const auto& rule : rules) {
    profiles.push_back(
        ic_profile(rule, cfg.profile.ic_count, cfg.profile.steps, cfg.profile.normalize, comp, cfg.threads));
    out.write("profile-" + rule.number.str() + ".svg", profile_svg(profiles.back(), cfg.profile.spike_q));
  }
  out.write("profiles.csv", profiles_csv(profiles, cfg.profile.spike_q));
  for (const auto& e : entries) {
    out.write("transition-" + e.record.rule.number.str() + ".svg", transition_svg(e.record));
  }

  // Interesting ICs for every rule above the phase threshold, and for
  // every explicitly requested rule.
  std::set<BigUint> requested(cfg.rules.begin(), cfg.rules.end());
  json interesting = json::array();
  for (const auto& e : entries) {
    const auto& rule = e.record.rule;
    if (!(e.record.coefficient > params.phase_threshold) && !requested.count(rule.number)) continue;
    const auto found = interesting_initial_conditions(rule, cfg.interesting.count, cfg.interesting.ic_range, params);
    auto j = rule_json(rule);
    j["coefficient"] = found.coefficient;
    j["below_threshold"] = found.below_threshold;
    j["initial_conditions"] = found.ics;
    interesting.push_back(std::move(j));
  }
  out.write_json("interesting_ics.json", {{"phase_threshold", params.phase_threshold},
                                          {"count", cfg.interesting.count},
                                          {"ic_range", cfg.interesting.ic_range},
                                          {"rules", std::move(interesting)}});
  write_manifest(out, "transition", cfg, comp);
  return out.files();
}

WrittenFiles cmd_profile(const SweepConfig& cfg) {
  cfg.validate();
  if (cfg.kind != MachineKind::CellularAutomaton) throw ConfigError("profile works on cellular automata");
  const auto comp = compressor_for(cfg);
  const auto machine = machine_for(cfg);
  const auto rules = resolve_rules(cfg, machine, {BigUint(22), BigUint(109)});
  const std::size_t steps = cfg.steps.value_or(cfg.profile.steps);
  OutputDir out(cfg);

  std::vector<IcProfile> profiles;
  json list = json::array();
  for (const auto& rule : rules) {
    profiles.push_back(ic_profile(rule, cfg.profile.ic_count, steps, cfg.profile.normalize, comp, cfg.threads));
    list.push_back(profile_json(profiles.back(), cfg.profile.spike_q));
    out.write("profile-" + rule.number.str() + ".svg", profile_svg(profiles.back(), cfg.profile.spike_q));
  }
  out.write("profiles.csv", profiles_csv(profiles, cfg.profile.spike_q));
  out.write_json("profiles.json", {{"compressor", compressor_json(comp)}, {"profiles", std::move(list)}});
  write_manifest(out, "profile", cfg, comp);
  return out.files();
}

WrittenFiles cmd_tm_search(const SweepConfig& cfg) {
  SweepConfig tm_cfg = cfg;
  if (tm_cfg.kind != MachineKind::TuringMachine) {
    tm_cfg.kind = MachineKind::TuringMachine;
    tm_cfg.states = 2;
    tm_cfg.colors = 3;
  }
  tm_cfg.validate();
  const auto comp = compressor_for(tm_cfg);
  const auto machine = machine_for(tm_cfg);
  const std::size_t steps = tm_cfg.steps.value_or(kDefaultTmSteps);

  std::vector<RuleSpec> rules;
  if (tm_cfg.tm.exhaustive) {
    const BigUint space = tm_space_size(machine.states, machine.colors);
    if (space > tm_cfg.tm.budget) {
      throw ConfigError("exhaustive search over " + space.str() + " machines exceeds the budget of " +
                        std::to_string(tm_cfg.tm.budget));
    }
    const auto n = static_cast<std::uint64_t>(space);
    for (std::uint64_t r = 0; r < n; ++r) rules.push_back(RuleSpec{machine.kind, machine.colors, machine.states, r});
  } else {
    if (tm_cfg.sample.size == 0 && tm_cfg.rules.empty()) tm_cfg.sample.size = kDefaultTmSample;
    rules = resolve_rules(tm_cfg, machine, {});
  }
  OutputDir out(tm_cfg);

  auto ranking = parallel_map<TmRankEntry>(rules.size(), tm_cfg.threads, [&](std::size_t i) {
    return TmRankEntry{rules[i], tm_complexity(rules[i], steps, comp, tm_cfg.tm.mode)};
  });
  std::stable_sort(ranking.begin(), ranking.end(), [](const TmRankEntry& a, const TmRankEntry& b) {
    if (a.estimate.compressed_length != b.estimate.compressed_length) {
      return a.estimate.compressed_length > b.estimate.compressed_length;
    }
    return a.rule < b.rule;
  });

  out.write("tm_ranking.csv", tm_ranking_csv(ranking));
  json top = json::array();
  for (std::size_t i = 0; i < std::min(tm_cfg.tm.top_k, ranking.size()); ++i) {
    auto j = rule_json(ranking[i].rule);
    j["rank"] = i + 1;
    j["c_raw"] = ranking[i].estimate.raw_length;
    j["c_compressed"] = ranking[i].estimate.compressed_length;
    top.push_back(std::move(j));
  }
  out.write_json("top.json", {{"steps", steps},
                              {"mode", to_string(tm_cfg.tm.mode)},
                              {"evaluated", ranking.size()},
                              {"compressor", compressor_json(comp)},
                              {"top", std::move(top)}});
  write_manifest(out, "tm-search", tm_cfg, comp);
  return out.files();
}

WrittenFiles cmd_sample(const SweepConfig& cfg) {
  cfg.validate();
  if (cfg.sample.size == 0) throw ConfigError("sample needs --sample-size >= 1");
  const auto machine = machine_for(cfg);
  std::vector<RuleSpec> rules;
  try {
    rules = sample_rule_space(machine.kind, machine.colors, machine.states, cfg.sample.size, cfg.sample.seed);
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }
  OutputDir out(cfg);
  out.write("sample.csv", rules_csv(rules));
  write_manifest(out, "sample", cfg, compressor_for(cfg));
  return out.files();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compression-based analysis of cellular automata and Turing machines", "ccl"};
  app.set_version_flag("--version", std::string(CCL_VERSION));
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  bool create = false;
  app.add_option("--config", config_path, "JSON sweep configuration");
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--seed", seed, "Sampling seed");
  app.add_option("--threads", threads, "Worker threads (default: config, then CCL_THREADS, then 1)");
  app.add_flag("--create", create, "Create the output directory if missing");

  std::string rules_arg, kind_arg, aggregate_arg, normalization_arg, mode_arg, compressor_arg;
  std::optional<int> colors, states;
  std::optional<std::size_t> steps, ic, clusters, sample_size, n, block_steps, blocks, profile_ics, top_k, budget,
      interesting_count, interesting_range;
  std::optional<double> threshold, spike_q;
  bool include_zero = false, normalize = false, exhaustive = false;

  auto add_machine = [&](CLI::App* sub) {
    sub->add_option("--kind", kind_arg, "Machine kind: ca or tm");
    sub->add_option("--colors", colors, "Number of colors k");
    sub->add_option("--states", states, "Number of TM states s");
    sub->add_option("--rules", rules_arg, "Comma-separated rule numbers, or 'all' for elementary CA");
    sub->add_option("--sample-size", sample_size, "Uniform sample of the rule space");
    sub->add_option("--compressor-config", compressor_arg, "Compressor key=value file");
  };
  auto* classify = app.add_subcommand("classify", "Rank rules by compressed length and cluster them");
  auto* transition = app.add_subcommand("transition", "Transition coefficients and interesting initial conditions");
  auto* profile = app.add_subcommand("profile", "Compressed-length profiles across initial conditions");
  auto* tm_search = app.add_subcommand("tm-search", "Rank Turing machines by state-reach complexity");
  auto* sample = app.add_subcommand("sample", "Sample rule numbers from a rule space");
  for (auto* sub : {classify, transition, profile, tm_search, sample}) {
    add_machine(sub);
    sub->fallthrough();
  }
  for (auto* sub : {classify, profile, tm_search}) sub->add_option("--steps", steps, "Evolution steps");
  classify->add_option("--ic", ic, "Initial condition number");
  classify->add_option("--clusters", clusters, "Number of clusters");
  transition->add_option("--n", n, "Initial conditions per exponent");
  transition->add_option("--block-steps", block_steps, "Steps per block");
  transition->add_option("--blocks", blocks, "Number of blocks (>= 2)");
  transition->add_option("--aggregate", aggregate_arg, "mean or max of |differences|");
  transition->add_option("--normalization", normalization_arg, "time or volume");
  transition->add_flag("--include-ic-zero", include_zero, "Start the IC segment at 0 instead of 1");
  transition->add_option("--threshold", threshold, "Phase-transition coefficient threshold");
  transition->add_option("--interesting-count", interesting_count, "Interesting ICs per rule");
  transition->add_option("--interesting-range", interesting_range, "IC numbers scanned for interesting ICs");
  for (auto* sub : {transition, profile}) {
    sub->add_option("--profile-ics", profile_ics, "Initial conditions in each profile");
    sub->add_flag("--normalize", normalize, "Divide profile lengths by t");
    sub->add_option("--spike-q", spike_q, "Spike threshold in robust standard deviations");
  }
  tm_search->add_option("--top-k", top_k, "Entries in top.json");
  tm_search->add_flag("--exhaustive", exhaustive, "Evaluate the whole rule space");
  tm_search->add_option("--budget", budget, "Largest rule space --exhaustive accepts");
  tm_search->add_option("--state-mode", mode_arg, "distinct (cumulative distinct states) or state");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    SweepConfig cfg = config_path.empty() ? SweepConfig{} : load_config(config_path);
    if (!kind_arg.empty()) {
      cfg.kind = parse_machine_kind(kind_arg);
      if (cfg.kind == MachineKind::TuringMachine) cfg.colors = 3, cfg.states = 2;
    }
    if (colors) cfg.colors = *colors;
    if (states) cfg.states = *states;
    if (!rules_arg.empty()) {
      cfg.rules.clear();
      if (rules_arg == "all") {
        if (cfg.kind != MachineKind::CellularAutomaton || cfg.colors != 2) {
          throw ConfigError("--rules all is only available for elementary CA");
        }
        cfg.rules = all_eca();
      } else {
        std::stringstream ss(rules_arg);
        std::string item;
        while (std::getline(ss, item, ',')) cfg.rules.push_back(parse_big(item));
      }
    }
    if (sample_size) cfg.sample.size = *sample_size;
    if (seed) cfg.sample.seed = *seed;
    if (!compressor_arg.empty()) cfg.compressor_config = compressor_arg;
    if (steps) cfg.steps = *steps;
    if (ic) cfg.initial_condition = *ic;
    if (clusters) cfg.clusters = *clusters;
    if (n) cfg.transition.ic_count = *n;
    if (block_steps) cfg.transition.block_steps = *block_steps;
    if (blocks) cfg.transition.blocks = *blocks;
    if (!aggregate_arg.empty()) cfg.transition.exponent.aggregate = parse_aggregate(aggregate_arg);
    if (!normalization_arg.empty()) cfg.transition.exponent.normalization = parse_normalization(normalization_arg);
    if (include_zero) cfg.transition.exponent.include_ic_zero = true;
    if (threshold) cfg.transition.phase_threshold = *threshold;
    if (interesting_count) cfg.interesting.count = *interesting_count;
    if (interesting_range) cfg.interesting.ic_range = *interesting_range;
    if (profile_ics) cfg.profile.ic_count = *profile_ics;
    if (normalize) cfg.profile.normalize = true;
    if (spike_q) cfg.profile.spike_q = *spike_q;
    if (top_k) cfg.tm.top_k = *top_k;
    if (exhaustive) cfg.tm.exhaustive = true;
    if (budget) cfg.tm.budget = *budget;
    if (!mode_arg.empty()) cfg.tm.mode = parse_state_mode(mode_arg);
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    if (create) cfg.create_output_dir = true;
    // Thread count: flag, then config file, then CCL_THREADS.
    std::optional<unsigned> requested = threads;
    if (!requested && !config_path.empty() && cfg.threads > 1) requested = cfg.threads;
    cfg.threads = resolve_thread_count(requested);

    WrittenFiles files;
    if (classify->parsed()) files = cmd_classify(cfg);
    else if (transition->parsed()) files = cmd_transition(cfg);
    else if (profile->parsed()) files = cmd_profile(cfg);
    else if (tm_search->parsed()) files = cmd_tm_search(cfg);
    else files = cmd_sample(cfg);
    for (const auto& f : files) out << (cfg.output_dir / f).generic_string() << '\n';
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "ccl: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    err << "ccl: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "ccl: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    err << "ccl: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "ccl: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace ccl::cli
