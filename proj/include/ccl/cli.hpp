#pragma once

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccl/automaton.hpp"
#include "ccl/complexity.hpp"
#include "ccl/transition.hpp"

namespace ccl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

/// Invalid configuration or arguments; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Output could not be written; maps to exit code 3.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SampleSpec {
  std::size_t size = 0;  // 0: no sampling
  std::uint64_t seed = 1;
};

struct ProfileSettings {
  std::size_t ic_count = 21;
  std::size_t steps = 150;
  bool normalize = false;
  double spike_q = 3.0;
};

struct InterestingSettings {
  std::size_t count = 10;
  std::size_t ic_range = 30;
};

struct TmSearchSettings {
  std::size_t top_k = 20;
  bool exhaustive = false;
  std::size_t budget = 1'000'000;
  StateSequenceMode mode = StateSequenceMode::DistinctCount;
};

/// Everything a run needs. Loaded from a JSON file (--config) and then
/// overridden by command-line flags.
struct SweepConfig {
  MachineKind kind = MachineKind::CellularAutomaton;
  int colors = 2;
  int states = 1;
  std::vector<BigUint> rules;  // explicit rule numbers; empty means the command's default set
  SampleSpec sample;
  std::optional<std::size_t> steps;  // command default when unset
  std::uint64_t initial_condition = 0;
  std::size_t clusters = 2;
  TransitionParams transition;
  std::size_t transition_clusters = 2;
  ProfileSettings profile;
  InterestingSettings interesting;
  TmSearchSettings tm;
  std::optional<std::filesystem::path> compressor_config;
  std::filesystem::path output_dir = "ccl-out";
  bool create_output_dir = false;
  unsigned threads = 1;

  /// Throws ConfigError when a value is outside the range its command accepts.
  void validate() const;
};

SweepConfig config_from_json(const nlohmann::json& j);
SweepConfig load_config(const std::filesystem::path& path);

/// Resolved configuration as recorded in manifest.json (thread count is
/// omitted since outputs do not depend on it).
nlohmann::json config_to_json(const SweepConfig& cfg);

/// Files written by one command, relative to the output directory.
using WrittenFiles = std::vector<std::string>;

WrittenFiles cmd_classify(const SweepConfig& cfg);
WrittenFiles cmd_transition(const SweepConfig& cfg);
WrittenFiles cmd_profile(const SweepConfig& cfg);
WrittenFiles cmd_tm_search(const SweepConfig& cfg);
WrittenFiles cmd_sample(const SweepConfig& cfg);

/// Entry point behind the `ccl` executable. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ccl::cli
