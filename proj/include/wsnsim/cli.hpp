#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsnsim/engine.hpp"

namespace wsnsim {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KeyValue {
  std::string key;
  std::string value;
};

struct RunSpec {
  SimConfig config;
  std::filesystem::path out_dir = "out";
  bool compare = false;               // baseline vs sleep-enabled, same seed
  std::vector<std::uint64_t> seeds;   // resolved to at least {config.seed}
};

// Resolves defaults -> config file -> flag overrides, rejecting unknown
// keys and out-of-range values with the key name and source line.
// Recognised keys: n, width_m, height_m, e0_j, p, hetero_m, hetero_a,
// packet_bits, protocol {leach|sep|deec}, ehorm {on|off}, ns_cap,
// max_rounds, seed.
RunSpec parse_config(const std::string& file_path,
                     const std::vector<KeyValue>& overrides);

// Comma-separated unsigned list, e.g. "1,2,3".
std::vector<std::uint64_t> parse_seed_list(const std::string& text);

// Writes alive.csv and summary.json into dir. Partial files are removed
// when a write fails.
void emit_run(const SimResult& result, const std::filesystem::path& dir);

// Writes baseline/ and ehorm/ subdirectories plus delta.json.
void emit_comparison(const SimResult& baseline, const SimResult& variant,
                     const std::filesystem::path& dir);

// Executes the whole spec: single run, same-seed comparison, or an
// ensemble with one subdirectory per seed plus a medians.json.
void execute(const RunSpec& spec);

}  // namespace wsnsim
