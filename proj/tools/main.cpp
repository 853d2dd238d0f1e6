#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wsnsim/cli.hpp"

namespace {

struct Flag {
  const char* key;
  const char* names;
  const char* help;
};

// Flags mirror the config-file keys; the hyphenated spellings are aliases.
constexpr Flag kConfigFlags[] = {
    {"n", "--n", "number of nodes"},
    {"width_m", "--width_m,--width-m", "field width in meters"},
    {"height_m", "--height_m,--height-m", "field height in meters"},
    {"e0_j", "--e0_j,--e0-j", "per-node initial energy in joules"},
    {"p", "--p", "cluster-head probability"},
    {"hetero_m", "--hetero_m,--hetero-m", "advanced-node fraction"},
    {"hetero_a", "--hetero_a,--hetero-a", "advanced extra-energy factor"},
    {"packet_bits", "--packet_bits,--packet-bits", "packet length in bits"},
    {"protocol", "--protocol", "leach|sep|deec"},
    {"ehorm", "--ehorm", "sleep/awake mechanism: on|off"},
    {"ns_cap", "--ns_cap,--ns-cap", "maximum simultaneous sleepers"},
    {"max_rounds", "--max_rounds,--max-rounds", "round limit"},
    {"seed", "--seed", "rng seed"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Round-based cluster WSN simulator (leach/sep/deec with an "
               "optional threshold-driven sleep/awake mechanism)"};

  std::string config_path;
  std::string out_dir = "out";
  std::string seeds_text;
  bool compare = false;

  app.add_option("-c,--config", config_path, "key = value config file");
  app.add_option("-o,--out", out_dir, "output directory");
  app.add_flag("--compare", compare,
               "run baseline and sleep-enabled variants under the same seed");
  app.add_option("--seeds", seeds_text,
                 "comma-separated seed list for an ensemble");

  std::vector<std::string> values(std::size(kConfigFlags));
  std::vector<CLI::Option*> options(std::size(kConfigFlags));
  for (std::size_t i = 0; i < std::size(kConfigFlags); ++i) {
    options[i] =
        app.add_option(kConfigFlags[i].names, values[i], kConfigFlags[i].help);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<wsnsim::KeyValue> overrides;
    for (std::size_t i = 0; i < std::size(kConfigFlags); ++i) {
      if (options[i]->count() > 0) {
        overrides.push_back({kConfigFlags[i].key, values[i]});
      }
    }
    wsnsim::RunSpec spec = wsnsim::parse_config(config_path, overrides);
    spec.out_dir = out_dir;
    spec.compare = compare;
    if (!seeds_text.empty()) spec.seeds = wsnsim::parse_seed_list(seeds_text);
    wsnsim::execute(spec);
    std::cout << "wrote " << spec.out_dir.string() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
