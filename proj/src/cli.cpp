#include "wsnsim/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

#include "json.hpp"

namespace wsnsim {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

[[noreturn]] void fail(const std::string& key, const std::string& where,
                       const std::string& reason) {
  throw ConfigError("config: " + reason + " for key '" + key + "' " + where);
}

double parse_double(const std::string& key, const std::string& value,
                    const std::string& where) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) fail(key, where, "malformed number '" + value + "'");
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    fail(key, where, "malformed number '" + value + "'");
  }
}

long long parse_int(const std::string& key, const std::string& value,
                    const std::string& where) {
  long long v = 0;
  const auto* first = value.data();
  const auto* last = value.data() + value.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    fail(key, where, "malformed integer '" + value + "'");
  }
  return v;
}

std::uint64_t parse_uint(const std::string& key, const std::string& value,
                         const std::string& where) {
  std::uint64_t v = 0;
  const auto* first = value.data();
  const auto* last = value.data() + value.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    fail(key, where, "malformed unsigned integer '" + value + "'");
  }
  return v;
}

void apply_key(SimConfig& cfg, const std::string& key, const std::string& value,
               const std::string& where) {
  if (key == "n") {
    const long long v = parse_int(key, value, where);
    if (v < 1) fail(key, where, "value out of range (need >= 1)");
    cfg.n = static_cast<int>(v);
  } else if (key == "width_m") {
    const double v = parse_double(key, value, where);
    if (v <= 0) fail(key, where, "value out of range (need > 0)");
    cfg.width_m = v;
  } else if (key == "height_m") {
    const double v = parse_double(key, value, where);
    if (v <= 0) fail(key, where, "value out of range (need > 0)");
    cfg.height_m = v;
  } else if (key == "e0_j") {
    const double v = parse_double(key, value, where);
    if (v <= 0) fail(key, where, "value out of range (need > 0)");
    cfg.e0_j = v;
  } else if (key == "p") {
    const double v = parse_double(key, value, where);
    if (!(v > 0 && v < 1)) fail(key, where, "value out of range (need 0 < p < 1)");
    cfg.p = v;
  } else if (key == "hetero_m") {
    const double v = parse_double(key, value, where);
    if (v < 0 || v > 1) fail(key, where, "value out of range (need [0, 1])");
    cfg.hetero_m = v;
  } else if (key == "hetero_a") {
    const double v = parse_double(key, value, where);
    if (v < 0) fail(key, where, "value out of range (need >= 0)");
    cfg.hetero_a = v;
  } else if (key == "packet_bits") {
    const long long v = parse_int(key, value, where);
    if (v < 0) fail(key, where, "value out of range (need >= 0)");
    cfg.packet_bits = static_cast<int>(v);
  } else if (key == "protocol") {
    if (value == "leach") cfg.protocol = Protocol::leach;
    else if (value == "sep") cfg.protocol = Protocol::sep;
    else if (value == "deec") cfg.protocol = Protocol::deec;
    else fail(key, where, "unknown protocol '" + value + "' (leach|sep|deec)");
  } else if (key == "ehorm") {
    if (value == "on") cfg.ehorm_enabled = true;
    else if (value == "off") cfg.ehorm_enabled = false;
    else fail(key, where, "expected on|off, got '" + value + "'");
  } else if (key == "ns_cap") {
    const long long v = parse_int(key, value, where);
    if (v < 0) fail(key, where, "value out of range (need >= 0)");
    cfg.ns_cap = static_cast<int>(v);
  } else if (key == "max_rounds") {
    const long long v = parse_int(key, value, where);
    if (v < 1) fail(key, where, "value out of range (need >= 1)");
    cfg.max_rounds = static_cast<int>(v);
  } else if (key == "seed") {
    cfg.seed = parse_uint(key, value, where);
  } else {
    throw ConfigError("config: unknown key '" + key + "' " + where);
  }
}

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

json opt_round(const std::optional<int>& v) {
  if (v) return *v;
  return nullptr;
}

json config_json(const SimResult& result) {
  const SimConfig& cfg = result.config;
  json j;
  j["n"] = cfg.n;
  j["width_m"] = cfg.width_m;
  j["height_m"] = cfg.height_m;
  j["e0_j"] = cfg.e0_j;
  j["p"] = cfg.p;
  j["hetero_m"] = cfg.hetero_m;
  j["hetero_a"] = cfg.hetero_a;
  j["packet_bits"] = cfg.packet_bits;
  j["protocol"] = protocol_name(cfg.protocol);
  j["ehorm"] = cfg.ehorm_enabled ? "on" : "off";
  j["ns_cap"] = cfg.ns_cap;
  j["max_rounds"] = cfg.max_rounds;
  j["seed"] = cfg.seed;
  j["radio"] = {{"e_elec_j_per_bit", cfg.radio.e_elec},
                {"e_fs_j_per_bit_m2", cfg.radio.e_fs},
                {"e_mp_j_per_bit_m4", cfg.radio.e_mp},
                {"e_da_j_per_bit", cfg.radio.e_da},
                {"d0_m", cfg.radio.d0}};
  if (cfg.protocol == Protocol::deec) {
    j["deec_rounds_estimate"] = result.deec_rounds_estimate;
  }
  return j;
}

std::string summary_text(const SimResult& result) {
  json j;
  j["fnd"] = opt_round(result.first_dead_round);
  j["hnd"] = opt_round(result.half_dead_round);
  j["and"] = opt_round(result.all_dead_round);
  json table;
  for (double k : {10.0, 50.0, 100.0}) {
    table[fmt_double(k)] = opt_round(kdt(result.series, result.config.n, k));
  }
  j["kdt"] = table;
  j["rounds_simulated"] = result.series.size();
  double saved = 0.0;
  for (const RoundRecord& record : result.series) {
    saved += record.savings.e_save_total_j;
  }
  j["e_save_total_j"] = saved;
  j["seed"] = result.config.seed;
  j["config"] = config_json(result);
  return j.dump(2) + "\n";
}

std::string series_csv(const SimResult& result) {
  std::string out =
      "round,alive,sleeping,heads,e_th_joules,consumed_joules,residual_joules\n";
  for (const RoundRecord& r : result.series) {
    out += std::to_string(r.round);
    out += ',';
    out += std::to_string(r.alive);
    out += ',';
    out += std::to_string(r.sleeping);
    out += ',';
    out += std::to_string(r.heads);
    out += ',';
    if (r.e_th_j) out += fmt_double(*r.e_th_j);
    out += ',';
    out += fmt_double(r.consumed_j);
    out += ',';
    out += fmt_double(r.residual_j);
    out += '\n';
  }
  return out;
}

// Writes every (path, content) pair or removes whatever was created.
void write_files(
    const std::vector<std::pair<std::filesystem::path, std::string>>& files) {
  std::vector<std::filesystem::path> written;
  try {
    for (const auto& [path, content] : files) {
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      if (!out) throw IoError("io: cannot open '" + path.string() + "' for writing");
      written.push_back(path);
      out.write(content.data(), static_cast<std::streamsize>(content.size()));
      out.flush();
      if (!out) throw IoError("io: write failed for '" + path.string() + "'");
    }
  } catch (...) {
    std::error_code ec;
    for (const auto& path : written) std::filesystem::remove(path, ec);
    throw;
  }
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("io: cannot create directory '" + dir.string() + "'");
}

// Round number used for ordering statistics when a run never reached the
// mark: the run is censored at max_rounds.
double censored(const std::optional<int>& v, int max_rounds) {
  return v ? *v : max_rounds;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

json median_block(const std::vector<SimResult>& results) {
  std::vector<double> fnd;
  std::vector<double> hnd;
  std::vector<double> all;
  for (const SimResult& r : results) {
    const int cap = r.config.max_rounds;
    fnd.push_back(censored(r.first_dead_round, cap));
    hnd.push_back(censored(r.half_dead_round, cap));
    all.push_back(censored(r.all_dead_round, cap));
  }
  return json{{"fnd_median", median(fnd)},
              {"hnd_median", median(hnd)},
              {"and_median", median(all)},
              {"censored_at_max_rounds", true}};
}

}  // namespace

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    seeds.push_back(parse_uint("seeds", item, "(flag --seeds)"));
  }
  if (seeds.empty()) throw ConfigError("config: empty seed list for '--seeds'");
  return seeds;
}

RunSpec parse_config(const std::string& file_path,
                     const std::vector<KeyValue>& overrides) {
  RunSpec spec;

  if (!file_path.empty()) {
    std::ifstream in(file_path);
    if (!in) throw ConfigError("config: cannot read '" + file_path + "'");
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const std::string stripped = trim(line);
      if (stripped.empty() || stripped.front() == '#') continue;
      const auto eq = stripped.find('=');
      const std::string where =
          "(" + file_path + ":" + std::to_string(line_no) + ")";
      if (eq == std::string::npos) {
        throw ConfigError("config: expected key = value " + where);
      }
      const std::string key = trim(stripped.substr(0, eq));
      const std::string value = trim(stripped.substr(eq + 1));
      if (key.empty()) throw ConfigError("config: empty key " + where);
      apply_key(spec.config, key, value, where);
    }
  }

  for (const KeyValue& kv : overrides) {
    apply_key(spec.config, kv.key, kv.value, "(flag --" + kv.key + ")");
  }

  try {
    spec.config.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  spec.seeds = {spec.config.seed};
  return spec;
}

void emit_run(const SimResult& result, const std::filesystem::path& dir) {
  ensure_dir(dir);
  write_files({{dir / "alive.csv", series_csv(result)},
               {dir / "summary.json", summary_text(result)}});
}

void emit_comparison(const SimResult& baseline, const SimResult& variant,
                     const std::filesystem::path& dir) {
  ensure_dir(dir);
  emit_run(baseline, dir / "baseline");
  emit_run(variant, dir / "ehorm");

  const int cap = baseline.config.max_rounds;
  json delta;
  delta["fnd"] = {{"baseline", opt_round(baseline.first_dead_round)},
                  {"ehorm", opt_round(variant.first_dead_round)},
                  {"delta", censored(variant.first_dead_round, cap) -
                                censored(baseline.first_dead_round, cap)}};
  delta["and"] = {{"baseline", opt_round(baseline.all_dead_round)},
                  {"ehorm", opt_round(variant.all_dead_round)},
                  {"delta", censored(variant.all_dead_round, cap) -
                                censored(baseline.all_dead_round, cap)}};
  delta["max_rounds"] = cap;
  write_files({{dir / "delta.json", delta.dump(2) + "\n"}});
}

void execute(const RunSpec& spec) {
  const std::vector<std::uint64_t>& seeds =
      spec.seeds.empty() ? std::vector<std::uint64_t>{spec.config.seed}
                         : spec.seeds;

  const auto run_one = [&](std::uint64_t seed, const std::filesystem::path& dir,
                           std::vector<SimResult>& base_acc,
                           std::vector<SimResult>& ehorm_acc) {
    SimConfig cfg = spec.config;
    cfg.seed = seed;
    if (spec.compare) {
      SimConfig off = cfg;
      off.ehorm_enabled = false;
      SimConfig on = cfg;
      on.ehorm_enabled = true;
      SimResult baseline = run_simulation(off);
      SimResult variant = run_simulation(on);
      emit_comparison(baseline, variant, dir);
      base_acc.push_back(std::move(baseline));
      ehorm_acc.push_back(std::move(variant));
    } else {
      SimResult result = run_simulation(cfg);
      emit_run(result, dir);
      base_acc.push_back(std::move(result));
    }
  };

  std::vector<SimResult> base_results;
  std::vector<SimResult> ehorm_results;

  if (seeds.size() == 1) {
    run_one(seeds.front(), spec.out_dir, base_results, ehorm_results);
    return;
  }

  for (std::uint64_t seed : seeds) {
    run_one(seed, spec.out_dir / ("seed_" + std::to_string(seed)),
            base_results, ehorm_results);
  }

  json medians;
  medians["seeds"] = seeds;
  if (spec.compare) {
    medians["baseline"] = median_block(base_results);
    medians["ehorm"] = median_block(ehorm_results);
    medians["fnd_median_delta"] =
        medians["ehorm"]["fnd_median"].get<double>() -
        medians["baseline"]["fnd_median"].get<double>();
    medians["and_median_delta"] =
        medians["ehorm"]["and_median"].get<double>() -
        medians["baseline"]["and_median"].get<double>();
  } else {
    medians["runs"] = median_block(base_results);
  }
  ensure_dir(spec.out_dir);
  write_files({{spec.out_dir / "medians.json", medians.dump(2) + "\n"}});
}

}  // namespace wsnsim
