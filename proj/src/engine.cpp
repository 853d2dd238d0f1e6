#include "wsnsim/engine.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace wsnsim {

void SimConfig::validate() const {
  if (n < 1) throw std::invalid_argument("config: n must be >= 1");
  if (width_m <= 0) throw std::invalid_argument("config: width_m must be > 0");
  if (height_m <= 0) throw std::invalid_argument("config: height_m must be > 0");
  if (e0_j <= 0) throw std::invalid_argument("config: e0_j must be > 0");
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("config: p must lie in (0, 1)");
  }
  if (hetero_m < 0 || hetero_m > 1) {
    throw std::invalid_argument("config: hetero_m must lie in [0, 1]");
  }
  if (hetero_a < 0) throw std::invalid_argument("config: hetero_a must be >= 0");
  if (packet_bits < 0) {
    throw std::invalid_argument("config: packet_bits must be >= 0");
  }
  if (ns_cap < 0) throw std::invalid_argument("config: ns_cap must be >= 0");
  if (max_rounds < 1) {
    throw std::invalid_argument("config: max_rounds must be >= 1");
  }
  radio.validate();
}

std::vector<double> traffic_costs(const Network& net,
                                  const ClusterAssignment& assignment,
                                  const RadioParams& radio, int packet_bits,
                                  std::optional<double> gate_e_th) {
  const double bits = packet_bits;
  std::vector<double> costs(net.nodes.size(), 0.0);

  const auto may_transmit = [&](const Node& node) {
    return !gate_e_th || transmit_gate(node, *gate_e_th);
  };

  // heads below the gate are silent this round: they forward nothing,
  // receive nothing and their members divert to the sink
  std::vector<char> head_transmits(net.nodes.size(), 0);
  for (int head : assignment.heads) {
    const Node& node = net.nodes[static_cast<std::size_t>(head)];
    head_transmits[static_cast<std::size_t>(head)] =
        node.is_active_alive() && may_transmit(node);
  }

  for (const Node& node : net.nodes) {
    if (!node.is_active_alive() || assignment.is_head(node.id)) continue;
    if (!may_transmit(node)) continue;
    const int head = assignment.member_head[static_cast<std::size_t>(node.id)];
    if (head >= 0 && head_transmits[static_cast<std::size_t>(head)]) {
      const double d =
          distance(node.pos, net.nodes[static_cast<std::size_t>(head)].pos);
      costs[static_cast<std::size_t>(node.id)] += tx_energy(bits, d, radio);
      costs[static_cast<std::size_t>(head)] += rx_energy(bits, radio);
    } else {
      costs[static_cast<std::size_t>(node.id)] +=
          tx_energy(bits, distance(node.pos, net.sink), radio);
    }
  }

  for (int head : assignment.heads) {
    if (!head_transmits[static_cast<std::size_t>(head)]) continue;
    const Node& node = net.nodes[static_cast<std::size_t>(head)];
    costs[static_cast<std::size_t>(head)] +=
        ch_tx_energy(bits, distance(node.pos, net.sink), radio);
  }
  return costs;
}

double apply_costs(Network& net, const std::vector<double>& costs) {
  double consumed = 0.0;
  for (Node& node : net.nodes) {
    const double cost = costs[static_cast<std::size_t>(node.id)];
    if (cost <= 0.0) continue;
    if (cost >= node.energy) {
      // the transmission completes on whatever charge is left
      consumed += node.energy;
      node.energy = 0.0;
      node.alive = false;
      node.power_state = PowerState::active;  // the dead are never asleep
      node.asleep_since_round = -1;
    } else {
      node.energy -= cost;
      consumed += cost;
    }
  }
  return consumed;
}

Simulation::Simulation(SimConfig cfg) : cfg_(std::move(cfg)), rng_(cfg_.seed) {
  cfg_.validate();
  net_ = deploy(cfg_.n, cfg_.width_m, cfg_.height_m, cfg_.e0_j, cfg_.hetero_m,
                cfg_.hetero_a, rng_);
  state_ = ElectionState::for_network(net_);
  if (cfg_.protocol == Protocol::deec) {
    deec_estimate_ = estimate_deec_rounds();
  }
}

// Lifetime estimate R for deec's decaying average-energy schedule: total
// initial energy over the expenditure of one uniform-probability round at
// full population, measured on a scratch copy with a forked stream.
double Simulation::estimate_deec_rounds() {
  Network scratch = net_;
  ElectionState scratch_state = ElectionState::for_network(scratch);
  Rng scratch_rng = rng_.fork(0x64656563ULL);
  ProtocolParams uniform{Protocol::leach, cfg_.p, 0.0, 0.0, 0.0};
  const auto heads = elect_heads(scratch, uniform, scratch_state, scratch_rng);
  const auto assignment = associate(scratch, heads);
  const auto costs =
      traffic_costs(scratch, assignment, cfg_.radio, cfg_.packet_bits,
                    std::nullopt);
  const double per_round = apply_costs(scratch, costs);
  if (per_round <= 0.0) return cfg_.max_rounds;
  return std::max(1.0, net_.initial_energy_total() / per_round);
}

ProtocolParams Simulation::protocol_params() const {
  return ProtocolParams{cfg_.protocol, cfg_.p, cfg_.hetero_m, cfg_.hetero_a,
                        deec_estimate_};
}

bool Simulation::done() const {
  return net_.round >= cfg_.max_rounds || net_.alive_count() == 0;
}

RoundRecord Simulation::step() {
  const int round = net_.round;

  std::optional<double> e_th;
  if (cfg_.ehorm_enabled) {
    e_th = compute_threshold(net_, cfg_.radio, cfg_.packet_bits);
    if (e_th) schedule_sleep(net_, queue_, *e_th, cfg_.ehorm_config(), round);
  }

  const ProtocolParams params = protocol_params();
  const auto heads = elect_heads(net_, params, state_, rng_);
  const auto assignment = associate(net_, heads);
  const auto costs = traffic_costs(net_, assignment, cfg_.radio,
                                   cfg_.packet_bits,
                                   cfg_.ehorm_enabled ? e_th : std::nullopt);
  const double consumed = apply_costs(net_, costs);

  RoundRecord record;
  record.round = round + 1;
  record.alive = net_.alive_count();
  record.sleeping = net_.sleeping_count();
  record.heads = static_cast<int>(heads.size());
  record.e_th_j = e_th;
  record.consumed_j = consumed;
  record.residual_j = net_.residual_energy();
  record.savings = sleep_savings(net_, heads, cfg_.radio, cfg_.packet_bits);

  net_.round = round + 1;
  return record;
}

SimResult Simulation::run() {
  SimResult result;
  result.config = cfg_;
  result.deec_rounds_estimate = deec_estimate_;
  while (!done()) {
    result.series.push_back(step());
  }
  for (const RoundRecord& record : result.series) {
    if (!result.first_dead_round && record.alive < cfg_.n) {
      result.first_dead_round = record.round;
    }
  }
  result.half_dead_round = kdt(result.series, cfg_.n, 50.0);
  result.all_dead_round = kdt(result.series, cfg_.n, 100.0);
  return result;
}

SimResult run_simulation(const SimConfig& cfg) { return Simulation(cfg).run(); }

std::optional<int> kdt(const std::vector<RoundRecord>& series, int population,
                       double k) {
  if (!(k > 0.0) || k > 100.0) {
    throw std::invalid_argument("kdt: k must lie in (0, 100]");
  }
  for (const RoundRecord& record : series) {
    const double dead_fraction =
        static_cast<double>(population - record.alive) / population;
    if (dead_fraction >= k / 100.0) return record.round;
  }
  return std::nullopt;
}

}  // namespace wsnsim
