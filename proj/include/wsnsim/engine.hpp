#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wsnsim/ehorm.hpp"
#include "wsnsim/metrics.hpp"
#include "wsnsim/protocols.hpp"
#include "wsnsim/radio_model.hpp"
#include "wsnsim/rng.hpp"
#include "wsnsim/topology.hpp"

namespace wsnsim {

struct SimConfig {
  int n = 100;
  double width_m = 100.0;
  double height_m = 100.0;
  double e0_j = 0.5;  // per-node initial energy
  double p = 0.1;
  double hetero_m = 0.0;
  double hetero_a = 0.0;
  int packet_bits = 4000;
  Protocol protocol = Protocol::leach;
  bool ehorm_enabled = false;
  int ns_cap = 10;
  int max_rounds = 5000;
  std::uint64_t seed = 1;
  RadioParams radio{};

  EhormConfig ehorm_config() const {
    return EhormConfig{ehorm_enabled, ns_cap, packet_bits};
  }
  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct RoundRecord {
  int round = 0;  // 1-based round number in the series
  int alive = 0;
  int sleeping = 0;
  int heads = 0;
  std::optional<double> e_th_j;  // empty while the sleep mechanism is off
  double consumed_j = 0.0;       // actual residual decrease this round
  double residual_j = 0.0;
  SavingsRecord savings;
};

struct SimResult {
  std::vector<RoundRecord> series;
  std::optional<int> first_dead_round;  // FND, the stability boundary
  std::optional<int> half_dead_round;   // HND
  std::optional<int> all_dead_round;    // AND; empty when max_rounds hit
  SimConfig config;
  double deec_rounds_estimate = 0.0;  // R used by deec, 0 otherwise
};

// Per-node costs of one round of traffic under a fixed assignment; nothing
// is applied to the network. Members send one packet to their head (head
// pays reception per packet received), each transmitting head sends one
// aggregated packet to the sink, direct-to-sink nodes pay the plain
// transmit cost. With gate_e_th set, nodes below the threshold are silent
// and members of a silent head divert direct-to-sink.
std::vector<double> traffic_costs(const Network& net,
                                  const ClusterAssignment& assignment,
                                  const RadioParams& radio, int packet_bits,
                                  std::optional<double> gate_e_th);

// Deducts costs, clamping at zero: a deduction meeting or exceeding the
// residual completes the transmission, empties the node and marks it dead.
// Returns the total actually drained.
double apply_costs(Network& net, const std::vector<double>& costs);

// One simulation run. Owns the network, the election state, the sleep
// queue and the seeded stream; step() advances one round.
class Simulation {
 public:
  explicit Simulation(SimConfig cfg);

  bool done() const;
  RoundRecord step();  // pre: !done()
  SimResult run();     // drives to completion

  const Network& network() const { return net_; }
  // mutable access for scripted scenarios (injected energies, forced states)
  Network& network() { return net_; }
  const SleepQueue& sleep_queue() const { return queue_; }
  const ElectionState& election_state() const { return state_; }
  double deec_rounds_estimate() const { return deec_estimate_; }

 private:
  ProtocolParams protocol_params() const;
  double estimate_deec_rounds();

  SimConfig cfg_;
  Rng rng_;
  Network net_;
  ElectionState state_;
  SleepQueue queue_;
  double deec_estimate_ = 0.0;
};

SimResult run_simulation(const SimConfig& cfg);

// First 1-based round at which the dead fraction reaches k percent; empty
// if the series never gets there. k must lie in (0, 100].
std::optional<int> kdt(const std::vector<RoundRecord>& series, int population,
                       double k);

}  // namespace wsnsim
