#pragma once

#include <vector>

#include "wsnsim/protocols.hpp"
#include "wsnsim/radio_model.hpp"
#include "wsnsim/topology.hpp"

namespace wsnsim {

struct ClusterEnergy {
  int head_id = -1;
  double total_j = 0.0;    // head consumption plus its members'
  double average_j = 0.0;  // total / (member count + 1)
  int member_count = 0;
};

// Per-cluster energy totals from this round's consumption ledger
// (consumed[id] = joules node id spent this round). One entry per head,
// ascending; empty when no heads were elected.
std::vector<ClusterEnergy> cluster_energy(const ClusterAssignment& assignment,
                                          const std::vector<double>& consumed);

struct SleeperSaving {
  int node_id = -1;
  double saving_j = 0.0;
};

struct SavingsRecord {
  std::vector<SleeperSaving> per_sleeper;
  double e_save_total_j = 0.0;    // sum over sleepers
  double e_save_average_j = 0.0;  // total / population
};

// Counterfactual energy each sleeper would have spent this round had it
// been active and ungated: the member-role transmission to the nearest
// elected head, or straight to the sink when no head exists. (The head-role
// counterfactual with zero members collapses to ch_tx_energy.)
SavingsRecord sleep_savings(const Network& net, const std::vector<int>& heads,
                            const RadioParams& radio, int packet_bits);

}  // namespace wsnsim
