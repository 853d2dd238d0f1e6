#pragma once

#include <deque>
#include <optional>

#include "wsnsim/radio_model.hpp"
#include "wsnsim/topology.hpp"

namespace wsnsim {

struct EhormConfig {
  bool enabled = false;
  int ns_cap = 10;         // maximum simultaneous sleepers
  int packet_bits = 4000;  // D in the threshold formula
};

struct SleepEntry {
  int node_id = -1;
  int round_entered = 0;
};

// FIFO of sleeping nodes, oldest first. Holds only alive nodes whose
// power_state is asleep; length stays <= ns_cap after every scheduling step.
struct SleepQueue {
  std::deque<SleepEntry> entries;

  int size() const { return static_cast<int>(entries.size()); }
  bool contains(int node_id) const;
};

// Threshold energy for this round: with d the distance from the farthest
// alive node to the sink, E_th = (e_elec + e_da) * D + e_mp * D * d^4.
// Empty when no node is alive.
std::optional<double> compute_threshold(const Network& net,
                                        const RadioParams& radio,
                                        int packet_bits);

// One scheduling pass, in this order:
//   1. dead nodes fall out of the queue;
//   2. while over the cap, the oldest sleeper wakes;
//   3. active alive nodes with energy < e_th go to sleep in ascending id
//      order until the cap is reached.
// A disabled config is a pass-through.
void schedule_sleep(Network& net, SleepQueue& queue, double e_th,
                    const EhormConfig& cfg, int round);

// True iff the node is active, alive and holds at least e_th.
bool transmit_gate(const Node& node, double e_th);

}  // namespace wsnsim
