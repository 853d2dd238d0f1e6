#include "wsnsim/ehorm.hpp"

#include <algorithm>

namespace wsnsim {

bool SleepQueue::contains(int node_id) const {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const SleepEntry& e) { return e.node_id == node_id; });
}

std::optional<double> compute_threshold(const Network& net,
                                        const RadioParams& radio,
                                        int packet_bits) {
  const auto farthest = max_distance_alive(net);
  if (!farthest) return std::nullopt;
  const double bits = packet_bits;
  const double d = farthest->dist;
  return (radio.e_elec + radio.e_da) * bits +
         radio.e_mp * bits * (d * d) * (d * d);
}

void schedule_sleep(Network& net, SleepQueue& queue, double e_th,
                    const EhormConfig& cfg, int round) {
  if (!cfg.enabled) return;

  std::erase_if(queue.entries, [&](const SleepEntry& e) {
    return !net.nodes[static_cast<std::size_t>(e.node_id)].alive;
  });

  // oldest sleepers wake while the queue exceeds the cap
  while (queue.size() > cfg.ns_cap) {
    const SleepEntry entry = queue.entries.front();
    queue.entries.pop_front();
    Node& node = net.nodes[static_cast<std::size_t>(entry.node_id)];
    node.power_state = PowerState::active;
    node.asleep_since_round = -1;
  }

  // below-threshold actives sleep, ascending id, until the cap is reached
  for (Node& node : net.nodes) {
    if (queue.size() >= cfg.ns_cap) break;
    if (!node.is_active_alive() || node.energy >= e_th) continue;
    node.power_state = PowerState::asleep;
    node.asleep_since_round = round;
    queue.entries.push_back(SleepEntry{node.id, round});
  }
}

bool transmit_gate(const Node& node, double e_th) {
  return node.alive && node.power_state == PowerState::active &&
         node.energy >= e_th;
}

}  // namespace wsnsim
