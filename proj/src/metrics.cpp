#include "wsnsim/metrics.hpp"

#include <limits>
#include <unordered_map>

namespace wsnsim {

std::vector<ClusterEnergy> cluster_energy(const ClusterAssignment& assignment,
                                          const std::vector<double>& consumed) {
  std::vector<ClusterEnergy> clusters;
  clusters.reserve(assignment.heads.size());
  std::unordered_map<int, std::size_t> index;
  for (int head : assignment.heads) {
    index.emplace(head, clusters.size());
    clusters.push_back(
        ClusterEnergy{head, consumed[static_cast<std::size_t>(head)], 0.0, 0});
  }
  for (std::size_t id = 0; id < assignment.member_head.size(); ++id) {
    const int head = assignment.member_head[id];
    if (head < 0) continue;
    ClusterEnergy& cluster = clusters[index.at(head)];
    cluster.total_j += consumed[id];
    cluster.member_count += 1;
  }
  for (ClusterEnergy& cluster : clusters) {
    cluster.average_j = cluster.total_j / (cluster.member_count + 1);
  }
  return clusters;
}

SavingsRecord sleep_savings(const Network& net, const std::vector<int>& heads,
                            const RadioParams& radio, int packet_bits) {
  SavingsRecord record;
  const double bits = packet_bits;
  for (const Node& node : net.nodes) {
    if (!node.is_asleep()) continue;
    double d;
    if (heads.empty()) {
      d = distance(node.pos, net.sink);
    } else {
      d = std::numeric_limits<double>::infinity();
      for (int head : heads) {
        d = std::min(d, distance(node.pos, net.nodes[static_cast<std::size_t>(head)].pos));
      }
    }
    const double saving = tx_energy(bits, d, radio);
    record.per_sleeper.push_back(SleeperSaving{node.id, saving});
    record.e_save_total_j += saving;
  }
  record.e_save_average_j =
      net.nodes.empty() ? 0.0
                        : record.e_save_total_j /
                              static_cast<double>(net.nodes.size());
  return record;
}

}  // namespace wsnsim
