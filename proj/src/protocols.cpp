#include "wsnsim/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wsnsim {

const char* protocol_name(Protocol p) {
  switch (p) {
    case Protocol::leach: return "leach";
    case Protocol::sep: return "sep";
    case Protocol::deec: return "deec";
  }
  return "unknown";
}

ElectionState ElectionState::for_network(const Network& net) {
  ElectionState state;
  state.barred_until.assign(net.nodes.size(), 0);
  state.total_initial_energy = net.initial_energy_total();
  state.population = static_cast<int>(net.nodes.size());
  return state;
}

int epoch_length(double p) {
  const double inv = 1.0 / p;
  const double nearest = std::round(inv);
  double len = std::abs(inv - nearest) < 1e-9 ? nearest : std::ceil(inv);
  len = std::clamp(len, 1.0, 1e9);
  return static_cast<int>(len);
}

namespace {

// Per-node election probability for this round.
double node_probability(const Node& node, const ProtocolParams& params,
                        const ElectionState& state, int round) {
  switch (params.kind) {
    case Protocol::leach:
      return params.p;
    case Protocol::sep: {
      const double denom = 1.0 + params.hetero_a * params.hetero_m;
      return node.node_class == NodeClass::advanced
                 ? params.p * (1.0 + params.hetero_a) / denom
                 : params.p / denom;
    }
    case Protocol::deec: {
      const double avg0 = state.total_initial_energy / state.population;
      double estimate = avg0;
      if (params.deec_rounds > 0) {
        estimate = avg0 * (1.0 - round / params.deec_rounds);
      }
      if (estimate <= 0.0) {
        // lifetime estimate exhausted; whatever energy remains competes
        return node.energy > 0.0 ? 1.0 : 0.0;
      }
      return std::min(params.p * node.energy / estimate, 1.0);
    }
  }
  return 0.0;
}

}  // namespace

std::vector<int> elect_heads(const Network& net, const ProtocolParams& params,
                             ElectionState& state, Rng& rng) {
  std::vector<int> heads;
  const int round = net.round;
  for (const Node& node : net.nodes) {
    if (!node.is_active_alive()) continue;
    const double u = rng.uniform01();  // every candidate consumes one draw
    if (round < state.barred_until[static_cast<std::size_t>(node.id)]) continue;
    const double p_i = node_probability(node, params, state, round);
    if (p_i <= 0.0) continue;
    const int epoch = epoch_length(p_i);
    const double threshold = p_i / (1.0 - p_i * (round % epoch));
    if (u < threshold) {
      heads.push_back(node.id);
      state.barred_until[static_cast<std::size_t>(node.id)] = round + epoch;
    }
  }
  return heads;
}

bool ClusterAssignment::is_head(int id) const {
  return std::binary_search(heads.begin(), heads.end(), id);
}

ClusterAssignment associate(const Network& net, const std::vector<int>& heads) {
  ClusterAssignment assignment;
  assignment.heads = heads;
  std::sort(assignment.heads.begin(), assignment.heads.end());
  assignment.member_head.assign(net.nodes.size(), kNotMember);

  for (const Node& node : net.nodes) {
    if (!node.is_active_alive() || assignment.is_head(node.id)) continue;
    if (assignment.heads.empty()) {
      assignment.member_head[static_cast<std::size_t>(node.id)] = kDirectToSink;
      continue;
    }
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int head : assignment.heads) {  // ascending: ties keep the lower id
      const double d = distance(node.pos, net.nodes[static_cast<std::size_t>(head)].pos);
      if (d < best_d) {
        best_d = d;
        best = head;
      }
    }
    assignment.member_head[static_cast<std::size_t>(node.id)] = best;
  }
  return assignment;
}

}  // namespace wsnsim
