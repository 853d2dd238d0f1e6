#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wsnsim/rng.hpp"

namespace wsnsim {

struct Position {
  double x = 0.0;
  double y = 0.0;
};

// Euclidean distance.
double distance(const Position& a, const Position& b);

enum class NodeClass { normal, advanced };
enum class PowerState { active, asleep };

struct Node {
  int id = 0;
  Position pos;
  double energy = 0.0;          // residual, J
  double initial_energy = 0.0;  // J
  NodeClass node_class = NodeClass::normal;
  PowerState power_state = PowerState::active;
  int asleep_since_round = -1;  // -1 while active; dead nodes are never asleep
  bool alive = true;

  bool is_active_alive() const {
    return alive && power_state == PowerState::active;
  }
  bool is_asleep() const { return alive && power_state == PowerState::asleep; }
};

struct Network {
  double width = 0.0;   // m
  double height = 0.0;  // m
  Position sink;        // energy-unlimited collection point
  std::vector<Node> nodes;
  int round = 0;  // 0-based index of the round about to execute

  int alive_count() const;
  int sleeping_count() const;
  double residual_energy() const;
  double initial_energy_total() const;
};

// Deploys n nodes at i.i.d. uniform positions, sink at the field centre.
// The lowest floor(hetero_m * n) ids become advanced nodes carrying
// (1 + hetero_a) * e0; everyone else starts with e0. Draw order is two
// uniforms (x then y) per node in id order.
Network deploy(int n, double width, double height, double e0, double hetero_m,
               double hetero_a, Rng& rng);
Network deploy(int n, double width, double height, double e0, double hetero_m,
               double hetero_a, std::uint64_t seed);

struct FarthestNode {
  int node_id = -1;
  double dist = 0.0;
};

// Farthest alive node (sleepers included) from the sink; ties go to the
// lowest id. Empty when nothing is alive.
std::optional<FarthestNode> max_distance_alive(const Network& net);

}  // namespace wsnsim
