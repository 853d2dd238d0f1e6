#include "wsnsim/topology.hpp"

#include <cmath>
#include <stdexcept>

namespace wsnsim {

double distance(const Position& a, const Position& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

int Network::alive_count() const {
  int count = 0;
  for (const Node& node : nodes) {
    if (node.alive) ++count;
  }
  return count;
}

int Network::sleeping_count() const {
  int count = 0;
  for (const Node& node : nodes) {
    if (node.is_asleep()) ++count;
  }
  return count;
}

double Network::residual_energy() const {
  double total = 0.0;
  for (const Node& node : nodes) total += node.energy;
  return total;
}

double Network::initial_energy_total() const {
  double total = 0.0;
  for (const Node& node : nodes) total += node.initial_energy;
  return total;
}

Network deploy(int n, double width, double height, double e0, double hetero_m,
               double hetero_a, Rng& rng) {
  if (n < 1) throw std::invalid_argument("deploy: n must be >= 1");
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("deploy: field dimensions must be > 0");
  }
  if (e0 <= 0) throw std::invalid_argument("deploy: e0 must be > 0");
  if (hetero_m < 0 || hetero_m > 1) {
    throw std::invalid_argument("deploy: hetero_m must be in [0, 1]");
  }
  if (hetero_a < 0) throw std::invalid_argument("deploy: hetero_a must be >= 0");

  Network net;
  net.width = width;
  net.height = height;
  net.sink = Position{width / 2.0, height / 2.0};
  net.nodes.resize(static_cast<std::size_t>(n));

  // floor(m*n), snapping away float noise on products like 0.3 * 100
  const int advanced = static_cast<int>(std::floor(hetero_m * n + 1e-9));

  for (int i = 0; i < n; ++i) {
    Node& node = net.nodes[static_cast<std::size_t>(i)];
    node.id = i;
    node.pos.x = rng.uniform(width);
    node.pos.y = rng.uniform(height);
    node.node_class = i < advanced ? NodeClass::advanced : NodeClass::normal;
    node.initial_energy =
        node.node_class == NodeClass::advanced ? e0 * (1.0 + hetero_a) : e0;
    node.energy = node.initial_energy;
  }
  return net;
}

Network deploy(int n, double width, double height, double e0, double hetero_m,
               double hetero_a, std::uint64_t seed) {
  Rng rng(seed);
  return deploy(n, width, height, e0, hetero_m, hetero_a, rng);
}

std::optional<FarthestNode> max_distance_alive(const Network& net) {
  std::optional<FarthestNode> best;
  for (const Node& node : net.nodes) {
    if (!node.alive) continue;
    const double d = distance(node.pos, net.sink);
    // strictly-greater keeps the lowest id on ties
    if (!best || d > best->dist) best = FarthestNode{node.id, d};
  }
  return best;
}

}  // namespace wsnsim
