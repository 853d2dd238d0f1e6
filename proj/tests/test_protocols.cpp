#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "wsnsim/protocols.hpp"

using namespace wsnsim;

namespace {

Network grid_net(int n, double width = 100.0, double height = 100.0) {
  Network net = deploy(n, width, height, 0.5, 0.0, 0.0, std::uint64_t{11});
  return net;
}

}  // namespace

TEST_CASE("epoch length is ceil(1/p) with float-noise snapping") {
  CHECK(epoch_length(0.1) == 10);
  CHECK(epoch_length(0.2) == 5);
  CHECK(epoch_length(1.0 / 3.0) == 3);
  CHECK(epoch_length(0.15) == 7);  // 1/0.15 = 6.66..
  CHECK(epoch_length(1.0) == 1);
}

TEST_CASE("all candidates barred gives an empty head set") {
  Network net = grid_net(20);
  ElectionState state = ElectionState::for_network(net);
  std::fill(state.barred_until.begin(), state.barred_until.end(), 1000);
  Rng rng(1);
  ProtocolParams params;
  CHECK(elect_heads(net, params, state, rng).empty());
}

TEST_CASE("leach elects with probability p at an epoch start") {
  Network net = grid_net(100);
  ProtocolParams params;  // leach, p = 0.1
  Rng rng(2024);
  long long elected = 0;
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) {
    ElectionState state = ElectionState::for_network(net);  // r stays 0
    elected += static_cast<long long>(elect_heads(net, params, state, rng).size());
  }
  const double freq =
      static_cast<double>(elected) / (static_cast<double>(trials) * 100.0);
  CHECK(freq > 0.09);
  CHECK(freq < 0.11);
}

TEST_CASE("election is deterministic for an identical stream and state") {
  Network net = grid_net(50);
  ProtocolParams params;
  ElectionState s1 = ElectionState::for_network(net);
  ElectionState s2 = ElectionState::for_network(net);
  Rng r1(7);
  Rng r2(7);
  CHECK(elect_heads(net, params, s1, r1) == elect_heads(net, params, s2, r2));
}

TEST_CASE("a deec node without energy is never elected") {
  Network net = grid_net(10);
  net.nodes[4].energy = 0.0;
  // keep it formally alive so it stays a candidate
  ProtocolParams params{Protocol::deec, 0.1, 0.0, 0.0, 1000.0};
  Rng rng(5);
  for (int t = 0; t < 2000; ++t) {
    ElectionState state = ElectionState::for_network(net);
    const auto heads = elect_heads(net, params, state, rng);
    CHECK(std::find(heads.begin(), heads.end(), 4) == heads.end());
  }
}

TEST_CASE("sep class weights preserve the expected head count") {
  const double p = 0.1;
  for (double m : {0.1, 0.2, 0.5}) {
    for (double a : {0.5, 1.0, 3.0}) {
      const double p_nrm = p / (1.0 + a * m);
      const double p_adv = p * (1.0 + a) / (1.0 + a * m);
      const double combined = p_nrm * (1.0 - m) + p_adv * m;
      CHECK(std::abs(combined - p) / p < 1e-12);
    }
  }
}

TEST_CASE("sleeping and dead nodes are never heads") {
  Network net = grid_net(30);
  net.nodes[0].power_state = PowerState::asleep;
  net.nodes[1].alive = false;
  ProtocolParams params{Protocol::leach, 0.9, 0.0, 0.0, 0.0};  // almost certain
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    ElectionState state = ElectionState::for_network(net);
    for (int head : elect_heads(net, params, state, rng)) {
      CHECK(head != 0);
      CHECK(head != 1);
    }
  }
}

TEST_CASE("association maps everyone to the single head") {
  Network net = grid_net(10);
  const auto assignment = associate(net, {3});
  for (const Node& node : net.nodes) {
    if (node.id == 3) {
      CHECK(assignment.member_head[static_cast<std::size_t>(node.id)] == kNotMember);
    } else {
      CHECK(assignment.member_head[static_cast<std::size_t>(node.id)] == 3);
    }
  }
}

TEST_CASE("association falls back to the sink when no head exists") {
  Network net = grid_net(6);
  net.nodes[5].alive = false;
  const auto assignment = associate(net, {});
  for (const Node& node : net.nodes) {
    const int target = assignment.member_head[static_cast<std::size_t>(node.id)];
    if (node.id == 5) CHECK(target == kNotMember);
    else CHECK(target == kDirectToSink);
  }
}

TEST_CASE("equidistant members join the lower head id") {
  Network net = grid_net(8);
  net.nodes[3].pos = {20.0, 50.0};
  net.nodes[7].pos = {80.0, 50.0};
  net.nodes[0].pos = {50.0, 50.0};  // exactly between them
  const auto assignment = associate(net, {3, 7});
  CHECK(assignment.member_head[0] == 3);
}

TEST_CASE("association is distance-minimal and skips sleepers") {
  Network net = grid_net(40);
  net.nodes[11].power_state = PowerState::asleep;
  const std::vector<int> heads = {2, 9, 25};
  const auto assignment = associate(net, heads);
  CHECK(assignment.member_head[11] == kNotMember);
  for (const Node& node : net.nodes) {
    const int target = assignment.member_head[static_cast<std::size_t>(node.id)];
    if (target < 0) continue;
    const double chosen = distance(node.pos, net.nodes[static_cast<std::size_t>(target)].pos);
    for (int other : heads) {
      CHECK(chosen <= distance(node.pos, net.nodes[static_cast<std::size_t>(other)].pos));
    }
  }
}
