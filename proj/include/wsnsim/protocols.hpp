#pragma once

#include <vector>

#include "wsnsim/rng.hpp"
#include "wsnsim/topology.hpp"

namespace wsnsim {

enum class Protocol { leach, sep, deec };

const char* protocol_name(Protocol p);

struct ProtocolParams {
  Protocol kind = Protocol::leach;
  double p = 0.1;            // desired cluster-head fraction, 0 < p < 1
  double hetero_m = 0.0;     // advanced-node fraction (sep/deec weighting)
  double hetero_a = 0.0;     // advanced extra-energy factor
  double deec_rounds = 0.0;  // deec lifetime estimate R for the decaying
                             // average-energy schedule; <= 0 disables decay
};

// Rotating-epoch election bookkeeping. A node elected at round r with
// per-node probability p_i is barred from candidacy until r + ceil(1/p_i).
struct ElectionState {
  std::vector<int> barred_until;  // node id -> first eligible round again
  double total_initial_energy = 0.0;
  int population = 0;

  static ElectionState for_network(const Network& net);
};

// ceil(1/p), snapping away float noise when 1/p is within 1e-9 of an integer.
int epoch_length(double p);

// Per-round head election over the active alive population. Every candidate
// consumes exactly one uniform draw (barred ones included) so that streams
// stay aligned across configurations; a draw below the node's rotating
// threshold elects it. LEACH uses p uniformly; SEP reweights by node class;
// DEEC scales p by residual energy over the estimated network average
// (total_initial/population) * (1 - r/R).
std::vector<int> elect_heads(const Network& net, const ProtocolParams& params,
                             ElectionState& state, Rng& rng);

inline constexpr int kDirectToSink = -1;
inline constexpr int kNotMember = -2;

struct ClusterAssignment {
  std::vector<int> heads;  // ascending ids
  // node id -> head id, kDirectToSink (no head elected), or kNotMember
  // (heads themselves, sleeping and dead nodes).
  std::vector<int> member_head;

  bool is_head(int id) const;
};

// Minimum-distance association: every active alive non-head joins the
// closest head (ties to the lower head id); with no heads at all, everyone
// is marked direct-to-sink.
ClusterAssignment associate(const Network& net, const std::vector<int>& heads);

}  // namespace wsnsim
