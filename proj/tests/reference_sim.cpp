#include "reference_sim.hpp"

#include <cmath>
#include <limits>

namespace refsim {

namespace {

struct RefNode {
  double x = 0, y = 0;
  double energy = 0;
  bool advanced = false;
  bool alive = true;
};

int ceil_inverse(double p) {
  const double inv = 1.0 / p;
  const double nearest = std::round(inv);
  double len = std::abs(inv - nearest) < 1e-9 ? nearest : std::ceil(inv);
  if (len < 1.0) len = 1.0;
  if (len > 1e9) len = 1e9;
  return static_cast<int>(len);
}

double dist(double ax, double ay, double bx, double by) {
  const double dx = ax - bx;
  const double dy = ay - by;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

std::vector<RoundState> run(const wsnsim::SimConfig& cfg, double deec_rounds) {
  const int n = cfg.n;
  const double bits = cfg.packet_bits;
  const double e_elec = cfg.radio.e_elec;
  const double e_fs = cfg.radio.e_fs;
  const double e_mp = cfg.radio.e_mp;
  const double e_da = cfg.radio.e_da;
  const double d0 = cfg.radio.d0;
  const double sink_x = cfg.width_m / 2.0;
  const double sink_y = cfg.height_m / 2.0;

  const auto tx = [&](double d) {
    if (d < d0) return bits * e_elec + bits * e_fs * (d * d);
    return bits * e_elec + bits * e_mp * (d * d) * (d * d);
  };

  wsnsim::Rng rng(cfg.seed);
  std::vector<RefNode> nodes(static_cast<std::size_t>(n));
  const int advanced = static_cast<int>(std::floor(cfg.hetero_m * n + 1e-9));
  for (int i = 0; i < n; ++i) {
    RefNode& nd = nodes[static_cast<std::size_t>(i)];
    nd.x = rng.uniform01() * cfg.width_m;
    nd.y = rng.uniform01() * cfg.height_m;
    nd.advanced = i < advanced;
    nd.energy = nd.advanced ? cfg.e0_j * (1.0 + cfg.hetero_a) : cfg.e0_j;
  }

  double total_initial = 0.0;
  for (const RefNode& nd : nodes) total_initial += nd.energy;
  const double avg0 = total_initial / n;

  std::vector<int> barred_until(static_cast<std::size_t>(n), 0);
  std::vector<RoundState> series;

  for (int r = 0; r < cfg.max_rounds; ++r) {
    int alive = 0;
    for (const RefNode& nd : nodes) {
      if (nd.alive) ++alive;
    }
    if (alive == 0) break;

    // election
    std::vector<int> heads;
    for (int i = 0; i < n; ++i) {
      const RefNode& nd = nodes[static_cast<std::size_t>(i)];
      if (!nd.alive) continue;
      const double u = rng.uniform01();
      if (r < barred_until[static_cast<std::size_t>(i)]) continue;
      double p_i = 0.0;
      if (cfg.protocol == wsnsim::Protocol::leach) {
        p_i = cfg.p;
      } else if (cfg.protocol == wsnsim::Protocol::sep) {
        const double denom = 1.0 + cfg.hetero_a * cfg.hetero_m;
        p_i = nd.advanced ? cfg.p * (1.0 + cfg.hetero_a) / denom
                          : cfg.p / denom;
      } else {
        double est = avg0;
        if (deec_rounds > 0) est = avg0 * (1.0 - r / deec_rounds);
        if (est <= 0.0) {
          p_i = nd.energy > 0.0 ? 1.0 : 0.0;
        } else {
          p_i = cfg.p * nd.energy / est;
          if (p_i > 1.0) p_i = 1.0;
        }
      }
      if (p_i <= 0.0) continue;
      const int epoch = ceil_inverse(p_i);
      const double threshold = p_i / (1.0 - p_i * (r % epoch));
      if (u < threshold) {
        heads.push_back(i);
        barred_until[static_cast<std::size_t>(i)] = r + epoch;
      }
    }

    // minimum-distance association, then traffic
    std::vector<char> is_head(static_cast<std::size_t>(n), 0);
    for (int h : heads) is_head[static_cast<std::size_t>(h)] = 1;
    std::vector<double> costs(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
      const RefNode& nd = nodes[static_cast<std::size_t>(i)];
      if (!nd.alive || is_head[static_cast<std::size_t>(i)]) continue;
      if (heads.empty()) {
        costs[static_cast<std::size_t>(i)] +=
            tx(dist(nd.x, nd.y, sink_x, sink_y));
        continue;
      }
      int best = -1;
      double best_d = std::numeric_limits<double>::infinity();
      for (int h : heads) {
        const RefNode& hd = nodes[static_cast<std::size_t>(h)];
        const double d = dist(nd.x, nd.y, hd.x, hd.y);
        if (d < best_d) {
          best_d = d;
          best = h;
        }
      }
      costs[static_cast<std::size_t>(i)] += tx(best_d);
      costs[static_cast<std::size_t>(best)] += bits * e_elec;
    }
    for (int h : heads) {
      const RefNode& hd = nodes[static_cast<std::size_t>(h)];
      const double agg = bits * e_da;
      costs[static_cast<std::size_t>(h)] +=
          agg + tx(dist(hd.x, hd.y, sink_x, sink_y));
    }

    // drain, clamp, kill
    RoundState state;
    for (int i = 0; i < n; ++i) {
      RefNode& nd = nodes[static_cast<std::size_t>(i)];
      const double c = costs[static_cast<std::size_t>(i)];
      if (c > 0.0) {
        if (c >= nd.energy) {
          state.consumed += nd.energy;
          nd.energy = 0.0;
          nd.alive = false;
        } else {
          nd.energy -= c;
          state.consumed += c;
        }
      }
    }
    for (const RefNode& nd : nodes) {
      state.energy.push_back(nd.energy);
      state.alive.push_back(nd.alive ? 1 : 0);
      state.residual += nd.energy;
      if (nd.alive) ++state.alive_count;
    }
    state.heads = heads;
    series.push_back(std::move(state));
  }
  return series;
}

}  // namespace refsim
