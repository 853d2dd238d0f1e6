#pragma once

#include <cmath>
#include <stdexcept>

namespace wsnsim {

// First-order radio model constants. Energies are joules per bit; the
// amplifier coefficients carry the d^2 (free-space) and d^4 (multipath)
// distance terms. Defaults are the usual 50 nJ/bit electronics,
// 10 pJ/bit/m^2 free-space and 0.0013 pJ/bit/m^4 multipath amplifiers,
// 5 nJ/bit aggregation.
struct RadioParams {
  double e_elec = 50e-9;     // electronics, J/bit
  double e_fs = 10e-12;      // free-space amplifier, J/bit/m^2
  double e_mp = 0.0013e-12;  // multipath amplifier, J/bit/m^4
  double e_da = 5e-9;        // aggregation, J/bit
  // Crossover distance between the two amplifier regimes. The default
  // sqrt(e_fs/e_mp) keeps tx_energy continuous at d == d0 (~87.7 m for the
  // default coefficients); override to pin a rounded value.
  double d0 = std::sqrt(e_fs / e_mp);

  void validate() const {
    if (e_elec < 0 || e_fs < 0 || e_mp < 0 || e_da < 0 || d0 < 0) {
      throw std::invalid_argument("radio: coefficients must be >= 0");
    }
  }
};

// Cost to transmit `bits` over distance d: electronics plus the amplifier
// term, free-space below d0, multipath at or above it.
inline double tx_energy(double bits, double d, const RadioParams& p) {
  if (bits < 0 || d < 0) {
    throw std::invalid_argument("tx_energy: bits and distance must be >= 0");
  }
  if (d < p.d0) {
    return bits * p.e_elec + bits * p.e_fs * (d * d);
  }
  return bits * p.e_elec + bits * p.e_mp * (d * d) * (d * d);
}

// Cost to receive `bits`.
inline double rx_energy(double bits, const RadioParams& p) {
  if (bits < 0) {
    throw std::invalid_argument("rx_energy: bits must be >= 0");
  }
  return bits * p.e_elec;
}

// Cost to aggregate `bits`.
inline double agg_energy(double bits, const RadioParams& p) {
  if (bits < 0) {
    throw std::invalid_argument("agg_energy: bits must be >= 0");
  }
  return bits * p.e_da;
}

// Composite cluster-head cost for one aggregated packet to the sink.
inline double ch_tx_energy(double bits, double d, const RadioParams& p) {
  return agg_energy(bits, p) + tx_energy(bits, d, p);
}

}  // namespace wsnsim
