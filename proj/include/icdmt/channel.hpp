#ifndef ICDMT_CHANNEL_HPP
#define ICDMT_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include "icdmt/types.hpp"

namespace icdmt {

// Counter-based uniform stream: value k of the stream (seed, index) is a
// pure function of (seed, index, k), so trial order and partitioning across
// workers cannot change any draw. Returns doubles in (0, 1].
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t index);

    double next_unit();   // uniform on (0, 1]
    cplx next_cn01();     // circularly symmetric complex normal, unit variance

private:
    std::uint64_t state_;
};

// Draw the four i.i.d. CN(0,1) fading coefficients of trial `index` under
// stream `seed`, stamped with the operating point (snr, alpha).
ChannelRealization sample_channel(std::uint64_t seed, std::uint64_t index,
                                  double snr, double alpha);

// One channel use per entry: receiver 1 sees the direct link at snr and the
// cross link at snr^alpha, and symmetrically for receiver 2. Inputs must have
// equal length n >= 1 and per-word power ||x_i||^2 <= n.
std::pair<std::vector<cplx>, std::vector<cplx>>
apply_channel(const ChannelRealization& ch,
              const std::vector<cplx>& x1, const std::vector<cplx>& x2,
              const std::vector<cplx>& z1, const std::vector<cplx>& z2);

// Outage probability of the scalar Rayleigh point-to-point link at a fixed
// rate in bits per channel use: P[log2(1 + snr |h|^2) < rate_bits].
double p2p_outage_exact(double snr, double rate_bits);

} // namespace icdmt

#endif
