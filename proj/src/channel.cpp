#include "icdmt/channel.hpp"

#include <cmath>

namespace icdmt {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 output mixer
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

} // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t index) {
    // Two mixing rounds decorrelate (seed, index) pairs; the stream then
    // advances by the splitmix64 increment.
    state_ = mix64(mix64(seed + kGolden) + index * kGolden + 0x6A09E667F3BCC909ull);
}

double CounterRng::next_unit() {
    state_ += kGolden;
    const std::uint64_t bits = mix64(state_) >> 11; // 53 random bits
    // (0, 1]: never 0, so -log of it is finite.
    return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
}

cplx CounterRng::next_cn01() {
    // Box-Muller in polar form: |h|^2 = -ln(u) is exactly Exp(1), i.e. the
    // squared magnitude of a unit-variance circularly symmetric Gaussian.
    const double u = next_unit();
    const double phi = kTwoPi * next_unit();
    const double mag = std::sqrt(-std::log(u));
    return {mag * std::cos(phi), mag * std::sin(phi)};
}

ChannelRealization sample_channel(std::uint64_t seed, std::uint64_t index,
                                  double snr, double alpha) {
    check_snr(snr);
    check_alpha(alpha);
    CounterRng rng(seed, index);
    ChannelRealization ch;
    ch.h11 = rng.next_cn01();
    ch.h12 = rng.next_cn01();
    ch.h21 = rng.next_cn01();
    ch.h22 = rng.next_cn01();
    ch.snr = snr;
    ch.alpha = alpha;
    return ch;
}

std::pair<std::vector<cplx>, std::vector<cplx>>
apply_channel(const ChannelRealization& ch,
              const std::vector<cplx>& x1, const std::vector<cplx>& x2,
              const std::vector<cplx>& z1, const std::vector<cplx>& z2) {
    const std::size_t n = x1.size();
    if (n == 0 || x2.size() != n || z1.size() != n || z2.size() != n)
        throw validation_error("apply_channel: inputs must share a common length n >= 1");

    double pow1 = 0.0, pow2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        pow1 += std::norm(x1[k]);
        pow2 += std::norm(x2[k]);
    }
    const double cap = static_cast<double>(n) * (1.0 + 1e-9);
    if (pow1 > cap || pow2 > cap)
        throw validation_error("apply_channel: codeword power exceeds ||x||^2 <= n");

    const double a_dir = std::sqrt(ch.snr);
    const double a_cross = std::sqrt(std::pow(ch.snr, ch.alpha));

    std::vector<cplx> y1(n), y2(n);
    for (std::size_t k = 0; k < n; ++k) {
        y1[k] = a_dir * ch.h11 * x1[k] + a_cross * ch.h21 * x2[k] + z1[k];
        y2[k] = a_cross * ch.h12 * x1[k] + a_dir * ch.h22 * x2[k] + z2[k];
    }
    return {std::move(y1), std::move(y2)};
}

double p2p_outage_exact(double snr, double rate_bits) {
    check_snr(snr);
    if (!(rate_bits >= 0.0))
        throw validation_error("p2p_outage_exact: rate must be >= 0");
    if (rate_bits == 0.0) return 0.0;
    // |h|^2 ~ Exp(1): P[|h|^2 < (2^R - 1)/snr] = 1 - exp(-(2^R - 1)/snr).
    const double thresh = (std::pow(2.0, rate_bits) - 1.0) / snr;
    return -std::expm1(-thresh);
}

} // namespace icdmt
