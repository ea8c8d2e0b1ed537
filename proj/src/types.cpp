#include "icdmt/types.hpp"

#include <cmath>

namespace icdmt {

InterferenceBand interference_band(double alpha) {
    check_alpha(alpha);
    if (alpha >= 2.0) return InterferenceBand::very_strong;
    if (alpha >= 1.0) return InterferenceBand::strong;
    if (alpha >= 2.0 / 3.0) return InterferenceBand::moderate;
    return InterferenceBand::weak;
}

std::string band_name(InterferenceBand band) {
    switch (band) {
        case InterferenceBand::weak: return "weak";
        case InterferenceBand::moderate: return "moderate";
        case InterferenceBand::strong: return "strong";
        case InterferenceBand::very_strong: return "very_strong";
    }
    return "?";
}

void check_rate_pair(const RatePair& r) {
    if (!(r.r1 >= 0.0 && r.r1 <= 1.0) || !(r.r2 >= 0.0 && r.r2 <= 1.0))
        throw validation_error("multiplexing rates must lie in [0, 1]");
}

void check_split(const RatePair& r, const SplitVector& s) {
    if (!(s.s1 >= 0.0 && s.s1 <= r.r1 + 1e-12) || !(s.s2 >= 0.0 && s.s2 <= r.r2 + 1e-12))
        throw validation_error("private split must satisfy 0 <= s_i <= r_i");
}

void check_power_split(const PowerSplit& p) {
    if (!(p.p1 >= 0.0 && p.p1 < 1.0) || !(p.p2 >= 0.0 && p.p2 < 1.0))
        throw validation_error("private power exponents must lie in [0, 1)");
}

void check_alpha(double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw validation_error("interference exponent alpha must be finite and >= 0");
}

void check_snr(double snr) {
    if (!(snr > 0.0) || !std::isfinite(snr))
        throw validation_error("snr must be finite and positive");
}

void check_user(int user) {
    if (user != 1 && user != 2)
        throw validation_error("user index must be 1 or 2");
}

} // namespace icdmt
