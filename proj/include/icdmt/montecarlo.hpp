#ifndef ICDMT_MONTECARLO_HPP
#define ICDMT_MONTECARLO_HPP

#include <cstdint>
#include <vector>

#include "icdmt/events.hpp"

namespace icdmt {

struct McResult {
    double probability = 0.0;
    double std_error = 0.0;  // binomial standard error sqrt(p(1-p)/trials)
    std::uint64_t hits = 0;
    std::uint64_t trials = 0;
};

// Empirical outage probability of `ev` at finite snr. Trial t uses the
// channel draw (seed, index_offset + t), so results do not depend on
// evaluation order and disjoint offset ranges give independent estimates.
McResult mc_outage(const EventSpec& ev, double snr, std::uint64_t trials,
                   std::uint64_t seed, std::uint64_t index_offset = 0);

struct FitPoint {
    double snr_db = 0.0;
    double probability = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
};

struct ExponentEstimate {
    double slope = 0.0;      // fitted decay exponent in log10(snr)
    double slope_stderr = 0.0;
    std::vector<FitPoint> points;
    std::size_t used_points = 0;  // points with enough hits to be trusted
};

// Least-squares slope of -log10(probability) against log10(snr), using only
// points whose hit count reaches `min_hits`. Throws insufficient_data_error
// with fewer than three usable points.
ExponentEstimate fit_slope(const std::vector<FitPoint>& points,
                           std::uint64_t min_hits = 50);

// Runs mc_outage at each SNR point (10*log10 scale) and fits the decay slope.
// Requires at least three points spanning at least 20 dB.
ExponentEstimate mc_exponent_fit(const EventSpec& ev,
                                 const std::vector<double>& snr_db_points,
                                 std::uint64_t trials_per_point,
                                 std::uint64_t seed);

} // namespace icdmt

#endif
