#include "icdmt/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "icdmt/channel.hpp"

namespace icdmt {

McResult mc_outage(const EventSpec& ev, double snr, std::uint64_t trials,
                   std::uint64_t seed, std::uint64_t index_offset) {
    ev.validate();
    check_snr(snr);
    if (trials == 0)
        throw validation_error("mc_outage requires at least one trial");

    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const ChannelRealization ch =
            sample_channel(seed, index_offset + t, snr, ev.alpha);
        if (finite_snr_outage(ev, ch)) ++hits;
    }

    McResult res;
    res.hits = hits;
    res.trials = trials;
    res.probability = static_cast<double>(hits) / static_cast<double>(trials);
    res.std_error = std::sqrt(res.probability * (1.0 - res.probability) /
                              static_cast<double>(trials));
    return res;
}

ExponentEstimate fit_slope(const std::vector<FitPoint>& points,
                           std::uint64_t min_hits) {
    std::vector<double> xs, ys;
    for (const auto& pt : points) {
        if (pt.hits >= min_hits && pt.probability > 0.0) {
            xs.push_back(pt.snr_db / 10.0);       // log10(snr)
            ys.push_back(-std::log10(pt.probability));
        }
    }
    const std::size_t n = xs.size();
    if (n < 3)
        throw insufficient_data_error(
            "slope fit needs at least 3 points with enough hits");

    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        mx += xs[k];
        my += ys[k];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        sxx += (xs[k] - mx) * (xs[k] - mx);
        sxy += (xs[k] - mx) * (ys[k] - my);
    }
    if (sxx <= 0.0)
        throw insufficient_data_error("slope fit needs distinct SNR points");

    ExponentEstimate est;
    est.slope = sxy / sxx;
    est.points = points;
    est.used_points = n;

    double ss_res = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double fit = my + est.slope * (xs[k] - mx);
        ss_res += (ys[k] - fit) * (ys[k] - fit);
    }
    est.slope_stderr =
        n > 2 ? std::sqrt(std::max(ss_res, 0.0) / static_cast<double>(n - 2) / sxx)
              : 0.0;
    return est;
}

ExponentEstimate mc_exponent_fit(const EventSpec& ev,
                                 const std::vector<double>& snr_db_points,
                                 std::uint64_t trials_per_point,
                                 std::uint64_t seed) {
    if (snr_db_points.size() < 3)
        throw validation_error("exponent fit needs at least 3 SNR points");
    const auto [lo, hi] =
        std::minmax_element(snr_db_points.begin(), snr_db_points.end());
    if (*hi - *lo < 20.0 - 1e-9)
        throw validation_error("exponent fit needs an SNR span of at least 20 dB");

    std::vector<FitPoint> points;
    points.reserve(snr_db_points.size());
    for (std::size_t k = 0; k < snr_db_points.size(); ++k) {
        const double snr = std::pow(10.0, snr_db_points[k] / 10.0);
        // Disjoint index ranges keep the per-point estimates independent
        // while staying reproducible under one seed.
        const McResult res =
            mc_outage(ev, snr, trials_per_point, seed, k * trials_per_point);
        points.push_back({snr_db_points[k], res.probability, res.trials, res.hits});
    }
    return fit_slope(points);
}

} // namespace icdmt
