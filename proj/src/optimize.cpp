#include "icdmt/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace icdmt {

void GridSpec::validate() const {
    if (!(step > 0.0) || !(step <= 0.1) || !std::isfinite(step))
        throw validation_error("grid step must lie in (0, 0.1]");
    if (!(p_max >= 0.0) || !(p_max < 1.0))
        throw validation_error("grid power cap must lie in [0, 1)");
}

namespace {

// {0, step, 2 step, ...} strictly below hi, then the exact endpoint. Building
// from an integer index keeps the nodes free of accumulated rounding.
std::vector<double> split_grid(double hi, double step) {
    std::vector<double> g;
    for (int k = 0; k * step < hi - 1e-12; ++k) g.push_back(k * step);
    g.push_back(hi);
    return g;
}

std::vector<double> power_grid(double p_max, double step) {
    std::vector<double> g;
    for (int k = 0; k * step <= p_max + 1e-12; ++k) g.push_back(k * step);
    return g;
}

} // namespace

HkOptimum optimize_hk(const RatePair& r, double alpha, const GridSpec& grid) {
    check_rate_pair(r);
    check_alpha(alpha);
    grid.validate();

    const auto s1g = split_grid(r.r1, grid.step);
    const auto s2g = split_grid(r.r2, grid.step);
    const auto pg = power_grid(grid.p_max, grid.step);

    double best = -inf;
    SplitVector bs{};
    PowerSplit bp{};
    SplitVector s{};
    PowerSplit p{};
    // Ascending loops plus a strictly-greater update give the documented
    // lexicographic tie-break for free.
    for (double s1 : s1g) {
        s.s1 = s1;
        for (double s2 : s2g) {
            s.s2 = s2;
            for (double p1 : pg) {
                p.p1 = p1;
                for (double p2 : pg) {
                    p.p2 = p2;
                    const double v = hk_min_value(r, s, p, alpha);
                    if (v > best) {
                        best = v;
                        bs = s;
                        bp = p;
                    }
                }
            }
        }
    }

    HkOptimum o;
    o.value = best;
    o.s = bs;
    o.p = bp;
    o.breakdown = d_hk_terms(r, bs, bp, alpha);
    return o;
}

EtwOptimum optimize_etw(const RatePair& r, double alpha, const GridSpec& grid) {
    check_rate_pair(r);
    check_alpha(alpha);
    grid.validate();

    double best = -inf;
    double bs2 = 0.0;
    for (double s2 : split_grid(r.r2, grid.step)) {
        const double v = d_etw_terms(r, s2, alpha).min();
        if (v > best) {
            best = v;
            bs2 = s2;
        }
    }

    EtwOptimum o;
    o.value = best;
    o.s2 = bs2;
    o.terms = d_etw_terms(r, bs2, alpha);
    return o;
}

TsOptimum optimize_ts(const RatePair& r, const GridSpec& grid) {
    check_rate_pair(r);
    grid.validate();

    double best = -inf;
    TimeShare bt{1.0, 0.0};
    for (double th1 : split_grid(1.0, grid.step)) {
        const TimeShare theta{th1, 1.0 - th1};
        const double v = d_ts(r, theta).overall;
        if (v > best) {
            best = v;
            bt = theta;
        }
    }

    TsOptimum o;
    o.value = best;
    o.theta = bt;
    return o;
}

HkRecipe symmetric_hk_recipe(double r, double alpha) {
    if (!std::isfinite(r) || r < 0.0 || r > 1.0)
        throw validation_error("symmetric rate must lie in [0, 1]");
    check_alpha(alpha);
    if (alpha < 2.0 / 3.0 - 1e-12 || alpha > 1.0 + 1e-12)
        throw out_of_regime_error(
            "closed-form split/power recipe covers 2/3 <= alpha <= 1 only");

    HkRecipe rec;
    rec.use_jd = r < alpha / 2.0;
    const double s = rec.use_jd ? 0.0 : r - alpha / 2.0;
    const double pp = 1.0 - alpha;
    rec.s = SplitVector{s, s};
    rec.p = PowerSplit{pp, pp};
    return rec;
}

double reduced_hk_min(const RatePair& r, const SplitVector& s,
                      const PowerSplit& p, double alpha) {
    check_rate_pair(r);
    check_split(r, s);
    check_power_split(p);
    check_alpha(alpha);

    const auto v = hk_term_values(r, s, p, alpha);
    // l = 1, 3, 4, 6 of each receiver; the dropped l = 2 and l = 5 rows are
    // dominated by these.
    static constexpr int kKeep[8] = {0, 2, 3, 5, 6, 8, 9, 11};
    double m = inf;
    for (int k : kKeep) m = std::min(m, v[k]);
    return m == inf ? 1.0 : m;
}

} // namespace icdmt
