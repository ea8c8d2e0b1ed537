#include "icdmt/curve.hpp"

#include <algorithm>
#include <cstdio>

#include "icdmt/dmt.hpp"

namespace icdmt {

std::vector<CurveRow> symmetric_curve(double alpha, double r_step,
                                      const GridSpec& grid, bool with_vs_outer) {
    check_alpha(alpha);
    if (!(r_step > 0.0) || !(r_step <= 0.1 + 1e-12))
        throw validation_error("curve rate step must lie in (0, 0.1]");
    grid.validate();
    if (with_vs_outer && alpha < 2.0)
        throw out_of_regime_error(
            "the decoupled outer-bound column requires very strong interference (alpha >= 2)");

    std::vector<double> rs;
    for (int k = 0; k * r_step < 1.0 - 1e-12; ++k) rs.push_back(k * r_step);
    rs.push_back(1.0);

    std::vector<CurveRow> rows;
    rows.reserve(rs.size());
    for (double r : rs) {
        const RatePair rp{r, r};
        CurveRow row;
        row.r = r;
        row.d_jd = d_jd(rp, alpha).overall;
        row.d_hk = optimize_hk(rp, alpha, grid).value;
        row.d_overall = d_overall_achievable(row.d_hk, row.d_jd);
        row.d_etw = optimize_etw(rp, alpha, grid).value;
        row.d_tian = d_tian(rp, alpha).overall;
        row.d_ots = optimize_ts(rp, grid).value;
        row.d_mac = d_mac(rp, alpha).overall;
        row.d_vs_outer = d_very_strong_outer(rp);
        rows.push_back(row);
    }
    return rows;
}

std::string curve_csv(const std::vector<CurveRow>& rows, bool with_vs_outer) {
    std::string out = "r,d_jd,d_hk,d_overall,d_etw,d_tian,d_ots,d_mac";
    if (with_vs_outer) out += ",d_vs_outer";
    out += '\n';
    char buf[256];
    for (const CurveRow& row : rows) {
        std::snprintf(buf, sizeof buf, "%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g",
                      row.r, row.d_jd, row.d_hk, row.d_overall, row.d_etw,
                      row.d_tian, row.d_ots, row.d_mac);
        out += buf;
        if (with_vs_outer) {
            std::snprintf(buf, sizeof buf, ",%.6g", row.d_vs_outer);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

} // namespace icdmt
