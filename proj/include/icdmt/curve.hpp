#ifndef ICDMT_CURVE_HPP
#define ICDMT_CURVE_HPP

#include <string>
#include <vector>

#include "icdmt/optimize.hpp"
#include "icdmt/types.hpp"

// Symmetric-rate tradeoff curves across all schemes, in plotter-friendly CSV.

namespace icdmt {

struct CurveRow {
    double r = 0.0;
    double d_jd = 0.0;
    double d_hk = 0.0;       // grid-optimized superposition value
    double d_overall = 0.0;  // max(d_jd, d_hk)
    double d_etw = 0.0;      // grid-optimized genie outer bound
    double d_tian = 0.0;
    double d_ots = 0.0;      // best orthogonal time share
    double d_mac = 0.0;
    double d_vs_outer = 0.0; // decoupled outer bound, emitted only on request
};

// Rows for symmetric rates r in {0, r_step, ..., 1} (exact endpoint
// included). r_step must lie in (0, 0.1]. The optional decoupled outer-bound
// column requires alpha >= 2 (it is only a valid bound there).
std::vector<CurveRow> symmetric_curve(double alpha, double r_step,
                                      const GridSpec& grid = {},
                                      bool with_vs_outer = false);

// Header "r,d_jd,d_hk,d_overall,d_etw,d_tian,d_ots,d_mac[,d_vs_outer]" and
// one row per line, 6 significant digits, "inf" literal for +inf.
std::string curve_csv(const std::vector<CurveRow>& rows, bool with_vs_outer = false);

} // namespace icdmt

#endif
