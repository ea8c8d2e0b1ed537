#ifndef ICDMT_OPTIMIZE_HPP
#define ICDMT_OPTIMIZE_HPP

#include "icdmt/dmt.hpp"
#include "icdmt/types.hpp"

namespace icdmt {

// Common grid for the split/power searches. Split grids run over
// {0, step, ...} up to each rate, always including the exact endpoint; power
// grids run over {0, step, ..., p_max}.
struct GridSpec {
    double step = 1.0 / 48.0;
    double p_max = 1.0 - 1.0 / 48.0;

    void validate() const;
};

struct HkOptimum {
    double value = 0.0;
    SplitVector s;
    PowerSplit p;
    DmtBreakdown breakdown;  // twelve terms at the maximizer
};

// Exhaustive grid maximization of the twelve-term superposition minimum over
// (s1, s2, p1, p2). Ties resolve to the lexicographically smallest
// (s1, s2, p1, p2).
HkOptimum optimize_hk(const RatePair& r, double alpha,
                      const GridSpec& grid = {});

struct EtwOptimum {
    double value = 0.0;
    double s2 = 0.0;
    EtwTermSet terms;
};

// Grid maximization of the four-term genie bound over the side-information
// rate s2 in [0, r2]; ties resolve to the smallest s2.
EtwOptimum optimize_etw(const RatePair& r, double alpha,
                        const GridSpec& grid = {});

struct TsOptimum {
    double value = 0.0;
    TimeShare theta;
};

// Best orthogonal time share on the theta1 grid {0, step, ..., 1};
// ties resolve to the smallest theta1.
TsOptimum optimize_ts(const RatePair& r, const GridSpec& grid = {});

// The closed-form optimizer for symmetric rates at moderate interference
// (2/3 <= alpha <= 1): below alpha/2 plain joint decoding is optimal;
// above it, private power 1 - alpha with split r - alpha/2 per user.
struct HkRecipe {
    SplitVector s;
    PowerSplit p;
    bool use_jd = false;
};

HkRecipe symmetric_hk_recipe(double r, double alpha);

// Minimum over the eight-term subset {l = 1, 3, 4, 6} of both receivers;
// the dropped terms are provably redundant, so this must equal d_hk_given.
double reduced_hk_min(const RatePair& r, const SplitVector& s,
                      const PowerSplit& p, double alpha);

} // namespace icdmt

#endif
