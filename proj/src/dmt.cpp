#include "icdmt/dmt.hpp"

#include <algorithm>
#include <cmath>

namespace icdmt {

DmtBreakdown make_breakdown(std::vector<DmtTerm> terms) {
    DmtBreakdown b;
    b.terms = std::move(terms);
    b.overall = inf;
    for (const auto& t : b.terms)
        if (t.value < b.overall) b.overall = t.value;
    for (const auto& t : b.terms) {
        if (t.value == b.overall) {
            b.active_label = t.label;
            break;
        }
    }
    return b;
}

// ---------------------------------------------------------------------------
// Joint decoding
// ---------------------------------------------------------------------------

double d_jd_joint_term(const RatePair& r, double alpha) {
    const double rho = r.r1 + r.r2;
    return pos(1.0 - rho) + pos(alpha - rho);
}

DmtBreakdown d_jd(const RatePair& r, double alpha) {
    check_rate_pair(r);
    check_alpha(alpha);
    return make_breakdown({{"1.single", pos(1.0 - r.r1)},
                           {"2.single", pos(1.0 - r.r2)},
                           {"joint", d_jd_joint_term(r, alpha)}});
}

// ---------------------------------------------------------------------------
// Superposition terms
// ---------------------------------------------------------------------------

namespace {

// Shared branch data for receiver i's terms. The interfering user's private
// layer reaches receiver i with exponent alpha + p_j - 1; when that user's
// private rate is zero the single private word is deterministic and
// subtractable, so the layer acts as if its power exponent were -inf
// ("neutralized") and the low branch always applies.
struct SideCtx {
    double p_i, p_j, alpha;
    bool neut_j;  // interferer's private layer carries no information
    bool hi_j;    // residual private interference dominates the noise floor
};

SideCtx side_ctx(int i, const SplitVector& s, const PowerSplit& p, double alpha) {
    SideCtx c;
    c.p_i = p.of(i);
    c.p_j = p.of(other(i));
    c.alpha = alpha;
    c.neut_j = (s.of(other(i)) == 0.0);
    c.hi_j = !c.neut_j && (c.p_j >= 1.0 - alpha);
    return c;
}

// Private-layer decoding at reduced receive power p_i, aggregate rate x.
double hk_val_1(const SideCtx& c, double x) {
    return c.hi_j ? pos(1.0 - c.alpha - c.p_j + c.p_i - x) : pos(c.p_i - x);
}

// Full-power direct-link decoding, aggregate rate x (covers l = 2 and 3).
double hk_val_23(const SideCtx& c, double x) {
    return c.hi_j ? pos(2.0 - c.alpha - c.p_j - x) : pos(1.0 - x);
}

// Own private layer jointly with the interferer's public layer; the branch
// condition depends on the aggregate itself.
double hk_val_4(const SideCtx& c, double x) {
    const bool above = !c.neut_j && (c.p_j >= 1.0 - x);
    if (!above) return pos(c.p_i - x) + pos(c.alpha - x);
    if (c.p_j < 1.0 - c.alpha) return pos(c.p_i - x);
    return pos(1.0 - c.alpha - c.p_j + c.p_i - x);
}

// Full-power direct link jointly with the interferer's public layer
// (covers l = 5 and 6).
double hk_val_56(const SideCtx& c, double x) {
    const bool above = !c.neut_j && (c.p_j >= 1.0 - x);
    if (!above) return pos(1.0 - x) + pos(c.alpha - x);
    if (c.p_j < 1.0 - c.alpha) return pos(1.0 - x);
    return pos(2.0 - c.alpha - c.p_j - x);
}

} // namespace

double hk_aggregate_rate(int i, int l, const RatePair& r, const SplitVector& s) {
    check_user(i);
    const int j = other(i);
    const double s_i = s.of(i), t_i = r.of(i) - s.of(i);
    const double t_j = r.of(j) - s.of(j);
    switch (l) {
        case 1: return s_i;
        case 2: return t_i;
        case 3: return r.of(i);
        case 4: return s_i + t_j;
        case 5: return t_i + t_j;
        case 6: return r.of(i) + t_j;
    }
    throw validation_error("superposition term index must be 1..6");
}

double hk_term_at_aggregate(int i, int l, const RatePair& r, const SplitVector& s,
                            const PowerSplit& p, double alpha, double x) {
    check_user(i);
    check_rate_pair(r);
    check_split(r, s);
    check_power_split(p);
    check_alpha(alpha);
    const SideCtx c = side_ctx(i, s, p, alpha);
    switch (l) {
        case 1: return hk_val_1(c, x);
        case 2:
        case 3: return hk_val_23(c, x);
        case 4: return hk_val_4(c, x);
        case 5:
        case 6: return hk_val_56(c, x);
    }
    throw validation_error("superposition term index must be 1..6");
}

std::array<double, 12> hk_term_values(const RatePair& r, const SplitVector& s,
                                      const PowerSplit& p, double alpha) {
    std::array<double, 12> v;
    for (int i = 1; i <= 2; ++i) {
        const int j = other(i);
        const SideCtx c = side_ctx(i, s, p, alpha);
        const double r_i = r.of(i);
        const double s_i = s.of(i);
        const double t_i = r_i - s_i;
        const double t_j = r.of(j) - s.of(j);
        double* out = v.data() + (i - 1) * 6;

        // A term is +inf (and never limits the minimum) when the error event
        // behind it cannot occur because some required message carries zero
        // rate: l=1 and l=4 need the own private book nontrivial, l=2 the own
        // public book, l=3 the own full rate, l=5/l=6 their aggregates.
        const double rho4 = s_i + t_j;
        const double rho5 = t_i + t_j;
        const double rho6 = r_i + t_j;

        out[0] = s_i == 0.0 ? inf : hk_val_1(c, s_i);
        out[1] = t_i == 0.0 ? inf : hk_val_23(c, t_i);
        out[2] = r_i == 0.0 ? inf : hk_val_23(c, r_i);
        out[3] = s_i == 0.0 ? inf : hk_val_4(c, rho4);
        out[4] = rho5 == 0.0 ? inf : hk_val_56(c, rho5);
        out[5] = rho6 == 0.0 ? inf : hk_val_56(c, rho6);
    }
    return v;
}

double hk_min_value(const RatePair& r, const SplitVector& s,
                    const PowerSplit& p, double alpha) {
    const auto v = hk_term_values(r, s, p, alpha);
    const double m = *std::min_element(v.begin(), v.end());
    return m == inf ? 1.0 : m;
}

DmtBreakdown d_hk_terms(const RatePair& r, const SplitVector& s,
                        const PowerSplit& p, double alpha) {
    check_rate_pair(r);
    check_split(r, s);
    check_power_split(p);
    check_alpha(alpha);

    const auto v = hk_term_values(r, s, p, alpha);
    std::vector<DmtTerm> terms;
    terms.reserve(13);
    for (int i = 1; i <= 2; ++i) {
        const std::string pre = std::to_string(i) + ".";
        for (int l = 1; l <= 6; ++l)
            terms.push_back({pre + std::to_string(l), v[(i - 1) * 6 + (l - 1)]});
    }
    const bool all_excluded =
        std::all_of(terms.begin(), terms.end(),
                    [](const DmtTerm& t) { return t.value == inf; });
    if (all_excluded) {
        // Happens only at r = (0,0): the scheme degenerates to zero-rate
        // signalling, whose diversity limit is the public-only value
        // min((1-0)^+, (1-0)^+, ...) = 1.
        terms.push_back({"zero_rate", 1.0});
    }
    return make_breakdown(std::move(terms));
}

double d_hk_given(const RatePair& r, const SplitVector& s,
                  const PowerSplit& p, double alpha) {
    return d_hk_terms(r, s, p, alpha).overall;
}

// ---------------------------------------------------------------------------
// Compound multiple access
// ---------------------------------------------------------------------------

DmtBreakdown d_mac(const RatePair& r, double alpha) {
    check_rate_pair(r);
    check_alpha(alpha);
    return make_breakdown({{"1.single", pos(1.0 - r.r1)},
                           {"2.single", pos(1.0 - r.r2)},
                           {"1.cross", pos(alpha - r.r2)},
                           {"2.cross", pos(alpha - r.r1)},
                           {"joint", d_jd_joint_term(r, alpha)}});
}

// ---------------------------------------------------------------------------
// Orthogonal time sharing
// ---------------------------------------------------------------------------

DmtBreakdown d_ts(const RatePair& r, const TimeShare& theta) {
    check_rate_pair(r);
    if (!(theta.theta1 >= 0.0) || !(theta.theta2 >= 0.0) ||
        std::abs(theta.theta1 + theta.theta2 - 1.0) > 1e-9)
        throw validation_error("time-share fractions must be >= 0 and sum to 1");

    auto user_term = [&](double theta_i, double r_i) {
        if (theta_i > 0.0) return pos(1.0 - r_i / theta_i);
        // A vanishing slot either kills a positive rate outright or, at zero
        // rate, imposes no constraint at all.
        return r_i > 0.0 ? 0.0 : inf;
    };
    return make_breakdown({{"1", user_term(theta.theta1, r.r1)},
                           {"2", user_term(theta.theta2, r.r2)}});
}

// ---------------------------------------------------------------------------
// Interference treated as noise
// ---------------------------------------------------------------------------

DmtBreakdown d_tian(const RatePair& r, double alpha) {
    check_rate_pair(r);
    check_alpha(alpha);
    DmtBreakdown b = make_breakdown({{"1", pos(1.0 - alpha - r.r1)},
                                     {"2", pos(1.0 - alpha - r.r2)}});
    b.provenance = "derived, oracle-validated";
    return b;
}

// ---------------------------------------------------------------------------
// Genie-aided outer bound
// ---------------------------------------------------------------------------

double EtwTermSet::min() const {
    return std::min(std::min(d11, d12), std::min(d13, d14));
}

EtwTermSet d_etw_terms(const RatePair& r, double s2, double alpha) {
    check_rate_pair(r);
    check_alpha(alpha);
    if (!(s2 >= 0.0 && s2 <= r.r2 + 1e-12))
        throw validation_error("side-information rate must satisfy 0 <= s2 <= r2");

    EtwTermSet t;
    t.d11 = pos(1.0 - r.r1);
    t.d12 = pos(1.0 - r.r2);
    const double rho3 = (r.r1 + r.r2) - s2;
    t.d13 = pos(1.0 - rho3) + pos(alpha - rho3);
    if (s2 == 0.0) {
        // The side-information event is impossible at zero rate; its exponent
        // is capped at 1, which no other term exceeds where it matters.
        t.d14 = 1.0;
    } else if (alpha < 1.0) {
        t.d14 = pos(1.0 - alpha - s2);
    } else {
        t.d14 = 0.0;
    }
    return t;
}

// ---------------------------------------------------------------------------
// Stripping decoder (very strong interference)
// ---------------------------------------------------------------------------

double strip_cross_exponent(const RatePair& r, int user, double alpha) {
    check_rate_pair(r);
    check_user(user);
    check_alpha(alpha);
    return pos(alpha - 1.0 - r.of(user));
}

DmtBreakdown d_strip(const RatePair& r, double alpha) {
    check_rate_pair(r);
    check_alpha(alpha);
    if (alpha < 2.0)
        throw out_of_regime_error("stripping decoder requires very strong interference (alpha >= 2)");

    const double dir1 = pos(1.0 - r.r1);
    const double dir2 = pos(1.0 - r.r2);
    // Per-user sandwich upper exponents; for alpha >= 2 their minimum always
    // coincides with min(dir1, dir2).
    const double up1 = std::min(dir1, strip_cross_exponent(r, 2, alpha));
    const double up2 = std::min(dir2, strip_cross_exponent(r, 1, alpha));
    return make_breakdown({{"1.direct", dir1},
                           {"2.direct", dir2},
                           {"1.upper", up1},
                           {"2.upper", up2}});
}

double d_very_strong_outer(const RatePair& r) {
    check_rate_pair(r);
    return std::min(pos(1.0 - r.r1), pos(1.0 - r.r2));
}

double d_overall_achievable(double d_hk_opt, double d_jd) {
    if (!(d_hk_opt >= 0.0) || !(d_jd >= 0.0))
        throw validation_error("achievable exponents must be nonnegative");
    return std::max(d_hk_opt, d_jd);
}

} // namespace icdmt
