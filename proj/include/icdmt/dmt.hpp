#ifndef ICDMT_DMT_HPP
#define ICDMT_DMT_HPP

#include <array>
#include <string>
#include <vector>

#include "icdmt/types.hpp"

// Closed-form diversity-multiplexing tradeoff exponents for the two-user
// fading interference channel. Every value is a polynomial-free piecewise
// linear function of the rates; +inf marks a term whose underlying outage
// event carries zero rate and therefore never limits the scheme (it is
// excluded from the minimum).

namespace icdmt {

struct DmtTerm {
    std::string label;
    double value = 0.0;
};

struct DmtBreakdown {
    double overall = 0.0;
    std::vector<DmtTerm> terms;
    std::string active_label;  // first listed term attaining `overall`
    std::string provenance;    // extra qualifier carried into reports, may be empty
};

// min over finite terms (+inf if none); fills active_label.
DmtBreakdown make_breakdown(std::vector<DmtTerm> terms);

// --- Joint decoding of both users at both receivers (no rate splitting) ----
// Terms: per-user single-rate outages and the sum-rate outage
// (1-r1-r2)^+ + (alpha-r1-r2)^+.
DmtBreakdown d_jd(const RatePair& r, double alpha);

// Convenience accessor for the sum-rate term above.
double d_jd_joint_term(const RatePair& r, double alpha);

// --- Superposition (private/public) scheme with rate split s and private
// power exponents p. Twelve terms d_{i,l}, i = receiver, l = 1..6. ----------
// Labels are "i.l". Zero-rate events are reported as +inf and excluded.
DmtBreakdown d_hk_terms(const RatePair& r, const SplitVector& s,
                        const PowerSplit& p, double alpha);

// Overall minimum of the twelve terms at the given operating point.
double d_hk_given(const RatePair& r, const SplitVector& s,
                  const PowerSplit& p, double alpha);

// One superposition term evaluated with its aggregate target rate replaced by
// a free variable x >= 0 (used when solving code-design thresholds).
// i is the receiver, l in 1..6.
double hk_term_at_aggregate(int i, int l, const RatePair& r, const SplitVector& s,
                            const PowerSplit& p, double alpha, double x);

// Raw twelve-term vector (receiver 1's l=1..6, then receiver 2's), laid out
// for the optimizer's hot loop: no labels, no revalidation. Values match
// d_hk_terms exactly, including the +inf exclusions.
std::array<double, 12> hk_term_values(const RatePair& r, const SplitVector& s,
                                      const PowerSplit& p, double alpha);

// min over the same twelve values with the r = (0,0) fallback applied.
double hk_min_value(const RatePair& r, const SplitVector& s,
                    const PowerSplit& p, double alpha);

// Aggregate target rate of term (i, l) at the operating point.
double hk_aggregate_rate(int i, int l, const RatePair& r, const SplitVector& s);

// --- Compound multiple-access outer bound (both messages decodable at each
// receiver): per-user terms, cross terms (alpha - r_j)^+, and the joint term.
DmtBreakdown d_mac(const RatePair& r, double alpha);

// --- Orthogonal time sharing with fractions theta. ------------------------
DmtBreakdown d_ts(const RatePair& r, const TimeShare& theta);

// --- Treat interference as noise: per-user (1 - alpha - r_i)^+. -----------
DmtBreakdown d_tian(const RatePair& r, double alpha);

// --- Genie-aided outer bound with side information s2 (user 2's private
// rate handed to receiver 1). Four terms; the fourth switches on s2 and on
// whether the cross link is stronger than the direct one. -------------------
struct EtwTermSet {
    double d11 = 0.0;  // user 1 single-rate
    double d12 = 0.0;  // user 2 single-rate
    double d13 = 0.0;  // joint rate r1 + r2 - s2
    double d14 = 0.0;  // side-information rate s2

    double min() const;
    std::array<double, 4> as_array() const { return {d11, d12, d13, d14}; }
};

EtwTermSet d_etw_terms(const RatePair& r, double s2, double alpha);

// --- Stripping decoder (decode the interferer first), defined for
// alpha >= 2 only. Terms: per-user direct outages plus the per-user
// sandwich upper exponents min{(1-r_i)^+, (alpha-1-r_j)^+}. ----------------
DmtBreakdown d_strip(const RatePair& r, double alpha);

// Exponent of the cross-decoding outage when stripping user `user` at the
// other receiver: (alpha - 1 - r_user)^+. Valid for any alpha >= 0 as an
// event exponent.
double strip_cross_exponent(const RatePair& r, int user, double alpha);

// --- min{(1-r1)^+, (1-r2)^+}: interference-free per-user outer bound,
// tight in the very strong regime. ------------------------------------------
double d_very_strong_outer(const RatePair& r);

// --- max of the two achievable exponents: what the system guarantees when
// it may pick either the superposition scheme or plain joint decoding. ------
double d_overall_achievable(double d_hk_opt, double d_jd);

} // namespace icdmt

#endif
