#ifndef ICDMT_DESIGN_HPP
#define ICDMT_DESIGN_HPP

#include <optional>
#include <string>
#include <vector>

#include "icdmt/codebook.hpp"
#include "icdmt/types.hpp"

// Code-design thresholds and certification. Each decoding scheme's error
// analysis requires codeword difference quantities (squared minimum distance,
// or smallest nonzero eigenvalue of a two-column difference Gram) to exceed
// snr^(-x + eps) for scheme-specific exponents x; this module solves for
// those exponents and checks concrete codebooks against them.

namespace icdmt {

enum class Scheme { jd, jd_very_strong, hk, mac, strip };

const char* scheme_name(Scheme s);
Scheme parse_scheme(const std::string& name);

struct DesignThreshold {
    std::string label;          // matches the achieved-quantity label in checks
    double required_exponent;   // x in snr^(-x + eps); +inf means unconstrained
    double epsilon;             // per-criterion slack, > 0
};

struct DesignTargets {
    Scheme scheme = Scheme::jd;
    double d_star = 0.0;        // active exponent the criteria must preserve
    std::vector<DesignThreshold> thresholds;
    std::string note;           // e.g. "non-optimal operating point"
};

// Largest x >= 0 with (a - x)^+ = d_star; the whole tail {x >= a} solves the
// d_star = 0 case, so that returns +inf (no constraint).
double largest_exponent_single(double a, double d_star);

// Largest x >= 0 with (a - x)^+ + (b - x)^+ = d_star (same +inf convention).
double largest_exponent_joint(double a, double b, double d_star);

// Largest x >= 0 at which superposition term (i, l) evaluated at aggregate x
// equals d_star; bisection over the nonincreasing piecewise-linear term.
double largest_exponent_hk(int i, int l, const RatePair& r,
                           const SplitVector& s, const PowerSplit& p,
                           double alpha, double d_star);

// Solves the per-scheme criteria at the given operating point. s and p are
// required for hk and rejected elsewhere. Zero-rate criteria (no codeword
// pair exists) are omitted. jd_very_strong and strip bypass the solve and
// use the direct thresholds r_i and r1 + r2; both require alpha >= 2.
DesignTargets design_targets(Scheme scheme, const RatePair& r,
                             const std::optional<SplitVector>& s,
                             const std::optional<PowerSplit>& p, double alpha,
                             double epsilon);

// min over distinct word pairs of ||x - x'||^2; needs >= 2 words.
double min_sq_distance(const Codebook& cb);

// min over pairs (dx_a != 0, dx_b != 0) of the smallest nonzero eigenvalue
// of the Gram of [dx_a dx_b]; rank is decided by a 1e-9 relative eigenvalue
// tolerance. Returns +inf when no such pair exists (all-duplicate books).
double min_pair_gram_eig(const Codebook& a, const Codebook& b);

struct CriterionCheck {
    std::string label;
    double required_exponent = 0.0;
    double epsilon = 0.0;
    double threshold = 0.0;   // snr^(-required_exponent + epsilon)
    double achieved = 0.0;
    double margin_db = 0.0;   // 10 log10(achieved / threshold)
    bool pass = false;
};

struct CheckReport {
    Scheme scheme = Scheme::jd;
    double d_star = 0.0;
    double snr = 0.0;
    std::string note;
    std::vector<CriterionCheck> rows;
    bool all_pass = true;
};

// Certify a two-codebook scheme (jd, jd_very_strong, mac with n >= 2, strip
// with n >= 1) against previously computed targets. Both books must share n
// and snr.
CheckReport check_criteria(const DesignTargets& targets, const Codebook& c1,
                           const Codebook& c2);

// Superposition variant: the private difference vectors enter all criteria
// scaled by sqrt(snr^(1 - p_i)), matching their reduced transmit power.
CheckReport check_criteria(const DesignTargets& targets,
                           const SuperpositionCodebook& b1,
                           const SuperpositionCodebook& b2);

std::string format_report(const CheckReport& rep);

} // namespace icdmt

#endif
