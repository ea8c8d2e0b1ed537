#ifndef ICDMT_TYPES_HPP
#define ICDMT_TYPES_HPP

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

// Core domain vocabulary for the two-user single-antenna fading interference
// channel toolkit. Rates are multiplexing gains (rate = r * log2(snr)); all
// exponents are with respect to log2(snr).

namespace icdmt {

using cplx = std::complex<double>;

inline constexpr double inf = std::numeric_limits<double>::infinity();

// (x)^+ = max(x, 0)
inline double pos(double x) { return x > 0.0 ? x : 0.0; }

// ---------------------------------------------------------------------------
// Error taxonomy. The CLI maps these onto distinct exit codes.
// ---------------------------------------------------------------------------

// Parameter outside its documented domain (bad rate, inconsistent split, ...).
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// Operation requested outside the regime where its scheme is defined
// (e.g. a stripping decoder below very strong interference).
class out_of_regime_error : public std::domain_error {
public:
    explicit out_of_regime_error(const std::string& what) : std::domain_error(what) {}
};

// Not enough usable data to produce the requested estimate (e.g. a slope fit
// with fewer than three points that collected enough hits).
class insufficient_data_error : public std::runtime_error {
public:
    explicit insufficient_data_error(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a hard resource cap (e.g. codebook enumeration size).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (codebook files, config lines); distinct from
// validation_error so the CLI can map it to the usage exit code.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Parameter bundles
// ---------------------------------------------------------------------------

// Pair of per-user multiplexing rates, each in [0, 1].
struct RatePair {
    double r1 = 0.0;
    double r2 = 0.0;

    double of(int user) const { return user == 1 ? r1 : r2; }
};

// Private-rate split (s1, s2) of an HK-style superposition scheme;
// 0 <= s_i <= r_i, public rate t_i = r_i - s_i.
struct SplitVector {
    double s1 = 0.0;
    double s2 = 0.0;

    double of(int user) const { return user == 1 ? s1 : s2; }
};

// Private power exponents (p1, p2): user i's private layer is received at the
// other receiver with exponent alpha + p_i - 1. Each p_i in [0, 1).
struct PowerSplit {
    double p1 = 0.0;
    double p2 = 0.0;

    double of(int user) const { return user == 1 ? p1 : p2; }
};

// Orthogonal time-sharing fractions, theta1 + theta2 = 1.
struct TimeShare {
    double theta1 = 0.0;
    double theta2 = 0.0;
};

// Cross-link strength exponent: the interfering link is received at
// snr^alpha while the direct link is received at snr.
enum class InterferenceBand { weak, moderate, strong, very_strong };

struct InterferenceLevel {
    double alpha = 1.0;
};

InterferenceBand interference_band(double alpha);
std::string band_name(InterferenceBand band);

// One draw of the four fading coefficients, tied to the operating point.
struct ChannelRealization {
    cplx h11, h12, h21, h22;
    double snr = 1.0;
    double alpha = 1.0;

    // |h_ij|^2 with i = transmitter, j = receiver.
    double g11() const { return std::norm(h11); }
    double g12() const { return std::norm(h12); }
    double g21() const { return std::norm(h21); }
    double g22() const { return std::norm(h22); }
};

// ---------------------------------------------------------------------------
// Validation helpers shared across modules
// ---------------------------------------------------------------------------

void check_rate_pair(const RatePair& r);
void check_split(const RatePair& r, const SplitVector& s);
void check_power_split(const PowerSplit& p);
void check_alpha(double alpha);
void check_snr(double snr);
void check_user(int user);

inline int other(int user) { return user == 1 ? 2 : 1; }

} // namespace icdmt

#endif
