#ifndef ICDMT_EVENTS_HPP
#define ICDMT_EVENTS_HPP

#include <optional>
#include <span>
#include <string>

#include "icdmt/types.hpp"

// Outage events of the interference channel, described once and evaluated two
// ways: exactly at finite SNR (Monte Carlo) and asymptotically on the fading
// exponent grid (the independent cross-check for every closed-form exponent).

namespace icdmt {

enum class EventKind {
    p2p,           // log(1 + snr g_ii) < R_i on an isolated link
    jd1,           // single-rate outage of receiver i's direct link
    jd2,           // sum-rate outage, direct plus cross power at receiver i
    hk1, hk2, hk3, // own-layer outages behind the private-interference floor
    hk4, hk5, hk6, // joint outages with the interferer's public layer
    mac1,          // as jd1
    mac2,          // cross-link outage carrying the other user's rate
    mac3,          // as jd2
    etw1, etw2,    // per-user single-rate outage with a +1 rate offset
    etw3,          // joint outage at rate r1 + r2 - s2, conditioned on a
                   // non-vanishing cross link
    etw4,          // side-information outage at rate s2, same conditioning
    strip_direct,  // own direct-link outage after the interferer is removed
    strip_cross,   // decoding user i first at the other receiver, own link
                   // treated as noise
    tian,          // own link with the whole cross power treated as noise
};

std::string event_kind_name(EventKind k);
std::optional<EventKind> parse_event_kind(const std::string& name);

struct EventSpec {
    EventKind kind = EventKind::p2p;
    int user = 1;  // receiver/user index the event is attached to
    RatePair r;
    std::optional<SplitVector> s;  // required by hk* and etw* kinds
    std::optional<PowerSplit> p;   // required by hk* kinds only
    double alpha = 1.0;

    void validate() const;

    // Number of fading coefficients the event involves (1 or 2).
    int dim() const;

    // Aggregate multiplexing rate the event tests against.
    double aggregate_rate() const;
};

// True iff fading exponents u (|h|^2 ~ snr^{-u[k]}, u[0] the direct
// coefficient where both appear) put the event in outage asymptotically.
// Every 1 + sum snr^{a_k} factor is collapsed to snr^{(max a_k)^+} and the
// resulting rate inequality is evaluated non-strictly. Events with aggregate
// rate exactly 0 are impossible at finite SNR and report false.
bool asymptotic_outage_indicator(const EventSpec& ev, std::span<const double> u);

// Independent oracle: smallest sum of fading exponents over the outage set,
// minimized over the grid {0, step, ..., u_max}^dim. Returns +inf when no
// grid point is in outage. Requires u_max >= 2 and 0 < step <= 0.05.
double outage_exponent(const EventSpec& ev, double u_max = 3.0, double step = 0.01);

// Exact finite-SNR event on one channel draw, with R_i = r_i log2(snr).
bool finite_snr_outage(const EventSpec& ev, const ChannelRealization& ch);

// The closed-form exponent the oracle is compared against (the matching term
// of the dmt module).
double closed_form_event_exponent(const EventSpec& ev);

} // namespace icdmt

#endif
