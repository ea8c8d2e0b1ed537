#include <doctest.h>

#include <array>
#include <cmath>
#include <optional>

#include "icdmt/dmt.hpp"
#include "icdmt/events.hpp"
#include "icdmt/types.hpp"

using namespace icdmt;

namespace {

EventSpec make(EventKind kind, int user, RatePair r, double alpha,
               std::optional<SplitVector> s = std::nullopt,
               std::optional<PowerSplit> p = std::nullopt) {
    EventSpec ev;
    ev.kind = kind;
    ev.user = user;
    ev.r = r;
    ev.alpha = alpha;
    ev.s = s;
    ev.p = p;
    return ev;
}

bool ind1(const EventSpec& ev, double u) {
    const std::array<double, 1> pt{u};
    return asymptotic_outage_indicator(ev, pt);
}

bool ind2(const EventSpec& ev, double u, double v) {
    const std::array<double, 2> pt{u, v};
    return asymptotic_outage_indicator(ev, pt);
}

} // namespace

TEST_CASE("event kind names round trip") {
    for (EventKind k : {EventKind::p2p, EventKind::jd2, EventKind::hk4,
                        EventKind::mac2, EventKind::etw3, EventKind::strip_cross,
                        EventKind::tian}) {
        const auto back = parse_event_kind(event_kind_name(k));
        REQUIRE(back.has_value());
        CHECK(*back == k);
    }
    CHECK(!parse_event_kind("nonsense").has_value());
}

TEST_CASE("event validation and arity") {
    const RatePair r{0.4, 0.4};
    CHECK_THROWS_AS(make(EventKind::hk1, 1, r, 1.0).validate(), validation_error);
    CHECK_THROWS_AS(
        make(EventKind::hk1, 1, r, 1.0, SplitVector{0.1, 0.1}).validate(),
        validation_error);
    CHECK_THROWS_AS(make(EventKind::etw3, 1, r, 1.0).validate(), validation_error);
    CHECK_THROWS_AS(make(EventKind::etw3, 1, r, 1.0, SplitVector{0.0, 0.1},
                         PowerSplit{0.1, 0.1})
                        .validate(),
                    validation_error);
    CHECK_THROWS_AS(
        make(EventKind::jd1, 1, r, 1.0, SplitVector{0.1, 0.1}).validate(),
        validation_error);
    CHECK_THROWS_AS(make(EventKind::jd1, 3, r, 1.0).validate(), validation_error);

    CHECK(make(EventKind::jd1, 1, r, 1.0).dim() == 1);
    CHECK(make(EventKind::jd2, 1, r, 1.0).dim() == 2);
    CHECK(make(EventKind::mac2, 2, r, 1.0).dim() == 1);
    CHECK(make(EventKind::hk5, 1, r, 1.0, SplitVector{0.1, 0.1},
               PowerSplit{0.2, 0.2})
              .dim() == 2);
    CHECK(make(EventKind::tian, 2, r, 0.5).dim() == 2);

    const EventSpec ev = make(EventKind::jd2, 1, r, 1.0);
    const std::array<double, 1> wrong{0.0};
    CHECK_THROWS_AS(asymptotic_outage_indicator(ev, wrong), validation_error);
    const std::array<double, 2> neg{-0.1, 0.0};
    CHECK_THROWS_AS(asymptotic_outage_indicator(ev, neg), validation_error);
}

TEST_CASE("aggregate rates per kind") {
    const RatePair r{0.5, 0.3};
    const SplitVector s{0.2, 0.1};
    CHECK(make(EventKind::jd1, 2, r, 1.0).aggregate_rate() == 0.3);
    CHECK(make(EventKind::jd2, 1, r, 1.0).aggregate_rate() == 0.8);
    CHECK(make(EventKind::mac2, 1, r, 1.0).aggregate_rate() == 0.3);
    const auto hk4 = make(EventKind::hk4, 1, r, 1.0, s, PowerSplit{0.1, 0.1});
    CHECK(hk4.aggregate_rate() == doctest::Approx(0.2 + 0.2).epsilon(1e-12));
    const auto etw3 = make(EventKind::etw3, 1, r, 1.0, s);
    CHECK(etw3.aggregate_rate() == doctest::Approx(0.7).epsilon(1e-12));
    const auto etw4 = make(EventKind::etw4, 1, r, 1.0, s);
    CHECK(etw4.aggregate_rate() == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("indicator pinned points") {
    SUBCASE("single-rate direct-link outage") {
        const EventSpec ev = make(EventKind::jd1, 1, {0.4, 0.0}, 1.0);
        CHECK(!ind1(ev, 0.59));
        CHECK(ind1(ev, 0.6));   // boundary counts as outage
        CHECK(ind1(ev, 0.61));
    }
    SUBCASE("sum-rate outage collapses the two-power sum to the max exponent") {
        const EventSpec ev = make(EventKind::jd2, 1, {0.4, 0.4}, 1.0);
        CHECK(ind2(ev, 0.2, 0.2));
        CHECK(!ind2(ev, 0.19, 0.2));
        CHECK(!ind2(ev, 0.2, 0.19));
        CHECK(ind2(ev, 3.0, 3.0));
    }
    SUBCASE("interference-as-noise outage subtracts the cross floor") {
        const EventSpec ev = make(EventKind::tian, 1, {0.2, 0.0}, 0.5);
        CHECK(ind2(ev, 0.3, 0.0));
        CHECK(!ind2(ev, 0.29, 0.0));
        // A deeper cross fade weakens the noise floor one-for-one, so the
        // direct fade must deepen by the same amount to stay in outage.
        CHECK(ind2(ev, 0.35, 0.05));
        CHECK(!ind2(ev, 0.34, 0.05));
    }
    SUBCASE("genie joint term is gated on a non-vanishing cross link") {
        const EventSpec ev = make(EventKind::etw3, 1, {0.5, 0.5}, 1.5,
                                  SplitVector{0.0, 0.0});
        CHECK(ind2(ev, 0.0, 0.5));
        CHECK(!ind2(ev, 0.0, 1.6));  // conditioning fails for v > alpha
    }
    SUBCASE("zero-rate events never occur") {
        const EventSpec ev = make(EventKind::jd1, 1, {0.0, 0.4}, 1.0);
        CHECK(!ind1(ev, 3.0));
        const EventSpec cross = make(EventKind::strip_cross, 1, {0.0, 0.4}, 2.5);
        CHECK(!ind2(cross, 3.0, 3.0));
    }
}

TEST_CASE("oracle pinned exponents") {
    CHECK(outage_exponent(make(EventKind::jd1, 1, {0.4, 0.0}, 1.0)) ==
          doctest::Approx(0.6).epsilon(1e-9));
    CHECK(outage_exponent(make(EventKind::jd2, 1, {0.4, 0.4}, 1.0)) ==
          doctest::Approx(0.4).epsilon(1e-9));
    const EventSpec hk1 = make(EventKind::hk1, 1, {0.5, 0.5}, 2.0 / 3.0,
                               SplitVector{1.0 / 6.0, 1.0 / 6.0},
                               PowerSplit{1.0 / 3.0, 1.0 / 3.0});
    CHECK(outage_exponent(hk1) == doctest::Approx(1.0 / 6.0).epsilon(2e-2));
    CHECK(outage_exponent(make(EventKind::jd1, 1, {0.0, 0.4}, 1.0)) == inf);
}

TEST_CASE("oracle validation") {
    const EventSpec ev = make(EventKind::jd1, 1, {0.4, 0.0}, 1.0);
    CHECK_THROWS_AS(outage_exponent(ev, 1.5, 0.01), validation_error);
    CHECK_THROWS_AS(outage_exponent(ev, 3.0, 0.06), validation_error);
    CHECK_THROWS_AS(outage_exponent(ev, 3.0, 0.0), validation_error);
}

TEST_CASE("closed forms match the tradeoff module") {
    const RatePair r{0.5, 0.3};
    const SplitVector s{0.2, 0.1};
    const PowerSplit p{0.3, 0.6};
    const double a = 0.8;

    CHECK(closed_form_event_exponent(make(EventKind::p2p, 2, r, a)) == 0.7);
    CHECK(closed_form_event_exponent(make(EventKind::jd1, 1, r, a)) == 0.5);
    CHECK(closed_form_event_exponent(make(EventKind::jd2, 1, r, a)) ==
          d_jd_joint_term(r, a));
    CHECK(closed_form_event_exponent(make(EventKind::mac2, 1, r, a)) ==
          doctest::Approx(0.5).epsilon(1e-12));  // (alpha - r2)^+

    const DmtBreakdown hk = d_hk_terms(r, s, p, a);
    for (int user = 1; user <= 2; ++user) {
        const EventKind kinds[6] = {EventKind::hk1, EventKind::hk2, EventKind::hk3,
                                    EventKind::hk4, EventKind::hk5, EventKind::hk6};
        for (int l = 0; l < 6; ++l) {
            const auto ev = make(kinds[l], user, r, a, s, p);
            CHECK(closed_form_event_exponent(ev) ==
                  hk.terms[(user - 1) * 6 + l].value);
        }
    }

    const EtwTermSet etw = d_etw_terms(r, s.s2, a);
    CHECK(closed_form_event_exponent(make(EventKind::etw1, 1, r, a, s)) == etw.d11);
    CHECK(closed_form_event_exponent(make(EventKind::etw2, 2, r, a, s)) == etw.d12);
    CHECK(closed_form_event_exponent(make(EventKind::etw3, 1, r, a, s)) == etw.d13);
    CHECK(closed_form_event_exponent(make(EventKind::etw4, 1, r, a, s)) == etw.d14);

    CHECK(closed_form_event_exponent(make(EventKind::strip_cross, 2, r, 2.0)) ==
          strip_cross_exponent(r, 2, 2.0));
    CHECK(closed_form_event_exponent(make(EventKind::tian, 1, r, 0.4)) ==
          doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("oracle agrees with the closed forms on a spot-check set") {
    // The dense sweep lives in the acceptance suite; this is a fast sanity
    // net over one parameter set per regime.
    struct Case {
        EventKind kind;
        int user;
        RatePair r;
        double alpha;
        bool split;
        bool power;
    };
    const SplitVector s{0.15, 0.25};
    const PowerSplit p{0.2, 0.55};
    const Case cases[] = {
        {EventKind::p2p, 1, {0.3, 0.6}, 1.0, false, false},
        {EventKind::jd1, 2, {0.3, 0.6}, 0.4, false, false},
        {EventKind::jd2, 1, {0.3, 0.6}, 1.3, false, false},
        {EventKind::mac1, 1, {0.3, 0.6}, 0.7, false, false},
        {EventKind::mac2, 2, {0.3, 0.6}, 0.7, false, false},
        {EventKind::mac3, 2, {0.3, 0.6}, 0.7, false, false},
        {EventKind::hk1, 1, {0.3, 0.6}, 0.8, true, true},
        {EventKind::hk2, 2, {0.3, 0.6}, 0.8, true, true},
        {EventKind::hk3, 1, {0.3, 0.6}, 0.8, true, true},
        {EventKind::hk4, 2, {0.3, 0.6}, 0.8, true, true},
        {EventKind::hk5, 1, {0.3, 0.6}, 0.8, true, true},
        {EventKind::hk6, 2, {0.3, 0.6}, 0.8, true, true},
        {EventKind::etw1, 1, {0.3, 0.6}, 0.8, true, false},
        {EventKind::etw2, 2, {0.3, 0.6}, 0.8, true, false},
        {EventKind::etw3, 1, {0.3, 0.6}, 0.8, true, false},
        {EventKind::etw4, 1, {0.3, 0.6}, 0.8, true, false},
        {EventKind::strip_direct, 1, {0.3, 0.6}, 2.2, false, false},
        {EventKind::strip_cross, 2, {0.3, 0.6}, 2.2, false, false},
        {EventKind::tian, 1, {0.3, 0.6}, 0.45, false, false},
    };
    for (const Case& c : cases) {
        const auto ev = make(c.kind, c.user, c.r, c.alpha,
                             c.split ? std::optional<SplitVector>(s) : std::nullopt,
                             c.power ? std::optional<PowerSplit>(p) : std::nullopt);
        const double closed = closed_form_event_exponent(ev);
        const double oracle = outage_exponent(ev, 3.0, 0.02);
        if (ev.aggregate_rate() == 0.0 || closed == inf) {
            CHECK(oracle == inf);
            continue;
        }
        CHECK_MESSAGE(std::abs(closed - oracle) <= 0.05, event_kind_name(c.kind),
                      " user ", c.user, ": closed ", closed, " oracle ", oracle);
    }
}

TEST_CASE("finite-snr events sharpen toward the indicator") {
    // A channel whose exponents sit clearly inside the outage region must be
    // in outage at high snr, and clearly outside must not be.
    const EventSpec ev = make(EventKind::jd1, 1, {0.4, 0.0}, 1.0);
    ChannelRealization ch;
    ch.snr = 1e8;
    ch.alpha = 1.0;
    ch.h12 = ch.h21 = ch.h22 = cplx{1.0, 0.0};

    // g11 = snr^{-0.8}: u = 0.8 > 0.6, in outage
    ch.h11 = cplx{std::pow(ch.snr, -0.4), 0.0};
    CHECK(finite_snr_outage(ev, ch));

    // g11 = snr^{-0.4}: u = 0.4 < 0.6, not in outage
    ch.h11 = cplx{std::pow(ch.snr, -0.2), 0.0};
    CHECK(!finite_snr_outage(ev, ch));
}
