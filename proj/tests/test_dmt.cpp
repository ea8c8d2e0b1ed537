#include <doctest.h>

#include <cmath>
#include <vector>

#include "icdmt/channel.hpp"
#include "icdmt/dmt.hpp"
#include "icdmt/types.hpp"

using namespace icdmt;

namespace {

const DmtTerm& term(const DmtBreakdown& b, const std::string& label) {
    for (const auto& t : b.terms)
        if (t.label == label) return t;
    REQUIRE_MESSAGE(false, "missing term ", label);
    static DmtTerm dummy;
    return dummy;
}

} // namespace

TEST_CASE("interference bands") {
    CHECK(interference_band(0.0) == InterferenceBand::weak);
    CHECK(interference_band(0.66) == InterferenceBand::weak);
    CHECK(interference_band(2.0 / 3.0) == InterferenceBand::moderate);
    CHECK(interference_band(0.99) == InterferenceBand::moderate);
    CHECK(interference_band(1.0) == InterferenceBand::strong);
    CHECK(interference_band(1.99) == InterferenceBand::strong);
    CHECK(interference_band(2.0) == InterferenceBand::very_strong);
    CHECK(interference_band(5.0) == InterferenceBand::very_strong);
    CHECK(band_name(InterferenceBand::moderate) == "moderate");
    CHECK(band_name(InterferenceBand::very_strong) == "very_strong");
    CHECK_THROWS_AS(interference_band(-0.1), validation_error);
}

TEST_CASE("joint-decoding exponent") {
    SUBCASE("zero rates") {
        const DmtBreakdown b = d_jd({0.0, 0.0}, 0.5);
        CHECK(b.overall == 1.0);
        CHECK(term(b, "1.single").value == 1.0);
        CHECK(term(b, "2.single").value == 1.0);
        CHECK(term(b, "joint").value == doctest::Approx(1.5).epsilon(1e-12));
    }
    SUBCASE("very strong symmetric") {
        const DmtBreakdown b = d_jd({0.5, 0.5}, 2.0);
        CHECK(b.overall == 0.5);
        CHECK(term(b, "joint").value == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("sum-rate limited point") {
        const DmtBreakdown b = d_jd({0.4, 0.4}, 1.0);
        CHECK(b.overall == doctest::Approx(0.4).epsilon(1e-12));
        CHECK(b.active_label == "joint");
    }
    SUBCASE("joint term is computed on the aggregate rate") {
        CHECK(d_jd_joint_term({0.3, 0.3}, 0.9) ==
              doctest::Approx(0.7).epsilon(1e-12));
        CHECK(d_jd_joint_term({0.4, 0.4}, 1.0) ==
              doctest::Approx(0.4).epsilon(1e-12));
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(d_jd({1.2, 0.0}, 1.0), validation_error);
        CHECK_THROWS_AS(d_jd({0.5, -0.1}, 1.0), validation_error);
        CHECK_THROWS_AS(d_jd({0.5, 0.5}, -1.0), validation_error);
    }
}

TEST_CASE("superposition terms at the moderate-regime reference point") {
    const RatePair r{0.5, 0.5};
    const SplitVector s{1.0 / 6.0, 1.0 / 6.0};
    const PowerSplit p{1.0 / 3.0, 1.0 / 3.0};
    const DmtBreakdown b = d_hk_terms(r, s, p, 2.0 / 3.0);

    const double expect[6] = {1.0 / 6.0, 2.0 / 3.0, 0.5,
                              1.0 / 6.0, 1.0 / 3.0, 1.0 / 6.0};
    for (int i = 1; i <= 2; ++i)
        for (int l = 1; l <= 6; ++l) {
            const std::string label = std::to_string(i) + "." + std::to_string(l);
            CHECK_MESSAGE(
                term(b, label).value == doctest::Approx(expect[l - 1]).epsilon(1e-12),
                "term ", label);
        }
    CHECK(b.overall == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(d_hk_given(r, s, p, 2.0 / 3.0) == b.overall);
}

TEST_CASE("superposition degenerate and excluded cases") {
    SUBCASE("zero private power with a positive private rate gives zero") {
        CHECK(d_hk_given({0.4, 0.4}, {0.2, 0.2}, {0.0, 0.0}, 0.5) == 0.0);
    }
    SUBCASE("zero rates degenerate to the zero-rate convention") {
        const DmtBreakdown b = d_hk_terms({0.0, 0.0}, {0.0, 0.0}, {0.3, 0.7}, 1.0);
        CHECK(b.overall == 1.0);
        CHECK(term(b, "zero_rate").value == 1.0);
        for (int l = 1; l <= 6; ++l)
            CHECK(term(b, "1." + std::to_string(l)).value == inf);
    }
    SUBCASE("per-term exclusions follow the zero-rate events") {
        const DmtBreakdown b = d_hk_terms({0.4, 0.4}, {0.0, 0.2}, {0.5, 0.5}, 0.8);
        CHECK(term(b, "1.1").value == inf);
        CHECK(term(b, "1.4").value == inf);
        CHECK(term(b, "1.2").value != inf);
        CHECK(term(b, "2.1").value != inf);
        CHECK(term(b, "2.5").value != inf);
    }
    SUBCASE("fully private rates exclude the public-layer terms") {
        const DmtBreakdown b = d_hk_terms({0.4, 0.4}, {0.4, 0.4}, {0.5, 0.5}, 0.8);
        CHECK(term(b, "1.2").value == inf);   // t1 = 0
        CHECK(term(b, "1.5").value == inf);   // t1 + t2 = 0
        CHECK(term(b, "1.3").value != inf);
        CHECK(term(b, "1.6").value != inf);
    }
}

TEST_CASE("pure public split reduces the superposition scheme to joint decoding") {
    const double alphas[] = {0.3, 2.0 / 3.0, 1.0, 1.7, 2.4};
    const double rates[] = {0.0, 0.2, 0.5, 0.9, 1.0};
    for (double a : alphas)
        for (double r1 : rates)
            for (double r2 : rates) {
                if (r1 == 0.0 && r2 == 0.0) continue;  // zero-rate convention differs
                const RatePair r{r1, r2};
                CHECK(d_hk_given(r, {0.0, 0.0}, {0.4, 0.8}, a) == d_jd(r, a).overall);
            }
}

TEST_CASE("raw term vector matches the labelled breakdown") {
    CounterRng rng(99, 0);
    for (int t = 0; t < 200; ++t) {
        const RatePair r{rng.next_unit(), rng.next_unit()};
        const SplitVector s{r.r1 * rng.next_unit(), r.r2 * rng.next_unit()};
        const PowerSplit p{0.999 * rng.next_unit(), 0.999 * rng.next_unit()};
        const double a = 2.5 * rng.next_unit();
        const auto v = hk_term_values(r, s, p, a);
        const DmtBreakdown b = d_hk_terms(r, s, p, a);
        for (int k = 0; k < 12; ++k) CHECK(b.terms[k].value == v[k]);
        CHECK(hk_min_value(r, s, p, a) == b.overall);
    }
}

TEST_CASE("term-at-aggregate hook agrees with the terms at their own rates") {
    const RatePair r{0.5, 0.5};
    const SplitVector s{1.0 / 6.0, 1.0 / 6.0};
    const PowerSplit p{1.0 / 3.0, 1.0 / 3.0};
    const double a = 2.0 / 3.0;

    CHECK(hk_term_at_aggregate(1, 1, r, s, p, a, 1.0 / 6.0) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    for (int i = 1; i <= 2; ++i)
        for (int l = 1; l <= 6; ++l) {
            const double rho = hk_aggregate_rate(i, l, r, s);
            const double direct = d_hk_terms(r, s, p, a).terms[(i - 1) * 6 + l - 1].value;
            CHECK(hk_term_at_aggregate(i, l, r, s, p, a, rho) ==
                  doctest::Approx(direct).epsilon(1e-12));
        }

    // nonincreasing in the aggregate variable
    for (int i = 1; i <= 2; ++i)
        for (int l = 1; l <= 6; ++l) {
            double prev = inf;
            for (double x = 0.0; x <= 3.0; x += 0.125) {
                const double v = hk_term_at_aggregate(i, l, r, s, p, a, x);
                CHECK(v <= prev + 1e-12);
                prev = v;
            }
        }

    CHECK_THROWS_AS(hk_term_at_aggregate(1, 7, r, s, p, a, 0.1), validation_error);
    CHECK_THROWS_AS(hk_term_at_aggregate(3, 1, r, s, p, a, 0.1), validation_error);
}

TEST_CASE("compound multiple-access outer bound") {
    SUBCASE("cross-limited weak point") {
        const DmtBreakdown b = d_mac({0.3, 0.3}, 0.5);
        CHECK(b.overall == doctest::Approx(0.2).epsilon(1e-12));
        CHECK(term(b, "1.cross").value == doctest::Approx(0.2).epsilon(1e-12));
        CHECK(b.active_label == "1.cross");
    }
    SUBCASE("single-rate limited very strong point") {
        const DmtBreakdown b = d_mac({0.5, 0.5}, 2.0);
        CHECK(b.overall == 0.5);
    }
    SUBCASE("zero rates cap at min(1, alpha)") {
        CHECK(d_mac({0.0, 0.0}, 0.7).overall == doctest::Approx(0.7).epsilon(1e-12));
        CHECK(d_mac({0.0, 0.0}, 1.4).overall == 1.0);
    }
    SUBCASE("never exceeds the joint-decoding bound") {
        for (double a : {0.2, 0.7, 1.0, 1.6, 2.3})
            for (double r1 : {0.0, 0.3, 0.8})
                for (double r2 : {0.1, 0.5, 1.0})
                    CHECK(d_mac({r1, r2}, a).overall <=
                          d_jd({r1, r2}, a).overall + 1e-12);
    }
}

TEST_CASE("orthogonal time sharing") {
    SUBCASE("even split") {
        const DmtBreakdown b = d_ts({0.3, 0.3}, {0.5, 0.5});
        CHECK(b.overall == doctest::Approx(0.4).epsilon(1e-12));
    }
    SUBCASE("uneven split favours the longer slot") {
        const DmtBreakdown b = d_ts({0.3, 0.3}, {0.6, 0.4});
        CHECK(term(b, "1").value == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(term(b, "2").value == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(b.overall == doctest::Approx(0.25).epsilon(1e-12));
    }
    SUBCASE("slot rate hitting capacity kills the diversity") {
        CHECK(d_ts({0.3, 0.7}, {0.3, 0.7}).overall == 0.0);
        CHECK(d_ts({0.5, 0.2}, {0.5, 0.5}).overall == 0.0);
    }
    SUBCASE("an idle user with zero rate does not constrain the other") {
        const DmtBreakdown b = d_ts({0.0, 0.4}, {0.0, 1.0});
        CHECK(term(b, "1").value == inf);
        CHECK(b.overall == doctest::Approx(0.6).epsilon(1e-12));
    }
    SUBCASE("a zero-length slot with positive rate is hopeless") {
        CHECK(d_ts({0.4, 0.4}, {0.0, 1.0}).overall == 0.0);
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(d_ts({0.3, 0.3}, {0.6, 0.6}), validation_error);
        CHECK_THROWS_AS(d_ts({0.3, 0.3}, {-0.1, 1.1}), validation_error);
    }
}

TEST_CASE("treating interference as noise") {
    SUBCASE("no interference recovers the point-to-point tradeoff") {
        const DmtBreakdown b = d_tian({0.3, 0.5}, 0.0);
        CHECK(term(b, "1").value == doctest::Approx(0.7).epsilon(1e-12));
        CHECK(term(b, "2").value == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("weak interference shifts the tradeoff down by alpha") {
        CHECK(d_tian({0.2, 0.2}, 0.5).overall == doctest::Approx(0.3).epsilon(1e-12));
    }
    SUBCASE("at strong interference the diversity collapses") {
        CHECK(d_tian({0.1, 0.1}, 1.0).overall == 0.0);
        CHECK(d_tian({0.1, 0.1}, 1.8).overall == 0.0);
    }
    SUBCASE("carries its provenance qualifier") {
        CHECK(d_tian({0.2, 0.2}, 0.5).provenance == "derived, oracle-validated");
    }
}

TEST_CASE("genie-aided outer bound terms") {
    SUBCASE("no side information at strong interference") {
        const EtwTermSet t = d_etw_terms({0.5, 0.5}, 0.0, 1.5);
        CHECK(t.d11 == 0.5);
        CHECK(t.d12 == 0.5);
        CHECK(t.d13 == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(t.d14 == 1.0);
        CHECK(t.min() == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("moderate interference with the equalizing side rate") {
        const EtwTermSet t = d_etw_terms({0.5, 0.5}, 1.0 / 6.0, 2.0 / 3.0);
        CHECK(t.d13 == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
        CHECK(t.d14 == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
        CHECK(t.min() == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    }
    SUBCASE("positive side rate is free at strong interference") {
        const EtwTermSet t = d_etw_terms({0.4, 0.4}, 0.01, 1.0);
        CHECK(t.d14 == 0.0);
        CHECK(t.min() == 0.0);
    }
    SUBCASE("array accessor") {
        const EtwTermSet t = d_etw_terms({0.5, 0.5}, 0.0, 1.5);
        const auto a = t.as_array();
        CHECK(a[0] == t.d11);
        CHECK(a[3] == t.d14);
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(d_etw_terms({0.5, 0.5}, 0.6, 1.0), validation_error);
        CHECK_THROWS_AS(d_etw_terms({0.5, 0.5}, -0.1, 1.0), validation_error);
    }
}

TEST_CASE("stripping decoder") {
    SUBCASE("asymmetric very strong point") {
        const DmtBreakdown b = d_strip({0.5, 0.3}, 2.0);
        CHECK(term(b, "1.direct").value == 0.5);
        CHECK(term(b, "2.direct").value == doctest::Approx(0.7).epsilon(1e-12));
        CHECK(term(b, "1.upper").value == 0.5);
        CHECK(term(b, "2.upper").value == 0.5);
        CHECK(b.overall == 0.5);
    }
    SUBCASE("full rates have no diversity") {
        CHECK(d_strip({1.0, 1.0}, 2.5).overall == 0.0);
    }
    SUBCASE("equals the decoupled bound across the regime") {
        for (double a : {2.0, 2.5, 3.0})
            for (double r1 : {0.0, 0.2, 0.6, 1.0})
                for (double r2 : {0.1, 0.5, 0.9})
                    CHECK(d_strip({r1, r2}, a).overall ==
                          d_very_strong_outer({r1, r2}));
    }
    SUBCASE("undefined below very strong interference") {
        CHECK_THROWS_AS(d_strip({0.5, 0.5}, 1.9), out_of_regime_error);
    }
    SUBCASE("cross-decoding exponent") {
        CHECK(strip_cross_exponent({0.2, 0.4}, 2, 2.0) ==
              doctest::Approx(0.6).epsilon(1e-12));
        CHECK(strip_cross_exponent({0.1, 0.4}, 1, 2.2) ==
              doctest::Approx(1.1).epsilon(1e-12));
    }
}

TEST_CASE("decoupled outer bound and the achievable envelope") {
    CHECK(d_very_strong_outer({0.0, 0.0}) == 1.0);
    CHECK(d_very_strong_outer({0.5, 0.3}) == 0.5);
    CHECK(d_very_strong_outer({1.0, 0.0}) == 0.0);

    CHECK(d_overall_achievable(0.3, 0.5) == 0.5);
    CHECK(d_overall_achievable(0.7, 0.2) == 0.7);
    CHECK_THROWS_AS(d_overall_achievable(-0.1, 0.5), validation_error);
}

TEST_CASE("joint decoding equals the decoupled bound in the very strong regime") {
    for (double a : {2.0, 2.2, 3.0})
        for (double r1 : {0.0, 0.25, 0.5, 0.75, 1.0})
            for (double r2 : {0.0, 0.25, 0.5, 0.75, 1.0})
                CHECK(d_jd({r1, r2}, a).overall == d_very_strong_outer({r1, r2}));
}

TEST_CASE("exponents are nonincreasing in the rates") {
    const double alphas[] = {0.4, 0.8, 1.2, 2.1};
    for (double a : alphas) {
        double prev_jd = inf, prev_mac = inf, prev_tian = inf;
        for (int k = 0; k <= 20; ++k) {
            const double r = k * 0.05;
            const RatePair rp{r, r};
            const double jd = d_jd(rp, a).overall;
            const double mac = d_mac(rp, a).overall;
            const double ti = d_tian(rp, a).overall;
            CHECK(jd <= prev_jd + 1e-12);
            CHECK(mac <= prev_mac + 1e-12);
            CHECK(ti <= prev_tian + 1e-12);
            prev_jd = jd;
            prev_mac = mac;
            prev_tian = ti;
        }
    }
}
