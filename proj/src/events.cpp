#include "icdmt/events.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "icdmt/dmt.hpp"

namespace icdmt {

namespace {

struct KindName {
    EventKind kind;
    const char* name;
};

constexpr std::array<KindName, 19> kKindNames{{
    {EventKind::p2p, "p2p"},
    {EventKind::jd1, "jd1"},
    {EventKind::jd2, "jd2"},
    {EventKind::hk1, "hk1"},
    {EventKind::hk2, "hk2"},
    {EventKind::hk3, "hk3"},
    {EventKind::hk4, "hk4"},
    {EventKind::hk5, "hk5"},
    {EventKind::hk6, "hk6"},
    {EventKind::mac1, "mac1"},
    {EventKind::mac2, "mac2"},
    {EventKind::mac3, "mac3"},
    {EventKind::etw1, "etw1"},
    {EventKind::etw2, "etw2"},
    {EventKind::etw3, "etw3"},
    {EventKind::etw4, "etw4"},
    {EventKind::strip_direct, "strip_direct"},
    {EventKind::strip_cross, "strip_cross"},
    {EventKind::tian, "tian"},
}};

bool is_hk(EventKind k) {
    return k == EventKind::hk1 || k == EventKind::hk2 || k == EventKind::hk3 ||
           k == EventKind::hk4 || k == EventKind::hk5 || k == EventKind::hk6;
}

bool is_etw(EventKind k) {
    return k == EventKind::etw1 || k == EventKind::etw2 ||
           k == EventKind::etw3 || k == EventKind::etw4;
}

int hk_index(EventKind k) {
    switch (k) {
        case EventKind::hk1: return 1;
        case EventKind::hk2: return 2;
        case EventKind::hk3: return 3;
        case EventKind::hk4: return 4;
        case EventKind::hk5: return 5;
        default: return 6;
    }
}

} // namespace

std::string event_kind_name(EventKind k) {
    for (const auto& e : kKindNames)
        if (e.kind == k) return e.name;
    return "?";
}

std::optional<EventKind> parse_event_kind(const std::string& name) {
    for (const auto& e : kKindNames)
        if (name == e.name) return e.kind;
    return std::nullopt;
}

void EventSpec::validate() const {
    check_user(user);
    check_rate_pair(r);
    check_alpha(alpha);
    const bool hk = is_hk(kind), etw = is_etw(kind);
    if (hk) {
        if (!s || !p)
            throw validation_error("superposition events require both the rate split and the power split");
    } else if (etw) {
        if (!s)
            throw validation_error("genie-bound events require the rate split (s2)");
        if (p)
            throw validation_error("genie-bound events carry no power split");
    } else if (s || p) {
        throw validation_error("this event kind carries neither rate split nor power split");
    }
    if (s) check_split(r, *s);
    if (p) check_power_split(*p);
}

int EventSpec::dim() const {
    switch (kind) {
        case EventKind::p2p:
        case EventKind::jd1:
        case EventKind::mac1:
        case EventKind::mac2:
        case EventKind::etw1:
        case EventKind::etw2:
        case EventKind::strip_direct:
            return 1;
        default:
            return 2;
    }
}

double EventSpec::aggregate_rate() const {
    const double r_u = r.of(user);
    const double r_o = r.of(other(user));
    switch (kind) {
        case EventKind::p2p:
        case EventKind::jd1:
        case EventKind::mac1:
        case EventKind::strip_direct:
        case EventKind::strip_cross:
        case EventKind::tian:
            return r_u;
        case EventKind::jd2:
        case EventKind::mac3:
            return r.r1 + r.r2;
        case EventKind::mac2:
            return r_o;
        case EventKind::hk1:
            return s->of(user);
        case EventKind::hk2:
            return r_u - s->of(user);
        case EventKind::hk3:
            return r_u;
        case EventKind::hk4:
            return s->of(user) + (r_o - s->of(other(user)));
        case EventKind::hk5:
            return (r_u - s->of(user)) + (r_o - s->of(other(user)));
        case EventKind::hk6:
            return r_u + (r_o - s->of(other(user)));
        case EventKind::etw1:
            return r.r1;
        case EventKind::etw2:
            return r.r2;
        case EventKind::etw3:
            return (r.r1 + r.r2) - s->s2;
        case EventKind::etw4:
            return s->s2;
    }
    return 0.0;
}

bool asymptotic_outage_indicator(const EventSpec& ev, std::span<const double> u) {
    if (static_cast<int>(u.size()) != ev.dim())
        throw validation_error("fading-exponent vector size must match the event dimension");
    for (double c : u)
        if (!(c >= 0.0))
            throw validation_error("fading exponents must be >= 0");

    const double rho = ev.aggregate_rate();
    if (rho == 0.0) return false;  // zero-rate events cannot occur at finite SNR

    const double a = ev.alpha;
    // Residual floor left by the interferer's private layer. A private stream
    // carrying no rate is switched off entirely, so its nominal power split
    // leaves no floor; this mirrors the neutralized branch of the closed forms.
    const auto hk_floor = [&](double v) {
        if (ev.s->of(other(ev.user)) == 0.0) return 0.0;
        return pos(a + ev.p->of(other(ev.user)) - 1.0 - v);
    };
    switch (ev.kind) {
        case EventKind::p2p:
        case EventKind::jd1:
        case EventKind::mac1:
        case EventKind::strip_direct:
        case EventKind::etw1:
        case EventKind::etw2:
            return 1.0 - u[0] <= rho;
        case EventKind::jd2:
        case EventKind::mac3:
            return std::max(1.0 - u[0], a - u[1]) <= rho;
        case EventKind::mac2:
            return a - u[0] <= rho;
        case EventKind::hk1:
            return ev.p->of(ev.user) - u[0] - hk_floor(u[1]) <= rho;
        case EventKind::hk2:
        case EventKind::hk3:
            return 1.0 - u[0] - hk_floor(u[1]) <= rho;
        case EventKind::hk4:
            return std::max(ev.p->of(ev.user) - u[0], a - u[1]) - hk_floor(u[1]) <= rho;
        case EventKind::hk5:
        case EventKind::hk6:
            return std::max(1.0 - u[0], a - u[1]) - hk_floor(u[1]) <= rho;
        case EventKind::etw3:
            return std::max(1.0 - u[0], a - u[1]) <= rho && u[1] <= a;
        case EventKind::etw4:
            // u[0]: user 2's direct coefficient, u[1]: the cross coefficient
            // that also gates the conditioning.
            return 1.0 - a - u[0] + u[1] <= rho && u[1] <= a;
        case EventKind::strip_cross:
            return a - u[1] - pos(1.0 - u[0]) <= rho;
        case EventKind::tian:
            return 1.0 - u[0] - pos(a - u[1]) <= rho;
    }
    return false;
}

double outage_exponent(const EventSpec& ev, double u_max, double step) {
    ev.validate();
    if (!(u_max >= 2.0))
        throw validation_error("exponent grid must extend to u_max >= 2");
    if (!(step > 0.0 && step <= 0.05))
        throw validation_error("exponent grid step must lie in (0, 0.05]");

    const int n = static_cast<int>(std::floor(u_max / step + 1e-9));
    double best = inf;
    bool best_on_boundary = false;

    if (ev.dim() == 1) {
        for (int k = 0; k <= n; ++k) {
            const double u = k * step;
            const std::array<double, 1> pt{u};
            if (asymptotic_outage_indicator(ev, pt)) {
                if (u < best) {
                    best = u;
                    best_on_boundary = (k == n);
                }
                break;  // scanning upward, later points cannot improve
            }
        }
    } else {
        for (int ku = 0; ku <= n; ++ku) {
            const double uu = ku * step;
            if (uu >= best) break;
            for (int kv = 0; kv <= n; ++kv) {
                const double vv = kv * step;
                const double cost = uu + vv;
                if (cost >= best) break;
                const std::array<double, 2> pt{uu, vv};
                if (asymptotic_outage_indicator(ev, pt)) {
                    best = cost;
                    best_on_boundary = (ku == n || kv == n);
                    break;
                }
            }
        }
    }

    if (best != inf && best_on_boundary)
        std::fprintf(stderr,
                     "note: outage_exponent(%s) minimized on the grid boundary; "
                     "consider a larger u_max\n",
                     event_kind_name(ev.kind).c_str());
    return best;
}

bool finite_snr_outage(const EventSpec& ev, const ChannelRealization& ch) {
    const double snr = ch.snr;
    const double a = ev.alpha;
    const double rho = ev.aggregate_rate();
    const double target = std::pow(snr, rho);  // 2^{rho log2 snr}

    // Coefficients as seen by the event's receiver.
    const double g_dir = ev.user == 1 ? ch.g11() : ch.g22();
    const double g_cross = ev.user == 1 ? ch.g21() : ch.g12();

    switch (ev.kind) {
        case EventKind::p2p:
        case EventKind::jd1:
        case EventKind::mac1:
        case EventKind::strip_direct:
            return 1.0 + snr * g_dir < target;
        case EventKind::jd2:
        case EventKind::mac3:
            return 1.0 + snr * g_dir + std::pow(snr, a) * g_cross < target;
        case EventKind::mac2:
            return 1.0 + std::pow(snr, a) * g_cross < target;
        case EventKind::hk1:
        case EventKind::hk2:
        case EventKind::hk3:
        case EventKind::hk4:
        case EventKind::hk5:
        case EventKind::hk6: {
            const double p_i = ev.p->of(ev.user);
            const double p_j = ev.p->of(other(ev.user));
            // A zero-rate private stream is not transmitted and leaves only
            // thermal noise behind after the public layers are removed.
            const double den = ev.s->of(other(ev.user)) == 0.0
                                   ? 1.0
                                   : 1.0 + std::pow(snr, a + p_j - 1.0) * g_cross;
            double num = 0.0;
            switch (ev.kind) {
                case EventKind::hk1: num = std::pow(snr, p_i) * g_dir; break;
                case EventKind::hk2:
                case EventKind::hk3: num = snr * g_dir; break;
                case EventKind::hk4:
                    num = std::pow(snr, p_i) * g_dir + std::pow(snr, a) * g_cross;
                    break;
                default: num = snr * g_dir + std::pow(snr, a) * g_cross; break;
            }
            return 1.0 + num / den < target;
        }
        case EventKind::etw1:
            return 2.0 * (1.0 + snr * ch.g11()) < target;
        case EventKind::etw2:
            return 2.0 * (1.0 + snr * ch.g22()) < target;
        case EventKind::etw3:
            return 2.0 * (1.0 + snr * ch.g11() + std::pow(snr, a) * ch.g21()) < target &&
                   std::pow(snr, a) * ch.g21() >= 1.0;
        case EventKind::etw4:
            return 2.0 * (1.0 + std::pow(snr, 1.0 - a) * ch.g22() / ch.g21()) < target &&
                   std::pow(snr, a) * ch.g21() >= 1.0;
        case EventKind::strip_cross: {
            // Decode user `user` at the other receiver; that receiver's own
            // signal acts as noise.
            const double g_x = ev.user == 1 ? ch.g12() : ch.g21();
            const double g_n = ev.user == 1 ? ch.g22() : ch.g11();
            return 1.0 + std::pow(snr, a) * g_x / (1.0 + snr * g_n) < target;
        }
        case EventKind::tian:
            return 1.0 + snr * g_dir / (1.0 + std::pow(snr, a) * g_cross) < target;
    }
    return false;
}

double closed_form_event_exponent(const EventSpec& ev) {
    ev.validate();
    const double a = ev.alpha;
    switch (ev.kind) {
        case EventKind::p2p:
        case EventKind::jd1:
        case EventKind::mac1:
        case EventKind::strip_direct:
            return pos(1.0 - ev.r.of(ev.user));
        case EventKind::jd2:
        case EventKind::mac3:
            return d_jd_joint_term(ev.r, a);
        case EventKind::mac2:
            return pos(a - ev.r.of(other(ev.user)));
        case EventKind::hk1:
        case EventKind::hk2:
        case EventKind::hk3:
        case EventKind::hk4:
        case EventKind::hk5:
        case EventKind::hk6: {
            const auto b = d_hk_terms(ev.r, *ev.s, *ev.p, a);
            return b.terms[(ev.user - 1) * 6 + (hk_index(ev.kind) - 1)].value;
        }
        case EventKind::etw1:
            return d_etw_terms(ev.r, ev.s->s2, a).d11;
        case EventKind::etw2:
            return d_etw_terms(ev.r, ev.s->s2, a).d12;
        case EventKind::etw3:
            return d_etw_terms(ev.r, ev.s->s2, a).d13;
        case EventKind::etw4:
            return d_etw_terms(ev.r, ev.s->s2, a).d14;
        case EventKind::strip_cross:
            return strip_cross_exponent(ev.r, ev.user, a);
        case EventKind::tian:
            return pos(1.0 - a - ev.r.of(ev.user));
    }
    return 0.0;
}

} // namespace icdmt
