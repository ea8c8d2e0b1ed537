#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "icdmt/channel.hpp"
#include "icdmt/codebook.hpp"
#include "icdmt/curve.hpp"
#include "icdmt/design.hpp"
#include "icdmt/dmt.hpp"
#include "icdmt/events.hpp"
#include "icdmt/montecarlo.hpp"
#include "icdmt/optimize.hpp"
#include "icdmt/types.hpp"

namespace {

using namespace icdmt;

// Exit codes: 0 success / all criteria pass, 1 usage, 2 validation,
// 3 insufficient data, 4 I/O, 5 code criteria not met.
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInsufficient = 3;
constexpr int kExitIo = 4;
constexpr int kExitCriteria = 5;

class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// key=value config files; flags win over config entries
// ---------------------------------------------------------------------------

std::map<std::string, std::string> load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open config file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos || eq == first)
            throw parse_error(path + ":" + std::to_string(lineno) +
                              ": expected key=value");
        std::string key = line.substr(first, eq - first);
        std::string val = line.substr(eq + 1);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        while (!val.empty() && (val.back() == ' ' || val.back() == '\t' ||
                                val.back() == '\r'))
            val.pop_back();
        const auto vfirst = val.find_first_not_of(" \t");
        val = vfirst == std::string::npos ? "" : val.substr(vfirst);
        kv[key] = val;
    }
    return kv;
}

double to_real(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return x;
    } catch (const std::exception&) {
        throw parse_error("config value for '" + key + "' is not a number: '" + v + "'");
    }
}

// Thin merge layer: a config entry fills a value only when the matching flag
// was not given on the command line.
struct ConfigBinder {
    const CLI::App* cmd;
    std::map<std::string, std::string> kv;

    bool pending(const char* flag, const char* key) const {
        return kv.count(key) != 0 && cmd->get_option(flag)->count() == 0;
    }
    void real(const char* flag, const char* key, double& var) const {
        if (pending(flag, key)) var = to_real(kv.at(key), key);
    }
    void real_opt(const char* flag, const char* key,
                  std::optional<double>& var) const {
        if (pending(flag, key)) var = to_real(kv.at(key), key);
    }
    void integer(const char* flag, const char* key, std::uint64_t& var) const {
        if (pending(flag, key)) {
            const double x = to_real(kv.at(key), key);
            if (x < 0 || x != std::floor(x))
                throw parse_error("config value for '" + std::string(key) +
                                  "' must be a nonnegative integer");
            var = static_cast<std::uint64_t>(x);
        }
    }
    void text(const char* flag, const char* key, std::string& var) const {
        if (pending(flag, key)) var = kv.at(key);
    }
    void flag(const char* flag_, const char* key, bool& var) const {
        if (pending(flag_, key)) {
            const std::string& v = kv.at(key);
            if (v == "1" || v == "true")
                var = true;
            else if (v == "0" || v == "false")
                var = false;
            else
                throw parse_error("config value for '" + std::string(key) +
                                  "' must be one of 1/0/true/false");
        }
    }
    void real_list(const char* flag, const char* key,
                   std::vector<double>& var) const {
        if (!pending(flag, key)) return;
        var.clear();
        std::istringstream ss(kv.at(key));
        std::string tok;
        while (std::getline(ss, tok, ',')) var.push_back(to_real(tok, key));
    }
};

ConfigBinder bind_config(const CLI::App* cmd, const std::string& path) {
    ConfigBinder b{cmd, {}};
    if (!path.empty()) b.kv = load_config(path);
    return b;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw io_error("failed writing '" + path + "'");
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text_file(out_path, content);
}

std::string g6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

GridSpec make_grid(double opt_step) {
    GridSpec g;
    g.step = opt_step;
    g.p_max = 1.0 - opt_step;
    return g;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw usage_error(msg);
}

// ---------------------------------------------------------------------------
// curve
// ---------------------------------------------------------------------------

struct CurveArgs {
    double alpha = std::nan("");
    double step = 0.05;
    double opt_step = 1.0 / 48.0;
    bool with_leveq = false;
    std::string out, config;
    CLI::App* cmd = nullptr;
};

int run_curve(CurveArgs& a) {
    const ConfigBinder cfg = bind_config(a.cmd, a.config);
    cfg.real("--alpha", "alpha", a.alpha);
    cfg.real("--step", "step", a.step);
    cfg.real("--opt-step", "opt-step", a.opt_step);
    cfg.flag("--with-leveq", "with-leveq", a.with_leveq);
    cfg.text("--out", "out", a.out);
    require(!std::isnan(a.alpha), "curve needs --alpha (or alpha= in the config)");

    const auto rows = symmetric_curve(a.alpha, a.step, make_grid(a.opt_step),
                                      a.with_leveq);
    emit(a.out, curve_csv(rows, a.with_leveq));
    return 0;
}

// ---------------------------------------------------------------------------
// optimize
// ---------------------------------------------------------------------------

struct OptimizeArgs {
    double alpha = std::nan("");
    double r1 = std::nan(""), r2 = std::nan("");
    double opt_step = 1.0 / 48.0;
    std::string config;
    CLI::App* cmd = nullptr;
};

int run_optimize(OptimizeArgs& a) {
    const ConfigBinder cfg = bind_config(a.cmd, a.config);
    cfg.real("--alpha", "alpha", a.alpha);
    cfg.real("--r1", "r1", a.r1);
    cfg.real("--r2", "r2", a.r2);
    cfg.real("--opt-step", "opt-step", a.opt_step);
    require(!std::isnan(a.alpha) && !std::isnan(a.r1) && !std::isnan(a.r2),
            "optimize needs --alpha, --r1 and --r2");

    const RatePair r{a.r1, a.r2};
    const GridSpec grid = make_grid(a.opt_step);
    const DmtBreakdown jd = d_jd(r, a.alpha);
    const HkOptimum hk = optimize_hk(r, a.alpha, grid);
    const EtwOptimum etw = optimize_etw(r, a.alpha, grid);

    std::ostringstream os;
    os << "alpha=" << g6(a.alpha) << " r1=" << g6(r.r1) << " r2=" << g6(r.r2)
       << "\n";
    os << "jd: d=" << g6(jd.overall) << " active=" << jd.active_label << "\n";
    for (const auto& t : jd.terms) os << "  " << t.label << "=" << g6(t.value) << "\n";
    os << "hk: d=" << g6(hk.value) << " s1=" << g6(hk.s.s1) << " s2=" << g6(hk.s.s2)
       << " p1=" << g6(hk.p.p1) << " p2=" << g6(hk.p.p2)
       << " active=" << hk.breakdown.active_label << "\n";
    for (const auto& t : hk.breakdown.terms)
        os << "  " << t.label << "=" << g6(t.value) << "\n";
    os << "etw: d=" << g6(etw.value) << " s2=" << g6(etw.s2) << "\n";
    os << "  d11=" << g6(etw.terms.d11) << " d12=" << g6(etw.terms.d12)
       << " d13=" << g6(etw.terms.d13) << " d14=" << g6(etw.terms.d14) << "\n";

    const double achievable = std::max(jd.overall, hk.value);
    const double gap = etw.value - achievable;
    // Two grid searches are involved, so allow one step of slack on each.
    const bool meets = gap <= 2.0 * grid.step + 1e-12;
    os << "achievable=" << g6(achievable) << " outer=" << g6(etw.value)
       << " gap=" << g6(gap) << "\n";
    os << "meets_outer_bound=" << (meets ? "yes" : "no") << "\n";
    std::cout << os.str();
    return 0;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateArgs {
    std::string event;
    int user = 1;
    double r1 = 0.0, r2 = 0.0;
    std::optional<double> s1, s2, p1, p2;
    double alpha = std::nan("");
    std::vector<double> snr_db{20.0, 30.0, 40.0, 50.0};
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::string out, config;
    CLI::App* cmd = nullptr;
};

int run_simulate(SimulateArgs& a) {
    const ConfigBinder cfg = bind_config(a.cmd, a.config);
    cfg.real("--alpha", "alpha", a.alpha);
    cfg.real("--r1", "r1", a.r1);
    cfg.real("--r2", "r2", a.r2);
    cfg.real_opt("--s1", "s1", a.s1);
    cfg.real_opt("--s2", "s2", a.s2);
    cfg.real_opt("--p1", "p1", a.p1);
    cfg.real_opt("--p2", "p2", a.p2);
    cfg.real_list("--snr-db", "snr-db", a.snr_db);
    cfg.integer("--trials", "trials", a.trials);
    cfg.integer("--seed", "seed", a.seed);
    cfg.text("--out", "out", a.out);
    require(!a.event.empty(), "simulate needs --event");
    require(!std::isnan(a.alpha), "simulate needs --alpha");

    const auto kind = parse_event_kind(a.event);
    require(kind.has_value(), "unknown event kind '" + a.event + "'");

    EventSpec ev;
    ev.kind = *kind;
    ev.user = a.user;
    ev.r = RatePair{a.r1, a.r2};
    if (a.s1 || a.s2) ev.s = SplitVector{a.s1.value_or(0.0), a.s2.value_or(0.0)};
    if (a.p1 || a.p2) ev.p = PowerSplit{a.p1.value_or(0.0), a.p2.value_or(0.0)};
    ev.alpha = a.alpha;
    ev.validate();

    const ExponentEstimate est = mc_exponent_fit(ev, a.snr_db, a.trials, a.seed);

    std::string csv = "snr_db,prob,stderr,hits\n";
    char buf[160];
    for (const FitPoint& pt : est.points) {
        const double se = pt.trials == 0
                              ? 0.0
                              : std::sqrt(pt.probability * (1.0 - pt.probability) /
                                          static_cast<double>(pt.trials));
        std::snprintf(buf, sizeof buf, "%.6g,%.6g,%.6g,%llu\n", pt.snr_db,
                      pt.probability, se,
                      static_cast<unsigned long long>(pt.hits));
        csv += buf;
    }
    emit(a.out, csv);

    std::snprintf(buf, sizeof buf, "slope=%.6g stderr=%.6g closed_form=%.6g\n",
                  est.slope, est.slope_stderr, closed_form_event_exponent(ev));
    std::cout << buf;
    return 0;
}

// ---------------------------------------------------------------------------
// check-codes
// ---------------------------------------------------------------------------

struct CheckArgs {
    std::string scheme;
    double alpha = std::nan("");
    double r1 = std::nan(""), r2 = std::nan("");
    std::optional<double> s1, s2, p1, p2;
    double epsilon = 0.05;
    std::string book1, book2, priv1, pub1, priv2, pub2;
    std::string config;
    CLI::App* cmd = nullptr;
};

int run_check_codes(CheckArgs& a) {
    const ConfigBinder cfg = bind_config(a.cmd, a.config);
    cfg.real("--alpha", "alpha", a.alpha);
    cfg.real("--r1", "r1", a.r1);
    cfg.real("--r2", "r2", a.r2);
    cfg.real_opt("--s1", "s1", a.s1);
    cfg.real_opt("--s2", "s2", a.s2);
    cfg.real_opt("--p1", "p1", a.p1);
    cfg.real_opt("--p2", "p2", a.p2);
    cfg.real("--epsilon", "epsilon", a.epsilon);
    require(!a.scheme.empty(), "check-codes needs --scheme");
    require(!std::isnan(a.alpha) && !std::isnan(a.r1) && !std::isnan(a.r2),
            "check-codes needs --alpha, --r1 and --r2");

    Scheme scheme;
    try {
        scheme = parse_scheme(a.scheme);
    } catch (const validation_error& e) {
        throw usage_error(e.what());
    }

    const RatePair r{a.r1, a.r2};
    std::optional<SplitVector> s;
    std::optional<PowerSplit> p;
    if (a.s1 || a.s2) s = SplitVector{a.s1.value_or(0.0), a.s2.value_or(0.0)};
    if (a.p1 || a.p2) p = PowerSplit{a.p1.value_or(0.0), a.p2.value_or(0.0)};

    CheckReport rep;
    if (scheme == Scheme::hk) {
        require(!a.priv1.empty() && !a.pub1.empty() && !a.priv2.empty() &&
                    !a.pub2.empty(),
                "the hk scheme needs --priv1, --pub1, --priv2 and --pub2");
        const SuperpositionCodebook b1 = read_superposition_files(a.priv1, a.pub1);
        const SuperpositionCodebook b2 = read_superposition_files(a.priv2, a.pub2);
        const DesignTargets targets =
            design_targets(scheme, r, s, p, a.alpha, a.epsilon);
        rep = check_criteria(targets, b1, b2);
    } else {
        require(!a.book1.empty() && !a.book2.empty(),
                "this scheme needs --book1 and --book2");
        const Codebook c1 = read_codebook_file(a.book1).book;
        const Codebook c2 = read_codebook_file(a.book2).book;
        const DesignTargets targets =
            design_targets(scheme, r, s, p, a.alpha, a.epsilon);
        rep = check_criteria(targets, c1, c2);
    }
    std::cout << format_report(rep);
    return rep.all_pass ? 0 : kExitCriteria;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Diversity-multiplexing tradeoff toolkit for the two-user fading "
        "interference channel"};
    app.require_subcommand(1);

    CurveArgs ca;
    CLI::App* curve = app.add_subcommand(
        "curve", "Symmetric-rate tradeoff curve for all schemes, as CSV");
    ca.cmd = curve;
    curve->add_option("--alpha", ca.alpha, "interference level (cross-link exponent)");
    curve->add_option("--step", ca.step, "symmetric rate grid step (default 0.05)");
    curve->add_option("--opt-step", ca.opt_step,
                      "split/power optimizer grid step (default 1/48)");
    curve->add_flag("--with-leveq", ca.with_leveq,
                    "append the decoupled outer-bound column (alpha >= 2)");
    curve->add_option("--out", ca.out, "output CSV path (default stdout)");
    curve->add_option("--config", ca.config, "key=value config file");

    OptimizeArgs oa;
    CLI::App* optimize = app.add_subcommand(
        "optimize", "Best split/power and genie bound at one rate pair");
    oa.cmd = optimize;
    optimize->add_option("--alpha", oa.alpha, "interference level");
    optimize->add_option("--r1", oa.r1, "multiplexing rate of user 1");
    optimize->add_option("--r2", oa.r2, "multiplexing rate of user 2");
    optimize->add_option("--opt-step", oa.opt_step, "optimizer grid step");
    optimize->add_option("--config", oa.config, "key=value config file");

    SimulateArgs sa;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Monte Carlo outage sweep and decay-slope fit for one event");
    sa.cmd = simulate;
    simulate->add_option("--event", sa.event,
                         "event kind (p2p, jd1, jd2, hk1..hk6, mac1..mac3, "
                         "etw1..etw4, strip_direct, strip_cross, tian)");
    simulate->add_option("--user", sa.user, "receiver/user index (1 or 2)");
    simulate->add_option("--r1", sa.r1, "multiplexing rate of user 1");
    simulate->add_option("--r2", sa.r2, "multiplexing rate of user 2");
    simulate->add_option("--s1", sa.s1, "private rate of user 1");
    simulate->add_option("--s2", sa.s2, "private rate of user 2");
    simulate->add_option("--p1", sa.p1, "private power exponent of user 1");
    simulate->add_option("--p2", sa.p2, "private power exponent of user 2");
    simulate->add_option("--alpha", sa.alpha, "interference level");
    simulate->add_option("--snr-db", sa.snr_db, "SNR points in dB")->delimiter(',');
    simulate->add_option("--trials", sa.trials, "Monte Carlo trials per point");
    simulate->add_option("--seed", sa.seed, "random stream seed");
    simulate->add_option("--out", sa.out, "output CSV path (default stdout)");
    simulate->add_option("--config", sa.config, "key=value config file");

    CheckArgs ka;
    CLI::App* check = app.add_subcommand(
        "check-codes", "Certify codebook files against a scheme's design criteria");
    ka.cmd = check;
    check->add_option("--scheme", ka.scheme,
                      "jd, jd_very_strong, hk, mac or strip");
    check->add_option("--alpha", ka.alpha, "interference level");
    check->add_option("--r1", ka.r1, "multiplexing rate of user 1");
    check->add_option("--r2", ka.r2, "multiplexing rate of user 2");
    check->add_option("--s1", ka.s1, "private rate of user 1 (hk)");
    check->add_option("--s2", ka.s2, "private rate of user 2 (hk)");
    check->add_option("--p1", ka.p1, "private power exponent of user 1 (hk)");
    check->add_option("--p2", ka.p2, "private power exponent of user 2 (hk)");
    check->add_option("--epsilon", ka.epsilon, "criterion slack exponent (> 0)");
    check->add_option("--book1", ka.book1, "codebook file of user 1");
    check->add_option("--book2", ka.book2, "codebook file of user 2");
    check->add_option("--priv1", ka.priv1, "private layer file of user 1 (hk)");
    check->add_option("--pub1", ka.pub1, "public layer file of user 1 (hk)");
    check->add_option("--priv2", ka.priv2, "private layer file of user 2 (hk)");
    check->add_option("--pub2", ka.pub2, "public layer file of user 2 (hk)");
    check->add_option("--config", ka.config, "key=value config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*curve) return run_curve(ca);
        if (*optimize) return run_optimize(oa);
        if (*simulate) return run_simulate(sa);
        if (*check) return run_check_codes(ka);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const out_of_regime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const insufficient_data_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInsufficient;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
