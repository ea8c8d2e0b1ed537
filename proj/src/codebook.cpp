#include "icdmt/codebook.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "icdmt/channel.hpp"

namespace icdmt {

std::size_t Codebook::nominal_size() const {
    return static_cast<std::size_t>(std::llround(std::pow(snr, n * rate)));
}

namespace {

double word_energy(const std::vector<cplx>& w) {
    double e = 0.0;
    for (const cplx& c : w) e += std::norm(c);
    return e;
}

} // namespace

void check_codebook(const Codebook& cb) {
    if (cb.n < 1)
        throw validation_error("codebook block length must be >= 1");
    if (!(cb.snr > 1.0) || !std::isfinite(cb.snr))
        throw validation_error("codebook snr must be finite and > 1");
    if (!(cb.rate >= 0.0) || !std::isfinite(cb.rate))
        throw validation_error("codebook rate must be finite and >= 0");
    if (cb.words.empty())
        throw validation_error("codebook must contain at least one word");
    for (const auto& w : cb.words) {
        if (static_cast<int>(w.size()) != cb.n)
            throw validation_error("codebook word length differs from block length");
        if (word_energy(w) > cb.n * (1.0 + 1e-9))
            throw validation_error("codebook word violates the power constraint");
    }
}

void check_superposition_codebook(const SuperpositionCodebook& scb) {
    check_codebook(scb.private_book);
    check_codebook(scb.public_book);
    check_power_split(PowerSplit{scb.p, scb.p});
    if (scb.private_book.n != scb.public_book.n)
        throw validation_error("superposition layers must share the block length");
    if (scb.private_book.snr != scb.public_book.snr)
        throw validation_error("superposition layers must share the snr");

    const int n = scb.private_book.n;
    const double snr = scb.private_book.snr;
    const double priv_cap = n * std::pow(snr, scb.p - 1.0);
    const double pub_norm_cap =
        std::sqrt(static_cast<double>(n)) * (1.0 - std::pow(snr, (scb.p - 1.0) / 2.0));
    for (const auto& u : scb.private_book.words)
        if (word_energy(u) > priv_cap * (1.0 + 1e-9))
            throw validation_error("private word violates the layer power constraint");
    for (const auto& w : scb.public_book.words)
        if (std::sqrt(word_energy(w)) > pub_norm_cap * (1.0 + 1e-9))
            throw validation_error("public word violates the layer power constraint");
}

Codebook combined_book(const SuperpositionCodebook& scb, std::size_t cap) {
    check_superposition_codebook(scb);
    const std::size_t mu = scb.private_book.words.size();
    const std::size_t mw = scb.public_book.words.size();
    if (mu * mw > cap)
        throw resource_error("combined codebook would exceed the size cap");

    Codebook cb;
    cb.n = scb.private_book.n;
    cb.snr = scb.private_book.snr;
    cb.rate = scb.private_book.rate + scb.public_book.rate;
    cb.words.reserve(mu * mw);
    for (const auto& u : scb.private_book.words)
        for (const auto& w : scb.public_book.words) {
            std::vector<cplx> x(u.size());
            for (std::size_t k = 0; k < x.size(); ++k) x[k] = u[k] + w[k];
            cb.words.push_back(std::move(x));
        }
    return cb;
}

namespace {

// index offset separating the public layer's counter stream from the private
// one; books stay reproducible independently of draw order.
constexpr std::uint64_t kPublicStream = std::uint64_t{1} << 32;

std::vector<cplx> draw_word(std::uint64_t seed, std::uint64_t index, int n,
                            double coord_stddev, double norm_cap) {
    CounterRng rng(seed, index);
    std::vector<cplx> w(n);
    double energy = 0.0;
    for (int k = 0; k < n; ++k) {
        w[k] = coord_stddev * rng.next_cn01();
        energy += std::norm(w[k]);
    }
    if (energy > norm_cap * norm_cap && energy > 0.0) {
        const double scale = norm_cap / std::sqrt(energy);
        for (cplx& c : w) c *= scale;
    }
    return w;
}

Codebook gen_layer(int n, double rate, double snr, double coord_stddev,
                   double norm_cap, std::uint64_t seed, std::uint64_t stream,
                   std::size_t cap) {
    Codebook cb;
    cb.n = n;
    cb.snr = snr;
    cb.rate = rate;
    if (rate == 0.0) {
        cb.words.assign(1, std::vector<cplx>(n, cplx{0.0, 0.0}));
        return cb;
    }
    const double size_f = std::pow(snr, n * rate);
    if (!(size_f <= static_cast<double>(cap) + 0.5))
        throw resource_error("codebook size snr^(n*rate) exceeds the cap");
    const std::size_t m = static_cast<std::size_t>(std::llround(size_f));
    cb.words.reserve(m);
    for (std::size_t k = 0; k < m; ++k)
        cb.words.push_back(draw_word(seed, stream + k, n, coord_stddev, norm_cap));
    return cb;
}

} // namespace

SuperpositionCodebook gen_superposition_codebook(int n, double s, double t,
                                                 double p, double snr,
                                                 std::uint64_t seed,
                                                 std::size_t cap) {
    if (n < 2)
        throw validation_error("superposition codebooks require block length >= 2");
    if (!(s >= 0.0) || !(t >= 0.0) || !std::isfinite(s) || !std::isfinite(t))
        throw validation_error("layer rates must be finite and >= 0");
    check_power_split(PowerSplit{p, p});
    if (!(snr > 1.0) || !std::isfinite(snr))
        throw validation_error("codebook snr must be finite and > 1");

    const double root_n = std::sqrt(static_cast<double>(n));
    SuperpositionCodebook scb;
    scb.p = p;
    // private coordinates ~ CN(0, snr^(p-1)); cap ||u|| at sqrt(n snr^(p-1))
    scb.private_book =
        gen_layer(n, s, snr, std::pow(snr, (p - 1.0) / 2.0),
                  root_n * std::pow(snr, (p - 1.0) / 2.0), seed, 0, cap);
    // public coordinates ~ CN(0, (1 - snr^((p-1)/2))^2), capped so u + w
    // meets the overall unit power constraint via the triangle inequality
    const double shrink = 1.0 - std::pow(snr, (p - 1.0) / 2.0);
    scb.public_book = gen_layer(n, t, snr, shrink, root_n * shrink, seed,
                                kPublicStream, cap);
    return scb;
}

// ---------------------------------------------------------------------------
// Text input/output
// ---------------------------------------------------------------------------

namespace {

double parse_real(const std::string& tok, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw parse_error("");
        return v;
    } catch (const parse_error&) {
        throw parse_error(std::string("malformed ") + what + ": '" + tok + "'");
    } catch (const std::exception&) {
        throw parse_error(std::string("malformed ") + what + ": '" + tok + "'");
    }
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

CodebookFile read_codebook(std::istream& in) {
    std::string header;
    if (!std::getline(in, header))
        throw parse_error("codebook file is empty");

    CodebookFile f;
    bool have_n = false, have_snr = false, have_rate = false;
    std::istringstream hs(header);
    std::string tok;
    while (hs >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw parse_error("codebook header expects key=value fields, got '" + tok + "'");
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        if (key == "n") {
            const double v = parse_real(val, "block length");
            f.book.n = static_cast<int>(v);
            if (f.book.n != v) throw parse_error("block length must be an integer");
            have_n = true;
        } else if (key == "snr") {
            f.book.snr = parse_real(val, "snr");
            have_snr = true;
        } else if (key == "rate") {
            f.book.rate = parse_real(val, "rate");
            have_rate = true;
        } else if (key == "p") {
            f.p = parse_real(val, "power exponent");
        } else {
            throw parse_error("unknown codebook header field '" + key + "'");
        }
    }
    if (!have_n || !have_snr || !have_rate)
        throw parse_error("codebook header must provide n=, snr= and rate=");

    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<double> vals;
        while (ls >> tok) vals.push_back(parse_real(tok, "codeword entry"));
        if (vals.empty()) continue;  // ignore blank lines
        if (static_cast<int>(vals.size()) != 2 * f.book.n)
            throw parse_error("codeword line must hold exactly 2n reals");
        std::vector<cplx> w(f.book.n);
        for (int k = 0; k < f.book.n; ++k) w[k] = cplx{vals[2 * k], vals[2 * k + 1]};
        f.book.words.push_back(std::move(w));
    }
    check_codebook(f.book);
    return f;
}

CodebookFile read_codebook_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open codebook file '" + path + "'");
    try {
        return read_codebook(in);
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

void write_codebook(std::ostream& out, const Codebook& cb,
                    std::optional<double> p) {
    out << "n=" << cb.n << " snr=" << fmt17(cb.snr) << " rate=" << fmt17(cb.rate);
    if (p) out << " p=" << fmt17(*p);
    out << '\n';
    for (const auto& w : cb.words) {
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k) out << ' ';
            out << fmt17(w[k].real()) << ' ' << fmt17(w[k].imag());
        }
        out << '\n';
    }
}

void write_codebook_file(const std::string& path, const Codebook& cb,
                         std::optional<double> p) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    write_codebook(out, cb, p);
    out.flush();
    if (!out) throw io_error("failed writing codebook file '" + path + "'");
}

SuperpositionCodebook read_superposition_files(const std::string& private_path,
                                               const std::string& public_path) {
    CodebookFile priv = read_codebook_file(private_path);
    CodebookFile pub = read_codebook_file(public_path);
    if (!priv.p)
        throw parse_error(private_path + ": private layer header must carry p=");
    SuperpositionCodebook scb;
    scb.private_book = std::move(priv.book);
    scb.public_book = std::move(pub.book);
    scb.p = *priv.p;
    check_superposition_codebook(scb);
    return scb;
}

} // namespace icdmt
