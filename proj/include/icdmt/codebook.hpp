#ifndef ICDMT_CODEBOOK_HPP
#define ICDMT_CODEBOOK_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "icdmt/types.hpp"

// Finite codebooks with unit average power constraint per block, plus the
// private/public superposition structure used by the fixed-power-split
// scheme. Words are complex vectors of a common block length n with
// ||x||^2 <= n. The nominal size is round(snr^{n*rate}) but fixture books
// may carry any number of words.

namespace icdmt {

struct Codebook {
    int n = 1;           // block length
    double snr = 2.0;
    double rate = 0.0;   // multiplexing rate
    std::vector<std::vector<cplx>> words;

    // Nominal cardinality implied by (snr, rate); informational only.
    std::size_t nominal_size() const;
};

// Structural and power checks: n >= 1, every word has length n and
// ||x||^2 <= n (with a small relative slack), snr > 1.
void check_codebook(const Codebook& cb);

struct SuperpositionCodebook {
    Codebook private_book;  // words u with ||u||^2 <= n * snr^(p-1)
    Codebook public_book;   // words w with ||w|| <= sqrt(n) * (1 - snr^((p-1)/2))
    double p = 0.0;         // private power exponent, 0 <= p < 1
};

// Adds the layer power constraints on top of check_codebook for each layer;
// both layers must share n and snr.
void check_superposition_codebook(const SuperpositionCodebook& scb);

// Book of all sums u + w. Throws resource_error when the product of the two
// sizes exceeds cap.
Codebook combined_book(const SuperpositionCodebook& scb, std::size_t cap = 4096);

// Draws Gaussian layer books (private coordinate variance snr^(p-1), public
// variance (1 - snr^((p-1)/2))^2), rescaling any word that lands outside its
// power constraint onto the boundary. Word k of the private (public) book is
// generated from counter index k (2^32 + k) of the seed, so the draw is
// reproducible and order independent. Zero-rate layers get the single zero
// word. Sizes are round(snr^{n*s}) and round(snr^{n*t}); exceeding cap is a
// resource_error.
SuperpositionCodebook gen_superposition_codebook(int n, double s, double t,
                                                 double p, double snr,
                                                 std::uint64_t seed,
                                                 std::size_t cap = 4096);

// Text format: header line "n=<int> snr=<real> rate=<real>" (a private layer
// additionally carries "p=<real>"), then one word per line as 2n
// whitespace-separated reals, re and im interleaved. Reals are written with
// %.17g so a write/read round trip is exact.
struct CodebookFile {
    Codebook book;
    std::optional<double> p;  // present iff the header had a p= field
};

CodebookFile read_codebook(std::istream& in);
CodebookFile read_codebook_file(const std::string& path);

void write_codebook(std::ostream& out, const Codebook& cb,
                    std::optional<double> p = std::nullopt);
void write_codebook_file(const std::string& path, const Codebook& cb,
                         std::optional<double> p = std::nullopt);

// Reads the two layer files and assembles the superposition structure; the
// private header must carry p (parse_error otherwise).
SuperpositionCodebook read_superposition_files(const std::string& private_path,
                                               const std::string& public_path);

} // namespace icdmt

#endif
