#pragma once

#include <map>
#include <optional>

#include "algseq/automaton.hpp"
#include "algseq/bounds.hpp"
#include "algseq/orbits.hpp"
#include "algseq/parser.hpp"

namespace algseq {

/// Stream of defining polynomials for the (q, h, d) cell: coefficient grid
/// over 0..h x 0..d with the x^0 y^0 cell fixed to 0, the x^0 y^1 cell fixed
/// to 1, and exact degrees deg_x = h, deg_y = d.  Enumeration is ascending in
/// the big-endian base-q encoding of the free-cell tuple.
class CandidateEnumerator {
  public:
    CandidateEnumerator(const Field& f, unsigned h, unsigned d);

    uint64_t total_combinations() const { return total_; }
    /// Decodes one tuple; empty when the tuple fails the exact-degree filter.
    std::optional<BiPoly> decode(uint64_t encoding) const;
    /// Next valid candidate in encoding order, or empty when exhausted.
    std::optional<BiPoly> next();
    uint64_t last_encoding() const { return cursor_ - 1; }

  private:
    const Field* f_;
    unsigned h_, d_;
    std::vector<std::pair<int, int>> cells_;  // free cells, (i, j) ascending
    uint64_t total_;
    uint64_t cursor_ = 0;
};

struct SearchResult {
    unsigned q = 0, h = 0, d = 0;
    uint64_t candidates_examined = 0;
    uint64_t max_unminimized_size = 0;
    uint64_t argmax_encoding = 0;
    std::string argmax_poly;
    uint64_t minimized_size_of_argmax = 0;
    uint64_t bound_total = 0;
    std::map<uint64_t, uint64_t> histogram;  // unminimized size -> count
    uint64_t max_orbit_size = 0;
    uint64_t argmax_orbit_encoding = 0;
    std::string argmax_orbit_poly;
};

struct SearchOptions {
    unsigned jobs = 1;
    uint64_t budget = uint64_t(1) << 33;  // candidates x state cap
};

SearchResult search(const Field& f, unsigned h, unsigned d, const SearchOptions& opts = {});

struct ConjectureReport {
    std::string r;
    unsigned m = 0;
    uint64_t predicted_dim = 0;
    uint64_t computed_dim = 0;
    bool match = false;
    // conjecture 2 extras
    std::vector<std::string> candidates;
    std::vector<bool> fixed;     // per candidate; skipped candidates excluded
    std::vector<bool> skipped;   // e_i = 0 mod p
    bool independence_checked = false;
    bool independent = false;
};

/// Conjectured dimension of {deg S <= deg R, lambda_0^m(S) = S} versus the
/// nullity of (L^m - I); requires R(0) != 0 and m | lcm of the factor degrees.
ConjectureReport conjecture1(const UniPoly& r, unsigned m);

/// Fixed points R_1^{e_1}...Delta(R_i^{e_i})...R_k^{e_k} of lambda_0 and their
/// linear independence together with R.
ConjectureReport conjecture2(const UniPoly& r);

/// Delta(S) = sum (s - j) c_j z^j for S of degree s.
UniPoly delta_op(const UniPoly& s);

struct Violation {
    std::string check;
    std::string poly;
    std::string detail;
};

struct VerifyOptions {
    size_t series_n = 512;
    unsigned kernel_emax = 24;
    unsigned emulation_samples = 200;
    unsigned cartier_pairs = 1000;
    unsigned jobs = 1;
    uint64_t seed = 1;
    uint64_t budget = uint64_t(1) << 33;
    size_t max_violations = 16;
};

struct VerifyReport {
    unsigned q = 0, h = 0, d = 0;
    uint64_t candidates = 0;
    uint64_t violations_total = 0;
    std::vector<Violation> violations;  // capped at max_violations
    bool ok() const { return violations_total == 0; }
};

/// One-shot property sweep over a cell: series/run agreement, leading-zero
/// invariance, the Cartier identity, module closure, emulation diagrams,
/// information-flow patterns, degree propositions, and the size sandwich.
VerifyReport verify_all(const Field& f, unsigned h, unsigned d, const VerifyOptions& opts = {});

// pieces of verify_all, separated so tests can fault-inject
std::optional<Violation> check_run_agreement(const Dfao& a, const std::vector<uint16_t>& prefix);
std::optional<Violation> check_zero_insensitivity(const Dfao& a, unsigned zeros = 3);
std::optional<Violation> check_size_sandwich(const FurstenbergInput& in, const Dfao& a,
                                             const Dfao& minimized,
                                             const KernelOracleReport& kernel);

void emit_csv(const SearchResult& r, const std::string& path);
void emit_json(const SearchResult& r, const std::string& path);
SearchResult search_result_from_json(const std::string& text);

}  // namespace algseq
