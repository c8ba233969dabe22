#pragma once

#include "algseq/furstenberg.hpp"

namespace algseq {

/// Deterministic finite automaton with output, LSD-first base-q input.
/// Transitions are stored flat with stride q; state 0 need not be initial.
struct Dfao {
    const Field* f = nullptr;
    unsigned q = 0;
    uint32_t initial = 0;
    std::vector<uint16_t> out;        // output code per state
    std::vector<std::string> label;   // optional; empty strings when absent
    std::vector<uint32_t> tr;         // size states * q

    size_t size() const { return out.size(); }
    uint32_t next(uint32_t s, unsigned digit) const { return tr[(size_t)s * q + digit]; }

    friend bool operator==(const Dfao& a, const Dfao& b) {
        return a.q == b.q && a.initial == b.initial && a.out == b.out && a.tr == b.tr &&
               a.label == b.label;
    }
};

/// Breadth-first closure of S0 under S -> Lambda_{r,0}(S Q^{q-1}); states are
/// interned bivariate polynomials, outputs their constant terms, labels their
/// renderings.
Dfao build(const FurstenbergInput& in);

/// Closure under S -> Lambda_{r,r}(S Q^{q-1}): generates the diagonal of S/Q
/// for plain polynomials with Q(0,0) != 0.
Dfao build_diagonal(const BiPoly& s, const BiPoly& q);

/// Output after feeding the standard base-q digits of n, least significant first.
Fq run(const Dfao& a, uint64_t n);

bool zero_insensitive(const Dfao& a);

/// Moore partition refinement followed by a canonical BFS renumbering.
Dfao minimize(const Dfao& a);

struct KernelOracleReport {
    size_t distinct_count = 0;
    std::vector<std::pair<unsigned, uint64_t>> representatives;  // (e, r) per class
    size_t window = 0;      // smallest comparison window used
    bool exact_closed = false;  // every successor classified; still only a lower bound
};

/// Lower bound on the q-kernel size from a sequence prefix: breadth-first
/// refinement of the subsequences a(q^e n + r), deduplicated by comparison on
/// the shared window.  Subsequences whose window drops below 8 symbols are
/// left unclassified and flip exact_closed off.
KernelOracleReport kernel_oracle(const std::vector<uint16_t>& prefix, unsigned q,
                                 unsigned e_max);

std::string serialize(const Dfao& a);
Dfao deserialize(const std::string& text);

}  // namespace algseq
