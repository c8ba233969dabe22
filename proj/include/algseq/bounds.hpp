#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algseq/factorize.hpp"

namespace algseq {

/// All integer partitions of n, parts descending, enumeration deterministic.
std::vector<std::vector<unsigned>> partitions(unsigned n);

/// Landau function: maximum lcm over partitions of n.
uint64_t landau(unsigned n);

/// Maximum lcm(lcm(s1), lcm(s2), lcm(s3)) over partitions s1, s2, s3 of any
/// budgets 1 <= i <= l, 1 <= j <= m, 1 <= k <= n.
uint64_t script_l(unsigned l, unsigned m, unsigned n);

/// Exact integer logs: q^result <= x < q^{result+1}, resp. smallest result
/// with q^result >= x.  Both require x >= 1.
int floor_log(uint64_t q, uint64_t x);
int ceil_log(uint64_t q, uint64_t x);

/// q^e, saturating at 2^63 to keep state-cap comparisons safe.
uint64_t sat_pow(uint64_t q, uint64_t e);

struct BoundReport {
    unsigned q, h, d;
    uint64_t main_term;   // q^{hd}
    uint64_t orbit_term;  // q^{(h-1)(d-1)} * script_l(h, d, d)
    uint64_t log_terms;   // floor_log(q, h) + ceil_log(q, max(h, d-1)) + 3
    uint64_t total;
    bool trivial;  // h == 0: the series is 0 and one state suffices
    double ratio() const { return static_cast<double>(total) / static_cast<double>(main_term); }
};

BoundReport theorem1_bound(unsigned q, unsigned h, unsigned d);

/// Transient and eventual-period bounds for the orbit of a univariate operator,
/// read off the factorization: t from the exponents, ell = lcm of factor degrees.
std::pair<long long, long long> univariate_bound(const Factorization& fact, unsigned q);

}  // namespace algseq
