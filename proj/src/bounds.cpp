#include "algseq/bounds.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace algseq {

namespace {

void extend(std::vector<std::vector<unsigned>>& out, std::vector<unsigned>& cur,
            unsigned remaining, unsigned maxpart) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned part = std::min(remaining, maxpart); part >= 1; --part) {
        cur.push_back(part);
        extend(out, cur, remaining - part, part);
        cur.pop_back();
    }
}

// achievable lcm values over partitions of exactly n, memoized
const std::set<uint64_t>& lcm_set(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::set<uint64_t>> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::set<uint64_t> vals;
    for (const auto& sigma : partitions(n)) {
        uint64_t l = 1;
        for (unsigned part : sigma) l = std::lcm(l, static_cast<uint64_t>(part));
        vals.insert(l);
    }
    return memo.emplace(n, std::move(vals)).first->second;
}

}  // namespace

std::vector<std::vector<unsigned>> partitions(unsigned n) {
    if (n == 0) throw input_error("partitions of 0 are not used here");
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    extend(out, cur, n, n);
    return out;
}

uint64_t landau(unsigned n) {
    if (n == 0) throw input_error("Landau function needs n >= 1");
    return *lcm_set(n).rbegin();
}

uint64_t script_l(unsigned l, unsigned m, unsigned n) {
    if (l == 0 || m == 0 || n == 0) throw input_error("script L needs positive budgets");
    uint64_t best = 1;
    for (unsigned i = 1; i <= l; ++i)
        for (unsigned j = 1; j <= m; ++j)
            for (unsigned k = 1; k <= n; ++k)
                for (uint64_t a : lcm_set(i))
                    for (uint64_t b : lcm_set(j))
                        for (uint64_t c : lcm_set(k))
                            best = std::max(best, std::lcm(std::lcm(a, b), c));
    return best;
}

int floor_log(uint64_t q, uint64_t x) {
    if (q < 2) throw input_error("log base must be at least 2");
    if (x < 1) throw input_error("floor_log needs x >= 1");
    int k = 0;
    uint64_t power = 1;
    while (power <= x / q) {
        power *= q;
        ++k;
    }
    return k;
}

int ceil_log(uint64_t q, uint64_t x) {
    if (q < 2) throw input_error("log base must be at least 2");
    if (x < 1) throw input_error("ceil_log needs x >= 1");
    int k = 0;
    uint64_t power = 1;
    while (power < x) {
        power *= q;
        ++k;
    }
    return k;
}

uint64_t sat_pow(uint64_t q, uint64_t e) {
    const uint64_t cap = uint64_t(1) << 63;
    uint64_t r = 1;
    for (uint64_t k = 0; k < e; ++k) {
        if (r > cap / q) return cap;
        r *= q;
    }
    return r;
}

BoundReport theorem1_bound(unsigned q, unsigned h, unsigned d) {
    if (q < 2) throw input_error("q must be a prime power >= 2");
    if (d < 1) throw input_error("degree must be at least 1");
    BoundReport r{};
    r.q = q;
    r.h = h;
    r.d = d;
    if (h == 0) {
        r.trivial = true;
        r.main_term = 1;
        r.total = 1;
        return r;
    }
    r.trivial = false;
    r.main_term = sat_pow(q, static_cast<uint64_t>(h) * d);
    r.orbit_term =
        sat_pow(q, static_cast<uint64_t>(h - 1) * (d - 1)) * script_l(h, d, d);
    r.log_terms = static_cast<uint64_t>(floor_log(q, h)) +
                  static_cast<uint64_t>(ceil_log(q, std::max<uint64_t>(h, d - 1))) + 3;
    r.total = r.main_term + r.orbit_term + r.log_terms;
    return r;
}

std::pair<long long, long long> univariate_bound(const Factorization& fact, unsigned q) {
    long long t = 0;
    if (fact.e0 >= 1) t = std::max(t, static_cast<long long>(floor_log(q, fact.e0)) + 1);
    unsigned emax = 0;
    for (const auto& [poly, e] : fact.factors) emax = std::max(emax, e);
    if (emax >= 1) t = std::max(t, static_cast<long long>(ceil_log(q, emax)));
    long long ell = 1;
    for (const auto& [poly, e] : fact.factors)
        ell = std::lcm(ell, static_cast<long long>(poly.deg()));
    return {t, ell};
}

}  // namespace algseq
