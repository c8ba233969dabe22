#pragma once

#include <array>
#include <optional>
#include <unordered_map>

#include "algseq/furstenberg.hpp"
#include "algseq/matrix.hpp"

namespace algseq {

struct orbit_too_long : std::runtime_error {
    orbit_too_long() : std::runtime_error("orbit exceeded its iteration cap") {}
};

/// lambda_{r,0}(S) = Lambda_{r,0}(S * Q^{q-1}); the caller passes the cached power.
BiPoly lambda_r0(const BiPoly& s, const BiPoly& qq1, unsigned r);

/// Univariate lambda_0(S) = Lambda_0(S * R^{q-1}) for R with valuation >= -1.
UniPoly lambda0(const UniPoly& s, const UniLaurent& r);
/// Same with the power R^{q-1} already computed.
UniPoly lambda0_cached(const UniPoly& s, const UniLaurent& rq1);

/// Ordered basis of V = <x^i y^j : 0 <= i <= h, 0 <= j <= d-1> in the
/// seven-block order (interior, left edge, corner, top edge, top-left corner,
/// right edge, top-right corner).
std::vector<std::pair<int, int>> v_basis_ordered(unsigned h, unsigned d);
std::array<size_t, 7> v_block_sizes(unsigned h, unsigned d);

UniPoly pi_left(const BiPoly& s);                // x^0 slice, polynomial in y
UniPoly pi_right(const BiPoly& s, unsigned h);   // x^h slice / x^h, polynomial in y
UniPoly pi_top(const BiPoly& s, unsigned d);     // y^{d-1} slice / y^{d-1}, polynomial in x

template <class T>
struct OrbitReport {
    size_t transient = 0;
    size_t period = 1;
    std::vector<T> elements;  // the t + ell distinct elements, in visit order
    size_t size() const { return transient + period; }
};

template <class T, class Step, class Hash = std::hash<T>>
OrbitReport<T> orbit(const T& start, Step step, size_t cap, Hash hash = Hash()) {
    OrbitReport<T> rep;
    std::unordered_map<T, size_t, Hash> seen(16, hash);
    T cur = start;
    for (size_t k = 0; k <= cap; ++k) {
        auto it = seen.find(cur);
        if (it != seen.end()) {
            rep.transient = it->second;
            rep.period = k - it->second;
            return rep;
        }
        seen.emplace(cur, k);
        rep.elements.push_back(cur);
        cur = step(cur);
    }
    throw orbit_too_long();
}

struct EmulationWitness {
    std::optional<bool> left, right, top;  // empty when the precondition failed
    bool all_ok() const {
        return left.value_or(true) && right.value_or(true) && top.value_or(true);
    }
};

/// Checks the three commuting diagrams pi(lambda_{0,0}(S)) = lambda_0(pi(S))
/// with R = A_0/y, A_h/y, B_d.
EmulationWitness check_emulation(const BiPoly& s, const FurstenbergInput& in);

struct CheckResult {
    bool ok = true;
    std::string detail;  // first counterexample, empty when ok
};

/// Builds the matrices of lambda_{r,0} on the ordered V basis and asserts the
/// structural zero patterns: the flow-diagram pattern for r = 0, the
/// four-block upper-triangular pattern and the zero last d rows for r >= 1.
CheckResult check_information_flow(const FurstenbergInput& in);

/// Degree statements: images of the (h, d) coefficient box under lambda_{r,0}
/// land in W for r >= 1 and back in the (h, d-1) box for r = 0, plus the
/// degree bounds of the three projections along the orbit of S0.
CheckResult check_degree_props(const FurstenbergInput& in);

struct UnivariateReport {
    bool ok = true;
    std::string detail;
    long long t = 0, ell = 1;
    bool square_free = false;
};

/// Exercises the univariate orbit theorems for one R: the square-free identity
/// lambda_0^ell = id on {deg <= deg R}, the t + ell orbit bound (exhaustive
/// while q^{deg R + 1} <= max_exhaustive, sampled otherwise), the divisibility
/// of deep iterates, and the degree decay for deg S > deg R.
UnivariateReport check_univariate_theorems(const UniLaurent& r,
                                           uint64_t max_exhaustive = uint64_t(1) << 15,
                                           uint64_t seed = 12345);

}  // namespace algseq
