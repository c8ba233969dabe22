#include "algseq/orbits.hpp"

#include <algorithm>
#include <random>

#include "algseq/bounds.hpp"
#include "algseq/factorize.hpp"

namespace algseq {

BiPoly lambda_r0(const BiPoly& s, const BiPoly& qq1, unsigned r) {
    return cartier_product(s, qq1, r, 0);
}

UniPoly lambda0(const UniPoly& s, const UniLaurent& r) {
    if (r.is_zero()) throw input_error("lambda_0 needs a nonzero R");
    if (r.valuation() < -1) throw input_error("lambda_0 needs R with valuation >= -1");
    return lambda0_cached(s, pow(r, s.field().q() - 1));
}

UniPoly lambda0_cached(const UniPoly& s, const UniLaurent& rq1) {
    if (&s.field() != &rq1.field()) throw field_mismatch();
    UniLaurent image = cartier(0, UniLaurent(s) * rq1);
    if (!image.is_polynomial())
        throw input_error("lambda_0 image has negative exponents");
    return image.to_poly();
}

std::vector<std::pair<int, int>> v_basis_ordered(unsigned h, unsigned d) {
    std::vector<std::pair<int, int>> basis;
    int hi = static_cast<int>(h), di = static_cast<int>(d);
    for (int i = 1; i <= hi - 1; ++i)
        for (int j = 0; j <= di - 2; ++j) basis.push_back({i, j});  // interior
    for (int j = 1; j <= di - 2; ++j) basis.push_back({0, j});      // left edge
    basis.push_back({0, 0});
    for (int i = 1; i <= hi - 1; ++i) basis.push_back({i, di - 1});  // top edge
    basis.push_back({0, di - 1});
    for (int j = 0; j <= di - 2; ++j) basis.push_back({hi, j});  // right edge
    basis.push_back({hi, di - 1});
    return basis;
}

std::array<size_t, 7> v_block_sizes(unsigned h, unsigned d) {
    return {static_cast<size_t>(h - 1) * (d - 1), static_cast<size_t>(d >= 2 ? d - 2 : 0), 1,
            static_cast<size_t>(h - 1), 1, static_cast<size_t>(d - 1), 1};
}

namespace {

UniPoly slice_to_unipoly(const BiPoly& s, int fixed_i, bool by_x, int divide_j) {
    const Field& f = s.field();
    std::vector<uint16_t> c;
    for (const auto& t : s.terms()) {
        if (by_x) {
            // slice j == divide_j; polynomial in x
            if (t.j != divide_j) continue;
            if (static_cast<size_t>(t.i) >= c.size()) c.resize(t.i + 1, 0);
            c[t.i] = t.c;
        } else {
            if (t.i != fixed_i) continue;
            if (t.j < 0) throw input_error("projection of a polynomial with negative y-exponents");
            if (static_cast<size_t>(t.j) >= c.size()) c.resize(t.j + 1, 0);
            c[t.j] = t.c;
        }
    }
    return UniPoly(f, std::move(c));
}

}  // namespace

UniPoly pi_left(const BiPoly& s) { return slice_to_unipoly(s, 0, false, 0); }

UniPoly pi_right(const BiPoly& s, unsigned h) {
    return slice_to_unipoly(s, static_cast<int>(h), false, 0);
}

UniPoly pi_top(const BiPoly& s, unsigned d) {
    return slice_to_unipoly(s, 0, true, static_cast<int>(d) - 1);
}

EmulationWitness check_emulation(const BiPoly& s, const FurstenbergInput& in) {
    EmulationWitness w;
    BiPoly image = lambda_r0(s, in.Qq1, 0);
    w.left = pi_left(image) == lambda0(pi_left(s), in.A0y);
    if (s.height() <= static_cast<int>(in.h))
        w.right = pi_right(image, in.h) == lambda0(pi_right(s, in.h), in.Ahy);
    if (s.ydeg() <= static_cast<int>(in.d) - 1)
        w.top = pi_top(image, in.d) == lambda0(pi_top(s, in.d), UniLaurent(in.Bd));
    return w;
}

namespace {

// flow-diagram sources allowed per target block for lambda_{0,0}:
// 1 interior, 2 left edge, 3 origin, 4 top edge, 5 top-left, 6 right edge, 7 top-right
constexpr bool kAllowed7[8][8] = {
    {},
    {false, true, true, true, true, true, true, true},     // interior <- everything
    {false, false, true, true, false, true, false, false}, // left edge <- left, origin, top-left
    {false, false, false, true, false, false, false, false},
    {false, false, false, false, true, true, false, true}, // top edge <- top, top-left, top-right
    {false, false, false, false, false, true, false, false},
    {false, false, false, false, false, false, true, true},
    {false, false, false, false, false, false, false, true},
};

size_t block_of(const std::array<size_t, 7>& sizes, size_t pos) {
    size_t acc = 0;
    for (size_t b = 0; b < 7; ++b) {
        acc += sizes[b];
        if (pos < acc) return b + 1;
    }
    throw std::logic_error("basis position out of range");
}

}  // namespace

CheckResult check_information_flow(const FurstenbergInput& in) {
    CheckResult res;
    if (in.trivial) return res;
    const Field& f = *in.f;
    unsigned h = in.h, d = in.d, q = f.q();
    auto basis = v_basis_ordered(h, d);
    auto sizes = v_block_sizes(h, d);
    size_t n = basis.size();

    std::vector<size_t> blk(n), blk4(n);
    for (size_t k = 0; k < n; ++k) {
        blk[k] = block_of(sizes, k);
        size_t b1 = static_cast<size_t>(h) * (d - 1);
        if (k < b1)
            blk4[k] = 0;
        else if (k < b1 + h)
            blk4[k] = 1;
        else if (k < b1 + h + (d - 1))
            blk4[k] = 2;
        else
            blk4[k] = 3;
    }

    for (unsigned r = 0; r < q; ++r) {
        MatFq m = operator_matrix(f, basis, [&](const BiPoly& s) {
            return lambda_r0(s, in.Qq1, r);
        });
        for (size_t row = 0; row < n; ++row)
            for (size_t col = 0; col < n; ++col) {
                if (m.at(row, col) == 0) continue;
                if (r == 0) {
                    if (!kAllowed7[blk[row]][blk[col]]) {
                        res.ok = false;
                        res.detail = "flow pattern violated at r=0, row " +
                                     std::to_string(row) + ", col " + std::to_string(col);
                        return res;
                    }
                } else {
                    if (blk4[row] > blk4[col]) {
                        res.ok = false;
                        res.detail = "four-block pattern violated at r=" + std::to_string(r) +
                                     ", row " + std::to_string(row) + ", col " +
                                     std::to_string(col);
                        return res;
                    }
                    if (row >= static_cast<size_t>(h) * d) {
                        res.ok = false;
                        res.detail = "nonzero entry in the last d rows at r=" +
                                     std::to_string(r) + ", row " + std::to_string(row) +
                                     ", col " + std::to_string(col);
                        return res;
                    }
                }
            }
    }
    return res;
}

CheckResult check_degree_props(const FurstenbergInput& in) {
    CheckResult res;
    if (in.trivial) return res;
    const Field& f = *in.f;
    unsigned h = in.h, d = in.d, q = f.q();

    auto in_w = [&](const BiPoly& s) {
        return s.is_zero() ||
               (s.height() <= static_cast<int>(h) - 1 && s.ydeg() <= static_cast<int>(d) - 1 &&
                s.ymin() >= 0);
    };
    for (int i = 0; i <= static_cast<int>(h); ++i)
        for (int j = 0; j <= static_cast<int>(d); ++j) {
            BiPoly mono = BiPoly::monomial(f, i, j);
            BiPoly img0 = lambda_r0(mono, in.Qq1, 0);
            if (!img0.is_zero() &&
                (img0.height() > static_cast<int>(h) || img0.ydeg() > static_cast<int>(d) - 1 ||
                 img0.ymin() < 0)) {
                res.ok = false;
                res.detail = "lambda_{0,0} image of x^" + std::to_string(i) + " y^" +
                             std::to_string(j) + " leaves the (h, d-1) box";
                return res;
            }
            for (unsigned r = 1; r < q; ++r) {
                if (!in_w(lambda_r0(mono, in.Qq1, r))) {
                    res.ok = false;
                    res.detail = "lambda_{r,0} image of x^" + std::to_string(i) + " y^" +
                                 std::to_string(j) + " leaves W at r=" + std::to_string(r);
                    return res;
                }
            }
        }

    // degree bounds of the projections along the orbit of S0
    BiPoly s1 = lambda_r0(in.S0, in.Qq1, 0);
    if (pi_left(s1).deg() > in.A0y.deg()) {
        res.ok = false;
        res.detail = "deg pi_l(lambda(S0)) exceeds deg(A_0/y)";
        return res;
    }
    if (pi_right(s1, h).deg() > in.Ahy.deg()) {
        res.ok = false;
        res.detail = "deg pi_r(lambda(S0)) exceeds deg(A_h/y)";
        return res;
    }
    uint64_t cap = sat_pow(q, static_cast<uint64_t>(h + 1) * d) + 2;
    auto rep = orbit<BiPoly>(
        in.S0, [&](const BiPoly& s) { return lambda_r0(s, in.Qq1, 0); },
        static_cast<size_t>(cap), BiPolyHash());
    size_t n0 = static_cast<size_t>(floor_log(q, h)) + 2;
    size_t t = rep.transient, ell = rep.period;
    for (size_t n = n0; n < n0 + t + ell; ++n) {
        const BiPoly& el =
            n < rep.elements.size() ? rep.elements[n] : rep.elements[t + (n - t) % ell];
        if (pi_top(el, d).deg() > in.Bd.deg()) {
            res.ok = false;
            res.detail = "deg pi_t(lambda^n(S0)) exceeds deg(B_d) at n=" + std::to_string(n);
            return res;
        }
    }
    return res;
}

UnivariateReport check_univariate_theorems(const UniLaurent& r, uint64_t max_exhaustive,
                                           uint64_t seed) {
    UnivariateReport rep;
    if (r.is_zero()) throw input_error("R must be nonzero");
    if (r.valuation() < -1) throw input_error("R must have valuation >= -1");
    const Field& f = r.field();
    unsigned q = f.q();
    Factorization fact = factor(r);
    auto [t, ell] = univariate_bound(fact, q);
    rep.t = t;
    rep.ell = ell;
    rep.square_free = fact.square_free();
    UniLaurent rq1 = pow(r, q - 1);
    auto step = [&](const UniPoly& s) { return lambda0_cached(s, rq1); };

    int dr = r.deg();

    // (a) the square-free identity, as a matrix power
    if (rep.square_free && fact.e0 <= 0 && dr >= 0) {
        MatFq m = operator_matrix(f, dr, step);
        if (mat_pow(m, static_cast<uint64_t>(ell)) != MatFq::identity(f, dr + 1)) {
            rep.ok = false;
            rep.detail = "lambda_0^ell is not the identity on {deg <= deg R}";
            return rep;
        }
    }

    // enumerate or sample test polynomials with deg <= deg R
    std::vector<UniPoly> test_polys;
    if (dr >= 0) {
        uint64_t space = sat_pow(q, static_cast<uint64_t>(dr) + 1);
        if (space <= max_exhaustive) {
            for (uint64_t enc = 0; enc < space; ++enc) {
                std::vector<uint16_t> c(dr + 1);
                uint64_t v = enc;
                for (int k = 0; k <= dr; ++k) {
                    c[k] = static_cast<uint16_t>(v % q);
                    v /= q;
                }
                test_polys.emplace_back(f, std::move(c));
            }
        } else {
            std::mt19937_64 rng(seed);
            for (int s = 0; s < 512; ++s) {
                std::vector<uint16_t> c(dr + 1);
                for (auto& x : c) x = static_cast<uint16_t>(rng() % q);
                test_polys.emplace_back(f, std::move(c));
            }
        }
    }

    // (b) orbit size bound
    for (const auto& s : test_polys) {
        OrbitReport<UniPoly> orep;
        try {
            orep = orbit<UniPoly>(s, step, static_cast<size_t>(t + ell) + 2);
        } catch (const orbit_too_long&) {
            rep.ok = false;
            rep.detail = "orbit of " + s.str() + " exceeds t + ell";
            return rep;
        }
        if (orep.size() > static_cast<size_t>(t + ell)) {
            rep.ok = false;
            rep.detail = "orbit of " + s.str() + " has size " + std::to_string(orep.size()) +
                         " > t + ell = " + std::to_string(t + ell);
            return rep;
        }
    }

    // (c) divisibility of deep iterates
    std::vector<UniPoly> div_polys;
    for (size_t k = 0; k < test_polys.size() && div_polys.size() < 24; k += 7)
        div_polys.push_back(test_polys[k]);
    div_polys.push_back(UniPoly::monomial(f, static_cast<unsigned>(std::max(dr, 0)) + 1));
    for (const auto& [ri, ei] : fact.factors) {
        if (ei < 2) continue;
        UniPoly power = pow(ri, ei - 1);
        long long n0 = ceil_log(q, ei);
        for (const auto& s : div_polys) {
            UniPoly it = s;
            for (long long n = 0; n < n0; ++n) it = step(it);
            for (int extra = 0; extra < 2; ++extra) {
                if (!divides(power, it)) {
                    rep.ok = false;
                    rep.detail = "iterate not divisible by " + ri.str() + "^" +
                                 std::to_string(ei - 1);
                    return rep;
                }
                it = step(it);
            }
        }
    }
    if (fact.e0 >= 1) {
        long long n0 = floor_log(q, fact.e0) + 1;
        for (const auto& s : div_polys) {
            UniPoly it = s;
            for (long long n = 0; n < n0; ++n) it = step(it);
            for (int extra = 0; extra < 2; ++extra) {
                bool ok = it.is_zero();
                if (!ok) {
                    ok = true;
                    for (int k = 0; k < fact.e0; ++k)
                        if (it.coeffc(k) != 0) {
                            ok = false;
                            break;
                        }
                }
                if (!ok) {
                    rep.ok = false;
                    rep.detail = "iterate not divisible by z^" + std::to_string(fact.e0);
                    return rep;
                }
                it = step(it);
            }
        }
    }

    // (d) degree decay for deg S > deg R
    std::mt19937_64 rng(seed + 1);
    for (int bump : {1, 2, 5}) {
        int s_deg = dr + bump;
        if (s_deg < 0) continue;
        std::vector<uint16_t> c(s_deg + 1);
        for (auto& x : c) x = static_cast<uint16_t>(rng() % q);
        c[s_deg] = 1;
        UniPoly s(f, std::move(c));
        long long n0 = floor_log(q, bump) + 1;
        UniPoly it = s;
        for (long long n = 0; n < n0; ++n) it = step(it);
        if (it.deg() > dr) {
            rep.ok = false;
            rep.detail = "degree did not decay to deg R after the threshold";
            return rep;
        }
    }
    return rep;
}

}  // namespace algseq
