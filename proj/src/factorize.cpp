#include "algseq/factorize.hpp"

#include <algorithm>
#include <map>

namespace algseq {

namespace {

// ordering key: (degree, ascending coefficient tuple read as base-q integer)
uint64_t poly_encoding(const UniPoly& p) {
    uint64_t enc = 0;
    unsigned q = p.field().q();
    for (size_t k = p.coeffs().size(); k-- > 0;) enc = enc * q + p.coeffs()[k];
    return enc;
}

bool poly_less(const UniPoly& a, const UniPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    return poly_encoding(a) < poly_encoding(b);
}

// p-th root of a polynomial whose derivative vanishes (all exponents divisible by p)
UniPoly pth_root(const UniPoly& g) {
    const Field& f = g.field();
    unsigned p = f.p();
    // inverse of Frobenius is x -> x^{p^{e-1}}
    uint64_t inv_frob = 1;
    for (unsigned k = 0; k + 1 < f.e(); ++k) inv_frob *= p;
    std::vector<uint16_t> c(g.coeffs().size() / p + 1, 0);
    for (size_t k = 0; k < g.coeffs().size(); k += p)
        c[k / p] = f.powc(g.coeffs()[k], inv_frob);
    return UniPoly(f, std::move(c));
}

// square-free decomposition: accumulates (multiplicity -> product of monic
// square-free pieces) reproducing the monic input
void square_free_decompose(const UniPoly& g, unsigned mult,
                           std::map<unsigned, UniPoly>& out) {
    const Field& f = g.field();
    if (g.deg() <= 0) return;
    UniPoly d = derivative(g);
    if (d.is_zero()) {
        // all exponents divisible by p, so g is a p-th power
        square_free_decompose(pth_root(g), mult * f.p(), out);
        return;
    }
    UniPoly c = gcd_monic(g, d);
    UniPoly w = g / c;  // product of the irreducibles whose exponent p does not divide
    unsigned i = 1;
    while (w.deg() >= 1) {
        UniPoly y = gcd_monic(w, c);
        UniPoly fac = w / y;  // irreducibles with exponent exactly i
        if (fac.deg() >= 1) {
            auto it = out.find(mult * i);
            if (it == out.end())
                out.emplace(mult * i, fac);
            else
                it->second = it->second * fac;
        }
        c = c / y;
        w = y;
        ++i;
    }
    // what remains of c has every exponent divisible by p
    if (c.deg() >= 1) square_free_decompose(c, mult, out);
}

// distinct-degree splitting of a monic square-free polynomial
std::map<unsigned, UniPoly> distinct_degree(const UniPoly& g) {
    const Field& f = g.field();
    std::map<unsigned, UniPoly> out;
    UniPoly rest = g;
    UniPoly x = UniPoly::monomial(f, 1);
    UniPoly xq = x;  // z^{q^k} mod rest, maintained across k
    unsigned k = 0;
    while (rest.deg() >= 1) {
        ++k;
        if (2 * k > static_cast<unsigned>(rest.deg())) {
            out.emplace(static_cast<unsigned>(rest.deg()), rest);
            break;
        }
        // advance xq to z^{q^k} mod rest
        UniPoly acc = UniPoly::one(f);
        UniPoly base = xq;
        unsigned q = f.q();
        // compute xq = xq^q mod rest by square and multiply on the exponent q
        unsigned n = q;
        while (n) {
            if (n & 1) acc = divmod(acc * base, rest).second;
            base = divmod(base * base, rest).second;
            n >>= 1;
        }
        xq = acc;
        UniPoly h = gcd_monic(xq - x, rest);
        if (h.deg() >= 1) {
            out.emplace(k, h);
            rest = rest / h;
            xq = divmod(xq, rest).second;
        }
    }
    return out;
}

// equal-degree resolution by deterministic trial division in encoding order
std::vector<UniPoly> equal_degree(const UniPoly& g, unsigned deg) {
    const Field& f = g.field();
    std::vector<UniPoly> out;
    UniPoly rest = g;
    if (rest.deg() == static_cast<int>(deg)) return {rest};
    uint64_t count = 1;
    for (unsigned k = 0; k < deg; ++k) count *= f.q();
    for (uint64_t enc = 0; enc < count && rest.deg() > static_cast<int>(deg); ++enc) {
        std::vector<uint16_t> c(deg + 1, 0);
        uint64_t t = enc;
        for (unsigned k = 0; k < deg; ++k) {
            c[k] = static_cast<uint16_t>(t % f.q());
            t /= f.q();
        }
        c[deg] = 1;
        UniPoly cand(f, std::move(c));
        if (divides(cand, rest)) {
            out.push_back(cand);
            rest = rest / cand;
        }
    }
    if (rest.deg() >= 1) out.push_back(rest);
    return out;
}

}  // namespace

UniLaurent Factorization::expand() const {
    UniLaurent r = UniLaurent::monomial(*f, e0, unit);
    for (const auto& [poly, e] : factors) r = r * UniLaurent(pow(poly, e));
    return r;
}

Factorization factor(const UniLaurent& r) {
    if (r.is_zero()) throw input_error("cannot factor the zero polynomial");
    const Field& f = r.field();
    Factorization fact{&f, 1, r.valuation(), {}};
    // strip z^{e0}; the rest is a polynomial with nonzero constant term
    std::vector<uint16_t> c(r.deg() - r.valuation() + 1);
    for (int k = r.valuation(); k <= r.deg(); ++k) c[k - r.valuation()] = r.coeffc(k);
    UniPoly g(f, std::move(c));
    fact.unit = static_cast<uint16_t>(g.leading().code());
    g = make_monic(g);

    std::map<unsigned, UniPoly> sqfree;
    square_free_decompose(g, 1, sqfree);
    std::vector<std::pair<UniPoly, unsigned>> factors;
    for (const auto& [mult, part] : sqfree) {
        for (const auto& [deg, prod] : distinct_degree(part)) {
            for (const auto& irr : equal_degree(prod, deg)) factors.emplace_back(irr, mult);
        }
    }
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    fact.factors = std::move(factors);
    return fact;
}

Factorization factor(const UniPoly& r) { return factor(UniLaurent(r)); }

UniLaurent radical(const Factorization& fact) {
    const Field& f = *fact.f;
    UniLaurent r = UniLaurent::monomial(f, std::min(fact.e0, 0), fact.unit);
    for (const auto& [poly, e] : fact.factors) {
        (void)e;
        r = r * UniLaurent(poly);
    }
    return r;
}

bool is_irreducible(const UniPoly& f) {
    if (f.deg() < 1) return false;
    if (f.deg() == 1) return true;
    const Field& F = f.field();
    for (unsigned dg = 1; 2 * dg <= static_cast<unsigned>(f.deg()); ++dg) {
        uint64_t count = 1;
        for (unsigned k = 0; k < dg; ++k) count *= F.q();
        for (uint64_t enc = 0; enc < count; ++enc) {
            std::vector<uint16_t> c(dg + 1, 0);
            uint64_t t = enc;
            for (unsigned k = 0; k < dg; ++k) {
                c[k] = static_cast<uint16_t>(t % F.q());
                t /= F.q();
            }
            c[dg] = 1;
            if (divides(UniPoly(F, std::move(c)), f)) return false;
        }
    }
    return true;
}

std::vector<UniPoly> monic_irreducibles(const Field& f, unsigned deg) {
    std::vector<UniPoly> out;
    if (deg == 0) return out;
    uint64_t count = 1;
    for (unsigned k = 0; k < deg; ++k) count *= f.q();
    for (uint64_t enc = 0; enc < count; ++enc) {
        std::vector<uint16_t> c(deg + 1, 0);
        uint64_t t = enc;
        for (unsigned k = 0; k < deg; ++k) {
            c[k] = static_cast<uint16_t>(t % f.q());
            t /= f.q();
        }
        c[deg] = 1;
        UniPoly cand(f, std::move(c));
        if (is_irreducible(cand)) out.push_back(cand);
    }
    return out;
}

std::vector<uint16_t> series_inverse_prefix(const UniPoly& r, size_t n) {
    const Field& f = r.field();
    if (r.is_zero() || r.coeffc(0) == 0)
        throw input_error("no power-series inverse: constant term is zero");
    if (n == 0) throw input_error("prefix length must be at least 1");
    uint16_t c0inv = f.invc(r.coeffc(0));
    std::vector<uint16_t> a(n, 0);
    a[0] = c0inv;
    int d = r.deg();
    for (size_t k = 1; k < n; ++k) {
        uint16_t s = 0;
        for (int i = 1; i <= d && static_cast<size_t>(i) <= k; ++i)
            s = f.addc(s, f.mulc(r.coeffc(i), a[k - i]));
        a[k] = f.mulc(f.negc(s), c0inv);
    }
    return a;
}

size_t least_period(const std::vector<uint16_t>& seq) {
    size_t n = seq.size();
    if (n == 0) throw input_error("cannot detect the period of an empty sequence");
    for (size_t ell = 1; ell < n; ++ell) {
        bool ok = true;
        for (size_t k = 0; k + ell < n; ++k)
            if (seq[k] != seq[k + ell]) {
                ok = false;
                break;
            }
        if (ok) return ell;
    }
    return n;
}

}  // namespace algseq
