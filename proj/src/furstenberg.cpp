#include "algseq/furstenberg.hpp"

#include <algorithm>

#include "algseq/bounds.hpp"

namespace algseq {

FurstenbergInput validate(const BiPoly& P) {
    const Field& f = P.field();
    if (P.is_zero()) throw input_error("not a Furstenberg polynomial: P is zero");
    if (!P.is_plain()) throw input_error("not a Furstenberg polynomial: negative y-exponents");
    if (P.coeffc(0, 0) != 0)
        throw input_error("not a Furstenberg polynomial: P(0,0) is nonzero");
    if (P.coeffc(0, 1) == 0)
        throw input_error("not a Furstenberg polynomial: dP/dy(0,0) is zero");
    FurstenbergInput in{&f,
                        P,
                        shift_y(P, -1),
                        y_partial_y(P),
                        BiPoly(f),
                        static_cast<unsigned>(P.height()),
                        static_cast<unsigned>(P.ydeg()),
                        P.height() == 0,
                        UniLaurent(f),
                        UniLaurent(f),
                        UniPoly(f)};
    in.Qq1 = pow(in.Q, f.q() - 1);
    in.A0y = extract_A(in.P, 0).shifted(-1);
    in.Ahy = extract_A(in.P, static_cast<int>(in.h)).shifted(-1);
    in.Bd = extract_B(in.P, static_cast<int>(in.d));
    return in;
}

namespace {

// Coefficient recurrence: with P = sum_j B_j(x) y^j and G_j = F^j, the
// relation sum_j B_j G_j = 0 determines a(n) once G_j[n] for j >= 2 are known,
// and those only need a(m), G_{j-1}[m] for m < n because a(0) = 0.
std::vector<uint16_t> series_prefix_prime(const FurstenbergInput& in, size_t N) {
    const Field& f = *in.f;
    uint32_t p = f.p();
    unsigned h = in.h, d = in.d;
    std::vector<std::vector<uint32_t>> B(d + 1);
    for (unsigned j = 0; j <= d; ++j) {
        B[j].assign(h + 1, 0);
        UniPoly bj = extract_B(in.P, static_cast<int>(j));
        for (unsigned i = 0; i <= h; ++i) B[j][i] = bj.coeffc(static_cast<int>(i));
    }
    uint32_t cinv = f.invc(static_cast<uint16_t>(B[1][0]));
    std::vector<std::vector<uint32_t>> G(d + 1);
    for (unsigned j = 0; j <= d; ++j) G[j].assign(N, 0);
    G[0][0] = 1;
    std::vector<uint32_t>& a = G[1];
    for (size_t n = 1; n < N; ++n) {
        for (unsigned j = 2; j <= d; ++j) {
            const std::vector<uint32_t>& prev = G[j - 1];
            uint64_t acc = 0;
            for (size_t m = 1; m < n; ++m) acc += static_cast<uint64_t>(a[m]) * prev[n - m];
            G[j][n] = static_cast<uint32_t>(acc % p);
        }
        uint64_t s = 0;
        for (unsigned j = 0; j <= d; ++j) {
            const std::vector<uint32_t>& g = G[j];
            for (unsigned i = 0; i <= h && i <= n; ++i) {
                if (j == 1 && i == 0) continue;
                if (B[j][i] == 0) continue;
                s += static_cast<uint64_t>(B[j][i]) * g[n - i];
            }
        }
        uint32_t sm = static_cast<uint32_t>(s % p);
        a[n] = static_cast<uint32_t>((static_cast<uint64_t>(p - sm) % p) * cinv % p);
    }
    std::vector<uint16_t> out(N);
    for (size_t n = 0; n < N; ++n) out[n] = static_cast<uint16_t>(a[n]);
    return out;
}

std::vector<uint16_t> series_prefix_generic(const FurstenbergInput& in, size_t N) {
    const Field& f = *in.f;
    unsigned h = in.h, d = in.d;
    std::vector<std::vector<uint16_t>> B(d + 1);
    for (unsigned j = 0; j <= d; ++j) {
        B[j].assign(h + 1, 0);
        UniPoly bj = extract_B(in.P, static_cast<int>(j));
        for (unsigned i = 0; i <= h; ++i) B[j][i] = bj.coeffc(static_cast<int>(i));
    }
    uint16_t cinv = f.invc(B[1][0]);
    std::vector<std::vector<uint16_t>> G(d + 1);
    for (unsigned j = 0; j <= d; ++j) G[j].assign(N, 0);
    G[0][0] = 1;
    std::vector<uint16_t>& a = G[1];
    for (size_t n = 1; n < N; ++n) {
        for (unsigned j = 2; j <= d; ++j) {
            const std::vector<uint16_t>& prev = G[j - 1];
            uint16_t acc = 0;
            for (size_t m = 1; m < n; ++m)
                if (a[m]) acc = f.addc(acc, f.mulc(a[m], prev[n - m]));
            G[j][n] = acc;
        }
        uint16_t s = 0;
        for (unsigned j = 0; j <= d; ++j) {
            for (unsigned i = 0; i <= h && i <= n; ++i) {
                if (j == 1 && i == 0) continue;
                if (B[j][i] == 0) continue;
                s = f.addc(s, f.mulc(B[j][i], G[j][n - i]));
            }
        }
        a[n] = f.mulc(f.negc(s), cinv);
    }
    return a;
}

}  // namespace

std::vector<uint16_t> series_prefix(const FurstenbergInput& in, size_t n) {
    if (n == 0) throw input_error("series prefix length must be at least 1");
    if (in.trivial) return std::vector<uint16_t>(n, 0);
    if (in.f->e() == 1) return series_prefix_prime(in, n);
    return series_prefix_generic(in, n);
}

namespace {

// dense truncated expansion of S/Q over x in [0, N) and y in [-w, w]
struct RowGrid {
    size_t n, w;
    std::vector<uint16_t> a;  // (x, y + w), row-major over x
    RowGrid(size_t n_, size_t w_) : n(n_), w(w_), a(n_ * (2 * w_ + 1), 0) {}
    uint16_t& at(size_t x, long long y) { return a[x * (2 * w + 1) + static_cast<size_t>(y + static_cast<long long>(w))]; }
};

std::vector<uint16_t> center_row_at_window(const BiPoly& s, const BiPoly& q, size_t N,
                                           size_t w) {
    const Field& f = s.field();
    uint16_t c0 = q.coeffc(0, 0);
    uint16_t c0inv = f.invc(c0);
    // T = 1 - Q/c0, with the constant term cancelled
    std::vector<BiTerm> tterms;
    for (const auto& t : q.terms()) {
        if (t.i == 0 && t.j == 0) continue;
        tterms.push_back({t.i, t.j, f.negc(f.mulc(t.c, c0inv))});
    }
    RowGrid cur(N, w), next(N, w);
    bool any = false;
    for (const auto& t : s.terms()) {
        if (t.i < 0 || static_cast<size_t>(t.i) >= N) continue;
        if (t.j < -static_cast<long long>(w) || t.j > static_cast<long long>(w)) continue;
        cur.at(static_cast<size_t>(t.i), t.j) = f.addc(cur.at(static_cast<size_t>(t.i), t.j), t.c);
        any = true;
    }
    std::vector<uint16_t> row(N, 0);
    size_t cap = 2 * N + 2 * w + 8;
    for (size_t step = 0; any && step <= cap; ++step) {
        for (size_t x = 0; x < N; ++x) row[x] = f.addc(row[x], cur.at(x, 0));
        std::fill(next.a.begin(), next.a.end(), 0);
        long long wll = static_cast<long long>(w);
        for (const auto& t : tterms) {
            const uint16_t* mrow = f.mul_row(t.c);
            for (size_t x = 0; x + static_cast<size_t>(t.i) < N; ++x) {
                size_t xo = x + static_cast<size_t>(t.i);
                for (long long y = -wll; y <= wll; ++y) {
                    uint16_t v = cur.at(x, y);
                    if (v == 0) continue;
                    long long yo = y + t.j;
                    if (yo < -wll || yo > wll) continue;
                    uint16_t& slot = next.at(xo, yo);
                    slot = f.addc(slot, mrow[v]);
                }
            }
        }
        any = false;
        for (uint16_t v : next.a)
            if (v) {
                any = true;
                break;
            }
        cur.a.swap(next.a);
    }
    if (any) throw std::logic_error("center row expansion did not terminate");
    for (auto& v : row) v = f.mulc(v, c0inv);
    return row;
}

}  // namespace

std::vector<uint16_t> center_row_prefix(const BiPoly& s, const BiPoly& q, size_t n) {
    if (n == 0) throw input_error("prefix length must be at least 1");
    if (&s.field() != &q.field()) throw field_mismatch();
    const Field& f = s.field();
    if (q.coeffc(0, 0) == 0)
        throw input_error("cannot expand: denominator has zero constant term");
    if (s.is_zero()) return std::vector<uint16_t>(n, 0);
    size_t dq = static_cast<size_t>(std::max(q.ydeg(), 0));
    size_t mj = static_cast<size_t>(std::max(-q.ymin(), 0));
    size_t exact_w = mj * n + dq + 2;  // no contributing path leaves this window
    size_t w = std::max<size_t>(
        4, (dq + mj) * (static_cast<size_t>(ceil_log(f.q(), std::max<uint64_t>(n, 2))) + 2));
    // widen until two consecutive windows agree
    std::vector<uint16_t> prev = center_row_at_window(s, q, n, std::min(w, exact_w));
    while (w < exact_w) {
        size_t w2 = std::min(2 * w, exact_w);
        std::vector<uint16_t> cur = center_row_at_window(s, q, n, w2);
        if (cur == prev) return cur;
        prev = std::move(cur);
        w = w2;
    }
    return prev;
}

std::vector<uint16_t> diagonal_prefix(const BiPoly& s, const BiPoly& q, size_t n) {
    if (n == 0) throw input_error("prefix length must be at least 1");
    if (&s.field() != &q.field()) throw field_mismatch();
    const Field& f = s.field();
    if (q.coeffc(0, 0) == 0)
        throw input_error("cannot expand: denominator has zero constant term");
    if (!s.is_plain() || !q.is_plain())
        throw input_error("diagonal expansion expects plain polynomials");
    uint16_t c0inv = f.invc(q.coeffc(0, 0));
    std::vector<BiTerm> tterms;
    for (const auto& t : q.terms()) {
        if (t.i == 0 && t.j == 0) continue;
        tterms.push_back({t.i, t.j, f.negc(f.mulc(t.c, c0inv))});
    }
    std::vector<uint16_t> cur(n * n, 0), next(n * n, 0), diag(n, 0);
    bool any = false;
    for (const auto& t : s.terms()) {
        if (static_cast<size_t>(t.i) >= n || static_cast<size_t>(t.j) >= n) continue;
        size_t idx = static_cast<size_t>(t.i) * n + static_cast<size_t>(t.j);
        cur[idx] = f.addc(cur[idx], t.c);
        any = true;
    }
    size_t cap = 2 * n + 2;
    for (size_t step = 0; any && step <= cap; ++step) {
        for (size_t k = 0; k < n; ++k) diag[k] = f.addc(diag[k], cur[k * n + k]);
        std::fill(next.begin(), next.end(), 0);
        for (const auto& t : tterms) {
            const uint16_t* mrow = f.mul_row(t.c);
            size_t ti = static_cast<size_t>(t.i), tj = static_cast<size_t>(t.j);
            for (size_t x = 0; x + ti < n; ++x)
                for (size_t y = 0; y + tj < n; ++y) {
                    uint16_t v = cur[x * n + y];
                    if (v == 0) continue;
                    size_t idx = (x + ti) * n + (y + tj);
                    next[idx] = f.addc(next[idx], mrow[v]);
                }
        }
        any = false;
        for (uint16_t v : next)
            if (v) {
                any = true;
                break;
            }
        cur.swap(next);
    }
    if (any) throw std::logic_error("diagonal expansion did not terminate");
    for (auto& v : diag) v = f.mulc(v, c0inv);
    return diag;
}

}  // namespace algseq
