#include "algseq/bipoly.hpp"

#include <algorithm>
#include <map>

namespace algseq {

namespace {

void require_same(const Field* a, const Field* b) {
    if (a != b) throw field_mismatch();
}

long long floordiv(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

long long mod_nonneg(long long a, long long b) { return a - b * floordiv(a, b); }

}  // namespace

BiPoly::BiPoly(const Field& f, std::vector<BiTerm> terms) : f_(&f) {
    std::map<std::pair<int, int>, uint16_t> acc;
    for (const auto& t : terms) {
        if (t.c == 0) continue;
        if (t.i < 0) throw input_error("negative exponent of x in a bivariate polynomial");
        auto key = std::make_pair(t.i, t.j);
        auto it = acc.find(key);
        if (it == acc.end()) {
            acc.emplace(key, t.c);
        } else {
            it->second = f.addc(it->second, t.c);
            if (it->second == 0) acc.erase(it);
        }
    }
    t_.reserve(acc.size());
    for (const auto& [key, c] : acc) t_.push_back({key.first, key.second, c});
}

BiPoly BiPoly::monomial(const Field& f, int i, int j, unsigned code) {
    return BiPoly(f, {{i, j, static_cast<uint16_t>(code)}});
}

int BiPoly::height() const {
    if (t_.empty()) return kNegInfDeg;
    return t_.back().i;
}

int BiPoly::ydeg() const {
    if (t_.empty()) return kNegInfDeg;
    int d = t_.front().j;
    for (const auto& t : t_) d = std::max(d, t.j);
    return d;
}

int BiPoly::ymin() const {
    if (t_.empty()) return 0;
    int d = t_.front().j;
    for (const auto& t : t_) d = std::min(d, t.j);
    return d;
}

uint16_t BiPoly::coeffc(int i, int j) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), std::make_pair(i, j),
                               [](const BiTerm& t, const std::pair<int, int>& k) {
                                   return std::make_pair(t.i, t.j) < k;
                               });
    if (it != t_.end() && it->i == i && it->j == j) return it->c;
    return 0;
}

std::string BiPoly::str() const {
    if (t_.empty()) return "0";
    // group by descending y-exponent; x-slices rendered with descending powers
    std::map<int, std::map<int, uint16_t>> rows;
    for (const auto& t : t_) rows[t.j][t.i] = t.c;
    std::string s;
    for (auto rit = rows.rbegin(); rit != rows.rend(); ++rit) {
        int j = rit->first;
        const auto& row = rit->second;
        std::string xs;
        for (auto it = row.rbegin(); it != row.rend(); ++it) {
            int i = it->first;
            uint16_t c = it->second;
            if (!xs.empty()) xs += "+";
            std::string cs = Fq(*f_, c).str();
            if (i == 0) {
                xs += cs;
            } else {
                std::string v = "x";
                if (i != 1) v += "^" + std::to_string(i);
                xs += (c == 1) ? v : cs + "*" + v;
            }
        }
        if (!s.empty()) s += "+";
        if (j == 0) {
            s += xs;
        } else {
            std::string ys = "y";
            if (j != 1) ys += "^" + std::to_string(j);
            if (row.size() == 1) {
                if (xs == "1")
                    s += ys;
                else
                    s += xs + "*" + ys;
            } else {
                s += "(" + xs + ")*" + ys;
            }
        }
    }
    return s;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    require_same(&a.field(), &b.field());
    std::vector<BiTerm> t = a.terms();
    t.insert(t.end(), b.terms().begin(), b.terms().end());
    return BiPoly(a.field(), std::move(t));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator-(const BiPoly& a) {
    const Field& f = a.field();
    std::vector<BiTerm> t = a.terms();
    for (auto& term : t) term.c = f.negc(term.c);
    return BiPoly(f, std::move(t));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    require_same(&a.field(), &b.field());
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return BiPoly(f);
    std::map<std::pair<int, int>, uint16_t> acc;
    for (const auto& ta : a.terms()) {
        const uint16_t* row = f.mul_row(ta.c);
        for (const auto& tb : b.terms()) {
            auto key = std::make_pair(ta.i + tb.i, ta.j + tb.j);
            uint16_t& slot = acc[key];
            slot = f.addc(slot, row[tb.c]);
        }
    }
    std::vector<BiTerm> t;
    t.reserve(acc.size());
    for (const auto& [key, c] : acc)
        if (c) t.push_back({key.first, key.second, c});
    return BiPoly(f, std::move(t));
}

BiPoly operator*(const Fq& s, const BiPoly& a) {
    require_same(&s.field(), &a.field());
    const Field& f = a.field();
    const uint16_t* row = f.mul_row(static_cast<uint16_t>(s.code()));
    std::vector<BiTerm> t = a.terms();
    for (auto& term : t) term.c = row[term.c];
    return BiPoly(f, std::move(t));
}

BiPoly pow(const BiPoly& a, unsigned n) {
    BiPoly r = BiPoly::one(a.field());
    BiPoly base = a;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

BiPoly cartier(unsigned r, unsigned s, const BiPoly& f) {
    const Field& F = f.field();
    long long q = F.q();
    if (r >= F.q() || s >= F.q()) throw input_error("Cartier digit out of range");
    std::vector<BiTerm> out;
    for (const auto& t : f.terms()) {
        if (mod_nonneg(t.i, q) != static_cast<long long>(r)) continue;
        if (mod_nonneg(t.j, q) != static_cast<long long>(s)) continue;
        out.push_back({static_cast<int>((t.i - static_cast<int>(r)) / q),
                       static_cast<int>(floordiv(t.j - static_cast<int>(s), q)), t.c});
    }
    return BiPoly(F, std::move(out));
}

BiPoly cartier_product(const BiPoly& a, const BiPoly& b, unsigned r, unsigned s) {
    require_same(&a.field(), &b.field());
    const Field& F = a.field();
    long long q = F.q();
    if (r >= F.q() || s >= F.q()) throw input_error("Cartier digit out of range");
    if (a.is_zero() || b.is_zero()) return BiPoly(F);

    long long imax = a.height() + b.height();
    long long jmin = static_cast<long long>(a.ymin()) + b.ymin();
    long long jmax = static_cast<long long>(a.ydeg()) + b.ydeg();
    long long oi_max = floordiv(imax - r, q);
    long long oj_min = floordiv(jmin - s + q - 1, q);  // ceil((jmin - s) / q)
    long long oj_max = floordiv(jmax - s, q);
    if (oi_max < 0 || oj_max < oj_min) return BiPoly(F);
    size_t w = static_cast<size_t>(oj_max - oj_min + 1);
    size_t hgt = static_cast<size_t>(oi_max + 1);

    thread_local std::vector<uint16_t> grid;
    grid.assign(hgt * w, 0);
    for (const auto& ta : a.terms()) {
        const uint16_t* row = F.mul_row(ta.c);
        for (const auto& tb : b.terms()) {
            long long i = ta.i + tb.i, j = static_cast<long long>(ta.j) + tb.j;
            if (mod_nonneg(i - r, q) != 0 || mod_nonneg(j - s, q) != 0) continue;
            long long oi = (i - r) / q, oj = floordiv(j - s, q);
            if (oi < 0) continue;
            size_t idx = static_cast<size_t>(oi) * w + static_cast<size_t>(oj - oj_min);
            grid[idx] = F.addc(grid[idx], row[tb.c]);
        }
    }
    std::vector<BiTerm> out;
    for (size_t oi = 0; oi < hgt; ++oi)
        for (size_t oj = 0; oj < w; ++oj) {
            uint16_t c = grid[oi * w + oj];
            if (c) out.push_back({static_cast<int>(oi), static_cast<int>(oj + oj_min), c});
        }
    return BiPoly(F, std::move(out));
}

BiPoly shear_up(const BiPoly& f) {
    std::vector<BiTerm> t = f.terms();
    for (auto& term : t) term.j += term.i;
    return BiPoly(f.field(), std::move(t));
}

BiPoly shear_down(const BiPoly& f) {
    std::vector<BiTerm> t = f.terms();
    for (auto& term : t) term.j -= term.i;
    return BiPoly(f.field(), std::move(t));
}

BiPoly partial_y(const BiPoly& f) {
    const Field& F = f.field();
    std::vector<BiTerm> t;
    for (const auto& term : f.terms()) {
        uint16_t c = F.mulc(term.c, F.from_int(term.j).code());
        if (c) t.push_back({term.i, term.j - 1, c});
    }
    return BiPoly(F, std::move(t));
}

BiPoly y_partial_y(const BiPoly& f) { return shift_y(partial_y(f), 1); }

BiPoly shift_y(const BiPoly& f, int k) {
    std::vector<BiTerm> t = f.terms();
    for (auto& term : t) term.j += k;
    return BiPoly(f.field(), std::move(t));
}

Fq eval00(const BiPoly& f) { return f.coeff(0, 0); }

UniLaurent extract_A(const BiPoly& f, int i) {
    const Field& F = f.field();
    if (f.is_zero()) return UniLaurent(F);
    int lo = f.ymin(), hi = f.ydeg();
    std::vector<uint16_t> c(hi - lo + 1, 0);
    for (const auto& t : f.terms())
        if (t.i == i) c[t.j - lo] = t.c;
    return UniLaurent(F, lo, std::move(c));
}

UniPoly extract_B(const BiPoly& f, int j) {
    const Field& F = f.field();
    if (f.is_zero()) return UniPoly(F);
    std::vector<uint16_t> c(static_cast<size_t>(std::max(f.height(), 0)) + 1, 0);
    for (const auto& t : f.terms())
        if (t.j == j) c[t.i] = t.c;
    return UniPoly(F, std::move(c));
}

}  // namespace algseq
