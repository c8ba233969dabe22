#include "algseq/unipoly.hpp"

namespace algseq {

namespace {

void require_same(const Field* a, const Field* b) {
    if (a != b) throw field_mismatch();
}

std::string term_str(unsigned code, int k, char var, const Field& f) {
    std::string cs = Fq(f, code).str();
    if (k == 0) return cs;
    std::string v(1, var);
    if (k != 1) v += "^" + std::to_string(k);
    if (code == 1) return v;
    return cs + "*" + v;
}

std::string laurent_str(const Field& f, int val, const std::vector<uint16_t>& c, char var) {
    if (c.empty()) return "0";
    std::string s;
    for (size_t idx = c.size(); idx-- > 0;) {
        if (c[idx] == 0) continue;
        if (!s.empty()) s += "+";
        s += term_str(c[idx], val + static_cast<int>(idx), var, f);
    }
    return s;
}

}  // namespace

Fq UniPoly::eval(const Fq& x) const {
    require_same_field(Fq(*f_, 0), x);
    uint16_t acc = 0;
    for (size_t k = c_.size(); k-- > 0;) acc = f_->addc(f_->mulc(acc, x.code()), c_[k]);
    return Fq(*f_, acc);
}

std::string UniPoly::str(char var) const { return laurent_str(*f_, 0, c_, var); }

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    require_same(f_, o.f_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] = f_->addc(c_[k], o.c_[k]);
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    require_same(f_, o.f_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] = f_->subc(c_[k], o.c_[k]);
    trim();
    return *this;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    r += b;
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    r -= b;
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    require_same(&a.field(), &b.field());
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return UniPoly(f);
    std::vector<uint16_t> r(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        uint16_t ai = a.coeffs()[i];
        if (ai == 0) continue;
        const uint16_t* row = f.mul_row(ai);
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            r[i + j] = f.addc(r[i + j], row[b.coeffs()[j]]);
    }
    return UniPoly(f, std::move(r));
}

UniPoly operator*(const Fq& s, const UniPoly& a) {
    require_same(&s.field(), &a.field());
    const Field& f = a.field();
    std::vector<uint16_t> r(a.coeffs());
    const uint16_t* row = f.mul_row(static_cast<uint16_t>(s.code()));
    for (auto& c : r) c = row[c];
    return UniPoly(f, std::move(r));
}

UniPoly operator-(const UniPoly& a) {
    const Field& f = a.field();
    std::vector<uint16_t> r(a.coeffs());
    for (auto& c : r) c = f.negc(c);
    return UniPoly(f, std::move(r));
}

UniPoly pow(const UniPoly& a, unsigned n) {
    UniPoly r = UniPoly::one(a.field());
    UniPoly base = a;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

UniPoly derivative(const UniPoly& a) {
    const Field& f = a.field();
    if (a.deg() < 1) return UniPoly(f);
    std::vector<uint16_t> r(a.coeffs().size() - 1);
    for (size_t k = 1; k < a.coeffs().size(); ++k)
        r[k - 1] = f.mulc(a.coeffs()[k], f.from_int(static_cast<long long>(k)).code());
    return UniPoly(f, std::move(r));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    require_same(&a.field(), &b.field());
    if (b.is_zero()) throw input_error("polynomial division by zero");
    const Field& f = a.field();
    if (a.deg() < b.deg()) return {UniPoly(f), a};
    uint16_t lead_inv = f.invc(static_cast<uint16_t>(b.leading().code()));
    std::vector<uint16_t> rem(a.coeffs());
    std::vector<uint16_t> quot(a.coeffs().size() - b.coeffs().size() + 1, 0);
    for (size_t k = rem.size(); k-- >= b.coeffs().size();) {
        if (rem[k] == 0) {
            if (k == 0) break;
            continue;
        }
        uint16_t c = f.mulc(rem[k], lead_inv);
        size_t shift = k - (b.coeffs().size() - 1);
        quot[shift] = c;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            rem[shift + j] = f.subc(rem[shift + j], f.mulc(c, b.coeffs()[j]));
        if (k == 0) break;
    }
    return {UniPoly(f, std::move(quot)), UniPoly(f, std::move(rem))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw input_error("polynomial division is not exact");
    return q;
}

bool divides(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) return true;
    if (a.is_zero()) return false;
    return divmod(b, a).second.is_zero();
}

UniPoly gcd_monic(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return make_monic(a);
}

UniPoly make_monic(const UniPoly& a) {
    if (a.is_zero()) throw input_error("cannot normalize the zero polynomial");
    return inv(a.leading()) * a;
}

UniPoly cartier(unsigned r, const UniPoly& f) {
    const Field& F = f.field();
    unsigned q = F.q();
    if (r >= q) throw input_error("Cartier digit out of range");
    if (f.is_zero()) return UniPoly(F);
    std::vector<uint16_t> out(f.coeffs().size() / q + 1, 0);
    for (size_t n = r; n < f.coeffs().size(); n += q) out[n / q] = f.coeffs()[n];
    return UniPoly(F, std::move(out));
}

UniPoly UniLaurent::to_poly() const {
    if (!is_polynomial()) throw input_error("Laurent polynomial has negative valuation");
    std::vector<uint16_t> c(static_cast<size_t>(v_) + c_.size(), 0);
    for (size_t k = 0; k < c_.size(); ++k) c[v_ + k] = c_[k];
    return UniPoly(*f_, std::move(c));
}

UniLaurent UniLaurent::shifted(int k) const {
    if (c_.empty()) return *this;
    return UniLaurent(*f_, v_ + k, c_);
}

std::string UniLaurent::str(char var) const { return laurent_str(*f_, v_, c_, var); }

UniLaurent operator+(const UniLaurent& a, const UniLaurent& b) {
    if (&a.field() != &b.field()) throw field_mismatch();
    const Field& f = a.field();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.valuation(), b.valuation());
    int hi = std::max(a.deg(), b.deg());
    std::vector<uint16_t> c(hi - lo + 1, 0);
    for (int k = lo; k <= hi; ++k) c[k - lo] = f.addc(a.coeffc(k), b.coeffc(k));
    return UniLaurent(f, lo, std::move(c));
}

UniLaurent operator-(const UniLaurent& a, const UniLaurent& b) {
    const Field& f = a.field();
    return a + (Fq(f, f.negc(1)) * b);
}

UniLaurent operator*(const UniLaurent& a, const UniLaurent& b) {
    if (&a.field() != &b.field()) throw field_mismatch();
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return UniLaurent(f);
    int alen = a.deg() - a.valuation() + 1;
    int blen = b.deg() - b.valuation() + 1;
    std::vector<uint16_t> c(alen + blen - 1, 0);
    for (int i = 0; i < alen; ++i) {
        uint16_t ai = a.coeffc(a.valuation() + i);
        if (ai == 0) continue;
        const uint16_t* row = f.mul_row(ai);
        for (int j = 0; j < blen; ++j)
            c[i + j] = f.addc(c[i + j], row[b.coeffc(b.valuation() + j)]);
    }
    return UniLaurent(f, a.valuation() + b.valuation(), std::move(c));
}

UniLaurent operator*(const Fq& s, const UniLaurent& a) {
    if (&s.field() != &a.field()) throw field_mismatch();
    const Field& f = a.field();
    if (a.is_zero() || s.is_zero()) return UniLaurent(f);
    int len = a.deg() - a.valuation() + 1;
    std::vector<uint16_t> c(len);
    const uint16_t* row = f.mul_row(static_cast<uint16_t>(s.code()));
    for (int k = 0; k < len; ++k) c[k] = row[a.coeffc(a.valuation() + k)];
    return UniLaurent(f, a.valuation(), std::move(c));
}

UniLaurent pow(const UniLaurent& a, unsigned n) {
    UniLaurent r = UniLaurent(UniPoly::one(a.field()));
    UniLaurent base = a;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

UniLaurent cartier(unsigned r, const UniLaurent& f) {
    const Field& F = f.field();
    unsigned q = F.q();
    if (r >= q) throw input_error("Cartier digit out of range");
    if (f.is_zero()) return UniLaurent(F);
    int lo = f.valuation(), hi = f.deg();
    // smallest n >= lo with n == r (mod q), using the nonnegative residue
    auto mod = [&](long long x) {
        long long m = x % q;
        return m < 0 ? m + q : m;
    };
    std::vector<uint16_t> out;
    int out_lo = 0;
    bool first = true;
    for (int n = lo; n <= hi; ++n) {
        if (mod(n) != static_cast<long long>(r)) continue;
        int m = (n - static_cast<int>(r)) / static_cast<int>(q);
        if (first) {
            out_lo = m;
            first = false;
        }
        out.resize(m - out_lo + 1, 0);
        out[m - out_lo] = f.coeffc(n);
    }
    if (first) return UniLaurent(F);
    return UniLaurent(F, out_lo, std::move(out));
}

}  // namespace algseq
