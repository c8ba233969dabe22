#include "algseq/field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace algseq {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// dense polynomials over F_p as ascending coefficient vectors, no trailing zeros
using PPoly = std::vector<unsigned>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    ptrim(r);
    return r;
}

// remainder of a by monic b
PPoly pmod(PPoly a, const PPoly& b, unsigned p) {
    ptrim(a);
    while (a.size() >= b.size()) {
        unsigned c = a.back();
        size_t shift = a.size() - b.size();
        for (size_t k = 0; k < b.size(); ++k)
            a[shift + k] = (a[shift + k] + p * p - c * b[k] % p) % p;
        ptrim(a);
    }
    return a;
}

bool pdivides(const PPoly& g, const PPoly& f, unsigned p) { return pmod(f, g, p).empty(); }

bool irreducible_trial(const PPoly& f, unsigned p) {
    size_t e = f.size() - 1;
    if (e == 0) return false;
    if (e == 1) return true;
    // trial division by every monic polynomial of degree 1..e/2
    for (size_t dg = 1; 2 * dg <= e; ++dg) {
        uint64_t count = 1;
        for (size_t k = 0; k < dg; ++k) count *= p;
        for (uint64_t enc = 0; enc < count; ++enc) {
            PPoly g(dg + 1, 0);
            uint64_t t = enc;
            for (size_t k = 0; k < dg; ++k) {
                g[k] = static_cast<unsigned>(t % p);
                t /= p;
            }
            g[dg] = 1;
            if (pdivides(g, f, p)) return false;
        }
    }
    return true;
}

constexpr unsigned kMaxQ = 512;

}  // namespace

std::vector<unsigned> find_irreducible(unsigned p, unsigned e) {
    if (!is_prime(p)) throw input_error("p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw input_error("extension degree must be at least 1");
    if (e == 1) return {0, 1};  // the polynomial z
    uint64_t count = 1;
    for (unsigned k = 0; k < e; ++k) {
        count *= p;
        if (count > (uint64_t)kMaxQ * kMaxQ) throw input_error("field too large");
    }
    for (uint64_t enc = 0; enc < count; ++enc) {
        PPoly f(e + 1, 0);
        uint64_t t = enc;
        for (unsigned k = 0; k < e; ++k) {
            f[k] = static_cast<unsigned>(t % p);
            t /= p;
        }
        f[e] = 1;
        if (irreducible_trial(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Field::Field(unsigned p, unsigned e, std::vector<unsigned> modulus)
    : p_(p), e_(e), mod_(std::move(modulus)) {
    uint64_t q = 1;
    for (unsigned k = 0; k < e; ++k) q *= p;
    q_ = static_cast<unsigned>(q);

    auto decode = [&](unsigned code) {
        PPoly a;
        while (code) {
            a.push_back(code % p_);
            code /= p_;
        }
        return a;
    };
    auto encode = [&](const PPoly& a) {
        unsigned code = 0;
        for (size_t k = a.size(); k-- > 0;) code = code * p_ + a[k];
        return code;
    };

    add_.resize((size_t)q_ * q_);
    mul_.resize((size_t)q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
        PPoly pa = decode(a);
        for (unsigned b = 0; b < q_; ++b) {
            PPoly pb = decode(b);
            PPoly s(std::max(pa.size(), pb.size()), 0);
            for (size_t k = 0; k < s.size(); ++k) {
                unsigned va = k < pa.size() ? pa[k] : 0;
                unsigned vb = k < pb.size() ? pb[k] : 0;
                s[k] = (va + vb) % p_;
            }
            ptrim(s);
            add_[(size_t)a * q_ + b] = static_cast<uint16_t>(encode(s));
            PPoly m = e_ == 1 ? PPoly{} : pmod(pmul(pa, pb, p_), mod_, p_);
            if (e_ == 1) {
                unsigned v = a * b % p_;
                mul_[(size_t)a * q_ + b] = static_cast<uint16_t>(v);
            } else {
                mul_[(size_t)a * q_ + b] = static_cast<uint16_t>(encode(m));
            }
        }
    }
    for (unsigned a = 0; a < q_; ++a) {
        PPoly pa = decode(a);
        PPoly n(pa.size());
        for (size_t k = 0; k < pa.size(); ++k) n[k] = (p_ - pa[k]) % p_;
        ptrim(n);
        neg_[a] = static_cast<uint16_t>(encode(n));
    }
    for (unsigned a = 1; a < q_; ++a)
        for (unsigned b = 1; b < q_; ++b)
            if (mul_[(size_t)a * q_ + b] == 1) {
                inv_[a] = static_cast<uint16_t>(b);
                break;
            }
}

const Field& Field::get(unsigned p, unsigned e) {
    if (!is_prime(p)) throw input_error("p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw input_error("extension degree must be at least 1");
    uint64_t q = 1;
    for (unsigned k = 0; k < e; ++k) {
        q *= p;
        if (q > kMaxQ) throw input_error("field F_" + std::to_string(p) + "^" + std::to_string(e) + " exceeds the supported size");
    }

    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Field>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[{p, e}];
    if (!slot) slot.reset(new Field(p, e, find_irreducible(p, e)));
    return *slot;
}

std::string Field::modulus_str() const {
    std::string s;
    for (size_t k = mod_.size(); k-- > 0;) {
        if (mod_[k] == 0) continue;
        if (!s.empty()) s += "+";
        if (k == 0) {
            s += std::to_string(mod_[k]);
        } else {
            if (mod_[k] != 1) s += std::to_string(mod_[k]) + "*";
            s += "z";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s.empty() ? "0" : s;
}

Fq Field::zero() const { return Fq(*this, 0); }
Fq Field::one() const { return Fq(*this, 1); }
Fq Field::elem(unsigned code) const { return Fq(*this, code); }

Fq Field::from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Fq(*this, static_cast<unsigned>(r));
}

std::vector<Fq> Field::enumerate() const {
    std::vector<Fq> all;
    all.reserve(q_);
    for (unsigned c = 0; c < q_; ++c) all.push_back(Fq(*this, c));
    return all;
}

uint16_t Field::invc(uint16_t a) const {
    if (a == 0) throw input_error("division by zero in F_" + std::to_string(q_));
    return inv_[a];
}

uint16_t Field::powc(uint16_t a, uint64_t n) const {
    uint16_t r = 1, base = a;
    while (n) {
        if (n & 1) r = mulc(r, base);
        base = mulc(base, base);
        n >>= 1;
    }
    return r;
}

std::vector<unsigned> Field::coords_of(uint16_t code) const {
    std::vector<unsigned> c(e_, 0);
    unsigned v = code;
    for (unsigned k = 0; k < e_; ++k) {
        c[k] = v % p_;
        v /= p_;
    }
    return c;
}

std::string Fq::str() const {
    if (f_->e() == 1 || v_ < f_->p()) return std::to_string(v_);
    auto c = coords();
    std::string s = "[";
    for (size_t k = 0; k < c.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(c[k]);
    }
    return s + "]";
}

}  // namespace algseq
