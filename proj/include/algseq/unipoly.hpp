#pragma once

#include <limits>
#include <utility>

#include "algseq/field.hpp"

namespace algseq {

/// Degree of the zero polynomial; below every attainable integer degree.
constexpr int kNegInfDeg = std::numeric_limits<int>::min() / 2;

/// Dense univariate polynomial over F_q, ascending coefficients, canonical
/// (no stored trailing zeros).
class UniPoly {
  public:
    explicit UniPoly(const Field& f) : f_(&f) {}
    UniPoly(const Field& f, std::vector<uint16_t> ascending) : f_(&f), c_(std::move(ascending)) {
        trim();
    }

    static UniPoly zero(const Field& f) { return UniPoly(f); }
    static UniPoly one(const Field& f) { return UniPoly(f, {1}); }
    static UniPoly monomial(const Field& f, unsigned k, unsigned code = 1) {
        std::vector<uint16_t> c(k + 1, 0);
        c[k] = static_cast<uint16_t>(code);
        return UniPoly(f, std::move(c));
    }

    const Field& field() const { return *f_; }
    bool is_zero() const { return c_.empty(); }
    int deg() const { return c_.empty() ? kNegInfDeg : static_cast<int>(c_.size()) - 1; }
    uint16_t coeffc(int k) const {
        return (k < 0 || k >= static_cast<int>(c_.size())) ? 0 : c_[k];
    }
    Fq coeff(int k) const { return Fq(*f_, coeffc(k)); }
    const std::vector<uint16_t>& coeffs() const { return c_; }
    Fq leading() const {
        if (c_.empty()) throw input_error("zero polynomial has no leading coefficient");
        return Fq(*f_, c_.back());
    }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Fq constant() const { return Fq(*f_, coeffc(0)); }
    Fq eval(const Fq& x) const;
    std::string str(char var = 'z') const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.f_ == b.f_ && a.c_ == b.c_;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    const Field* f_;
    std::vector<uint16_t> c_;
};

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Fq& s, const UniPoly& a);
UniPoly operator-(const UniPoly& a);
UniPoly pow(const UniPoly& a, unsigned n);
UniPoly derivative(const UniPoly& a);

/// Quotient and remainder; b must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Exact division; throws if the remainder is nonzero.
UniPoly operator/(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& a, const UniPoly& b);
UniPoly gcd_monic(UniPoly a, UniPoly b);
UniPoly make_monic(const UniPoly& a);

/// Cartier operator: keeps exponents congruent to r mod q and divides them by q.
UniPoly cartier(unsigned r, const UniPoly& f);

/// Univariate Laurent polynomial: valuation plus ascending coefficients whose
/// first and last entries are nonzero (unless zero).
class UniLaurent {
  public:
    explicit UniLaurent(const Field& f) : f_(&f) {}
    UniLaurent(const Field& f, int valuation, std::vector<uint16_t> ascending)
        : f_(&f), v_(valuation), c_(std::move(ascending)) {
        normalize();
    }
    UniLaurent(const UniPoly& p) : f_(&p.field()), v_(0), c_(p.coeffs()) { normalize(); }

    static UniLaurent monomial(const Field& f, int k, unsigned code = 1) {
        return UniLaurent(f, k, {static_cast<uint16_t>(code)});
    }

    const Field& field() const { return *f_; }
    bool is_zero() const { return c_.empty(); }
    int valuation() const { return c_.empty() ? 0 : v_; }
    int deg() const { return c_.empty() ? kNegInfDeg : v_ + static_cast<int>(c_.size()) - 1; }
    uint16_t coeffc(int k) const {
        int idx = k - v_;
        return (c_.empty() || idx < 0 || idx >= static_cast<int>(c_.size())) ? 0 : c_[idx];
    }
    Fq coeff(int k) const { return Fq(*f_, coeffc(k)); }
    bool is_polynomial() const { return c_.empty() || v_ >= 0; }
    UniPoly to_poly() const;
    UniLaurent shifted(int k) const;  // multiply by z^k
    std::string str(char var = 'z') const;

    friend bool operator==(const UniLaurent& a, const UniLaurent& b) {
        return a.f_ == b.f_ && a.c_ == b.c_ && (a.c_.empty() || a.v_ == b.v_);
    }
    friend bool operator!=(const UniLaurent& a, const UniLaurent& b) { return !(a == b); }

  private:
    void normalize() {
        size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0) ++lead;
        if (lead) {
            c_.erase(c_.begin(), c_.begin() + lead);
            v_ += static_cast<int>(lead);
        }
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
        if (c_.empty()) v_ = 0;
    }

    const Field* f_;
    int v_ = 0;
    std::vector<uint16_t> c_;
};

UniLaurent operator+(const UniLaurent& a, const UniLaurent& b);
UniLaurent operator-(const UniLaurent& a, const UniLaurent& b);
UniLaurent operator*(const UniLaurent& a, const UniLaurent& b);
UniLaurent operator*(const Fq& s, const UniLaurent& a);
UniLaurent pow(const UniLaurent& a, unsigned n);
UniLaurent cartier(unsigned r, const UniLaurent& f);

}  // namespace algseq

template <>
struct std::hash<algseq::UniPoly> {
    size_t operator()(const algseq::UniPoly& p) const {
        uint64_t h = 1469598103934665603ull;
        for (uint16_t c : p.coeffs()) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};
