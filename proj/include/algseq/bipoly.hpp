#pragma once

#include <functional>

#include "algseq/unipoly.hpp"

namespace algseq {

struct BiTerm {
    int i;       // exponent of x, always >= 0
    int j;       // exponent of y, may be negative
    uint16_t c;  // nonzero coefficient code
    friend bool operator==(const BiTerm& a, const BiTerm& b) {
        return a.i == b.i && a.j == b.j && a.c == b.c;
    }
};

/// Sparse bivariate polynomial over F_q, Laurent in y.  Terms are kept in
/// canonical (i, j) order with nonzero coefficients, so equality and hashing
/// are structural.
class BiPoly {
  public:
    explicit BiPoly(const Field& f) : f_(&f) {}
    BiPoly(const Field& f, std::vector<BiTerm> terms);

    static BiPoly zero(const Field& f) { return BiPoly(f); }
    static BiPoly one(const Field& f) { return monomial(f, 0, 0); }
    static BiPoly monomial(const Field& f, int i, int j, unsigned code = 1);

    const Field& field() const { return *f_; }
    const std::vector<BiTerm>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int height() const;  // max i; kNegInfDeg when zero
    int ydeg() const;    // max j; kNegInfDeg when zero
    int ymin() const;    // min j; 0 when zero
    bool is_plain() const { return ymin() >= 0; }
    uint16_t coeffc(int i, int j) const;
    Fq coeff(int i, int j) const { return Fq(*f_, coeffc(i, j)); }
    std::string str() const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.f_ == b.f_ && a.t_ == b.t_;
    }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  private:
    const Field* f_;
    std::vector<BiTerm> t_;
};

struct BiPolyHash {
    size_t operator()(const BiPoly& p) const {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&](uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        for (const auto& t : p.terms()) {
            mix(static_cast<uint64_t>(static_cast<int64_t>(t.i)));
            mix(static_cast<uint64_t>(static_cast<int64_t>(t.j)));
            mix(t.c);
        }
        return static_cast<size_t>(h);
    }
};

BiPoly operator+(const BiPoly& a, const BiPoly& b);
BiPoly operator-(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const Fq& s, const BiPoly& a);
BiPoly operator-(const BiPoly& a);
BiPoly pow(const BiPoly& a, unsigned n);

/// Bivariate Cartier operator: keeps terms with i == r, j == s (mod q) and
/// divides both exponents by q.
BiPoly cartier(unsigned r, unsigned s, const BiPoly& f);

/// Fused Lambda_{r,s}(a * b), accumulating only the surviving residues.
BiPoly cartier_product(const BiPoly& a, const BiPoly& b, unsigned r, unsigned s);

BiPoly shear_up(const BiPoly& f);    // x -> x y
BiPoly shear_down(const BiPoly& f);  // x -> x y^{-1}
BiPoly partial_y(const BiPoly& f);
BiPoly y_partial_y(const BiPoly& f);  // y * dP/dy
BiPoly shift_y(const BiPoly& f, int k);
Fq eval00(const BiPoly& f);
UniLaurent extract_A(const BiPoly& f, int i);  // column slice, a Laurent polynomial in y
UniPoly extract_B(const BiPoly& f, int j);     // row slice, a polynomial in x

}  // namespace algseq

template <>
struct std::hash<algseq::BiPoly> {
    size_t operator()(const algseq::BiPoly& p) const { return algseq::BiPolyHash()(p); }
};
