#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace algseq {

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : input_error {
    parse_error(const std::string& what, size_t position)
        : input_error(what + " at position " + std::to_string(position)), pos(position) {}
    size_t pos;
};

struct field_mismatch : input_error {
    field_mismatch() : input_error("operands belong to different fields") {}
};

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Fq;

/// Coefficients (ascending) of the monic irreducible of degree e over F_p whose
/// coefficient tuple, read as a base-p integer, is smallest.  e = 1 gives z.
std::vector<unsigned> find_irreducible(unsigned p, unsigned e);

/// The finite field F_{p^e}.  Instances are interned and immutable, so Fq
/// values identify their field by pointer.  Element codes are the base-p
/// encodings of the coordinate vectors in the power basis of the modulus;
/// code 0 is the zero element and code 1 the unit.
class Field {
  public:
    static const Field& get(unsigned p, unsigned e = 1);

    unsigned p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned q() const { return q_; }
    const std::vector<unsigned>& modulus() const { return mod_; }
    std::string modulus_str() const;

    Fq zero() const;
    Fq one() const;
    Fq elem(unsigned code) const;
    Fq from_int(long long n) const;  // n mod p, embedded in the prime subfield
    std::vector<Fq> enumerate() const;

    // code-level arithmetic for inner loops
    uint16_t addc(uint16_t a, uint16_t b) const { return add_[(size_t)a * q_ + b]; }
    uint16_t subc(uint16_t a, uint16_t b) const { return add_[(size_t)a * q_ + neg_[b]]; }
    uint16_t mulc(uint16_t a, uint16_t b) const { return mul_[(size_t)a * q_ + b]; }
    uint16_t negc(uint16_t a) const { return neg_[a]; }
    uint16_t invc(uint16_t a) const;
    uint16_t powc(uint16_t a, uint64_t n) const;
    const uint16_t* mul_row(uint16_t a) const { return &mul_[(size_t)a * q_]; }

    std::vector<unsigned> coords_of(uint16_t code) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

  private:
    Field(unsigned p, unsigned e, std::vector<unsigned> modulus);

    unsigned p_, e_, q_;
    std::vector<unsigned> mod_;
    std::vector<uint16_t> add_, mul_, neg_, inv_;
};

class Fq {
  public:
    Fq(const Field& f, unsigned code) : f_(&f), v_(static_cast<uint16_t>(code)) {
        if (code >= f.q()) throw input_error("element code out of range");
    }

    unsigned code() const { return v_; }
    const Field& field() const { return *f_; }
    std::vector<unsigned> coords() const { return f_->coords_of(v_); }
    bool is_zero() const { return v_ == 0; }
    std::string str() const;

  private:
    const Field* f_;
    uint16_t v_;
};

inline void require_same_field(const Fq& a, const Fq& b) {
    if (&a.field() != &b.field()) throw field_mismatch();
}

inline Fq operator+(const Fq& a, const Fq& b) {
    require_same_field(a, b);
    return Fq(a.field(), a.field().addc(a.code(), b.code()));
}
inline Fq operator-(const Fq& a, const Fq& b) {
    require_same_field(a, b);
    return Fq(a.field(), a.field().subc(a.code(), b.code()));
}
inline Fq operator*(const Fq& a, const Fq& b) {
    require_same_field(a, b);
    return Fq(a.field(), a.field().mulc(a.code(), b.code()));
}
inline Fq operator-(const Fq& a) { return Fq(a.field(), a.field().negc(a.code())); }
inline Fq inv(const Fq& a) { return Fq(a.field(), a.field().invc(a.code())); }
inline Fq pow(const Fq& a, uint64_t n) { return Fq(a.field(), a.field().powc(a.code(), n)); }
inline bool operator==(const Fq& a, const Fq& b) {
    return &a.field() == &b.field() && a.code() == b.code();
}
inline bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

inline uint64_t int_encode(const Fq& a) { return a.code(); }
inline Fq int_decode(const Field& f, uint64_t n) {
    if (n >= f.q()) throw input_error("integer " + std::to_string(n) + " is not a code of an element of F_" + std::to_string(f.q()));
    return f.elem(static_cast<unsigned>(n));
}

}  // namespace algseq
