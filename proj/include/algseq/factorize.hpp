#pragma once

#include <optional>

#include "algseq/unipoly.hpp"

namespace algseq {

/// Factorization of a nonzero Laurent polynomial: c z^{e0} R_1^{e_1} ... R_k^{e_k}
/// with the R_i monic, irreducible, distinct, and different from z.
struct Factorization {
    const Field* f;
    uint16_t unit;  // code of c
    int e0;
    std::vector<std::pair<UniPoly, unsigned>> factors;  // sorted by (deg, coefficients)

    bool square_free() const {
        for (const auto& [r, e] : factors)
            if (e > 1) return false;
        return true;
    }
    UniLaurent expand() const;
};

Factorization factor(const UniLaurent& r);
Factorization factor(const UniPoly& r);

/// rad R = c z^{min(e0, 0)} R_1 ... R_k.
UniLaurent radical(const Factorization& fact);

bool is_irreducible(const UniPoly& f);
std::vector<UniPoly> monic_irreducibles(const Field& f, unsigned deg);

/// First n coefficients of the power-series inverse of a polynomial with
/// nonzero constant term.
std::vector<uint16_t> series_inverse_prefix(const UniPoly& r, size_t n);

/// Least period of the prefix: the smallest L >= 1 with seq[k+L] == seq[k] for
/// every index in the window.
size_t least_period(const std::vector<uint16_t>& seq);

}  // namespace algseq
