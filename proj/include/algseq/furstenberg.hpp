#pragma once

#include "algseq/bipoly.hpp"

namespace algseq {

/// Validated defining polynomial with its derived data: Q = P/y (Laurent in y),
/// the initial state S0 = y dP/dy, the cached power Q^{q-1}, and the three
/// border Laurent polynomials A_0/y, A_h/y, B_d.
struct FurstenbergInput {
    const Field* f;
    BiPoly P, Q, S0, Qq1;
    unsigned h = 0, d = 0;
    bool trivial = false;  // h == 0, so the series is identically 0
    UniLaurent A0y, Ahy;
    UniPoly Bd;
};

/// Checks P(0,0) = 0 and dP/dy(0,0) != 0 and precomputes the bundle.
FurstenbergInput validate(const BiPoly& P);

/// First n coefficients of the unique power series F with F(0) = 0 and
/// P(x, F) = 0, solved coefficient by coefficient from the truncation.
std::vector<uint16_t> series_prefix(const FurstenbergInput& in, size_t n);

/// First n coefficients of the y^0 row of S/Q, expanded around the constant
/// term of Q; the y-truncation window is widened until the row stabilizes.
std::vector<uint16_t> center_row_prefix(const BiPoly& s, const BiPoly& q, size_t n);

/// First n diagonal coefficients of S/Q for plain polynomials with Q(0,0) != 0.
std::vector<uint16_t> diagonal_prefix(const BiPoly& s, const BiPoly& q, size_t n);

}  // namespace algseq
