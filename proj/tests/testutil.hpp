#pragma once

#include <random>

#include "algseq/harness.hpp"

namespace testutil {

using namespace algseq;

inline BiPoly bp(const std::string& text, const Field& f) { return parse_poly(text, f); }

inline UniPoly up(const std::string& text, const Field& f) {
    UniLaurent l = parse_laurent(text, f);
    return l.to_poly();
}

inline UniLaurent ul(const std::string& text, const Field& f) { return parse_laurent(text, f); }

inline UniLaurent random_laurent(const Field& f, std::mt19937_64& rng, int val_lo = -3,
                                 int val_hi = 3, int max_len = 6) {
    int val = val_lo + static_cast<int>(rng() % (val_hi - val_lo + 1));
    int len = 1 + static_cast<int>(rng() % max_len);
    std::vector<uint16_t> c(len);
    for (auto& x : c) x = static_cast<uint16_t>(rng() % f.q());
    return UniLaurent(f, val, std::move(c));
}

inline BiPoly random_bipoly(const Field& f, std::mt19937_64& rng, int max_i = 2, int min_j = -2,
                            int max_j = 2) {
    std::vector<BiTerm> t;
    for (int i = 0; i <= max_i; ++i)
        for (int j = min_j; j <= max_j; ++j) {
            uint16_t c = static_cast<uint16_t>(rng() % f.q());
            if (c) t.push_back({i, j, c});
        }
    return BiPoly(f, std::move(t));
}

inline UniPoly random_unipoly(const Field& f, std::mt19937_64& rng, int max_deg = 5) {
    int len = 1 + static_cast<int>(rng() % (max_deg + 1));
    std::vector<uint16_t> c(len);
    for (auto& x : c) x = static_cast<uint16_t>(rng() % f.q());
    return UniPoly(f, std::move(c));
}

// running example from the worked computations: q = 3,
// P = (x^2+x+2) y^4 + x y^3 + (2x+1) y^2 + (x^2+1) y + 2x^2 + x
inline const char* kRunningExampleP =
    "(x^2+x+2)y^4 + x y^3 + (2x+1)y^2 + (x^2+1)y + 2x^2 + x";

inline const std::vector<uint16_t> kRunningExamplePrefix27 = {
    0, 2, 0, 2, 0, 2, 0, 0, 1, 0, 0, 1, 1, 1, 1, 1, 2, 1, 1, 2, 0, 0, 2, 2, 1, 0, 1};

}  // namespace testutil
