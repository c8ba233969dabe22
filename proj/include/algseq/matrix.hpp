#pragma once

#include <functional>

#include "algseq/bipoly.hpp"

namespace algseq {

struct not_invariant_error : input_error {
    not_invariant_error() : input_error("operator image escapes the span of the basis") {}
};

/// Dense matrix over F_q, row-major element codes.
class MatFq {
  public:
    MatFq(const Field& f, size_t rows, size_t cols)
        : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static MatFq identity(const Field& f, size_t n) {
        MatFq m(f, n, n);
        for (size_t k = 0; k < n; ++k) m.at(k, k) = 1;
        return m;
    }

    const Field& field() const { return *f_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint16_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    uint16_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    friend bool operator==(const MatFq& a, const MatFq& b) {
        return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const MatFq& a, const MatFq& b) { return !(a == b); }

  private:
    const Field* f_;
    size_t rows_, cols_;
    std::vector<uint16_t> a_;
};

MatFq mat_mul(const MatFq& a, const MatFq& b);
MatFq mat_pow(const MatFq& m, uint64_t n);
MatFq mat_sub(const MatFq& a, const MatFq& b);
std::vector<uint16_t> mat_apply(const MatFq& m, const std::vector<uint16_t>& v);

size_t rank(MatFq m);
MatFq rref(MatFq m);
/// Nullspace basis in reduced-echelon canonical form; every vector v satisfies Mv = 0.
std::vector<std::vector<uint16_t>> nullspace_basis(const MatFq& m);

/// Matrix of a linear operator on the span of an ordered monomial basis;
/// column j holds the coordinates of op(basis_j).  Throws not_invariant_error
/// if an image does not lie in the span.
MatFq operator_matrix(const Field& f, const std::vector<std::pair<int, int>>& basis,
                      const std::function<BiPoly(const BiPoly&)>& op);

/// Same for a univariate operator on the basis 1, z, ..., z^degmax.
MatFq operator_matrix(const Field& f, int degmax,
                      const std::function<UniPoly(const UniPoly&)>& op);

}  // namespace algseq
