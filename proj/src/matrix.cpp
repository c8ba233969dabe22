#include "algseq/matrix.hpp"

#include <algorithm>
#include <map>

namespace algseq {

MatFq mat_mul(const MatFq& a, const MatFq& b) {
    if (&a.field() != &b.field()) throw field_mismatch();
    if (a.cols() != b.rows()) throw input_error("matrix dimension mismatch");
    const Field& f = a.field();
    MatFq r(f, a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            uint16_t aik = a.at(i, k);
            if (aik == 0) continue;
            const uint16_t* row = f.mul_row(aik);
            for (size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) = f.addc(r.at(i, j), row[b.at(k, j)]);
        }
    return r;
}

MatFq mat_pow(const MatFq& m, uint64_t n) {
    if (m.rows() != m.cols()) throw input_error("matrix power requires a square matrix");
    MatFq r = MatFq::identity(m.field(), m.rows());
    MatFq base = m;
    while (n) {
        if (n & 1) r = mat_mul(r, base);
        base = mat_mul(base, base);
        n >>= 1;
    }
    return r;
}

MatFq mat_sub(const MatFq& a, const MatFq& b) {
    if (&a.field() != &b.field()) throw field_mismatch();
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw input_error("matrix dimension mismatch");
    const Field& f = a.field();
    MatFq r(f, a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = f.subc(a.at(i, j), b.at(i, j));
    return r;
}

std::vector<uint16_t> mat_apply(const MatFq& m, const std::vector<uint16_t>& v) {
    if (v.size() != m.cols()) throw input_error("matrix dimension mismatch");
    const Field& f = m.field();
    std::vector<uint16_t> r(m.rows(), 0);
    for (size_t i = 0; i < m.rows(); ++i) {
        uint16_t acc = 0;
        for (size_t j = 0; j < m.cols(); ++j) acc = f.addc(acc, f.mulc(m.at(i, j), v[j]));
        r[i] = acc;
    }
    return r;
}

namespace {

// in-place reduced row echelon; returns pivot column per pivot row
std::vector<size_t> rref_inplace(MatFq& m) {
    const Field& f = m.field();
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        uint16_t piv_inv = f.invc(m.at(row, col));
        for (size_t j = 0; j < m.cols(); ++j) m.at(row, j) = f.mulc(m.at(row, j), piv_inv);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            uint16_t c = m.at(i, col);
            for (size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = f.subc(m.at(i, j), f.mulc(c, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

size_t rank(MatFq m) { return rref_inplace(m).size(); }

MatFq rref(MatFq m) {
    rref_inplace(m);
    return m;
}

std::vector<std::vector<uint16_t>> nullspace_basis(const MatFq& m) {
    const Field& f = m.field();
    MatFq r = m;
    std::vector<size_t> pivots = rref_inplace(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<uint16_t>> basis;
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<uint16_t> v(m.cols(), 0);
        v[free_col] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = f.negc(r.at(pr, free_col));
        basis.push_back(std::move(v));
    }
    return basis;
}

MatFq operator_matrix(const Field& f, const std::vector<std::pair<int, int>>& basis,
                      const std::function<BiPoly(const BiPoly&)>& op) {
    std::map<std::pair<int, int>, size_t> index;
    for (size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
    MatFq m(f, basis.size(), basis.size());
    for (size_t col = 0; col < basis.size(); ++col) {
        BiPoly image = op(BiPoly::monomial(f, basis[col].first, basis[col].second));
        for (const auto& t : image.terms()) {
            auto it = index.find({t.i, t.j});
            if (it == index.end()) throw not_invariant_error();
            m.at(it->second, col) = t.c;
        }
    }
    return m;
}

MatFq operator_matrix(const Field& f, int degmax,
                      const std::function<UniPoly(const UniPoly&)>& op) {
    if (degmax < 0) throw input_error("operator basis is empty");
    size_t n = static_cast<size_t>(degmax) + 1;
    MatFq m(f, n, n);
    for (size_t col = 0; col < n; ++col) {
        UniPoly image = op(UniPoly::monomial(f, static_cast<unsigned>(col)));
        if (image.deg() > degmax) throw not_invariant_error();
        for (int k = 0; k <= image.deg(); ++k) m.at(static_cast<size_t>(k), col) = image.coeffc(k);
    }
    return m;
}

}  // namespace algseq
