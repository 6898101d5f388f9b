#pragma once

#include <optional>
#include <vector>

#include "jumploci/poly.hpp"

namespace jumploci {

// Dense matrix over a field K (Rat, Cyclotomic, complex<double>).
template <class K>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, K fill = K(0)) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    K& operator()(int r, int c) { return e_[size_t(r) * cols_ + c]; }
    const K& operator()(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

    Mat operator*(const Mat& o) const {
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (is_zero_k((*this)(i, k))) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
            }
        return r;
    }

private:
    int rows_, cols_;
    std::vector<K> e_;
};

using QMat = Mat<Rat>;
using CycMat = Mat<Cyclotomic>;

template <class K>
int rank_field(Mat<K> m) {
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int p = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (!is_zero_k(m(i, col))) { p = i; break; }
        if (p < 0) continue;
        for (int c = 0; c < m.cols(); ++c) std::swap(m(rank, c), m(p, c));
        K piv_inv = inv_k(m(rank, col));
        for (int i = rank + 1; i < m.rows(); ++i) {
            if (is_zero_k(m(i, col))) continue;
            K f = m(i, col) * piv_inv;
            for (int c = col; c < m.cols(); ++c) m(i, c) -= f * m(rank, c);
        }
        ++rank;
    }
    return rank;
}

// Basis of {v : m v = 0}, one kernel vector per returned entry.
template <class K>
std::vector<std::vector<K>> kernel_field(const Mat<K>& m0) {
    Mat<K> m = m0;
    int n = m.cols();
    std::vector<int> pivot_of_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < m.rows(); ++col) {
        int p = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (!is_zero_k(m(i, col))) { p = i; break; }
        if (p < 0) continue;
        for (int c = 0; c < n; ++c) std::swap(m(rank, c), m(p, c));
        K piv_inv = inv_k(m(rank, col));
        for (int c = 0; c < n; ++c) m(rank, c) = m(rank, c) * piv_inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank || is_zero_k(m(i, col))) continue;
            K f = m(i, col);
            for (int c = 0; c < n; ++c) m(i, c) -= f * m(rank, c);
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    std::vector<std::vector<K>> basis;
    for (int col = 0; col < n; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<K> v(n, K(0));
        v[col] = K(1);
        for (int c = 0; c < n; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -m(pivot_of_col[c], col);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Least solution of m x = b, if any.
template <class K>
std::optional<std::vector<K>> solve_field(const Mat<K>& m0, const std::vector<K>& b) {
    Mat<K> aug(m0.rows(), m0.cols() + 1);
    for (int i = 0; i < m0.rows(); ++i) {
        for (int j = 0; j < m0.cols(); ++j) aug(i, j) = m0(i, j);
        aug(i, m0.cols()) = b[i];
    }
    int n = m0.cols();
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n && rank < aug.rows(); ++col) {
        int p = -1;
        for (int i = rank; i < aug.rows(); ++i)
            if (!is_zero_k(aug(i, col))) { p = i; break; }
        if (p < 0) continue;
        for (int c = 0; c <= n; ++c) std::swap(aug(rank, c), aug(p, c));
        K piv_inv = inv_k(aug(rank, col));
        for (int c = 0; c <= n; ++c) aug(rank, c) = aug(rank, c) * piv_inv;
        for (int i = 0; i < aug.rows(); ++i) {
            if (i == rank || is_zero_k(aug(i, col))) continue;
            K f = aug(i, col);
            for (int c = 0; c <= n; ++c) aug(i, c) -= f * aug(rank, c);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int i = rank; i < aug.rows(); ++i)
        if (!is_zero_k(aug(i, n))) return std::nullopt;
    std::vector<K> x(n, K(0));
    for (int i = 0; i < rank; ++i) x[pivot_col[i]] = aug(i, n);
    return x;
}

// Rank over the fraction field K(x1..xm) by fraction-free (Bareiss) elimination.
// Laurent entries are admitted: each row is first scaled by a monomial (a unit),
// which leaves the rank unchanged.
template <class K>
int generic_rank(Mat<SparsePoly<K>> m) {
    int nv = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) nv = std::max(nv, m(i, j).nvars());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j).nvars() != nv) {
                if (!m(i, j).is_zero()) throw std::invalid_argument("generic_rank: mixed arities");
                m(i, j) = SparsePoly<K>(nv);
            }
    for (int i = 0; i < m.rows(); ++i) {
        Expo shift(nv, 0);
        bool need = false;
        for (int v = 0; v < nv; ++v) {
            long mn = 0;
            for (int j = 0; j < m.cols(); ++j)
                if (!m(i, j).is_zero()) mn = std::min(mn, m(i, j).min_exponent(v));
            if (mn < 0) { shift[v] = int(-mn); need = true; }
        }
        if (need)
            for (int j = 0; j < m.cols(); ++j) m(i, j) = m(i, j).shifted(shift);
    }

    using P = SparsePoly<K>;
    P prev = P::constant(nv, K(1));
    int r = 0;
    int lim = std::min(m.rows(), m.cols());
    while (r < lim) {
        int pi = -1, pj = -1;
        long best_deg = 0;
        size_t best_terms = 0;
        for (int i = r; i < m.rows(); ++i)
            for (int j = r; j < m.cols(); ++j) {
                const P& e = m(i, j);
                if (e.is_zero()) continue;
                long d = e.total_degree();
                size_t t = e.terms().size();
                if (pi < 0 || d < best_deg || (d == best_deg && t < best_terms)) {
                    pi = i; pj = j; best_deg = d; best_terms = t;
                }
            }
        if (pi < 0) break;
        for (int c = 0; c < m.cols(); ++c) std::swap(m(r, c), m(pi, c));
        for (int i = 0; i < m.rows(); ++i) std::swap(m(i, r), m(i, pj));
        for (int i = r + 1; i < m.rows(); ++i)
            for (int j = r + 1; j < m.cols(); ++j)
                m(i, j) = (m(r, r) * m(i, j) - m(i, r) * m(r, j)).div_exact(prev);
        prev = m(r, r);
        ++r;
    }
    return r;
}

}  // namespace jumploci
