#include "jumploci/intmat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jumploci {

IntMat IntMat::from_rows(const std::vector<std::vector<long>>& rows) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw std::invalid_argument("ragged row list");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMat IntMat::transpose() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matmul shape mismatch");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

IntMat IntMat::vstack(const IntMat& below) const {
    if (rows_ == 0 && cols_ == 0) return below;
    if (below.rows() == 0 && below.cols() == 0) return *this;
    if (cols_ != below.cols()) throw std::invalid_argument("vstack width mismatch");
    IntMat r(rows_ + below.rows(), cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (int i = 0; i < below.rows(); ++i)
        for (int j = 0; j < cols_; ++j) r(rows_ + i, j) = below(i, j);
    return r;
}

void IntMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

std::string IntMat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    }
    os << "]";
    return os.str();
}

namespace {

void add_row(IntMat& m, int dst, int src, const Int& mult) {
    for (int c = 0; c < m.cols(); ++c) m(dst, c) += mult * m(src, c);
}

void add_col(IntMat& m, int dst, int src, const Int& mult) {
    for (int r = 0; r < m.rows(); ++r) m(r, dst) += mult * m(r, src);
}

void negate_row(IntMat& m, int r) {
    for (int c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

SnfResult smith_normal_form(const IntMat& a) {
    int m = a.rows(), n = a.cols();
    SnfResult res{IntMat::identity(m), a, IntMat::identity(n)};
    IntMat& d = res.d;
    IntMat& u = res.u;
    IntMat& v = res.v;

    int t = 0;
    while (t < m && t < n) {
        // locate smallest-magnitude nonzero entry in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (d(i, j) != 0 && (pi < 0 || abs(d(i, j)) < abs(d(pi, pj)))) { pi = i; pj = j; }
        if (pi < 0) break;
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // clear column t by Euclid on rows
            for (int i = t + 1; i < m; ++i) {
                while (d(i, t) != 0) {
                    Int q = d(i, t) / d(t, t);
                    add_row(d, i, t, -q);
                    add_row(u, i, t, -q);
                    if (d(i, t) != 0) {
                        d.swap_rows(t, i);
                        u.swap_rows(t, i);
                        dirty = true;
                    }
                }
            }
            // clear row t by Euclid on columns
            for (int j = t + 1; j < n; ++j) {
                while (d(t, j) != 0) {
                    Int q = d(t, j) / d(t, t);
                    add_col(d, j, t, -q);
                    add_col(v, j, t, -q);
                    if (d(t, j) != 0) {
                        d.swap_cols(t, j);
                        v.swap_cols(t, j);
                        dirty = true;
                    }
                }
            }
            // re-check the column (column swaps above may have refilled it)
            for (int i = t + 1; i < m && !dirty; ++i)
                if (d(i, t) != 0) dirty = true;
        }

        // enforce divisibility of the trailing block by d(t,t)
        bool redo = false;
        for (int i = t + 1; i < m && !redo; ++i)
            for (int j = t + 1; j < n && !redo; ++j)
                if (d(i, j) % d(t, t) != 0) {
                    add_row(d, t, i, 1);
                    add_row(u, t, i, 1);
                    redo = true;
                }
        if (redo) continue;

        if (d(t, t) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
        ++t;
    }
    return res;
}

Int int_det(const IntMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det of non-square matrix");
    int n = a.rows();
    if (n == 0) return 1;
    IntMat w = a;
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            w.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                mpz_divexact(w(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

int int_rank(const IntMat& a) {
    auto snf = smith_normal_form(a);
    int r = 0;
    for (int i = 0; i < std::min(a.rows(), a.cols()); ++i)
        if (snf.d(i, i) != 0) ++r;
    return r;
}

IntMat hnf_rows(const IntMat& a) {
    int m = a.rows(), n = a.cols();
    IntMat w = a;
    int row = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < n && row < m; ++col) {
        // gcd out column col among rows >= row
        bool again = true;
        while (again) {
            again = false;
            int p = -1;
            for (int i = row; i < m; ++i)
                if (w(i, col) != 0 && (p < 0 || abs(w(i, col)) < abs(w(p, col)))) p = i;
            if (p < 0) break;
            w.swap_rows(row, p);
            for (int i = row + 1; i < m; ++i)
                if (w(i, col) != 0) {
                    Int q = w(i, col) / w(row, col);
                    add_row(w, i, row, -q);
                    if (w(i, col) != 0) again = true;
                }
        }
        if (w(row, col) == 0) continue;
        if (w(row, col) < 0) negate_row(w, row);
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), w(i, col).get_mpz_t(), w(row, col).get_mpz_t());
            if (q != 0) add_row(w, i, row, -q);
        }
        pivot_col.push_back(col);
        ++row;
    }
    IntMat out(row, n);
    for (int i = 0; i < row; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = w(i, j);
    return out;
}

IntMat right_kernel(const IntMat& a) {
    auto snf = smith_normal_form(a);
    int n = a.cols();
    int r = 0;
    for (int i = 0; i < std::min(a.rows(), n); ++i)
        if (snf.d(i, i) != 0) ++r;
    IntMat ker(n - r, n);
    for (int k = r; k < n; ++k)
        for (int i = 0; i < n; ++i) ker(k - r, i) = snf.v(i, k);
    return hnf_rows(ker);
}

IntMat saturate_lattice(const IntMat& b) {
    if (b.rows() == 0) return IntMat(0, b.cols());
    return hnf_rows(right_kernel(right_kernel(b)));
}

std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b) {
    if (int(b.size()) != a.rows()) throw std::invalid_argument("solve_integer shape mismatch");
    auto snf = smith_normal_form(a);
    int m = a.rows(), n = a.cols();
    std::vector<Int> ub(m, Int(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) ub[i] += snf.u(i, j) * b[j];
    std::vector<Int> y(n, Int(0));
    for (int i = 0; i < m; ++i) {
        Int di = (i < n) ? snf.d(i, i) : Int(0);
        if (di == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % di != 0) return std::nullopt;
            y[i] = ub[i] / di;
        }
    }
    std::vector<Int> x(n, Int(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x[i] += snf.v(i, j) * y[j];
    return x;
}

Int saturation_index(const IntMat& b) {
    auto snf = smith_normal_form(b);
    Int prod(1);
    for (int i = 0; i < std::min(b.rows(), b.cols()); ++i)
        if (snf.d(i, i) != 0) prod *= snf.d(i, i);
    return prod;
}

}  // namespace jumploci
