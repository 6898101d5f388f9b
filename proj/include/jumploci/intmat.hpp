#pragma once

#include <vector>

#include "jumploci/rational.hpp"

namespace jumploci {

// Dense matrix of arbitrary-precision integers.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, Int(0)) {}

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static IntMat from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& operator()(int r, int c) { return e_[size_t(r) * cols_ + c]; }
    const Int& operator()(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    IntMat transpose() const;
    IntMat operator*(const IntMat& o) const;
    IntMat vstack(const IntMat& below) const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

struct SnfResult {
    IntMat u;  // unimodular, rows x rows
    IntMat d;  // diagonal with divisibility chain, nonnegative
    IntMat v;  // unimodular, cols x cols
};

// u * a * v = d with d1 | d2 | ... | dr, all diagonal entries >= 0.
SnfResult smith_normal_form(const IntMat& a);

// Determinant via fraction-free elimination (square matrices only).
Int int_det(const IntMat& a);

int int_rank(const IntMat& a);

// Row-style Hermite normal form of the row span; zero rows dropped, pivots positive,
// entries above each pivot reduced into [0, pivot).
IntMat hnf_rows(const IntMat& a);

// Basis (as rows, in HNF) of {v in Z^n : a . v^T = 0}.
IntMat right_kernel(const IntMat& a);

// Basis (rows, HNF) of the saturation {v in Z^n : m v in rowspan_Z(b), some m > 0}.
IntMat saturate_lattice(const IntMat& b);

// Solves a * x = b over Z (column vector b). Empty optional when unsolvable.
std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b);

// Index [sat(L) : L] for the row span L of b; 0 is never returned (rows may be dependent).
Int saturation_index(const IntMat& b);

}  // namespace jumploci
