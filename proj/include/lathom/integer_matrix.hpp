#pragma once

#include <vector>

#include "lathom/numbers.hpp"

namespace lathom {

// Dense matrix over Int, row major.  Sized for "desk scale" problems: a few
// hundred rows/columns with entries that stay small under gcd-style pivoting.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    // row_i += c * row_j,  col_i += c * col_j
    void row_axpy(int i, int j, const Int& c);
    void col_axpy(int i, int j, const Int& c);

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

struct SnfResult {
    // Positive, each dividing the next.
    std::vector<Int> invariant_factors;
    int rank() const { return static_cast<int>(invariant_factors.size()); }
};

// Smith normal form via gcd pivoting (smallest |entry| pivot, alternating
// row/column clearing).  Exact; the matrix is consumed.
SnfResult smith_normal_form(IntMatrix m);

// A basis of the integer kernel lattice {x : m x = 0}, obtained from the
// column transform accumulated during diagonalization.  The basis is
// saturated: every integer kernel vector is an integer combination of it.
std::vector<std::vector<Int>> kernel_basis(IntMatrix m);

// Exact rank (over Q, equivalently number of invariant factors).
int rank_of(IntMatrix m);

// Determinant by the Bareiss fraction-free algorithm.  Requires square input.
Int determinant(IntMatrix m);

}  // namespace lathom
