#pragma once

#include <string>
#include <vector>

#include "lathom/numbers.hpp"

namespace lathom {

// Dense matrix over Rat, row major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    void append_row(const std::vector<Rat>& row);
    std::vector<Rat> row(int i) const;

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

// In-place reduced row echelon form (leading entries 1, pivot columns
// cleared); returns the rank.  Rows below the rank end up zero.
int rref(RatMatrix& m);

// The matrix with zero rows removed — canonical for the row space when the
// input is in reduced row echelon form.
RatMatrix drop_zero_rows(const RatMatrix& m);

int rank_of(const RatMatrix& m);

// True when v lies in the row space of `rows`.
bool in_rowspace(const RatMatrix& rows, const std::vector<Rat>& v);

// Inverse of a square nonsingular matrix; throws std::invalid_argument when
// singular.
RatMatrix inverse(const RatMatrix& m);

// A basis of the solution space {x : m x = 0}, one vector per free column
// of the reduced echelon form (empty when m has full column rank).
std::vector<std::vector<Rat>> null_space(const RatMatrix& m);

// m * v
std::vector<Rat> mat_vec(const RatMatrix& m, const std::vector<Rat>& v);
// a * b
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);

// Scales a rational vector to a primitive integer vector with the same
// direction (positive multiple).
std::vector<Rat> primitive_direction(std::vector<Rat> v);

// An affine-linear subspace of Q^ambient given by equations coeff * x = rhs,
// stored in canonical reduced row echelon form over the augmented matrix
// [coeff | rhs].  `consistent` is false exactly when the solution set is
// empty (affine systems only; homogeneous systems are always consistent).
struct FlatSubspace {
    int ambient = 0;
    RatMatrix coeff;           // rank x ambient
    std::vector<Rat> rhs;      // rank entries
    bool consistent = true;

    int dim() const { return ambient - coeff.rows(); }
    bool central() const;      // all right-hand sides zero
    // Canonical printable key; equal flats produce equal keys.
    std::string key() const;
    // Set containment: does this flat contain `other`?  (Both consistent.)
    bool contains(const FlatSubspace& other) const;
    bool operator==(const FlatSubspace& o) const;
};

// Builds the canonical flat for the system coeff * x = rhs.
FlatSubspace flat_from_equations(int ambient, const RatMatrix& coeff,
                                 const std::vector<Rat>& rhs);
// Homogeneous convenience overload (rhs = 0).
FlatSubspace flat_from_equations(int ambient, const RatMatrix& coeff);

// The intersection of `f` with one extra equation.
FlatSubspace intersect_flat(const FlatSubspace& f, const std::vector<Rat>& coeff,
                            const Rat& rhs);

}  // namespace lathom
