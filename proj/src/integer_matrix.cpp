#include "lathom/integer_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace lathom {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::row_axpy(int i, int j, const Int& c) {
    for (int k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::col_axpy(int i, int j, const Int& c) {
    for (int k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

namespace {

// Diagonalizes m by unimodular row and column operations, mirroring the
// column operations into *V when given (so that, as maps, new = old * V).
// Returns the number of nonzero diagonal entries.
int diagonalize(IntMatrix& m, IntMatrix* V) {
    const int R = m.rows(), C = m.cols();
    int t = 0;
    while (t < R && t < C) {
        // Smallest-magnitude nonzero entry of the trailing submatrix.
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < R; ++i) {
            for (int j = t; j < C; ++j) {
                const Int& v = m.at(i, j);
                if (v == 0) continue;
                Int a = abs(v);
                if (pi < 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi < 0) break;  // submatrix is zero
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);
        if (V) V->swap_cols(t, pj);

        // Clear row and column t.  Whenever a division leaves a remainder we
        // swap it into the pivot position (strictly smaller |pivot|) and
        // start over, so the loop terminates.
        for (;;) {
            bool restart = false;
            for (int i = t + 1; i < R && !restart; ++i) {
                if (m.at(i, t) == 0) continue;
                Int q = m.at(i, t) / m.at(t, t);  // truncated division
                if (q != 0) m.row_axpy(i, t, -q);
                if (m.at(i, t) != 0) {
                    m.swap_rows(t, i);
                    restart = true;
                }
            }
            if (restart) continue;
            for (int j = t + 1; j < C && !restart; ++j) {
                if (m.at(t, j) == 0) continue;
                Int q = m.at(t, j) / m.at(t, t);
                if (q != 0) {
                    m.col_axpy(j, t, -q);
                    if (V) V->col_axpy(j, t, -q);
                }
                if (m.at(t, j) != 0) {
                    m.swap_cols(t, j);
                    if (V) V->swap_cols(t, j);
                    restart = true;
                }
            }
            if (!restart) break;
        }
        ++t;
    }
    return t;
}

}  // namespace

SnfResult smith_normal_form(IntMatrix m) {
    int r = diagonalize(m, nullptr);
    std::vector<Int> d;
    d.reserve(r);
    for (int k = 0; k < r; ++k) d.push_back(abs(m.at(k, k)));
    // Repair the divisibility chain: diag(a,b) ~ diag(gcd(a,b), lcm(a,b)).
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < d.size(); ++i) {
            for (std::size_t j = i + 1; j < d.size(); ++j) {
                if (d[j] % d[i] != 0) {
                    Int g = gcd(d[i], d[j]);
                    Int l = (d[i] / g) * d[j];
                    d[i] = g;
                    d[j] = l;
                    changed = true;
                }
            }
        }
    }
    std::sort(d.begin(), d.end());
    return SnfResult{std::move(d)};
}

std::vector<std::vector<Int>> kernel_basis(IntMatrix m) {
    const int C = m.cols();
    IntMatrix V = IntMatrix::identity(C);
    int r = diagonalize(m, &V);
    std::vector<std::vector<Int>> basis;
    basis.reserve(C - r);
    for (int j = r; j < C; ++j) {
        std::vector<Int> v(C);
        for (int i = 0; i < C; ++i) v[i] = V.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank_of(IntMatrix m) { return diagonalize(m, nullptr); }

Int determinant(IntMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const int n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign < 0 ? Int(-m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

}  // namespace lathom
