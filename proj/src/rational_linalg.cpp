#include "lathom/rational_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lathom {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void RatMatrix::append_row(const std::vector<Rat>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols_)
        throw std::invalid_argument("append_row: width mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<Rat> RatMatrix::row(int i) const {
    std::vector<Rat> out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

int rref(RatMatrix& m) {
    const int R = m.rows(), C = m.cols();
    int rank = 0;
    for (int col = 0; col < C && rank < R; ++col) {
        int piv = -1;
        for (int i = rank; i < R; ++i)
            if (m.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < C; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        Rat lead = m.at(rank, col);
        for (int j = col; j < C; ++j) m.at(rank, j) /= lead;
        for (int i = 0; i < R; ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = col; j < C; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

RatMatrix drop_zero_rows(const RatMatrix& m) {
    RatMatrix out(0, 0);
    for (int i = 0; i < m.rows(); ++i) {
        bool zero = true;
        for (int j = 0; j < m.cols() && zero; ++j) zero = (m.at(i, j) == 0);
        if (!zero) out.append_row(m.row(i));
    }
    if (out.rows() == 0) return RatMatrix(0, m.cols());
    return out;
}

int rank_of(const RatMatrix& m) {
    RatMatrix copy = m;
    return rref(copy);
}

std::vector<std::vector<Rat>> null_space(const RatMatrix& m) {
    RatMatrix e = m;
    rref(e);
    const int C = e.cols();
    std::vector<int> pivot_row_of_col(C, -1);
    for (int i = 0, col = 0; i < e.rows(); ++i) {
        while (col < C && e.at(i, col) == 0) ++col;
        if (col == C) break;
        pivot_row_of_col[col] = i;
    }
    std::vector<std::vector<Rat>> basis;
    for (int j = 0; j < C; ++j) {
        if (pivot_row_of_col[j] >= 0) continue;
        std::vector<Rat> x(C, Rat(0));
        x[j] = 1;
        for (int c = 0; c < C; ++c)
            if (pivot_row_of_col[c] >= 0) x[c] = -e.at(pivot_row_of_col[c], j);
        basis.push_back(std::move(x));
    }
    return basis;
}

bool in_rowspace(const RatMatrix& rows, const std::vector<Rat>& v) {
    RatMatrix stacked = rows;
    if (stacked.cols() == 0 && stacked.rows() == 0)
        stacked = RatMatrix(0, static_cast<int>(v.size()));
    int r0 = rank_of(stacked);
    stacked.append_row(v);
    return rank_of(stacked) == r0;
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    const int n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    int r = rref(aug);
    if (r != n) throw std::invalid_argument("inverse: singular matrix");
    RatMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

std::vector<Rat> mat_vec(const RatMatrix& m, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != m.cols())
        throw std::invalid_argument("mat_vec: size mismatch");
    std::vector<Rat> out(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Rat acc = 0;
        for (int j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: size mismatch");
    RatMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rat acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

std::vector<Rat> primitive_direction(std::vector<Rat> v) {
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& x : v) {
        if (x == 0) continue;
        Int num = boost::multiprecision::numerator(x);
        Int den = boost::multiprecision::denominator(x);
        num_gcd = gcd(num_gcd, num);
        den_lcm = den_lcm / gcd(den_lcm, den) * den;
    }
    if (num_gcd == 0) return v;  // zero vector
    if (num_gcd < 0) num_gcd = -num_gcd;
    Rat scale(den_lcm, num_gcd);
    for (auto& x : v) x *= scale;
    return v;
}

bool FlatSubspace::central() const {
    for (const auto& r : rhs)
        if (r != 0) return false;
    return true;
}

std::string FlatSubspace::key() const {
    if (!consistent) return "[empty]";
    std::string s = "[";
    for (int i = 0; i < coeff.rows(); ++i) {
        if (i) s += "; ";
        for (int j = 0; j < coeff.cols(); ++j) {
            if (j) s += ",";
            s += to_string(coeff.at(i, j));
        }
        s += "=";
        s += to_string(rhs[i]);
    }
    s += "]";
    return s;
}

bool FlatSubspace::contains(const FlatSubspace& other) const {
    if (!consistent || !other.consistent)
        throw std::invalid_argument("contains: empty flat");
    if (ambient != other.ambient)
        throw std::invalid_argument("contains: ambient mismatch");
    // this >= other as sets iff every equation of this follows from other's:
    // augmented rows of this lie in the augmented row space of other.
    RatMatrix aug(0, ambient + 1);
    for (int i = 0; i < other.coeff.rows(); ++i) {
        auto row = other.coeff.row(i);
        row.push_back(other.rhs[i]);
        aug.append_row(row);
    }
    int base = rank_of(aug);
    for (int i = 0; i < coeff.rows(); ++i) {
        auto row = coeff.row(i);
        row.push_back(rhs[i]);
        RatMatrix test = aug;
        test.append_row(row);
        if (rank_of(test) != base) return false;
    }
    return true;
}

bool FlatSubspace::operator==(const FlatSubspace& o) const {
    return ambient == o.ambient && consistent == o.consistent &&
           coeff == o.coeff && rhs == o.rhs;
}

FlatSubspace flat_from_equations(int ambient, const RatMatrix& coeff,
                                 const std::vector<Rat>& rhs) {
    if (coeff.rows() != static_cast<int>(rhs.size()))
        throw std::invalid_argument("flat_from_equations: rhs size mismatch");
    if (coeff.rows() > 0 && coeff.cols() != ambient)
        throw std::invalid_argument("flat_from_equations: width mismatch");
    RatMatrix aug(coeff.rows(), ambient + 1);
    for (int i = 0; i < coeff.rows(); ++i) {
        for (int j = 0; j < ambient; ++j) aug.at(i, j) = coeff.at(i, j);
        aug.at(i, ambient) = rhs[i];
    }
    rref(aug);
    FlatSubspace f;
    f.ambient = ambient;
    f.coeff = RatMatrix(0, ambient);
    for (int i = 0; i < aug.rows(); ++i) {
        bool zero_coeff = true;
        for (int j = 0; j < ambient && zero_coeff; ++j) zero_coeff = (aug.at(i, j) == 0);
        if (zero_coeff) {
            if (aug.at(i, ambient) != 0) f.consistent = false;
            continue;
        }
        std::vector<Rat> r = aug.row(i);
        r.resize(ambient);
        f.coeff.append_row(r);
        f.rhs.push_back(aug.at(i, ambient));
    }
    return f;
}

FlatSubspace flat_from_equations(int ambient, const RatMatrix& coeff) {
    return flat_from_equations(ambient, coeff, std::vector<Rat>(coeff.rows(), Rat(0)));
}

FlatSubspace intersect_flat(const FlatSubspace& f, const std::vector<Rat>& coeff,
                            const Rat& rhs) {
    RatMatrix eqs = f.coeff;
    if (eqs.rows() == 0) eqs = RatMatrix(0, f.ambient);
    eqs.append_row(coeff);
    std::vector<Rat> r = f.rhs;
    r.push_back(rhs);
    return flat_from_equations(f.ambient, eqs, r);
}

}  // namespace lathom
