#include "lathom/homology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lathom/errors.hpp"

namespace lathom {

IntMatrix boundary_matrix(const SimplicialComplex& c, int k, bool reduced) {
    const auto& cols = c.faces(k);
    if (k == 0) {
        IntMatrix m(reduced ? 1 : 0, static_cast<int>(cols.size()));
        if (reduced)
            for (int j = 0; j < m.cols(); ++j) m.at(0, j) = 1;
        return m;
    }
    const auto& rows = c.faces(k - 1);
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        const auto& s = cols[j];
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<int> face;
            face.reserve(s.size() - 1);
            for (std::size_t t = 0; t < s.size(); ++t)
                if (t != i) face.push_back(s[t]);
            int r = c.face_index(k - 1, face);
            if (r < 0) throw std::logic_error("complex not closed under faces");
            m.at(r, j) = (i % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

BettiNumbers reduced_betti(const SimplicialComplex& c, int k) {
    if (k < 0 || k > c.dim()) {
        // Degree -1 of the empty complex would be the only exception; the
        // complexes handled here are nonempty, so out of range means zero.
        return BettiNumbers{};
    }
    const long long nk = c.face_count(k);
    long long rank_down;
    if (k == 0) {
        rank_down = c.vertex_count() > 0 ? 1 : 0;  // augmentation
    } else {
        rank_down = rank_of(boundary_matrix(c, k));
    }
    SnfResult up;  // boundary from degree k+1
    if (k < c.dim()) up = smith_normal_form(boundary_matrix(c, k + 1));
    BettiNumbers out;
    out.rank = (nk - rank_down) - up.rank();
    for (const auto& d : up.invariant_factors)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

std::vector<ChainVector> top_cycle_basis(const SimplicialComplex& c) {
    const int top = c.dim();
    if (top < 0) return {};
    IntMatrix bd = boundary_matrix(c, top, /*reduced=*/top == 0);
    auto kb = kernel_basis(std::move(bd));
    const auto& faces = c.faces(top);
    std::vector<ChainVector> out;
    out.reserve(kb.size());
    for (const auto& v : kb) {
        ChainVector cv(top);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) cv.add_oriented(faces[i], v[i]);
        out.push_back(std::move(cv));
    }
    return out;
}

ChainVector fundamental_cycle_top(const SimplicialComplex& c) {
    if (c.dim() < 0) throw RankNotOneError("empty complex has no fundamental cycle");
    auto basis = top_cycle_basis(c);
    if (basis.size() != 1)
        throw RankNotOneError("top homology rank is " + std::to_string(basis.size()) +
                              ", expected 1");
    ChainVector cv = std::move(basis[0]);
    cv.make_primitive();
    cv.normalize_sign();
    return cv;
}

BooleanStructure discover_boolean(const Poset& host, const std::vector<int>& members) {
    std::vector<int> mem = members;
    std::sort(mem.begin(), mem.end());
    mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
    if (mem.size() != members.size())
        throw NotBooleanError("duplicate members");
    if (mem.empty()) throw NotBooleanError("empty subposet");

    auto leq = [&](int a, int b) { return host.leq(a, b); };
    // Unique minimum.
    int bottom = -1;
    for (int x : mem) {
        bool is_min = true;
        for (int y : mem)
            if (y != x && leq(y, x)) is_min = false;
        if (is_min) {
            if (bottom >= 0) throw NotBooleanError("no unique minimum");
            bottom = x;
        }
    }
    if (bottom < 0) throw NotBooleanError("no minimum");
    for (int x : mem)
        if (!leq(bottom, x)) throw NotBooleanError("minimum not below all members");

    // Atoms: minimal among the rest.
    std::vector<int> atoms;
    for (int x : mem) {
        if (x == bottom) continue;
        bool is_atom = true;
        for (int y : mem)
            if (y != bottom && y != x && leq(y, x)) is_atom = false;
        if (is_atom) atoms.push_back(x);
    }
    const int m = static_cast<int>(atoms.size());
    if (m > 20) throw NotBooleanError("too many atoms");
    if (mem.size() != (1u << m))
        throw NotBooleanError("size is not 2^(number of atoms)");

    BooleanStructure b;
    b.m = m;
    b.element_of_mask.assign(std::size_t(1) << m, -1);
    b.element_of_mask[0] = bottom;
    std::vector<char> taken(host.size(), 0);
    taken[bottom] = 1;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        // Join of the atoms in mask: least member above all of them.
        std::vector<int> ubs;
        for (int x : mem) {
            bool ok = true;
            for (int a = 0; a < m && ok; ++a)
                if (mask & (1u << a)) ok = leq(atoms[a], x);
            if (ok) ubs.push_back(x);
        }
        int join = -1;
        for (int u : ubs) {
            bool least = true;
            for (int u2 : ubs)
                if (!leq(u, u2)) least = false;
            if (least) {
                join = u;
                break;
            }
        }
        if (join < 0) throw NotBooleanError("atom set without a join");
        if (taken[join]) throw NotBooleanError("joins collide");
        taken[join] = 1;
        b.element_of_mask[mask] = join;
    }
    // Order isomorphism with subset containment.
    for (unsigned s = 0; s < (1u << m); ++s)
        for (unsigned t = 0; t < (1u << m); ++t) {
            bool sub = (s & t) == s;
            if (sub != leq(b.element_of_mask[s], b.element_of_mask[t]))
                throw NotBooleanError("order does not match subset containment");
        }
    return b;
}

ChainVector boolean_cycle_from_masks(int m, const std::vector<int>& vertex_of_mask,
                                     const SimplicialComplex& ambient) {
    if (m < 2) throw NotBooleanError("cycle formula needs at least two atoms");
    if (vertex_of_mask.size() != (std::size_t(1) << m))
        throw NotBooleanError("mask table has wrong size");
    ChainVector cv(m - 2);
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // Sign of the permutation by counting inversions.
        int inv = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[i] > perm[j]) ++inv;
        std::vector<int> verts;
        verts.reserve(m - 1);
        unsigned mask = 0;
        for (int i = 0; i + 1 < m; ++i) {
            mask |= (1u << perm[i]);
            int v = vertex_of_mask[mask];
            if (v < 0) throw NotBooleanError("proper mask without a vertex");
            verts.push_back(v);
        }
        {
            std::vector<int> sorted = verts;
            std::sort(sorted.begin(), sorted.end());
            if (!ambient.has_face(sorted))
                throw NotBooleanError("prefix chain is not a face of the ambient complex");
        }
        cv.add_oriented(std::move(verts), (inv % 2 == 0) ? Int(1) : Int(-1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return cv;
}

ChainVector boolean_cycle_formula(const Poset& host, const std::vector<int>& members,
                                  const std::vector<int>& host_to_vertex,
                                  const SimplicialComplex& ambient) {
    BooleanStructure b = discover_boolean(host, members);
    std::vector<int> vom(b.element_of_mask.size(), -1);
    for (std::size_t mask = 1; mask + 1 < vom.size(); ++mask)
        vom[mask] = host_to_vertex[b.element_of_mask[mask]];
    return boolean_cycle_from_masks(b.m, vom, ambient);
}

namespace {

void require_top_cycles(const std::vector<ChainVector>& cycles,
                        const SimplicialComplex& c) {
    const int top = c.dim();
    for (const auto& cv : cycles) {
        if (cv.dim() != top) throw NotACycleError("chain is not top-dimensional");
        for (const auto& [s, coeff] : cv.terms())
            if (c.face_index(top, s) < 0)
                throw NotACycleError("chain supported outside the complex");
        if (top == 0) {
            Int aug = 0;
            for (const auto& [s, coeff] : cv.terms()) aug += coeff;
            if (aug != 0) throw NotACycleError("augmentation is nonzero");
        } else if (!cv.boundary().is_zero()) {
            throw NotACycleError("boundary is nonzero");
        }
    }
}

}  // namespace

CertificateOutcome verify_basis_certificate(const std::vector<ChainVector>& cycles,
                                            const std::vector<std::vector<int>>& facets,
                                            const SimplicialComplex& c) {
    if (cycles.size() != facets.size())
        throw SizeMismatchError("cycle and facet counts differ");
    require_top_cycles(cycles, c);
    const int top = c.dim();
    for (const auto& f : facets)
        if (c.face_index(top, f) < 0)
            throw SizeMismatchError("reference facet is not a top face");
    const int t = static_cast<int>(cycles.size());
    IntMatrix m(t, t);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) m.at(i, j) = cycles[i].coefficient(facets[j]);
    CertificateOutcome out;
    out.det = determinant(std::move(m));
    out.pass = (out.det == 1 || out.det == -1);
    return out;
}

namespace {

bool search_facets(const std::vector<ChainVector>& cycles,
                   const std::vector<std::vector<std::vector<int>>>& supports,
                   std::vector<std::vector<int>>& picked, std::size_t depth,
                   std::set<std::vector<int>>& used) {
    const std::size_t t = cycles.size();
    if (depth == t) {
        IntMatrix m(static_cast<int>(t), static_cast<int>(t));
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j)
                m.at(static_cast<int>(i), static_cast<int>(j)) =
                    cycles[i].coefficient(picked[j]);
        Int d = determinant(std::move(m));
        return d == 1 || d == -1;
    }
    for (const auto& f : supports[depth]) {
        if (used.count(f)) continue;
        // Prune: the partial incidence matrix must have full rank.
        picked[depth] = f;
        IntMatrix m(static_cast<int>(depth) + 1, static_cast<int>(depth) + 1);
        for (std::size_t i = 0; i <= depth; ++i)
            for (std::size_t j = 0; j <= depth; ++j)
                m.at(static_cast<int>(i), static_cast<int>(j)) =
                    cycles[i].coefficient(picked[j]);
        if (rank_of(std::move(m)) != static_cast<int>(depth) + 1) continue;
        used.insert(f);
        if (search_facets(cycles, supports, picked, depth + 1, used)) return true;
        used.erase(f);
    }
    return false;
}

}  // namespace

std::vector<std::vector<int>> choose_certificate_facets(
    const std::vector<ChainVector>& cycles, const SimplicialComplex& c) {
    require_top_cycles(cycles, c);
    const std::size_t t = cycles.size();

    // Greedy: first unused support facet of each cycle, in order.
    {
        std::set<std::vector<int>> used;
        std::vector<std::vector<int>> picked;
        bool ok = true;
        for (const auto& cv : cycles) {
            bool found = false;
            for (const auto& [s, coeff] : cv.terms()) {
                if (!used.count(s)) {
                    picked.push_back(s);
                    used.insert(s);
                    found = true;
                    break;
                }
            }
            if (!found) {
                ok = false;
                break;
            }
        }
        if (ok) {
            auto res = verify_basis_certificate(cycles, picked, c);
            if (res.pass) return picked;
        }
    }

    // Dependent cycles admit no selection at all; test the full incidence
    // rank once so the backtracking below cannot thrash on hopeless input.
    {
        std::set<std::vector<int>> support_union;
        for (const auto& cv : cycles)
            for (const auto& [s, coeff] : cv.terms()) support_union.insert(s);
        IntMatrix full(static_cast<int>(t), static_cast<int>(support_union.size()));
        int col = 0;
        for (const auto& s : support_union) {
            for (std::size_t i = 0; i < t; ++i)
                full.at(static_cast<int>(i), col) = cycles[i].coefficient(s);
            ++col;
        }
        if (rank_of(std::move(full)) < static_cast<int>(t))
            throw SizeMismatchError(
                "cycles are linearly dependent; no facet selection certifies a basis");
    }

    // Backtracking over support facets with a rank prune.
    std::vector<std::vector<std::vector<int>>> supports(t);
    for (std::size_t i = 0; i < t; ++i)
        for (const auto& [s, coeff] : cycles[i].terms()) supports[i].push_back(s);
    std::vector<std::vector<int>> picked(t);
    std::set<std::vector<int>> used;
    if (search_facets(cycles, supports, picked, 0, used)) return picked;
    throw SizeMismatchError("no unimodular facet selection exists for these cycles");
}

bool verify_unimodular_spanning(const std::vector<ChainVector>& cycles,
                                const SimplicialComplex& c) {
    require_top_cycles(cycles, c);
    const int top = c.dim();
    IntMatrix bd = boundary_matrix(c, top, /*reduced=*/top == 0);
    auto kb = kernel_basis(std::move(bd));
    const std::size_t t = kb.size();
    if (cycles.size() != t) return false;
    if (t == 0) return true;

    const auto& faces = c.faces(top);
    const int N = static_cast<int>(faces.size());

    // Solve K X = C over Q, where K holds the kernel basis as columns and C
    // the cycles.  The kernel basis is saturated, so integer cycles in its
    // rational span have integer coordinates; the span is a Z-basis of top
    // homology exactly when det X = +-1.
    std::vector<std::vector<Rat>> a(N, std::vector<Rat>(t + cycles.size()));
    for (int i = 0; i < N; ++i)
        for (std::size_t j = 0; j < t; ++j) a[i][j] = Rat(kb[j][i]);
    for (std::size_t j = 0; j < cycles.size(); ++j)
        for (const auto& [s, coeff] : cycles[j].terms())
            a[c.face_index(top, s)][t + j] = Rat(coeff);
    std::size_t row = 0;
    std::vector<int> pivot_col;
    for (std::size_t col = 0; col < t && row < static_cast<std::size_t>(N); ++col) {
        std::size_t piv = row;
        while (piv < static_cast<std::size_t>(N) && a[piv][col] == 0) ++piv;
        if (piv == static_cast<std::size_t>(N)) continue;
        std::swap(a[row], a[piv]);
        Rat inv = a[row][col];
        for (auto& x : a[row]) x /= inv;
        for (std::size_t i = 0; i < static_cast<std::size_t>(N); ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = col; j < a[i].size(); ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    if (pivot_col.size() != t) throw std::logic_error("kernel basis not independent");
    // Consistency: rows beyond the pivots must be zero on the cycle columns.
    for (std::size_t i = row; i < static_cast<std::size_t>(N); ++i)
        for (std::size_t j = t; j < a[i].size(); ++j)
            if (a[i][j] != 0) return false;  // cycle outside the kernel span

    IntMatrix X(static_cast<int>(t), static_cast<int>(cycles.size()));
    for (std::size_t r = 0; r < t; ++r)
        for (std::size_t j = 0; j < cycles.size(); ++j) {
            Rat v = a[r][t + j];
            if (boost::multiprecision::denominator(v) != 1)
                return false;  // not an integer combination of the kernel basis
            X.at(static_cast<int>(r), static_cast<int>(j)) =
                boost::multiprecision::numerator(v);
        }
    Int d = determinant(std::move(X));
    return d == 1 || d == -1;
}

LatticeComplex LatticeComplex::build(BoundedPoset l) {
    LatticeComplex lc;
    lc.proper = proper_part(l);
    const Poset& big = l.poset();
    lc.proper_to_lattice.resize(lc.proper.size());
    lc.lattice_to_proper.assign(big.size(), -1);
    for (int i = 0; i < lc.proper.size(); ++i) {
        int host = big.index_of(lc.proper.label(i));
        lc.proper_to_lattice[i] = host;
        lc.lattice_to_proper[host] = i;
    }
    lc.complex = order_complex(lc.proper);
    lc.lattice = std::move(l);
    return lc;
}

}  // namespace lathom
