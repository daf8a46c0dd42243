#pragma once

#include <vector>

#include "lathom/integer_matrix.hpp"
#include "lathom/poset.hpp"
#include "lathom/simplicial_complex.hpp"

namespace lathom {

// Boundary map from k-chains to (k-1)-chains over the canonical face bases.
// For k == 0 the unreduced matrix has zero rows; with `reduced` the single
// augmentation row of ones is used instead.
IntMatrix boundary_matrix(const SimplicialComplex& c, int k, bool reduced = false);

struct BettiNumbers {
    long long rank = 0;           // free rank of reduced homology in degree k
    std::vector<Int> torsion;     // invariant factors > 1
    bool operator==(const BettiNumbers& o) const {
        return rank == o.rank && torsion == o.torsion;
    }
};

// Reduced simplicial homology in degree k via Smith normal form.
BettiNumbers reduced_betti(const SimplicialComplex& c, int k);

// Generator of the top reduced homology when it is free of rank one;
// primitive, sign-normalized.  Throws RankNotOneError otherwise.
ChainVector fundamental_cycle_top(const SimplicialComplex& c);

// A saturated basis of the lattice of top-dimensional cycles, as chains.
std::vector<ChainVector> top_cycle_basis(const SimplicialComplex& c);

// A Boolean subposet recognized inside some host poset: element_of_mask[S]
// is the host element playing the role of the subset S of atoms.
struct BooleanStructure {
    int m = 0;
    std::vector<int> element_of_mask;  // size 1 << m
};

// Recognizes the induced subposet on `members` as a Boolean lattice; throws
// NotBooleanError if it is not one.
BooleanStructure discover_boolean(const Poset& host, const std::vector<int>& members);

// The alternating sum over permutations of atom insertions: for each
// permutation of the m atoms the prefix joins (proper, i.e. excluding the
// empty and full sets) form an (m-2)-simplex, taken with the permutation
// sign.  vertex_of_mask[S] names the ambient complex vertex of each proper
// mask (entries for 0 and the full mask are ignored).  Every simplex must be
// a face of `ambient`.
ChainVector boolean_cycle_from_masks(int m, const std::vector<int>& vertex_of_mask,
                                     const SimplicialComplex& ambient);

// Convenience wrapper: recognize `members` inside `host` as Boolean, then
// evaluate the cycle formula with host elements mapped to ambient vertices
// via host_to_vertex (-1 for elements with no vertex, e.g. global bounds —
// only proper masks are looked up).
ChainVector boolean_cycle_formula(const Poset& host, const std::vector<int>& members,
                                  const std::vector<int>& host_to_vertex,
                                  const SimplicialComplex& ambient);

struct CertificateOutcome {
    Int det;
    bool pass = false;
};

// Incidence-determinant basis certificate: cycles x reference facets.  The
// cycles must be top-dimensional cycles of c and the facet list must have the
// same length; |det| == 1 certifies a basis of top homology.
CertificateOutcome verify_basis_certificate(const std::vector<ChainVector>& cycles,
                                            const std::vector<std::vector<int>>& facets,
                                            const SimplicialComplex& c);

// Picks one reference facet per cycle so the incidence determinant is +-1,
// greedily first and by backtracking if the greedy choice degenerates.
// Throws SizeMismatchError when no selection can work (rank deficiency).
std::vector<std::vector<int>> choose_certificate_facets(
    const std::vector<ChainVector>& cycles, const SimplicialComplex& c);

// Independent basis check: expresses the cycles over a Smith-form kernel
// basis of the top boundary map and tests the transition matrix for
// determinant +-1.  False when the count differs from the cycle-space rank
// or the transition is not unimodular.
bool verify_unimodular_spanning(const std::vector<ChainVector>& cycles,
                                const SimplicialComplex& c);

// A bounded lattice bundled with its proper part and order complex; vertex i
// of the complex is element i of `proper`.
struct LatticeComplex {
    BoundedPoset lattice;
    Poset proper;
    std::vector<int> proper_to_lattice;
    std::vector<int> lattice_to_proper;  // -1 for the bounds
    SimplicialComplex complex;

    static LatticeComplex build(BoundedPoset l);
};

}  // namespace lathom
