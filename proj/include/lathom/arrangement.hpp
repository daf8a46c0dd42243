#pragma once

#include <set>
#include <string>
#include <vector>

#include "lathom/partitions.hpp"
#include "lathom/rational_linalg.hpp"
#include "lathom/splitting.hpp"

namespace lathom {

// Affine hyperplane {x : normal . x = offset}; offset 0 for the central
// arrangements built here.
struct Hyperplane {
    std::vector<Rat> normal;
    Rat offset = 0;
};

// A finite arrangement of pairwise distinct hyperplanes, possibly living
// inside a proper ambient subspace (rows of ambient_equations cut it out of
// Q^ambient_dim, e.g. the sum-zero space for the braid arrangement).
struct Arrangement {
    int ambient_dim = 0;
    std::vector<Hyperplane> hyperplanes;
    RatMatrix ambient_equations;  // zero rows allowed; homogeneous
    bool central = true;          // every offset zero
    bool essential = false;       // common intersection is a single point

    int subspace_dim() const;  // dimension of the ambient subspace

    // Validates nonzero normals and rejects duplicates up to scaling.
    static Arrangement build(int ambient_dim, std::vector<Hyperplane> hps,
                             RatMatrix ambient_equations);
};

// The reflection arrangements:
//   A:  x_i = x_j inside the sum-zero subspace
//   B:  x_i = x_j, x_i = -x_j, x_i = 0
//   D:  x_i = x_j, x_i = -x_j
//   DB: type D plus x_i = 0 for i in T
//   AT: x_i = x_j (i < j < n) plus x_i = x_n for i in T, in the sum-zero
//       subspace (essential there)
Arrangement coxeter_arrangement(Family f, int n, const std::set<int>& T = {});

// All intersections of subfamilies, ordered by reverse inclusion; flats are
// aligned with poset element indices (labels are the canonical flat keys).
// Central arrangements always have a top (the common intersection); affine
// ones may not (top = -1: only the meet semilattice exists).
struct IntersectionLattice {
    Poset poset;
    std::vector<FlatSubspace> flats;
    int bottom = -1;
    int top = -1;
    bool central = true;
    bool essential = false;

    BoundedPoset bounded() const;  // throws PosetError when top is missing
    int index_of_flat(const FlatSubspace& f) const;  // -1 when absent
};

IntersectionLattice intersection_lattice(const Arrangement& a);

// An open simplicial-cone region: the rows of `constraints` are functionals
// on Q^n that are positive inside, and the extreme rays of the closure are
// primitive vectors with constraints(i) . ray(j) = 0 exactly when i != j.
struct Region {
    Family family = Family::A;
    BasisIndex label;
    RatMatrix constraints;                // walls x ambient_dim
    std::vector<std::vector<Rat>> rays;   // walls many, in the ambient subspace
};

// The region of the family's arrangement named by a group element: the
// ascending-chain cone for A, 0 < eps_1 x_{omega(1)} < ... for B (and the
// B-kind DB labels), and the straddling |x_{omega(1)}| < eps_2 x_{omega(2)}
// < ... for D (and the D-kind DB labels).  Geometric regions for AT are not
// provided; its basis is certified combinatorially.
Region region_for(Family f, int n, const std::set<int>& T, const BasisIndex& label);

// Labels of all regions of the arrangement (group order many).
std::vector<BasisIndex> region_labels(Family f, int n, const std::set<int>& T);
long long expected_region_count(Family f, int n, const std::set<int>& T);

// The slicing direction the bounded-region characterizations use:
// (-1,...,-1,n-1) for A and (1,2,4,...,2^(n-1)) otherwise.
std::vector<Rat> default_generic_vector(Family f, int n);

// v is generic when no flat of positive dimension lies inside v-perp, so the
// affine hyperplane {v . x = 1} meets every flat.  The second form applies
// the test to the lines of the lattice only (the two agree on every
// arrangement built here; the workbench cross-checks that empirically).
bool is_generic(const IntersectionLattice& L, const std::vector<Rat>& v);
bool is_generic_lines_only(const IntersectionLattice& L, const std::vector<Rat>& v);

// Whether the slice {v . x = 1} cuts a nonempty bounded piece out of the
// region: all extreme rays have v . ray > 0.  A zero dot product means v was
// not generic after all; that raises GenericityViolatedError rather than
// guessing.
bool bounded_slice_test(const Region& r, const std::vector<Rat>& v);

std::vector<BasisIndex> bounded_regions(Family f, int n, const std::set<int>& T,
                                        const std::vector<Rat>& v);

// The z-map image of the closed region's face poset: every face is a wall
// subset (mask bit i set = wall i active), and z(face) is the intersection
// of all hyperplanes containing that face.  The image is verified to embed
// the Boolean lattice of wall subsets into the intersection lattice.
struct ZMapImage {
    int walls = 0;
    std::vector<int> flat_of_mask;  // size 1 << walls, lattice indices
    std::vector<int> members;       // distinct lattice indices, sorted
};

ZMapImage z_map_region(const Region& r, const Arrangement& a,
                       const IntersectionLattice& L);

// The order isomorphism between the combinatorial partition lattice and the
// geometric intersection lattice (partition -> fixed subspace).
struct GammaReport {
    Family family = Family::A;
    int n = 0;
    std::vector<int> T;
    long long lattice_size = 0;
    long long flat_count = 0;
    std::vector<int> comb_to_flat;  // poset index -> lattice index
    bool bijective = false;
    bool order_iso = false;
    bool pass = false;
};

GammaReport check_gamma_iso(Family f, int n, const std::set<int>& T);

// Region count of the sliced arrangement vs the Moebius alternating sum.
struct ZaslavskyReport {
    Family family = Family::A;
    int n = 0;
    std::vector<int> T;
    long long region_count = 0;
    long long bounded_count = 0;
    Int mu_sum_abs = 0;  // |sum of mu(bottom, x) over x below the top|
    Int mu_top_abs = 0;  // |mu(bottom, top)|
    bool pass = false;
};

ZaslavskyReport zaslavsky_check(Family f, int n, const std::set<int>& T,
                                const std::vector<Rat>& v);

struct CheckRow {
    std::string name;
    bool pass = false;
    std::string detail;
};

// End-to-end geometric verification: bounded regions of the generic slice,
// their z-map fundamental cycles in the order complex of the proper part,
// both basis certificates, agreement with the combinatorial splitting
// cycles, and the Moebius count.  AT is rejected (no geometric side here).
struct GeometricBasisReport {
    Family family = Family::A;
    int n = 0;
    std::vector<int> T;
    std::vector<Rat> v;
    long long lattice_size = 0;
    long long chain_count = 0;
    long long region_count = 0;
    long long bounded_count = 0;
    long long cycle_count = 0;
    long long homology_rank = 0;
    Int certificate_det = 0;
    std::vector<CheckRow> checks;
    bool pass = false;
};

GeometricBasisReport verify_geometric_basis(Family f, int n, const std::set<int>& T,
                                            std::vector<Rat> v = {});

}  // namespace lathom
