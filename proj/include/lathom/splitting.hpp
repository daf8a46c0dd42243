#pragma once

#include <set>
#include <string>
#include <vector>

#include "lathom/homology.hpp"
#include "lathom/partitions.hpp"

namespace lathom {

// Signed permutation: one-line word omega (values 1..n) with a sign per
// position.  The identity-signed case doubles as a plain permutation.
struct SignedPermutation {
    std::vector<int> omega;
    std::vector<int> epsilon;  // entries +-1, same length

    static SignedPermutation plain(std::vector<int> omega);
    static SignedPermutation from_string(const std::string& text);  // "2'31"

    int n() const { return static_cast<int>(omega.size()); }
    int bar_count() const;
    bool even_bars() const { return bar_count() % 2 == 0; }
    std::string to_string() const;

    bool operator==(const SignedPermutation& o) const {
        return omega == o.omega && epsilon == o.epsilon;
    }
    bool operator<(const SignedPermutation& o) const {
        if (omega != o.omega) return omega < o.omega;
        return epsilon < o.epsilon;
    }
};

// Splitting a word at a set of gap positions S (subset of {1..n-1}): the
// blocks are the maximal runs between chosen gaps.  Position i in S cuts
// between the i-th and (i+1)-st letters.
SetPartition split_permutation(const std::vector<int>& omega,
                               const std::vector<int>& positions);

// Signed splitting at S (subset of {0,...,n-1}): everything up to the first
// chosen position joins the zero block (cutting at 0 leaves it as {0}), and
// later runs become signed blocks carrying their letters' signs.
SignedPartition split_signed(const SignedPermutation& w,
                             const std::vector<int>& positions);

// A Boolean family of lattice elements obtained by splitting one word at all
// position sets, indexed by masks over the splitting "atom" coordinates.
struct SplitSubposet {
    int m = 0;                      // Boolean rank
    std::vector<int> lattice_elem_of_mask;  // size 1 << m, ambient indices
    std::vector<int> members;               // distinct ambient indices, sorted
};

// Type A: omega in S_n, atoms indexed by positions 1..n-1 (mask bit i set
// means position i+1 is NOT cut).  Lives in Pi_n, or in Pi_n(T) when the word
// satisfies the membership condition.
SplitSubposet splitting_subposet_A(const std::vector<int>& omega,
                                   const BoundedPoset& ambient);

// Type B: (omega, epsilon), atoms indexed by positions 0..n-1.
SplitSubposet splitting_subposet_B(const SignedPermutation& w,
                                   const BoundedPoset& ambient);

// Type D variant: the splitting family is rewired near the zero block so all
// 2^n mask elements avoid two-element zero blocks; w needs an even number of
// bars and the mask-to-element map is a bijection.
SplitSubposet splitting_subposet_D(const SignedPermutation& w,
                                   const BoundedPoset& ambient);

// The fundamental cycle of the splitting subposet inside the order complex
// of the ambient lattice's proper part, sign-normalized.
ChainVector rho_cycle(const SplitSubposet& sp, const LatticeComplex& lc);

// 1-based positions i such that omega(i) > omega(j) for all j > i.
std::vector<int> right_to_left_maxima_positions(const std::vector<int>& omega);

// Which construction a basis word uses (relevant for the interpolating
// family, where both kinds occur side by side).
enum class CycleKind { Split, SplitD };

struct BasisIndex {
    SignedPermutation w;
    CycleKind kind = CycleKind::Split;
    bool operator==(const BasisIndex& o) const { return w == o.w && kind == o.kind; }
};

// The index words of the splitting basis for each family:
//   A:  omega(n) = n                             count (n-1)!
//   B:  right-to-left maxima positions unbarred  count (2n-1)!!
//   D:  as B, even bars, omega(1) != n           count (2n-3)!!(n-1)
//   DB: B-kind with omega(1) in T, plus D-kind with omega(1) not in T+{n}
//                                                count (2n-3)!!(|T|+n-1)
//   AT: omega(n) = n, omega(n-1) in T            count (n-2)!|T|
std::vector<BasisIndex> basis_index_set(Family f, int n, const std::set<int>& T);

// Every word of the ambient symmetry group (yields an overcomplete cycle
// set for verification of spanning-but-not-basis behaviour).  Supported for
// A, B, D and DB; AT admits no larger in-lattice index set.
std::vector<BasisIndex> full_index_set(Family f, int n, const std::set<int>& T);

struct SplittingBasisReport {
    Family family = Family::A;
    int n = 0;
    std::vector<int> T;
    long long lattice_size = 0;
    long long chain_count = 0;     // facets of the order complex
    long long homology_rank = 0;   // top reduced Betti number
    long long cycle_count = 0;
    Int certificate_det;
    bool certificate_pass = false;
    bool spanning_pass = false;
    bool counts_match = false;
    bool kernel_agree = false;     // formula vs kernel generator, per subposet
    bool pass = false;
};

// The subposet and cycle named by one index word (dispatching on family and
// kind), inside the given ambient lattice.
SplitSubposet splitting_subposet(const BasisIndex& bi, Family f,
                                 const BoundedPoset& ambient);
ChainVector splitting_cycle(const BasisIndex& bi, Family f, const LatticeComplex& lc);

// Independent oracle: the alternating-sum formula must agree, up to one
// global sign, with a kernel generator of the subposet's own order complex
// mapped into the ambient complex.
bool kernel_generator_matches(const SplitSubposet& sp, const LatticeComplex& lc,
                              const ChainVector& rho);

struct FaultInjection {
    bool flip_one_term_sign = false;  // corrupt the first cycle before checks
};

// Builds the cycles for the given index words and runs every check: count
// vs top Betti rank, both basis certificates, and the kernel oracle.
SplittingBasisReport verify_splitting_cycles(Family f, int n, const std::set<int>& T,
                                             const std::vector<BasisIndex>& indices,
                                             const FaultInjection* fault = nullptr);

// The same over the theorem's index set.
SplittingBasisReport verify_splitting_basis(Family f, int n, const std::set<int>& T,
                                            const FaultInjection* fault = nullptr);

// Relabels a cycle in the order complex of an ambient partition lattice by a
// permutation sigma of the ground set (type A lattices).
ChainVector act_on_cycle(const std::vector<int>& sigma, const ChainVector& rho,
                         const LatticeComplex& lc);

struct OrbitReport {
    int n = 0;
    std::vector<int> T;
    long long group_order = 0;
    long long orbit_count = 0;
    std::vector<long long> orbit_sizes;  // descending
    bool all_regular = false;            // every orbit has full group size
    long long expected_regular_orbits = 0;  // C(n-2, |T|-1)
    bool pass = false;
};

// Orbits of the stabilizer group (permutations of T times permutations of
// the rest of {1..n-1}) acting on the AT basis words by left composition.
OrbitReport orbit_report(int n, const std::set<int>& T);

}  // namespace lathom
