#pragma once

#include <set>
#include <string>
#include <vector>

#include "lathom/poset.hpp"
#include "lathom/rational_linalg.hpp"

namespace lathom {

enum class Family { A, B, D, DB, AT };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Partition of {1..n} into disjoint nonempty blocks.  Canonical form: each
// block ascending, blocks ordered by least element.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    static SetPartition singletons(int n);
    static SetPartition from_blocks(std::vector<std::vector<int>> blocks);
    static SetPartition from_string(const std::string& text);

    int n() const;
    int block_count() const { return static_cast<int>(blocks.size()); }
    std::string to_string() const;  // "1 3 | 2" style
    // Image under a permutation sigma of the ground set (sigma[v-1] = image).
    SetPartition relabeled(const std::vector<int>& sigma) const;

    bool operator==(const SetPartition& o) const { return blocks == o.blocks; }
    bool operator<(const SetPartition& o) const { return blocks < o.blocks; }
};

// Refinement order: every block of a is contained in a block of b.
bool refines(const SetPartition& a, const SetPartition& b);

std::vector<SetPartition> all_partitions(int n);

// One element of a signed block: a value 1..n with a sign.
struct SignedElement {
    int value = 0;
    int sign = 1;  // +1 plain, -1 barred
    bool operator==(const SignedElement& o) const {
        return value == o.value && sign == o.sign;
    }
    bool operator<(const SignedElement& o) const {
        if (value != o.value) return value < o.value;
        return sign < o.sign;
    }
};

using SignedBlock = std::vector<SignedElement>;

// Flip every sign.
SignedBlock bar_block(SignedBlock b);
// Drop all bars.
SignedBlock unbar_block(SignedBlock b);
// Sort by value and bar the whole block if needed so its least value is
// plain: the canonical representative of {b, bar(b)}.
SignedBlock canonicalize_block(SignedBlock b);

// Signed partition of {0,1,...,n}: a zero block (containing 0, all elements
// unsigned) plus signed blocks, each stored canonically.
struct SignedPartition {
    std::vector<int> zero_block;          // ascending, first entry 0
    std::vector<SignedBlock> signed_blocks;  // canonical, ordered by least value

    static SignedPartition all_zero(int n);     // one block {0,1,...,n}
    static SignedPartition discrete(int n);     // {0} and n signed singletons
    static SignedPartition from_string(const std::string& text);

    int n() const;
    std::string to_string() const;  // bars rendered as trailing apostrophes
    SignedPartition relabeled(const std::vector<int>& sigma) const;

    bool operator==(const SignedPartition& o) const {
        return zero_block == o.zero_block && signed_blocks == o.signed_blocks;
    }
    bool operator<(const SignedPartition& o) const {
        if (zero_block != o.zero_block) return zero_block < o.zero_block;
        return signed_blocks < o.signed_blocks;
    }
};

// Order relation of the signed partition lattice: pi <= tau iff the zero
// block of pi is contained in the zero block of tau and every signed block b
// of pi lands in tau either as a subset of a signed block (as b or bar(b))
// or entirely inside the zero block.
bool leq_signed(const SignedPartition& pi, const SignedPartition& tau);

std::vector<SignedPartition> all_signed_partitions(int n);

// The full partition lattice on {1..n}, ordered by refinement.
BoundedPoset build_Pi(int n);
// The signed partition lattice on {0,1,...,n}; verified to be a lattice
// (unique meets and joins) for n <= 4.
BoundedPoset build_PiB(int n);
// Signed partitions whose zero block does not have exactly two elements.
BoundedPoset build_PiD(int n);
// Zero block of size two, {0,a}, allowed only when a lies in T.
BoundedPoset build_PiDB(int n, const std::set<int>& T);
// Partitions of {1..n} whose block containing n is a singleton or meets T;
// T must be a nonempty subset of {1..n-1}.
BoundedPoset build_PiAT(int n, const std::set<int>& T);

// Dispatch on the family tag; T must be empty for A, B and D.
BoundedPoset build_family_lattice(Family f, int n, const std::set<int>& T = {});

// The subspace of the reflection representation fixed by a partition: for
// type A (and AT) the equal-coordinate subspace inside the sum-zero
// hyperplane; for B/D/DB the subspace where each signed block forces
// sign-compatible equalities and the zero block forces zeros.
FlatSubspace partition_to_subspace(const SetPartition& p, int n, Family f);
FlatSubspace partition_to_subspace(const SignedPartition& p, Family f);

}  // namespace lathom
