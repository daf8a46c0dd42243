#pragma once

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lathom/errors.hpp"
#include "lathom/numbers.hpp"

namespace lathom {

using Bitset = boost::dynamic_bitset<>;

struct PosetChain {
    std::vector<int> elements;  // strictly increasing in the order
    bool operator==(const PosetChain& o) const { return elements == o.elements; }
};

// Finite poset on labelled elements.  Labels are sorted lexicographically at
// construction, so element indices are deterministic for a given label set.
// The full reflexive order relation is stored as one bitset per element;
// covers, heights and a topological order are derived once and cached.
// Instances are immutable after construction.
class Poset {
public:
    Poset() = default;

    // leq[i][j] iff element i <= element j, in the order of `labels` as given
    // (before sorting).  Validates reflexivity, antisymmetry, transitivity
    // and label uniqueness; throws PosetError on violation.
    static Poset from_leq(std::vector<std::string> labels, std::vector<Bitset> leq);

    // Order is the reflexive-transitive closure of the given cover pairs
    // (a, b) meaning a < b; indices refer to `labels` as given.
    static Poset from_covers(std::vector<std::string> labels,
                             const std::vector<std::pair<int, int>>& covers);

    static Poset antichain(std::vector<std::string> labels);
    static Poset chain(int k);            // c1 < c2 < ... < ck
    static Poset boolean_lattice(int m);  // subsets of {1..m} by inclusion

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }
    int index_of(const std::string& label) const;  // -1 when absent

    bool leq(int i, int j) const { return leq_[i][j]; }
    bool less(int i, int j) const { return i != j && leq_[i][j]; }

    const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }
    const std::vector<int>& upper_covers(int i) const { return up_[i]; }
    const std::vector<int>& lower_covers(int i) const { return down_[i]; }

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    // Length of the longest chain ending at each element (minimal => 0).
    const std::vector<int>& heights() const { return height_; }
    // True when every cover step raises height by exactly one.
    bool graded() const { return graded_; }
    // A linear extension: i before j whenever i < j in the order.
    const std::vector<int>& topo_order() const { return topo_; }

    // Induced subposet on the given element indices (duplicates rejected).
    Poset induced(std::vector<int> members) const;

    // All inclusion-maximal chains, each listed bottom-to-top, in
    // lexicographic order of their index sequences.
    std::vector<PosetChain> maximal_chains() const;

private:
    void finalize();  // derive covers, heights, topo order; validate axioms

    std::vector<std::string> labels_;
    std::vector<Bitset> leq_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> up_, down_;
    std::vector<int> height_;
    std::vector<int> topo_;
    bool graded_ = true;
};

// A poset with verified unique minimum and maximum, carrying the Mobius
// values mu(bottom, x) for every x (computed eagerly; instances stay
// immutable and safe to share across threads).
class BoundedPoset {
public:
    static BoundedPoset wrap(Poset p);  // throws PosetError if not bounded

    const Poset& poset() const { return p_; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    const Int& moebius_from_bottom(int x) const { return mu0_[x]; }
    const Int& moebius_top() const { return mu0_[top_]; }

private:
    Poset p_;
    int bottom_ = -1, top_ = -1;
    std::vector<Int> mu0_;
};

// p with a new minimum and a new maximum adjoined (always two new elements,
// even if p already has bounds or is empty).
BoundedPoset adjoin_bounds(const Poset& p);

// The open interval (bottom, top): everything except the two bounds.
// Throws PosetError when bottom == top (single-element bounded poset).
Poset proper_part(const BoundedPoset& p);

// Mobius function mu(x, y) of the interval [x, y]; requires x <= y.
Int moebius(const BoundedPoset& p, int x, int y);

// The closed interval [x, y] as an induced subposet; requires x <= y.
Poset closed_interval(const Poset& p, int x, int y);

// An isomorphism p -> q as an index map, if one exists.  Uses iterated
// degree/neighborhood refinement and backtracking; intended for the small
// posets that arise here.
std::optional<std::vector<int>> poset_isomorphism(const Poset& p, const Poset& q);

inline bool is_isomorphic(const Poset& p, const Poset& q) {
    return poset_isomorphism(p, q).has_value();
}

}  // namespace lathom
