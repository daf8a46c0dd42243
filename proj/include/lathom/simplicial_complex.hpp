#pragma once

#include <map>
#include <string>
#include <vector>

#include "lathom/errors.hpp"
#include "lathom/numbers.hpp"
#include "lathom/poset.hpp"

namespace lathom {

// Finite abstract simplicial complex on labelled vertices.  Faces are stored
// per dimension as sorted lists of strictly increasing vertex-index tuples,
// generated by closing the given facet list under subsets.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    SimplicialComplex(std::vector<std::string> vertex_labels,
                      std::vector<std::vector<int>> facets);

    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    int vertex_count() const { return static_cast<int>(vertex_labels_.size()); }
    const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }

    // Faces of dimension k (tuples of k+1 vertices); empty list out of range.
    const std::vector<std::vector<int>>& faces(int k) const;
    int face_count(int k) const { return static_cast<int>(faces(k).size()); }
    // Inclusion-maximal faces, lex-sorted.
    const std::vector<std::vector<int>>& facet_list() const { return facets_; }

    // Index of `s` (strictly increasing) within faces(k); -1 when absent.
    int face_index(int k, const std::vector<int>& s) const;
    bool has_face(const std::vector<int>& s) const;
    // True when all maximal faces share one dimension.
    bool pure() const;

private:
    std::vector<std::string> vertex_labels_;
    std::vector<std::vector<std::vector<int>>> faces_;
    std::vector<std::vector<int>> facets_;
};

// Order complex of a poset: vertices are the elements, faces are the chains.
// Vertex i of the complex is element i of the poset.
SimplicialComplex order_complex(const Poset& p);

// Formal integer combination of equidimensional oriented simplices, stored
// over canonical (sorted) vertex tuples.
class ChainVector {
public:
    explicit ChainVector(int dim) : dim_(dim) {}

    int dim() const { return dim_; }

    // Adds coeff * [v0,...,vk] where the vertices may arrive in any order;
    // sorting contributes the sign of the permutation.  Repeated vertices are
    // rejected.  Zero coefficients vanish from the support.
    void add_oriented(std::vector<int> vertices, const Int& coeff);

    const std::map<std::vector<int>, Int>& terms() const { return terms_; }
    Int coefficient(const std::vector<int>& face) const;
    bool is_zero() const { return terms_.empty(); }
    int support_size() const { return static_cast<int>(terms_.size()); }

    ChainVector boundary() const;

    void negate();
    // Divides every coefficient by the gcd of all of them (no-op when zero).
    void make_primitive();
    // Flips the global sign if needed so the lexicographically least support
    // simplex has positive coefficient; returns the sign applied (+1 or -1).
    int normalize_sign();

    bool operator==(const ChainVector& o) const {
        return dim_ == o.dim_ && terms_ == o.terms_;
    }
    bool equal_up_to_sign(const ChainVector& o) const;

private:
    int dim_;
    std::map<std::vector<int>, Int> terms_;
};

}  // namespace lathom
