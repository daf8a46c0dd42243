#include "lathom/simplicial_complex.hpp"

#include <algorithm>
#include <set>

namespace lathom {

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_labels,
                                     std::vector<std::vector<int>> facets)
    : vertex_labels_(std::move(vertex_labels)) {
    const int V = vertex_count();
    std::set<std::vector<int>> all;
    for (auto& f : facets) {
        if (f.empty()) throw std::invalid_argument("empty facet");
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] < 0 || f[i] >= V)
                throw std::invalid_argument("facet vertex out of range");
            if (i > 0 && f[i] <= f[i - 1])
                throw std::invalid_argument("facet not strictly increasing");
        }
        // Close under subsets.
        const int k = static_cast<int>(f.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> face;
            for (int b = 0; b < k; ++b)
                if (mask & (1u << b)) face.push_back(f[b]);
            all.insert(std::move(face));
        }
    }
    int d = -1;
    for (const auto& f : all) d = std::max(d, static_cast<int>(f.size()) - 1);
    faces_.assign(d + 1, {});
    for (const auto& f : all) faces_[f.size() - 1].push_back(f);
    for (auto& bucket : faces_) std::sort(bucket.begin(), bucket.end());

    // Maximal faces: not a proper subset of another face.
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (const auto& f : facets) {
        bool maximal = true;
        for (const auto& g : facets) {
            if (g.size() <= f.size()) continue;
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) facets_.push_back(f);
    }
}

const std::vector<std::vector<int>>& SimplicialComplex::faces(int k) const {
    static const std::vector<std::vector<int>> none;
    if (k < 0 || k > dim()) return none;
    return faces_[k];
}

int SimplicialComplex::face_index(int k, const std::vector<int>& s) const {
    const auto& bucket = faces(k);
    auto it = std::lower_bound(bucket.begin(), bucket.end(), s);
    if (it == bucket.end() || *it != s) return -1;
    return static_cast<int>(it - bucket.begin());
}

bool SimplicialComplex::has_face(const std::vector<int>& s) const {
    return face_index(static_cast<int>(s.size()) - 1, s) >= 0;
}

bool SimplicialComplex::pure() const {
    for (const auto& f : facets_)
        if (static_cast<int>(f.size()) - 1 != dim()) return false;
    return true;
}

SimplicialComplex order_complex(const Poset& p) {
    std::vector<std::vector<int>> facets;
    for (const auto& ch : p.maximal_chains()) {
        std::vector<int> f = ch.elements;
        std::sort(f.begin(), f.end());
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(p.labels(), std::move(facets));
}

void ChainVector::add_oriented(std::vector<int> vertices, const Int& coeff) {
    if (static_cast<int>(vertices.size()) != dim_ + 1)
        throw std::invalid_argument("chain term has wrong dimension");
    if (coeff == 0) return;
    // Insertion sort, counting transpositions for the orientation sign.
    int swaps = 0;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        int v = vertices[i];
        std::size_t j = i;
        while (j > 0 && vertices[j - 1] > v) {
            vertices[j] = vertices[j - 1];
            --j;
            ++swaps;
        }
        vertices[j] = v;
    }
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i] == vertices[i - 1])
            throw std::invalid_argument("degenerate simplex in chain");
    Int signed_coeff = (swaps % 2 == 0) ? coeff : Int(-coeff);
    auto [it, inserted] = terms_.try_emplace(std::move(vertices), signed_coeff);
    if (!inserted) {
        it->second += signed_coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Int ChainVector::coefficient(const std::vector<int>& face) const {
    auto it = terms_.find(face);
    return it == terms_.end() ? Int(0) : it->second;
}

ChainVector ChainVector::boundary() const {
    ChainVector out(dim_ - 1);
    for (const auto& [s, c] : terms_) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<int> face;
            face.reserve(s.size() - 1);
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i) face.push_back(s[j]);
            out.add_oriented(std::move(face), (i % 2 == 0) ? c : Int(-c));
        }
    }
    return out;
}

void ChainVector::negate() {
    for (auto& [s, c] : terms_) c = -c;
}

void ChainVector::make_primitive() {
    if (terms_.empty()) return;
    Int g = 0;
    for (const auto& [s, c] : terms_) g = gcd(g, c);
    if (g < 0) g = -g;
    if (g > 1)
        for (auto& [s, c] : terms_) c /= g;
}

int ChainVector::normalize_sign() {
    if (terms_.empty()) return 1;
    if (terms_.begin()->second < 0) {
        negate();
        return -1;
    }
    return 1;
}

bool ChainVector::equal_up_to_sign(const ChainVector& o) const {
    if (*this == o) return true;
    ChainVector neg = o;
    neg.negate();
    return *this == neg;
}

}  // namespace lathom
