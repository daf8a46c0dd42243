#include "lathom/splitting.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lathom/errors.hpp"

namespace lathom {

namespace {

void validate_word(const std::vector<int>& omega) {
    std::vector<int> sorted = omega;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
        if (sorted[i] != i + 1)
            throw ParameterError("word is not a permutation of {1..n}");
}

}  // namespace

SignedPermutation SignedPermutation::plain(std::vector<int> omega) {
    validate_word(omega);
    SignedPermutation w;
    w.epsilon.assign(omega.size(), 1);
    w.omega = std::move(omega);
    return w;
}

SignedPermutation SignedPermutation::from_string(const std::string& text) {
    SignedPermutation w;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '1' && c <= '9') {
            w.omega.push_back(c - '0');
            w.epsilon.push_back(1);
        } else if (c == '\'' && !w.epsilon.empty()) {
            w.epsilon.back() = -1;
        } else {
            throw ParameterError("malformed signed permutation '" + text + "'");
        }
    }
    validate_word(w.omega);
    return w;
}

int SignedPermutation::bar_count() const {
    int k = 0;
    for (int e : epsilon)
        if (e < 0) ++k;
    return k;
}

std::string SignedPermutation::to_string() const {
    std::string s;
    for (int i = 0; i < n(); ++i) {
        s += std::to_string(omega[i]);
        if (epsilon[i] < 0) s += "'";
    }
    return s;
}

SetPartition split_permutation(const std::vector<int>& omega,
                               const std::vector<int>& positions) {
    validate_word(omega);
    const int n = static_cast<int>(omega.size());
    std::vector<int> pos = positions;
    std::sort(pos.begin(), pos.end());
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (pos[i] < 1 || pos[i] > n - 1)
            throw ParameterError("split position out of range");
        if (i > 0 && pos[i] == pos[i - 1])
            throw ParameterError("repeated split position");
    }
    std::vector<std::vector<int>> blocks;
    int start = 0;
    pos.push_back(n);
    for (int cut : pos) {
        std::vector<int> block(omega.begin() + start, omega.begin() + cut);
        blocks.push_back(std::move(block));
        start = cut;
    }
    return SetPartition::from_blocks(std::move(blocks));
}

SignedPartition split_signed(const SignedPermutation& w,
                             const std::vector<int>& positions) {
    const int n = w.n();
    std::vector<int> pos = positions;
    std::sort(pos.begin(), pos.end());
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (pos[i] < 0 || pos[i] > n - 1)
            throw ParameterError("split position out of range");
        if (i > 0 && pos[i] == pos[i - 1])
            throw ParameterError("repeated split position");
    }
    SignedPartition p;
    p.zero_block.push_back(0);
    if (pos.empty()) {
        for (int v : w.omega) p.zero_block.push_back(v);
        std::sort(p.zero_block.begin(), p.zero_block.end());
        return p;
    }
    for (int i = 0; i < pos[0]; ++i) p.zero_block.push_back(w.omega[i]);
    std::sort(p.zero_block.begin(), p.zero_block.end());
    pos.push_back(n);
    for (std::size_t j = 0; j + 1 < pos.size(); ++j) {
        SignedBlock b;
        for (int i = pos[j]; i < pos[j + 1]; ++i)
            b.push_back(SignedElement{w.omega[i], w.epsilon[i]});
        p.signed_blocks.push_back(canonicalize_block(std::move(b)));
    }
    std::sort(p.signed_blocks.begin(), p.signed_blocks.end(),
              [](const SignedBlock& a, const SignedBlock& b) {
                  return a[0].value < b[0].value;
              });
    return p;
}

namespace {

SplitSubposet assemble_subposet(int m, const std::vector<std::string>& label_of_mask,
                                const BoundedPoset& ambient) {
    SplitSubposet sp;
    sp.m = m;
    sp.lattice_elem_of_mask.resize(std::size_t(1) << m);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        int idx = ambient.poset().index_of(label_of_mask[mask]);
        if (idx < 0)
            throw ParameterError("splitting leaves the ambient lattice: '" +
                                 label_of_mask[mask] + "' is not an element");
        sp.lattice_elem_of_mask[mask] = idx;
    }
    sp.members = sp.lattice_elem_of_mask;
    std::sort(sp.members.begin(), sp.members.end());
    sp.members.erase(std::unique(sp.members.begin(), sp.members.end()),
                     sp.members.end());
    if (sp.members.size() != (std::size_t(1) << m))
        throw PosetError("splitting family is not a Boolean bijection");
    // The mask order must agree with the ambient order.
    const Poset& P = ambient.poset();
    for (unsigned s = 0; s < (1u << m); ++s)
        for (unsigned t = 0; t < (1u << m); ++t) {
            bool sub = (s & t) == s;
            if (sub != P.leq(sp.lattice_elem_of_mask[s], sp.lattice_elem_of_mask[t]))
                throw PosetError("splitting family does not embed 2^[m]");
        }
    if (sp.lattice_elem_of_mask[0] != ambient.bottom() ||
        sp.lattice_elem_of_mask[(1u << m) - 1] != ambient.top())
        throw PosetError("splitting family does not span the bounds");
    return sp;
}

}  // namespace

SplitSubposet splitting_subposet_A(const std::vector<int>& omega,
                                   const BoundedPoset& ambient) {
    validate_word(omega);
    const int n = static_cast<int>(omega.size());
    const int m = n - 1;
    std::vector<std::string> labels(std::size_t(1) << m);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        // Bit i set means position i+1 is NOT cut, so mask 0 is the finest.
        std::vector<int> cuts;
        for (int i = 0; i < m; ++i)
            if (!(mask & (1u << i))) cuts.push_back(i + 1);
        labels[mask] = split_permutation(omega, cuts).to_string();
    }
    return assemble_subposet(m, labels, ambient);
}

SplitSubposet splitting_subposet_B(const SignedPermutation& w,
                                   const BoundedPoset& ambient) {
    const int n = w.n();
    std::vector<std::string> labels(std::size_t(1) << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> cuts;
        for (int i = 0; i < n; ++i)
            if (!(mask & (1u << i))) cuts.push_back(i);
        labels[mask] = split_signed(w, cuts).to_string();
    }
    return assemble_subposet(n, labels, ambient);
}

SplitSubposet splitting_subposet_D(const SignedPermutation& w,
                                   const BoundedPoset& ambient) {
    if (!w.even_bars())
        throw ParameterError("type D words need an even number of bars");
    const int n = w.n();
    SignedPermutation wp = w;  // epsilon' flips the first sign
    wp.epsilon[0] = -wp.epsilon[0];
    std::vector<std::string> labels(std::size_t(1) << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> cuts;
        for (int i = 0; i < n; ++i)
            if (!(mask & (1u << i))) cuts.push_back(i);
        // Splitting at a set whose least element is 1 would create the
        // two-element zero block {0, omega(1)}; reroute through the
        // sign-flipped word, cutting at 0 instead.
        if (!cuts.empty() && cuts[0] == 1) {
            cuts[0] = 0;
            labels[mask] = split_signed(wp, cuts).to_string();
        } else {
            labels[mask] = split_signed(w, cuts).to_string();
        }
    }
    return assemble_subposet(n, labels, ambient);
}

ChainVector rho_cycle(const SplitSubposet& sp, const LatticeComplex& lc) {
    std::vector<int> vom(sp.lattice_elem_of_mask.size(), -1);
    for (std::size_t mask = 1; mask + 1 < vom.size(); ++mask) {
        int v = lc.lattice_to_proper[sp.lattice_elem_of_mask[mask]];
        if (v < 0) throw PosetError("proper mask maps to a lattice bound");
        vom[mask] = v;
    }
    ChainVector cv = boolean_cycle_from_masks(sp.m, vom, lc.complex);
    cv.normalize_sign();
    return cv;
}

std::vector<int> right_to_left_maxima_positions(const std::vector<int>& omega) {
    std::vector<int> out;
    int best = 0;
    for (int i = static_cast<int>(omega.size()) - 1; i >= 0; --i) {
        if (omega[i] > best) {
            best = omega[i];
            out.push_back(i + 1);
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

namespace {

bool rlm_unbarred(const SignedPermutation& w) {
    for (int pos : right_to_left_maxima_positions(w.omega))
        if (w.epsilon[pos - 1] < 0) return false;
    return true;
}

std::vector<std::vector<int>> all_words(int n) {
    std::vector<int> omega(n);
    std::iota(omega.begin(), omega.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(omega);
    } while (std::next_permutation(omega.begin(), omega.end()));
    return out;
}

SignedPermutation with_mask(const std::vector<int>& omega, unsigned mask) {
    SignedPermutation w;
    w.omega = omega;
    w.epsilon.assign(omega.size(), 1);
    for (std::size_t i = 0; i < omega.size(); ++i)
        if (mask & (1u << i)) w.epsilon[i] = -1;
    return w;
}

void validate_T(Family f, int n, const std::set<int>& T) {
    // The order complexes below degenerate (empty proper part) under these
    // thresholds, so the splitting families are only offered above them.
    if ((f == Family::A || f == Family::AT) ? n < 3 : n < 2)
        throw ParameterError("n too small for family " + family_name(f));
    switch (f) {
        case Family::A:
        case Family::B:
        case Family::D:
            if (!T.empty()) throw ParameterError("T applies only to DB and AT");
            return;
        case Family::DB:
            for (int t : T)
                if (t < 1 || t > n) throw ParameterError("T must lie in {1..n}");
            return;
        case Family::AT:
            if (T.empty()) throw ParameterError("AT needs nonempty T");
            for (int t : T)
                if (t < 1 || t >= n) throw ParameterError("T must lie in {1..n-1}");
            return;
    }
}

}  // namespace

std::vector<BasisIndex> basis_index_set(Family f, int n, const std::set<int>& T) {
    validate_T(f, n, T);
    std::vector<BasisIndex> out;
    switch (f) {
        case Family::A:
            for (const auto& omega : all_words(n))
                if (omega[n - 1] == n)
                    out.push_back({SignedPermutation::plain(omega), CycleKind::Split});
            break;
        case Family::B:
            for (const auto& omega : all_words(n))
                for (unsigned mask = 0; mask < (1u << n); ++mask) {
                    SignedPermutation w = with_mask(omega, mask);
                    if (rlm_unbarred(w)) out.push_back({w, CycleKind::Split});
                }
            break;
        case Family::D:
            for (const auto& omega : all_words(n)) {
                if (omega[0] == n) continue;
                for (unsigned mask = 0; mask < (1u << n); ++mask) {
                    SignedPermutation w = with_mask(omega, mask);
                    if (w.even_bars() && rlm_unbarred(w))
                        out.push_back({w, CycleKind::SplitD});
                }
            }
            break;
        case Family::DB:
            for (const auto& omega : all_words(n))
                for (unsigned mask = 0; mask < (1u << n); ++mask) {
                    SignedPermutation w = with_mask(omega, mask);
                    if (!rlm_unbarred(w)) continue;
                    if (T.count(omega[0])) {
                        out.push_back({w, CycleKind::Split});
                    } else if (omega[0] != n && w.even_bars()) {
                        out.push_back({w, CycleKind::SplitD});
                    }
                }
            break;
        case Family::AT:
            for (const auto& omega : all_words(n))
                if (omega[n - 1] == n && T.count(omega[n - 2]))
                    out.push_back({SignedPermutation::plain(omega), CycleKind::Split});
            break;
    }
    return out;
}

std::vector<BasisIndex> full_index_set(Family f, int n, const std::set<int>& T) {
    validate_T(f, n, T);
    std::vector<BasisIndex> out;
    switch (f) {
        case Family::A:
            for (const auto& omega : all_words(n))
                out.push_back({SignedPermutation::plain(omega), CycleKind::Split});
            break;
        case Family::B:
            for (const auto& omega : all_words(n))
                for (unsigned mask = 0; mask < (1u << n); ++mask)
                    out.push_back({with_mask(omega, mask), CycleKind::Split});
            break;
        case Family::D:
            for (const auto& omega : all_words(n))
                for (unsigned mask = 0; mask < (1u << n); ++mask) {
                    SignedPermutation w = with_mask(omega, mask);
                    if (w.even_bars()) out.push_back({w, CycleKind::SplitD});
                }
            break;
        case Family::DB:
            for (const auto& omega : all_words(n))
                for (unsigned mask = 0; mask < (1u << n); ++mask) {
                    SignedPermutation w = with_mask(omega, mask);
                    if (T.count(omega[0])) {
                        out.push_back({w, CycleKind::Split});
                    } else if (w.even_bars()) {
                        out.push_back({w, CycleKind::SplitD});
                    }
                }
            break;
        case Family::AT:
            throw ParameterError(
                "the AT splitting family admits no in-lattice index set beyond the basis");
    }
    return out;
}

SplitSubposet splitting_subposet(const BasisIndex& bi, Family f,
                                 const BoundedPoset& ambient) {
    if (f == Family::A || f == Family::AT)
        return splitting_subposet_A(bi.w.omega, ambient);
    if (bi.kind == CycleKind::Split) return splitting_subposet_B(bi.w, ambient);
    return splitting_subposet_D(bi.w, ambient);
}

ChainVector splitting_cycle(const BasisIndex& bi, Family f, const LatticeComplex& lc) {
    return rho_cycle(splitting_subposet(bi, f, lc.lattice), lc);
}

bool kernel_generator_matches(const SplitSubposet& sp, const LatticeComplex& lc,
                              const ChainVector& rho) {
    std::vector<int> proper_members;
    for (int e : sp.members)
        if (e != lc.lattice.bottom() && e != lc.lattice.top())
            proper_members.push_back(e);
    Poset sub = lc.lattice.poset().induced(proper_members);
    SimplicialComplex sc = order_complex(sub);
    ChainVector gen = fundamental_cycle_top(sc);
    ChainVector mapped(gen.dim());
    for (const auto& [simplex, coeff] : gen.terms()) {
        std::vector<int> verts;
        verts.reserve(simplex.size());
        for (int v : simplex) verts.push_back(lc.proper.index_of(sub.label(v)));
        mapped.add_oriented(std::move(verts), coeff);
    }
    return mapped.equal_up_to_sign(rho);
}

SplittingBasisReport verify_splitting_cycles(Family f, int n, const std::set<int>& T,
                                             const std::vector<BasisIndex>& indices,
                                             const FaultInjection* fault) {
    validate_T(f, n, T);
    SplittingBasisReport rep;
    rep.family = f;
    rep.n = n;
    rep.T.assign(T.begin(), T.end());

    LatticeComplex lc = LatticeComplex::build(build_family_lattice(f, n, T));
    rep.lattice_size = lc.lattice.poset().size();
    rep.chain_count = static_cast<long long>(lc.complex.facet_list().size());

    std::vector<ChainVector> cycles;
    cycles.reserve(indices.size());
    rep.kernel_agree = true;
    for (const auto& bi : indices) {
        SplitSubposet sp = splitting_subposet(bi, f, lc.lattice);
        ChainVector rho = rho_cycle(sp, lc);
        rep.kernel_agree = rep.kernel_agree && kernel_generator_matches(sp, lc, rho);
        cycles.push_back(std::move(rho));
    }
    rep.cycle_count = static_cast<long long>(cycles.size());

    if (fault && fault->flip_one_term_sign && !cycles.empty() &&
        !cycles[0].is_zero()) {
        auto term = *cycles[0].terms().begin();
        cycles[0].add_oriented(term.first, Int(-2) * term.second);
    }

    const int top = lc.complex.dim();
    rep.homology_rank = reduced_betti(lc.complex, top).rank;
    rep.counts_match = (rep.cycle_count == rep.homology_rank);

    try {
        auto facets = choose_certificate_facets(cycles, lc.complex);
        auto cert = verify_basis_certificate(cycles, facets, lc.complex);
        rep.certificate_det = cert.det;
        rep.certificate_pass = cert.pass;
    } catch (const std::exception&) {
        rep.certificate_det = 0;
        rep.certificate_pass = false;
    }
    try {
        rep.spanning_pass = verify_unimodular_spanning(cycles, lc.complex);
    } catch (const std::exception&) {
        rep.spanning_pass = false;
    }
    rep.pass = rep.counts_match && rep.certificate_pass && rep.spanning_pass &&
               rep.kernel_agree;
    return rep;
}

SplittingBasisReport verify_splitting_basis(Family f, int n, const std::set<int>& T,
                                            const FaultInjection* fault) {
    return verify_splitting_cycles(f, n, T, basis_index_set(f, n, T), fault);
}

ChainVector act_on_cycle(const std::vector<int>& sigma, const ChainVector& rho,
                         const LatticeComplex& lc) {
    std::vector<int> vmap(lc.proper.size(), -1);
    for (int i = 0; i < lc.proper.size(); ++i) {
        SetPartition p = SetPartition::from_string(lc.proper.label(i));
        int j = lc.proper.index_of(p.relabeled(sigma).to_string());
        if (j < 0) throw ParameterError("permutation does not preserve the lattice");
        vmap[i] = j;
    }
    ChainVector out(rho.dim());
    for (const auto& [s, c] : rho.terms()) {
        std::vector<int> verts;
        verts.reserve(s.size());
        for (int v : s) verts.push_back(vmap[v]);
        out.add_oriented(std::move(verts), c);
    }
    return out;
}

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

OrbitReport orbit_report(int n, const std::set<int>& T) {
    validate_T(Family::AT, n, T);
    OrbitReport rep;
    rep.n = n;
    rep.T.assign(T.begin(), T.end());

    // The stabilizer: permutations of {1..n-1} preserving T, fixing n.
    std::vector<int> tvals(T.begin(), T.end());
    std::vector<int> rest;
    for (int v = 1; v < n; ++v)
        if (!T.count(v)) rest.push_back(v);

    std::vector<std::vector<int>> group;
    std::vector<int> tperm = tvals;
    std::sort(tperm.begin(), tperm.end());
    do {
        std::vector<int> rp = rest;
        std::sort(rp.begin(), rp.end());
        do {
            std::vector<int> sigma(n);
            sigma[n - 1] = n;
            for (std::size_t i = 0; i < tvals.size(); ++i)
                sigma[tvals[i] - 1] = tperm[i];
            for (std::size_t i = 0; i < rest.size(); ++i) sigma[rest[i] - 1] = rp[i];
            group.push_back(sigma);
        } while (std::next_permutation(rp.begin(), rp.end()));
    } while (std::next_permutation(tperm.begin(), tperm.end()));
    rep.group_order = static_cast<long long>(group.size());

    auto idx = basis_index_set(Family::AT, n, T);
    std::map<std::vector<int>, int> word_id;
    for (std::size_t i = 0; i < idx.size(); ++i)
        word_id[idx[i].w.omega] = static_cast<int>(i);

    std::vector<int> orbit_of(idx.size(), -1);
    int orbits = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (orbit_of[i] >= 0) continue;
        int id = orbits++;
        std::vector<std::size_t> queue = {i};
        orbit_of[i] = id;
        while (!queue.empty()) {
            std::size_t cur = queue.back();
            queue.pop_back();
            for (const auto& sigma : group) {
                std::vector<int> image(n);
                for (int k = 0; k < n; ++k) image[k] = sigma[idx[cur].w.omega[k] - 1];
                auto it = word_id.find(image);
                if (it == word_id.end())
                    throw PosetError("group action leaves the basis index set");
                if (orbit_of[it->second] < 0) {
                    orbit_of[it->second] = id;
                    queue.push_back(static_cast<std::size_t>(it->second));
                }
            }
        }
    }
    rep.orbit_count = orbits;
    std::vector<long long> sizes(orbits, 0);
    for (int o : orbit_of) sizes[o]++;
    std::sort(sizes.rbegin(), sizes.rend());
    rep.orbit_sizes = sizes;
    rep.all_regular = true;
    for (long long s : sizes)
        if (s != rep.group_order) rep.all_regular = false;
    rep.expected_regular_orbits = binomial(n - 2, static_cast<int>(T.size()) - 1);
    rep.pass = rep.all_regular && rep.orbit_count == rep.expected_regular_orbits;
    return rep;
}

}  // namespace lathom
