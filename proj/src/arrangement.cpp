#include "lathom/arrangement.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "lathom/errors.hpp"
#include "lathom/homology.hpp"

namespace lathom {

namespace {

std::vector<Rat> basis_vector(int n, int i) {  // e_i, 1-based
    std::vector<Rat> v(n, Rat(0));
    v[i - 1] = 1;
    return v;
}

std::vector<Rat> pair_normal(int n, int i, int j, int sign_j) {  // e_i + sign_j e_j
    std::vector<Rat> v(n, Rat(0));
    v[i - 1] = 1;
    v[j - 1] = sign_j;
    return v;
}

long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::string hyperplane_key(const Hyperplane& h, int ambient) {
    RatMatrix eq(0, ambient);
    eq.append_row(h.normal);
    return flat_from_equations(ambient, eq, {h.offset}).key();
}

}  // namespace

int Arrangement::subspace_dim() const {
    return ambient_dim - rank_of(ambient_equations);
}

Arrangement Arrangement::build(int ambient_dim, std::vector<Hyperplane> hps,
                               RatMatrix ambient_equations) {
    if (ambient_dim <= 0) throw ParameterError("ambient dimension must be positive");
    if (ambient_equations.rows() == 0)
        ambient_equations = RatMatrix(0, ambient_dim);
    if (ambient_equations.cols() != ambient_dim)
        throw ParameterError("ambient equation width mismatch");

    Arrangement a;
    a.ambient_dim = ambient_dim;
    a.ambient_equations = std::move(ambient_equations);

    std::map<std::string, int> seen;
    for (auto& h : hps) {
        if (static_cast<int>(h.normal.size()) != ambient_dim)
            throw ParameterError("hyperplane normal width mismatch");
        bool zero = true;
        for (const Rat& x : h.normal) zero = zero && x == 0;
        if (zero) throw ParameterError("hyperplane with zero normal");
        std::string key = hyperplane_key(h, ambient_dim);
        if (!seen.emplace(key, 1).second)
            throw ParameterError("duplicate hyperplane");
        if (h.offset != 0) a.central = false;
    }
    a.hyperplanes = std::move(hps);

    RatMatrix all = a.ambient_equations;
    std::vector<Rat> rhs(all.rows(), Rat(0));
    for (const auto& h : a.hyperplanes) {
        all.append_row(h.normal);
        rhs.push_back(h.offset);
    }
    FlatSubspace common = flat_from_equations(ambient_dim, all, rhs);
    a.essential = common.consistent && common.dim() == 0;
    return a;
}

Arrangement coxeter_arrangement(Family f, int n, const std::set<int>& T) {
    if (n < 1) throw ParameterError("n must be positive");
    std::vector<Hyperplane> hps;
    RatMatrix eqs(0, n);
    switch (f) {
        case Family::A: {
            if (!T.empty()) throw ParameterError("T applies only to DB and AT");
            if (n < 2) throw ParameterError("type A needs n >= 2");
            eqs.append_row(std::vector<Rat>(n, Rat(1)));
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    hps.push_back({pair_normal(n, i, j, -1), 0});
            break;
        }
        case Family::B: {
            if (!T.empty()) throw ParameterError("T applies only to DB and AT");
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    hps.push_back({pair_normal(n, i, j, -1), 0});
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    hps.push_back({pair_normal(n, i, j, +1), 0});
            for (int i = 1; i <= n; ++i) hps.push_back({basis_vector(n, i), 0});
            break;
        }
        case Family::D:
        case Family::DB: {
            if (f == Family::D && !T.empty())
                throw ParameterError("T applies only to DB and AT");
            if (n < 2) throw ParameterError("types D and DB need n >= 2");
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    hps.push_back({pair_normal(n, i, j, -1), 0});
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    hps.push_back({pair_normal(n, i, j, +1), 0});
            for (int t : T) {
                if (t < 1 || t > n) throw ParameterError("T must lie in {1..n}");
                hps.push_back({basis_vector(n, t), 0});
            }
            break;
        }
        case Family::AT: {
            if (n < 2) throw ParameterError("type AT needs n >= 2");
            if (T.empty()) throw ParameterError("AT needs nonempty T");
            for (int t : T)
                if (t < 1 || t >= n) throw ParameterError("T must lie in {1..n-1}");
            eqs.append_row(std::vector<Rat>(n, Rat(1)));
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    hps.push_back({pair_normal(n, i, j, -1), 0});
            for (int t : T) hps.push_back({pair_normal(n, t, n, -1), 0});
            break;
        }
    }
    return Arrangement::build(n, std::move(hps), std::move(eqs));
}

IntersectionLattice intersection_lattice(const Arrangement& a) {
    std::vector<FlatSubspace> flats;
    std::map<std::string, int> index_by_key;
    flats.push_back(flat_from_equations(a.ambient_dim, a.ambient_equations));
    index_by_key[flats[0].key()] = 0;
    std::vector<int> worklist = {0};
    while (!worklist.empty()) {
        int cur = worklist.back();
        worklist.pop_back();
        FlatSubspace base = flats[cur];
        for (const auto& h : a.hyperplanes) {
            FlatSubspace g = intersect_flat(base, h.normal, h.offset);
            if (!g.consistent) continue;
            std::string key = g.key();
            auto [it, inserted] = index_by_key.emplace(key, static_cast<int>(flats.size()));
            if (!inserted) continue;
            flats.push_back(std::move(g));
            worklist.push_back(it->second);
        }
    }

    // Sort by key so the poset's label sort leaves indices unchanged.
    std::sort(flats.begin(), flats.end(),
              [](const FlatSubspace& x, const FlatSubspace& y) {
                  return x.key() < y.key();
              });
    const int m = static_cast<int>(flats.size());
    std::vector<std::string> labels(m);
    std::vector<Bitset> leq(m, Bitset(m));
    for (int i = 0; i < m; ++i) labels[i] = flats[i].key();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (flats[i].contains(flats[j])) leq[i][j] = true;  // reverse inclusion

    IntersectionLattice L;
    L.poset = Poset::from_leq(std::move(labels), std::move(leq));
    L.flats = std::move(flats);
    L.central = a.central;
    L.essential = a.essential;
    auto mins = L.poset.minimal_elements();
    L.bottom = (mins.size() == 1) ? mins[0] : -1;
    if (L.bottom < 0) throw PosetError("intersection poset lost its bottom");
    auto maxs = L.poset.maximal_elements();
    L.top = (maxs.size() == 1) ? maxs[0] : -1;
    return L;
}

BoundedPoset IntersectionLattice::bounded() const {
    if (top < 0)
        throw PosetError("affine intersection semilattice has no top element");
    return BoundedPoset::wrap(poset);
}

int IntersectionLattice::index_of_flat(const FlatSubspace& f) const {
    return poset.index_of(f.key());
}

Region region_for(Family f, int n, const std::set<int>& T, const BasisIndex& label) {
    if (f == Family::AT)
        throw ParameterError("AT regions are not modelled; its basis is combinatorial");
    if (f != Family::DB && !T.empty())
        throw ParameterError("T applies only to DB and AT");
    const SignedPermutation& w = label.w;
    if (w.n() != n) throw ParameterError("label length differs from n");

    enum class Style { ChainA, ChainB, Straddle };
    Style style;
    switch (f) {
        case Family::A:
            if (w.bar_count() > 0) throw ParameterError("type A labels carry no bars");
            style = Style::ChainA;
            break;
        case Family::B:
            if (label.kind != CycleKind::Split)
                throw ParameterError("type B regions are chain regions");
            style = Style::ChainB;
            break;
        case Family::D:
            if (label.kind != CycleKind::SplitD || !w.even_bars())
                throw ParameterError("type D regions need even bars and the straddling kind");
            style = Style::Straddle;
            break;
        default:  // DB
            if (label.kind == CycleKind::Split) {
                if (!T.count(w.omega[0]))
                    throw ParameterError("chain regions of DB need omega(1) in T");
                style = Style::ChainB;
            } else {
                if (T.count(w.omega[0]) || !w.even_bars())
                    throw ParameterError(
                        "straddling regions of DB need omega(1) outside T and even bars");
                style = Style::Straddle;
            }
            break;
    }
    if (style == Style::Straddle && n < 2)
        throw ParameterError("straddling regions need n >= 2");

    RatMatrix rows(0, n);
    auto signed_unit = [&](int pos) {  // eps_pos * e_{omega(pos)}, 1-based pos
        std::vector<Rat> v(n, Rat(0));
        v[w.omega[pos - 1] - 1] = w.epsilon[pos - 1];
        return v;
    };
    auto add_step = [&](int pos) {  // eps_{pos+1} x_{omega(pos+1)} - eps_pos x_{omega(pos)}
        std::vector<Rat> hi = signed_unit(pos + 1), lo = signed_unit(pos);
        for (int k = 0; k < n; ++k) hi[k] -= lo[k];
        rows.append_row(hi);
    };
    switch (style) {
        case Style::ChainA:
            for (int pos = 1; pos < n; ++pos) add_step(pos);
            break;
        case Style::ChainB:
            rows.append_row(signed_unit(1));
            for (int pos = 1; pos < n; ++pos) add_step(pos);
            break;
        case Style::Straddle: {
            std::vector<Rat> plus = signed_unit(2), minus = signed_unit(2);
            plus[w.omega[0] - 1] += 1;
            minus[w.omega[0] - 1] -= 1;
            rows.append_row(minus);  // eps_2 x_{omega(2)} - x_{omega(1)} > 0
            rows.append_row(plus);   // eps_2 x_{omega(2)} + x_{omega(1)} > 0
            for (int pos = 2; pos < n; ++pos) add_step(pos);
            break;
        }
    }

    RatMatrix reduced = rows;
    RatMatrix section(0, 0);
    if (style == Style::ChainA) {
        // Work inside the sum-zero subspace through the basis e_j - e_n.
        section = RatMatrix(n, n - 1);
        for (int j = 0; j < n - 1; ++j) {
            section.at(j, j) = 1;
            section.at(n - 1, j) = -1;
        }
        reduced = mat_mul(rows, section);
    }

    RatMatrix inv;
    try {
        inv = inverse(reduced);
    } catch (const std::invalid_argument&) {
        throw ParameterError("region constraints are singular for label " +
                             w.to_string());
    }

    Region r;
    r.family = f;
    r.label = label;
    r.constraints = rows;
    for (int j = 0; j < inv.cols(); ++j) {
        std::vector<Rat> col(inv.rows());
        for (int i = 0; i < inv.rows(); ++i) col[i] = inv.at(i, j);
        std::vector<Rat> ray =
            (style == Style::ChainA) ? mat_vec(section, col) : std::move(col);
        r.rays.push_back(primitive_direction(std::move(ray)));
    }
    for (int i = 0; i < rows.rows(); ++i)
        for (int j = 0; j < static_cast<int>(r.rays.size()); ++j) {
            Rat s = dot(rows.row(i), r.rays[j]);
            if ((i == j) ? (s <= 0) : (s != 0))
                throw PosetError("region rays violate the wall incidence pattern");
        }
    return r;
}

std::vector<BasisIndex> region_labels(Family f, int n, const std::set<int>& T) {
    return full_index_set(f, n, T);
}

long long expected_region_count(Family f, int n, const std::set<int>& T) {
    switch (f) {
        case Family::A: return factorial(n);
        case Family::B: return (1LL << n) * factorial(n);
        case Family::D: return (1LL << (n - 1)) * factorial(n);
        case Family::DB:
            return (1LL << (n - 1)) * factorial(n - 1) *
                   (n + static_cast<long long>(T.size()));
        case Family::AT: break;
    }
    throw ParameterError("no geometric region count for AT");
}

std::vector<Rat> default_generic_vector(Family f, int n) {
    std::vector<Rat> v(n);
    if (f == Family::A || f == Family::AT) {
        for (int i = 0; i < n - 1; ++i) v[i] = -1;
        v[n - 1] = n - 1;
    } else {
        Int p = 1;
        for (int i = 0; i < n; ++i, p *= 2) v[i] = Rat(p);
    }
    return v;
}

namespace {

bool flat_inside_perp(const FlatSubspace& fl, const std::vector<Rat>& v) {
    for (const auto& d : null_space(fl.coeff))
        if (dot(v, d) != 0) return false;
    return true;
}

}  // namespace

bool is_generic(const IntersectionLattice& L, const std::vector<Rat>& v) {
    bool nonzero = false;
    for (const Rat& x : v) nonzero = nonzero || x != 0;
    if (!nonzero) throw ParameterError("direction vector must be nonzero");
    for (const auto& fl : L.flats)
        if (fl.dim() >= 1 && flat_inside_perp(fl, v)) return false;
    return true;
}

bool is_generic_lines_only(const IntersectionLattice& L, const std::vector<Rat>& v) {
    for (const auto& fl : L.flats)
        if (fl.dim() == 1 && flat_inside_perp(fl, v)) return false;
    return true;
}

bool bounded_slice_test(const Region& r, const std::vector<Rat>& v) {
    bool all_positive = true;
    for (const auto& ray : r.rays) {
        Rat s = dot(v, ray);
        if (s == 0)
            throw GenericityViolatedError(
                "slice direction is orthogonal to an extreme ray of region " +
                r.label.w.to_string());
        if (s < 0) all_positive = false;
    }
    return all_positive;
}

std::vector<BasisIndex> bounded_regions(Family f, int n, const std::set<int>& T,
                                        const std::vector<Rat>& v) {
    std::vector<BasisIndex> out;
    for (const auto& label : region_labels(f, n, T))
        if (bounded_slice_test(region_for(f, n, T, label), v)) out.push_back(label);
    return out;
}

ZMapImage z_map_region(const Region& r, const Arrangement& a,
                       const IntersectionLattice& L) {
    if (!a.central) throw ParameterError("the z-map is built for central arrangements");
    const int d = static_cast<int>(r.rays.size());
    ZMapImage img;
    img.walls = d;
    img.flat_of_mask.resize(std::size_t(1) << d);
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        // The face with active wall set `mask` is spanned by the other rays;
        // z is the intersection of every hyperplane containing them all.
        RatMatrix eqs = a.ambient_equations;
        for (const auto& h : a.hyperplanes) {
            bool contains = true;
            for (int j = 0; j < d && contains; ++j)
                if (!(mask & (1u << j))) contains = (dot(h.normal, r.rays[j]) == 0);
            if (contains) eqs.append_row(h.normal);
        }
        int idx = L.index_of_flat(flat_from_equations(a.ambient_dim, eqs));
        if (idx < 0) throw PosetError("z-image flat is missing from the lattice");
        img.flat_of_mask[mask] = idx;
    }
    if (img.flat_of_mask[0] != L.bottom)
        throw PosetError("the open region does not map to the bottom flat");
    if (L.top >= 0 && img.flat_of_mask[(1u << d) - 1] != L.top)
        throw PosetError("the origin face does not map to the top flat");
    for (unsigned s = 0; s < (1u << d); ++s)
        for (unsigned t = 0; t < (1u << d); ++t) {
            bool sub = (s & t) == s;
            if (sub != L.poset.leq(img.flat_of_mask[s], img.flat_of_mask[t]))
                throw PosetError("z-map does not embed the face lattice");
        }
    img.members = img.flat_of_mask;
    std::sort(img.members.begin(), img.members.end());
    img.members.erase(std::unique(img.members.begin(), img.members.end()),
                      img.members.end());
    return img;
}

namespace {

struct GammaData {
    std::vector<int> comb_to_flat;
    bool bijective = false;
    bool order_iso = false;
};

GammaData gamma_map(Family f, int n, const BoundedPoset& comb,
                    const IntersectionLattice& L) {
    const Poset& P = comb.poset();
    GammaData g;
    g.comb_to_flat.assign(P.size(), -1);
    std::vector<char> hit(L.poset.size(), 0);
    bool all_found = true;
    for (int i = 0; i < P.size(); ++i) {
        FlatSubspace fl =
            (f == Family::A || f == Family::AT)
                ? partition_to_subspace(SetPartition::from_string(P.label(i)), n, f)
                : partition_to_subspace(SignedPartition::from_string(P.label(i)), f);
        int idx = L.index_of_flat(fl);
        g.comb_to_flat[i] = idx;
        if (idx < 0)
            all_found = false;
        else
            hit[idx] = 1;
    }
    g.bijective = all_found && P.size() == L.poset.size();
    for (char h : hit) g.bijective = g.bijective && h;
    g.order_iso = g.bijective;
    if (g.order_iso)
        for (int i = 0; i < P.size() && g.order_iso; ++i)
            for (int j = 0; j < P.size() && g.order_iso; ++j)
                if (P.leq(i, j) !=
                    L.poset.leq(g.comb_to_flat[i], g.comb_to_flat[j]))
                    g.order_iso = false;
    return g;
}

}  // namespace

GammaReport check_gamma_iso(Family f, int n, const std::set<int>& T) {
    GammaReport rep;
    rep.family = f;
    rep.n = n;
    rep.T.assign(T.begin(), T.end());
    BoundedPoset comb = build_family_lattice(f, n, T);
    IntersectionLattice L = intersection_lattice(coxeter_arrangement(f, n, T));
    rep.lattice_size = comb.poset().size();
    rep.flat_count = L.poset.size();
    GammaData g = gamma_map(f, n, comb, L);
    rep.comb_to_flat = std::move(g.comb_to_flat);
    rep.bijective = g.bijective;
    rep.order_iso = g.order_iso;
    rep.pass = g.bijective && g.order_iso;
    return rep;
}

namespace {

Int abs_int(Int x) { return x < 0 ? -x : x; }

}  // namespace

ZaslavskyReport zaslavsky_check(Family f, int n, const std::set<int>& T,
                                const std::vector<Rat>& v) {
    ZaslavskyReport rep;
    rep.family = f;
    rep.n = n;
    rep.T.assign(T.begin(), T.end());
    IntersectionLattice L = intersection_lattice(coxeter_arrangement(f, n, T));
    if (!is_generic(L, v))
        throw GenericityViolatedError("direction vector is not generic");
    BoundedPoset BL = L.bounded();

    auto labels = region_labels(f, n, T);
    rep.region_count = static_cast<long long>(labels.size());
    for (const auto& label : labels)
        if (bounded_slice_test(region_for(f, n, T, label), v)) ++rep.bounded_count;

    Int mu_sum = 0;
    for (int x = 0; x < BL.poset().size(); ++x)
        if (x != BL.top()) mu_sum += BL.moebius_from_bottom(x);
    rep.mu_sum_abs = abs_int(mu_sum);
    rep.mu_top_abs = abs_int(BL.moebius_top());
    rep.pass = Int(rep.bounded_count) == rep.mu_sum_abs &&
               rep.mu_sum_abs == rep.mu_top_abs;
    return rep;
}

GeometricBasisReport verify_geometric_basis(Family f, int n, const std::set<int>& T,
                                            std::vector<Rat> v) {
    if (f == Family::AT)
        throw ParameterError("the AT basis is certified combinatorially only");
    GeometricBasisReport rep;
    rep.family = f;
    rep.n = n;
    rep.T.assign(T.begin(), T.end());
    if (v.empty()) v = default_generic_vector(f, n);
    rep.v = v;

    LatticeComplex lc = LatticeComplex::build(build_family_lattice(f, n, T));
    rep.lattice_size = lc.lattice.poset().size();
    rep.chain_count = static_cast<long long>(lc.complex.facet_list().size());

    Arrangement arr = coxeter_arrangement(f, n, T);
    IntersectionLattice L = intersection_lattice(arr);
    if (!is_generic(L, v))
        throw GenericityViolatedError("direction vector is not generic");
    rep.checks.push_back({"generic-shortcut-agrees",
                          is_generic_lines_only(L, v),
                          "all-flats test vs lines-only test"});

    GammaData g = gamma_map(f, n, lc.lattice, L);
    rep.checks.push_back({"gamma-order-iso", g.bijective && g.order_iso,
                          std::to_string(rep.lattice_size) + " elements vs " +
                              std::to_string(L.poset.size()) + " flats"});
    if (!(g.bijective && g.order_iso)) {
        rep.pass = false;
        return rep;
    }
    std::vector<int> flat_to_comb(L.poset.size(), -1);
    for (int i = 0; i < static_cast<int>(g.comb_to_flat.size()); ++i)
        flat_to_comb[g.comb_to_flat[i]] = i;

    auto labels = region_labels(f, n, T);
    rep.region_count = static_cast<long long>(labels.size());
    long long expected = expected_region_count(f, n, T);
    rep.checks.push_back({"region-count", rep.region_count == expected,
                          "got " + std::to_string(rep.region_count) + ", expected " +
                              std::to_string(expected)});

    std::vector<BasisIndex> bounded;
    std::vector<Region> bounded_regions_v;
    for (const auto& label : labels) {
        Region r = region_for(f, n, T, label);
        if (bounded_slice_test(r, v)) {
            bounded.push_back(label);
            bounded_regions_v.push_back(std::move(r));
        }
    }
    rep.bounded_count = static_cast<long long>(bounded.size());

    auto index_set = basis_index_set(f, n, T);
    auto sort_key = [](const BasisIndex& b) {
        return std::make_tuple(b.w.omega, b.w.epsilon, static_cast<int>(b.kind));
    };
    auto by_key = [&](const BasisIndex& x, const BasisIndex& y) {
        return sort_key(x) < sort_key(y);
    };
    std::vector<BasisIndex> bs = bounded, is = index_set;
    std::sort(bs.begin(), bs.end(), by_key);
    std::sort(is.begin(), is.end(), by_key);
    bool same_set = bs == is;
    rep.checks.push_back({"bounded-set-is-index-set", same_set,
                          std::to_string(bounded.size()) + " bounded vs " +
                              std::to_string(index_set.size()) + " index words"});

    BoundedPoset BL = L.bounded();
    Int mu_sum = 0;
    for (int x = 0; x < BL.poset().size(); ++x)
        if (x != BL.top()) mu_sum += BL.moebius_from_bottom(x);
    bool zas = Int(rep.bounded_count) == abs_int(mu_sum) &&
               abs_int(mu_sum) == abs_int(BL.moebius_top());
    rep.checks.push_back({"zaslavsky-count", zas,
                          std::to_string(rep.bounded_count) + " bounded vs |mu| = " +
                              to_string(abs_int(BL.moebius_top()))});

    std::vector<ChainVector> geometric;
    bool matches = true;
    for (std::size_t k = 0; k < bounded.size(); ++k) {
        ZMapImage z = z_map_region(bounded_regions_v[k], arr, L);
        std::vector<int> vom(z.flat_of_mask.size(), -1);
        for (std::size_t mask = 1; mask + 1 < vom.size(); ++mask)
            vom[mask] = lc.lattice_to_proper[flat_to_comb[z.flat_of_mask[mask]]];
        ChainVector cyc = boolean_cycle_from_masks(z.walls, vom, lc.complex);
        cyc.normalize_sign();
        matches = matches &&
                  cyc.equal_up_to_sign(splitting_cycle(bounded[k], f, lc));
        geometric.push_back(std::move(cyc));
    }
    rep.cycle_count = static_cast<long long>(geometric.size());
    rep.checks.push_back({"matches-splitting-cycles", matches,
                          std::to_string(geometric.size()) + " cycles compared"});

    rep.homology_rank = reduced_betti(lc.complex, lc.complex.dim()).rank;
    rep.checks.push_back({"rank-count", rep.cycle_count == rep.homology_rank,
                          "rank " + std::to_string(rep.homology_rank)});

    bool cert_ok = false;
    try {
        auto facets = choose_certificate_facets(geometric, lc.complex);
        auto cert = verify_basis_certificate(geometric, facets, lc.complex);
        rep.certificate_det = cert.det;
        cert_ok = cert.pass;
    } catch (const std::exception&) {
        rep.certificate_det = 0;
    }
    rep.checks.push_back({"certificate-determinant", cert_ok,
                          "det = " + to_string(rep.certificate_det)});

    bool spanning = false;
    try {
        spanning = verify_unimodular_spanning(geometric, lc.complex);
    } catch (const std::exception&) {
    }
    rep.checks.push_back({"unimodular-spanning", spanning, ""});

    rep.pass = true;
    for (const auto& row : rep.checks) rep.pass = rep.pass && row.pass;
    return rep;
}

}  // namespace lathom
