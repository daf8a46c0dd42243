#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "lathom/arrangement.hpp"

using namespace lathom;

namespace {

std::vector<Rat> rat_vec(std::vector<int> v) {
    std::vector<Rat> out;
    for (int x : v) out.emplace_back(x);
    return out;
}

bool has_ray(const Region& r, const std::vector<int>& ray) {
    return std::any_of(r.rays.begin(), r.rays.end(),
                       [&](const std::vector<Rat>& c) {
                           if (c.size() != ray.size()) return false;
                           for (std::size_t i = 0; i < c.size(); ++i)
                               if (c[i] != Rat(ray[i])) return false;
                           return true;
                       });
}

}  // namespace

TEST_CASE("reflection arrangement sizes") {
    CHECK(coxeter_arrangement(Family::A, 3).hyperplanes.size() == 3);
    CHECK(coxeter_arrangement(Family::A, 4).hyperplanes.size() == 6);
    CHECK(coxeter_arrangement(Family::B, 2).hyperplanes.size() == 4);
    CHECK(coxeter_arrangement(Family::B, 3).hyperplanes.size() == 9);
    CHECK(coxeter_arrangement(Family::D, 3).hyperplanes.size() == 6);
    CHECK(coxeter_arrangement(Family::DB, 3, {1}).hyperplanes.size() == 7);
    CHECK(coxeter_arrangement(Family::DB, 3, {1, 2, 3}).hyperplanes.size() == 9);
    // braid on the first n-1 letters plus one tagged connection to the last
    CHECK(coxeter_arrangement(Family::AT, 4, {2}).hyperplanes.size() == 4);

    CHECK_THROWS_AS(coxeter_arrangement(Family::A, 3, {1}), ParameterError);
    CHECK_THROWS_AS(coxeter_arrangement(Family::AT, 4, {}), ParameterError);
}

TEST_CASE("arrangement structure flags") {
    Arrangement a3 = coxeter_arrangement(Family::A, 3);
    CHECK(a3.ambient_dim == 3);
    CHECK(a3.subspace_dim() == 2);  // sum-zero subspace
    CHECK(a3.central);
    CHECK(a3.essential);

    Arrangement b2 = coxeter_arrangement(Family::B, 2);
    CHECK(b2.subspace_dim() == 2);
    CHECK(b2.essential);
}

TEST_CASE("duplicate hyperplanes are rejected") {
    std::vector<Hyperplane> hps = {{rat_vec({1, -1}), 0}, {rat_vec({-2, 2}), 0}};
    CHECK_THROWS_AS(Arrangement::build(2, hps, RatMatrix(0, 2)), ParameterError);
}

TEST_CASE("intersection lattice of the small braid arrangement") {
    IntersectionLattice L =
        intersection_lattice(coxeter_arrangement(Family::A, 3));
    CHECK(L.flats.size() == 5);  // matches the partition lattice of [3]
    CHECK(L.central);
    CHECK(L.top >= 0);
    CHECK(L.flats[L.bottom].dim() == 2);
    CHECK(L.flats[L.top].dim() == 0);
    BoundedPoset BL = L.bounded();
    CHECK(BL.moebius_top() == 2);

    // flats are aligned with poset indices
    for (std::size_t i = 0; i < L.flats.size(); ++i)
        CHECK(L.index_of_flat(L.flats[i]) == static_cast<int>(i));
}

TEST_CASE("gamma is an order isomorphism on every desk instance") {
    CHECK(check_gamma_iso(Family::A, 3, {}).pass);
    CHECK(check_gamma_iso(Family::A, 4, {}).pass);
    CHECK(check_gamma_iso(Family::B, 2, {}).pass);
    CHECK(check_gamma_iso(Family::B, 3, {}).pass);
    CHECK(check_gamma_iso(Family::D, 3, {}).pass);
    for (std::set<int> T : std::vector<std::set<int>>{{}, {1}, {2, 3}, {1, 2, 3}}) {
        GammaReport g = check_gamma_iso(Family::DB, 3, T);
        CHECK(g.pass);
        CHECK(g.lattice_size == g.flat_count);
    }
}

TEST_CASE("region of the identity word in the braid cone") {
    BasisIndex id{SignedPermutation::plain({1, 2, 3}), CycleKind::Split};
    Region r = region_for(Family::A, 3, {}, id);
    REQUIRE(r.rays.size() == 2);
    CHECK(has_ray(r, {-2, 1, 1}));
    CHECK(has_ray(r, {-1, -1, 2}));
    // constraints are positive exactly on the opposite ray
    for (int i = 0; i < r.constraints.rows(); ++i)
        for (std::size_t j = 0; j < r.rays.size(); ++j) {
            Rat d = dot(r.constraints.row(i), r.rays[j]);
            if (static_cast<int>(j) == i) CHECK(d > 0);
            else CHECK(d == 0);
        }
}

TEST_CASE("region of a signed word") {
    BasisIndex b{SignedPermutation::from_string("12"), CycleKind::Split};
    Region r = region_for(Family::B, 2, {}, b);
    REQUIRE(r.rays.size() == 2);
    CHECK(has_ray(r, {0, 1}));
    CHECK(has_ray(r, {1, 1}));

    BasisIndex d{SignedPermutation::from_string("12"), CycleKind::SplitD};
    Region rd = region_for(Family::D, 2, {}, d);
    REQUIRE(rd.rays.size() == 2);
    // straddling region |x1| < x2: the closure is spanned by (1,1) and (-1,1)
    CHECK(has_ray(rd, {1, 1}));
    CHECK(has_ray(rd, {-1, 1}));
}

TEST_CASE("region label counts match the group orders") {
    CHECK(region_labels(Family::A, 4, {}).size() == 24);
    CHECK(expected_region_count(Family::A, 4, {}) == 24);
    CHECK(region_labels(Family::B, 3, {}).size() == 48);
    CHECK(expected_region_count(Family::B, 3, {}) == 48);
    CHECK(region_labels(Family::D, 3, {}).size() == 24);
    CHECK(expected_region_count(Family::D, 3, {}) == 24);
    CHECK(region_labels(Family::DB, 3, {1}).size() == 32);
    CHECK(expected_region_count(Family::DB, 3, {1}) == 32);
    CHECK_THROWS_AS(expected_region_count(Family::AT, 4, {1}), ParameterError);
}

TEST_CASE("genericity of slicing directions") {
    IntersectionLattice L =
        intersection_lattice(coxeter_arrangement(Family::B, 2, {}));
    CHECK(is_generic(L, rat_vec({1, 2})));
    CHECK(is_generic_lines_only(L, rat_vec({1, 2})));
    // (1,1) kills the line x1 = -x2
    CHECK_FALSE(is_generic(L, rat_vec({1, 1})));
    CHECK_FALSE(is_generic_lines_only(L, rat_vec({1, 1})));
    CHECK_FALSE(is_generic(L, rat_vec({1, 0})));
    CHECK_THROWS_AS(is_generic(L, rat_vec({0, 0})), ParameterError);

    CHECK_THROWS_AS(zaslavsky_check(Family::B, 2, {}, rat_vec({1, 1})),
                    GenericityViolatedError);
}

TEST_CASE("bounded slice of the rank-two signed arrangement") {
    std::vector<Rat> v = default_generic_vector(Family::B, 2);
    CHECK(v == rat_vec({1, 2}));
    std::vector<BasisIndex> bounded = bounded_regions(Family::B, 2, {}, v);
    std::set<std::string> words;
    for (const BasisIndex& b : bounded) words.insert(b.w.to_string());
    CHECK(words == std::set<std::string>{"12", "1'2", "21"});
}

TEST_CASE("bounded regions are exactly the predicate words across families") {
    for (auto [f, n] : std::vector<std::pair<Family, int>>{
             {Family::A, 4}, {Family::B, 3}, {Family::D, 3}}) {
        std::vector<Rat> v = default_generic_vector(f, n);
        auto bounded = bounded_regions(f, n, {}, v);
        auto predicate = basis_index_set(f, n, {});
        auto key = [](const BasisIndex& b) {
            return std::make_tuple(b.w.omega, b.w.epsilon,
                                   static_cast<int>(b.kind));
        };
        std::set<std::tuple<std::vector<int>, std::vector<int>, int>> got, want;
        for (const auto& b : bounded) got.insert(key(b));
        for (const auto& b : predicate) want.insert(key(b));
        CHECK(got == want);
    }
}

TEST_CASE("region counts against the Moebius function") {
    ZaslavskyReport a4 =
        zaslavsky_check(Family::A, 4, {}, default_generic_vector(Family::A, 4));
    CHECK(a4.pass);
    CHECK(a4.region_count == 24);
    CHECK(a4.bounded_count == 6);
    CHECK(a4.mu_top_abs == 6);

    ZaslavskyReport b3 =
        zaslavsky_check(Family::B, 3, {}, default_generic_vector(Family::B, 3));
    CHECK(b3.pass);
    CHECK(b3.bounded_count == 15);

    ZaslavskyReport d3 =
        zaslavsky_check(Family::D, 3, {}, default_generic_vector(Family::D, 3));
    CHECK(d3.pass);
    CHECK(d3.bounded_count == 6);

    for (std::set<int> T : std::vector<std::set<int>>{{}, {2}, {1, 3}}) {
        ZaslavskyReport db = zaslavsky_check(Family::DB, 3, T,
                                             default_generic_vector(Family::DB, 3));
        CHECK(db.pass);
        CHECK(db.bounded_count == 3 * (2 + static_cast<long long>(T.size())));
    }
}

TEST_CASE("face-to-flat map of a closed region embeds the wall subsets") {
    Arrangement a = coxeter_arrangement(Family::A, 3);
    IntersectionLattice L = intersection_lattice(a);
    BasisIndex id{SignedPermutation::plain({1, 2, 3}), CycleKind::Split};
    ZMapImage z = z_map_region(region_for(Family::A, 3, {}, id), a, L);
    CHECK(z.walls == 2);
    CHECK(z.members.size() == 4);
    CHECK(z.flat_of_mask[0] == L.bottom);
    CHECK(z.flat_of_mask[3] == L.top);
    for (unsigned s = 0; s < 4; ++s)
        for (unsigned t = 0; t < 4; ++t)
            CHECK(L.poset.leq(z.flat_of_mask[s], z.flat_of_mask[t]) ==
                  ((s & t) == s));
}

TEST_CASE("geometric cycles certify the same basis as the splitting cycles") {
    for (auto [f, n] : std::vector<std::pair<Family, int>>{
             {Family::A, 4}, {Family::B, 2}, {Family::D, 3}}) {
        GeometricBasisReport r = verify_geometric_basis(f, n, {});
        CHECK(r.pass);
        CHECK((r.certificate_det == 1 || r.certificate_det == -1));
        CHECK(r.cycle_count == r.homology_rank);
        for (const CheckRow& c : r.checks) CHECK(c.pass);
    }
    GeometricBasisReport db = verify_geometric_basis(Family::DB, 3, {1, 2});
    CHECK(db.pass);
    CHECK(db.bounded_count == 12);

    CHECK_THROWS_AS(verify_geometric_basis(Family::AT, 4, {1}), ParameterError);
    CHECK_THROWS_AS(verify_geometric_basis(Family::B, 2, {}, rat_vec({1, 1})),
                    GenericityViolatedError);
}
