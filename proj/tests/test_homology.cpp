#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lathom/homology.hpp"
#include "lathom/partitions.hpp"

using namespace lathom;

namespace {

SimplicialComplex sphere2() {
    // boundary of the tetrahedron on vertices 0..3
    return SimplicialComplex({"0", "1", "2", "3"},
                             {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialComplex projective_plane() {
    // the 6-vertex triangulation: closed, non-orientable, Euler char 1
    return SimplicialComplex({"1", "2", "3", "4", "5", "6"},
                             {{0, 1, 2}, {0, 2, 3}, {0, 1, 5}, {0, 3, 4},
                              {0, 4, 5}, {1, 2, 4}, {1, 3, 4}, {1, 3, 5},
                              {2, 3, 5}, {2, 4, 5}});
}

}  // namespace

TEST_CASE("boundary of a boundary is zero") {
    for (const SimplicialComplex& c :
         {sphere2(), projective_plane(),
          LatticeComplex::build(build_Pi(4)).complex}) {
        for (int k = 1; k <= c.dim(); ++k) {
            IntMatrix dk = boundary_matrix(c, k);
            IntMatrix dk1 = boundary_matrix(c, k - 1, true);
            // compose: rows of dk1 x cols of dk
            for (int i = 0; i < dk1.rows(); ++i)
                for (int j = 0; j < dk.cols(); ++j) {
                    Int s = 0;
                    for (int m = 0; m < dk.rows(); ++m)
                        s += dk1.at(i, m) * dk.at(m, j);
                    CHECK(s == 0);
                }
        }
    }
}

TEST_CASE("betti numbers of small spaces") {
    SimplicialComplex pt({"p"}, {{0}});
    CHECK(reduced_betti(pt, 0).rank == 0);

    SimplicialComplex two({"p", "q"}, {{0}, {1}});
    CHECK(reduced_betti(two, 0).rank == 1);

    SimplicialComplex s2 = sphere2();
    CHECK(reduced_betti(s2, 0).rank == 0);
    CHECK(reduced_betti(s2, 1).rank == 0);
    CHECK(reduced_betti(s2, 2).rank == 1);
    CHECK(reduced_betti(s2, 2).torsion.empty());
}

TEST_CASE("projective plane has 2-torsion in degree one") {
    SimplicialComplex rp2 = projective_plane();
    CHECK(rp2.pure());
    CHECK(reduced_betti(rp2, 0).rank == 0);
    BettiNumbers h1 = reduced_betti(rp2, 1);
    CHECK(h1.rank == 0);
    CHECK(h1.torsion == std::vector<Int>{2});
    CHECK(reduced_betti(rp2, 2).rank == 0);
    // and therefore no fundamental cycle exists on top
    CHECK_THROWS_AS(fundamental_cycle_top(rp2), RankNotOneError);
}

TEST_CASE("fundamental cycle of the 2-sphere") {
    SimplicialComplex s2 = sphere2();
    ChainVector z = fundamental_cycle_top(s2);
    CHECK(z.dim() == 2);
    CHECK(z.support_size() == 4);
    for (const auto& [face, coeff] : z.terms())
        CHECK((coeff == 1 || coeff == -1));
    CHECK(z.boundary().is_zero());
}

TEST_CASE("chain vector orientation sign rules") {
    ChainVector v(1);
    v.add_oriented({2, 0}, Int(1));   // odd permutation of (0,2)
    CHECK(v.coefficient({0, 2}) == -1);
    v.add_oriented({0, 2}, Int(1));   // cancels
    CHECK(v.is_zero());
    CHECK_THROWS(v.add_oriented({1, 1}, Int(1)));

    ChainVector w(1);
    w.add_oriented({0, 1}, Int(6));
    w.add_oriented({1, 2}, Int(-4));
    w.make_primitive();
    CHECK(w.coefficient({0, 1}) == 3);
    CHECK(w.coefficient({1, 2}) == -2);
    int sign = w.normalize_sign();
    CHECK(sign == 1);
    w.negate();
    CHECK(w.normalize_sign() == -1);
    CHECK(w.coefficient({0, 1}) == 3);
}

TEST_CASE("top cycle basis of a wedge-like 1-complex") {
    // two triangles sharing an edge: cycle space of the 1-skeleton has rank 2
    SimplicialComplex c({"0", "1", "2", "3"},
                        {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}});
    auto basis = top_cycle_basis(c);
    REQUIRE(basis.size() == 2);
    for (const auto& z : basis) CHECK(z.boundary().is_zero());
    CHECK(reduced_betti(c, 1).rank == 2);
}

TEST_CASE("boolean structure discovery") {
    Poset b3 = Poset::boolean_lattice(3);
    std::vector<int> all(b3.size());
    for (int i = 0; i < b3.size(); ++i) all[i] = i;
    BooleanStructure bs = discover_boolean(b3, all);
    CHECK(bs.m == 3);
    REQUIRE(bs.element_of_mask.size() == 8);
    // masks embed the order
    for (unsigned s = 0; s < 8; ++s)
        for (unsigned t = 0; t < 8; ++t)
            CHECK(b3.leq(bs.element_of_mask[s], bs.element_of_mask[t]) ==
                  ((s & t) == s));

    Poset c = Poset::chain(3);
    std::vector<int> mem = {0, 1, 2};
    CHECK_THROWS_AS(discover_boolean(c, mem), NotBooleanError);
}

TEST_CASE("boolean cycle formula on the hexagon") {
    // the proper part of the cube is a hexagon; the alternating sum over the
    // 3! atom orders is its fundamental cycle
    Poset b3 = Poset::boolean_lattice(3);
    BoundedPoset bb = BoundedPoset::wrap(b3);
    LatticeComplex lc = LatticeComplex::build(bb);
    std::vector<int> all(b3.size());
    for (int i = 0; i < b3.size(); ++i) all[i] = i;
    ChainVector z =
        boolean_cycle_formula(b3, all, lc.lattice_to_proper, lc.complex);
    CHECK(z.dim() == 1);
    CHECK(z.support_size() == 6);  // hexagon: all 3! chains of the proper part
    CHECK(z.boundary().is_zero());
    for (const auto& [face, coeff] : z.terms())
        CHECK((coeff == 1 || coeff == -1));
}

TEST_CASE("basis certificates on the proper part of a cube") {
    LatticeComplex lc = LatticeComplex::build(BoundedPoset::wrap(Poset::boolean_lattice(3)));
    const SimplicialComplex& c = lc.complex;
    REQUIRE(reduced_betti(c, c.dim()).rank == 1);

    ChainVector z = fundamental_cycle_top(c);
    std::vector<ChainVector> cycles = {z};
    auto facets = choose_certificate_facets(cycles, c);
    REQUIRE(facets.size() == 1);
    CertificateOutcome out = verify_basis_certificate(cycles, facets, c);
    CHECK(out.pass);
    CHECK((out.det == 1 || out.det == -1));
    CHECK(verify_unimodular_spanning(cycles, c));

    // doubling the cycle is not a basis: certificate determinant becomes 2
    ChainVector dbl = z;
    ChainVector z2 = z;
    for (const auto& [face, coeff] : z.terms()) dbl.add_oriented(face, coeff);
    CertificateOutcome bad = verify_basis_certificate({dbl}, facets, c);
    CHECK_FALSE(bad.pass);
    CHECK(verify_unimodular_spanning({z2}, c));
    CHECK_FALSE(verify_unimodular_spanning({dbl}, c));
}

TEST_CASE("certificate input validation") {
    SimplicialComplex s2 = sphere2();
    ChainVector z = fundamental_cycle_top(s2);
    // not a cycle: a single simplex with boundary
    ChainVector notc(2);
    notc.add_oriented({0, 1, 2}, Int(1));
    CHECK_THROWS_AS(verify_basis_certificate({notc}, {{0, 1, 2}}, s2),
                    NotACycleError);
    // facet count mismatch
    CHECK_THROWS_AS(verify_basis_certificate({z}, {}, s2), SizeMismatchError);
    // dependent cycles can never certify
    CHECK_THROWS_AS(choose_certificate_facets({z, z}, s2), SizeMismatchError);
}

TEST_CASE("lattice complex bookkeeping") {
    LatticeComplex lc = LatticeComplex::build(build_Pi(4));
    CHECK(lc.lattice.poset().size() == 15);
    CHECK(lc.proper.size() == 13);
    CHECK(lc.complex.facet_list().size() == 18);
    for (int i = 0; i < lc.proper.size(); ++i) {
        CHECK(lc.proper_to_lattice[i] >= 0);
        CHECK(lc.lattice_to_proper[lc.proper_to_lattice[i]] == i);
        CHECK(lc.complex.vertex_labels()[i] == lc.proper.label(i));
    }
    CHECK(lc.lattice_to_proper[lc.lattice.bottom()] == -1);
    CHECK(lc.lattice_to_proper[lc.lattice.top()] == -1);
}
