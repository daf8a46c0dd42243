#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lathom/partitions.hpp"

using namespace lathom;

TEST_CASE("set partition parsing and canonical form") {
    SetPartition p = SetPartition::from_string("2 | 1 3");
    CHECK(p.to_string() == "1 3 | 2");
    CHECK(p.n() == 3);
    CHECK(p.block_count() == 2);
    CHECK(SetPartition::from_string(p.to_string()) == p);

    SetPartition q = SetPartition::from_blocks({{3, 1}, {2}});
    CHECK(q == p);

    CHECK_THROWS_AS(SetPartition::from_blocks({{1, 2}, {2, 3}}), ParameterError);
    CHECK_THROWS_AS(SetPartition::from_blocks({{1}, {3}}), ParameterError);
}

TEST_CASE("refinement order") {
    SetPartition fine = SetPartition::from_string("1 | 2 | 3 4");
    SetPartition coarse = SetPartition::from_string("1 2 | 3 4");
    SetPartition other = SetPartition::from_string("1 3 | 2 | 4");
    CHECK(refines(fine, coarse));
    CHECK_FALSE(refines(coarse, fine));
    CHECK_FALSE(refines(fine, other));
    CHECK(refines(fine, fine));
}

TEST_CASE("partition counts follow the Bell numbers") {
    int bell[] = {1, 1, 2, 5, 15, 52};
    for (int n = 1; n <= 5; ++n)
        CHECK(static_cast<int>(all_partitions(n).size()) == bell[n]);
}

TEST_CASE("signed block canonicalization") {
    SignedBlock b = {{3, -1}, {5, 1}};
    SignedBlock c = canonicalize_block(b);
    // least value must end up unbarred, so the whole block flips
    REQUIRE(c.size() == 2);
    CHECK(c[0].value == 3);
    CHECK(c[0].sign == 1);
    CHECK(c[1].value == 5);
    CHECK(c[1].sign == -1);
    CHECK(canonicalize_block(bar_block(c)) == c);
    CHECK(unbar_block(c)[1].sign == 1);
}

TEST_CASE("signed partition parsing round trip") {
    SignedPartition p = SignedPartition::from_string("0 3 5 | 1 6' 8' | 2 4' 7");
    CHECK(p.n() == 8);
    CHECK(p.zero_block == std::vector<int>{0, 3, 5});
    CHECK(p.to_string() == "0 3 5 | 1 6' 8' | 2 4' 7");
    CHECK(SignedPartition::from_string(p.to_string()) == p);

    CHECK(SignedPartition::all_zero(3).to_string() == "0 1 2 3");
    CHECK(SignedPartition::discrete(2).to_string() == "0 | 1 | 2");

    // blocks arriving barred-first are re-canonicalized
    SignedPartition q = SignedPartition::from_string("0 | 1' 2");
    CHECK(q.to_string() == "0 | 1 2'");
}

TEST_CASE("signed partition order relation") {
    SignedPartition bot = SignedPartition::discrete(2);
    SignedPartition join = SignedPartition::from_string("0 | 1 2");
    SignedPartition anti = SignedPartition::from_string("0 | 1 2'");
    SignedPartition top = SignedPartition::all_zero(2);
    CHECK(leq_signed(bot, join));
    CHECK(leq_signed(bot, anti));
    CHECK(leq_signed(join, top));
    CHECK(leq_signed(anti, top));
    CHECK_FALSE(leq_signed(join, anti));
    CHECK_FALSE(leq_signed(top, join));
    // a signed block may land inside the zero block of a coarser element
    SignedPartition half = SignedPartition::from_string("0 1 | 2");
    CHECK(leq_signed(bot, half));
    CHECK(leq_signed(half, top));
    CHECK_FALSE(leq_signed(join, half));
}

TEST_CASE("signed partition counts") {
    CHECK(all_signed_partitions(1).size() == 2);
    CHECK(all_signed_partitions(2).size() == 6);
    CHECK(all_signed_partitions(3).size() == 24);
    CHECK(all_signed_partitions(4).size() == 116);
}

TEST_CASE("lattice builders match the frozen counts") {
    CHECK(build_Pi(4).poset().size() == 15);
    CHECK(build_Pi(4).moebius_top() == -6);
    CHECK(build_PiB(2).poset().size() == 6);
    CHECK(build_PiB(3).poset().size() == 24);
    CHECK(build_PiB(3).moebius_top() == -15);  // (-1)^n (2n-1)!!
    CHECK(build_PiD(4).poset().size() == 72);
    CHECK(build_PiD(4).moebius_top() == 45);  // (2n-3)!!(n-1)

    // interpolation endpoints: empty T gives D, full T gives B
    CHECK(build_PiDB(3, {}).poset().size() == build_PiD(3).poset().size());
    CHECK(build_PiDB(3, {1, 2, 3}).poset().size() == build_PiB(3).poset().size());
    // and it is monotone in T
    CHECK(build_PiDB(3, {1}).poset().size() == 18);
    CHECK(build_PiDB(3, {1, 2}).poset().size() == 21);
}

TEST_CASE("zero block rules of the interpolating lattice") {
    // {0, a} appears iff a is tagged
    auto has = [](const BoundedPoset& L, const std::string& lbl) {
        return L.poset().index_of(lbl) >= 0;
    };
    BoundedPoset L = build_PiDB(3, {2});
    CHECK(has(L, "0 2 | 1 | 3"));
    CHECK_FALSE(has(L, "0 1 | 2 | 3"));
    CHECK_FALSE(has(L, "0 3 | 1 | 2"));
    CHECK(has(L, "0 1 3 | 2"));  // size-three zero blocks are unrestricted

    BoundedPoset D = build_PiD(3);
    CHECK_FALSE(has(D, "0 2 | 1 | 3"));
    CHECK(has(D, "0 1 2 | 3"));
}

TEST_CASE("restricted partition lattice for tagged ground sets") {
    // block of n must be a singleton or meet T
    BoundedPoset L = build_PiAT(4, {1});
    CHECK(L.poset().index_of("1 4 | 2 | 3") >= 0);
    CHECK(L.poset().index_of("1 | 2 4 | 3") == -1);
    CHECK(L.poset().index_of("1 | 2 | 3 | 4") >= 0);
    CHECK(L.poset().index_of("1 2 3 4") >= 0);
    CHECK_THROWS_AS(build_PiAT(4, {}), ParameterError);
    CHECK_THROWS_AS(build_PiAT(4, {4}), ParameterError);

    // full T restores the whole partition lattice
    CHECK(build_PiAT(4, {1, 2, 3}).poset().size() == build_Pi(4).poset().size());
}

TEST_CASE("family dispatch and validation") {
    CHECK(family_name(Family::DB) == "DB");
    CHECK(family_from_name("AT") == Family::AT);
    CHECK_THROWS_AS(family_from_name("Z"), ParameterError);

    CHECK(build_family_lattice(Family::A, 3).poset().size() == 5);
    CHECK_THROWS_AS(build_family_lattice(Family::A, 3, {1}), ParameterError);
    CHECK_THROWS_AS(build_family_lattice(Family::B, 3, {1}), ParameterError);
    // degenerate sizes still build as lattices; only the cycle layer
    // rejects them (it would have nothing to certify)
    CHECK(build_family_lattice(Family::A, 2).poset().size() == 2);
    CHECK(build_family_lattice(Family::B, 1).poset().size() == 2);
    // DB with empty T is the type D endpoint, not an error
    CHECK(build_family_lattice(Family::DB, 3).poset().size() ==
          build_PiD(3).poset().size());
}

TEST_CASE("relabeling acts on partitions") {
    SetPartition p = SetPartition::from_string("1 2 | 3");
    // sigma = (1 3): 1->3, 2->2, 3->1
    SetPartition q = p.relabeled({3, 2, 1});
    CHECK(q.to_string() == "1 | 2 3");

    SignedPartition s = SignedPartition::from_string("0 1 | 2 3'");
    SignedPartition t = s.relabeled({2, 1, 3});
    CHECK(t.to_string() == "0 2 | 1 3'");
}

TEST_CASE("fixed subspaces of partitions") {
    // type A: "1 2 | 3" in the sum-zero space of Q^3 is a line
    FlatSubspace fa =
        partition_to_subspace(SetPartition::from_string("1 2 | 3"), 3, Family::A);
    CHECK(fa.ambient == 3);
    CHECK(fa.dim() == 1);
    CHECK(fa.central());
    FlatSubspace ftop =
        partition_to_subspace(SetPartition::from_string("1 2 3"), 3, Family::A);
    CHECK(ftop.dim() == 0);

    // type B: "0 | 1 2'" forces x1 = -x2
    FlatSubspace fb = partition_to_subspace(
        SignedPartition::from_string("0 | 1 2'"), Family::B);
    CHECK(fb.ambient == 2);
    CHECK(fb.dim() == 1);
    std::vector<Rat> pt = {Rat(1), Rat(-1)};
    for (int i = 0; i < fb.coeff.rows(); ++i)
        CHECK(dot(fb.coeff.row(i), pt) == fb.rhs[i]);

    // the zero block pins coordinates to zero
    FlatSubspace fz = partition_to_subspace(
        SignedPartition::from_string("0 1 | 2"), Family::B);
    CHECK(fz.dim() == 1);
    FlatSubspace forigin = partition_to_subspace(
        SignedPartition::all_zero(2), Family::B);
    CHECK(forigin.dim() == 0);
}
