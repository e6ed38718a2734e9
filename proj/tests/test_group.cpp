#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "gspin/errors.hpp"
#include "gspin/group.hpp"
#include "oracles.hpp"

using namespace gspin;

namespace {

std::vector<std::vector<Elem>> full_table(const FiniteGroup& g) {
    std::vector<std::vector<Elem>> t(g.order(), std::vector<Elem>(g.order()));
    for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b) t[a][b] = g.mul(a, b);
    return t;
}

} // namespace

TEST_CASE("symmetric group on three letters matches the permutation oracle") {
    auto g = symmetric_group(3);
    REQUIRE(g.order() == 6);
    CHECK(g.identity() == 0);
    CHECK(g.name(1) == "(12)");
    CHECK(g.name(4) == "(123)");
    for (Elem a = 0; a < 6; ++a)
        for (Elem b = 0; b < 6; ++b) CHECK(g.mul(a, b) == oracle::s3_mul(a, b));
    CHECK(g.mul(4, 1) == 2); // (123)(12) = (13), right factor applied first
    CHECK(g.conj(1, 5) == 4); // (12)^{-1} (132) (12) = (123)
    CHECK_FALSE(g.is_abelian());
}

TEST_CASE("quaternion group matches the sign-table oracle") {
    auto q = quaternion_group();
    REQUIRE(q.order() == 8);
    for (Elem a = 0; a < 8; ++a)
        for (Elem b = 0; b < 8; ++b) CHECK(q.mul(a, b) == oracle::quat_mul(a, b));
    CHECK(q.name(2) == "i");
    CHECK(q.name(5) == "-j");
    CHECK(q.conj(4, 2) == 3); // j^{-1} i j = -i
}

TEST_CASE("cyclic and dihedral groups have the expected structure") {
    auto z4 = cyclic_group(4);
    CHECK(z4.is_abelian());
    CHECK(z4.mul(3, 2) == 1);
    CHECK(z4.inv(3) == 1);

    auto d4 = dihedral_group(4);
    REQUIRE(d4.order() == 8);
    CHECK_FALSE(d4.is_abelian());
    // center = {e, r^2}
    for (Elem a = 0; a < 8; ++a) {
        bool central = true;
        for (Elem b = 0; b < 8; ++b) central = central && d4.mul(a, b) == d4.mul(b, a);
        CHECK(central == (a == 0 || a == 2));
    }
}

TEST_CASE("group construction rejects broken tables") {
    // last row maps everything to 0: not a Latin square
    std::vector<std::vector<Elem>> bad = {{0, 1}, {0, 0}};
    CHECK_THROWS_AS(FiniteGroup::from_table(bad), ValidationError);
    // associative magma with identity but no inverse closure cannot exist on
    // a Latin square, so also try a non-associative Latin square (order 5
    // quasigroup: subtraction mod 5)
    std::vector<std::vector<Elem>> sub(5, std::vector<Elem>(5));
    for (Elem a = 0; a < 5; ++a)
        for (Elem b = 0; b < 5; ++b) sub[a][b] = ((a - b) % 5 + 5) % 5;
    CHECK_THROWS_AS(FiniteGroup::from_table(sub), ValidationError);
}

TEST_CASE("group specs parse and enforce the order cap") {
    CHECK(parse_group_spec("cyclic:6").order() == 6);
    CHECK(parse_group_spec("dihedral:3").order() == 6);
    CHECK(parse_group_spec("symmetric:4").order() == 24);
    CHECK(parse_group_spec("quaternion").order() == 8);
    CHECK_THROWS_AS(parse_group_spec("symmetric:5"), ResourceCapError);
    CHECK(parse_group_spec("symmetric:5", 200).order() == 120);
    CHECK_THROWS_AS(parse_group_spec("nonsense:3"), ConfigError);
    CHECK_THROWS_AS(parse_group_spec("cyclic:0"), ConfigError);
}

TEST_CASE("cayley files round-trip through the reader") {
    auto z3 = cyclic_group(3);
    std::string path = "oracle_z3_table.txt";
    {
        std::ofstream out(path);
        out << "3\n";
        for (Elem a = 0; a < 3; ++a) {
            for (Elem b = 0; b < 3; ++b) out << z3.mul(a, b) << (b == 2 ? '\n' : ' ');
        }
        out << "e g gg\n";
    }
    auto g = read_cayley_file(path);
    CHECK(g.order() == 3);
    CHECK(g.name(1) == "g");
    for (Elem a = 0; a < 3; ++a)
        for (Elem b = 0; b < 3; ++b) CHECK(g.mul(a, b) == z3.mul(a, b));
    CHECK_THROWS_AS(read_cayley_file("no_such_file.txt"), ConfigError);
    std::remove(path.c_str());
}

TEST_CASE("subgroup closure and normality agree with brute force") {
    auto g = symmetric_group(3);
    auto table = full_table(g);

    Subgroup a3(g, {4});
    CHECK(a3.members() == oracle::closure(table, {4}));
    CHECK(a3.members() == std::vector<Elem>{0, 4, 5});
    CHECK(a3.normal());
    CHECK(a3.normal() == oracle::is_normal(table, a3.members()));
    CHECK(a3.index_of(5) == 2);
    CHECK(a3.index_of(1) == -1);

    Subgroup flip(g, {1});
    CHECK(flip.members() == std::vector<Elem>{0, 1});
    CHECK_FALSE(flip.normal());
    CHECK(flip.normal() == oracle::is_normal(table, flip.members()));
    auto w = flip.normality_witness();
    REQUIRE(w.has_value());
    CHECK(flip.contains(w->second));
    CHECK_FALSE(flip.contains(g.conj(w->first, w->second)));

    CHECK(Subgroup::whole(g).order() == 6);
    CHECK(Subgroup::trivial(g).members() == std::vector<Elem>{0});

    // every singleton generator, against brute force
    for (Elem x = 0; x < g.order(); ++x) {
        Subgroup s(g, {x});
        CHECK(s.members() == oracle::closure(table, {x}));
        CHECK(s.normal() == oracle::is_normal(table, s.members()));
    }
}

TEST_CASE("quaternion subgroups are all normal") {
    auto q = quaternion_group();
    auto table = full_table(q);
    for (Elem x = 0; x < 8; ++x) {
        Subgroup s(q, {x});
        CHECK(s.normal());
        CHECK(oracle::is_normal(table, s.members()));
    }
    Subgroup center(q, {1});
    CHECK(center.members() == std::vector<Elem>{0, 1});
}

TEST_CASE("subgroup specs parse element lists") {
    auto g = symmetric_group(3);
    CHECK(parse_subgroup_spec(g, "all").order() == 6);
    CHECK(parse_subgroup_spec(g, "e").order() == 1);
    CHECK(parse_subgroup_spec(g, "").order() == 1);
    CHECK(parse_subgroup_spec(g, "4").members() == std::vector<Elem>{0, 4, 5});
    CHECK(parse_subgroup_spec(g, "1,2").order() == 6); // two transpositions generate everything
    CHECK_THROWS_AS(parse_subgroup_spec(g, "9"), ConfigError);
    CHECK_THROWS_AS(parse_subgroup_spec(g, "x"), ConfigError);
}
