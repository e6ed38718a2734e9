#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "gspin/linalg.hpp"
#include "gspin/scalar.hpp"
#include "oracles.hpp"

using namespace gspin;

namespace {

std::vector<AlgebraElement> random_family(LabelSpaceRef space, int count, int terms,
                                          std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<AlgebraElement> out;
    for (int i = 0; i < count; ++i) {
        AlgebraElement v(space);
        for (int k = 0; k < terms; ++k) {
            auto c = Scalar::rational(static_cast<long>(rng() % 21) - 10,
                                      1 + static_cast<long>(rng() % 9)) +
                     Scalar::i() * Scalar::rational(static_cast<long>(rng() % 11) - 5, 3);
            v.add_term(rng() % space->dim(), c);
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

TEST_CASE("scalar arithmetic is exact") {
    auto a = Scalar::rational(1, 3) + Scalar::rational(1, 6);
    CHECK(a == Scalar::rational(1, 2));
    auto z = Scalar::rational(3, 4) + Scalar::i() * Scalar::rational(-2, 5);
    CHECK(z * z.conj() == Scalar::rational(9 * 25 + 4 * 16, 400));
    CHECK((z / z) == Scalar(1));
    CHECK_THROWS_AS(z / Scalar(0), std::domain_error);
    // 1/3 stays 1/3 under repeated add/sub, no drift
    Scalar third = Scalar::rational(1, 3);
    Scalar acc(0);
    for (int i = 0; i < 3000; ++i) acc += third;
    CHECK(acc == Scalar(1000));
    CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2)); // canonical form
}

TEST_CASE("elements collapse duplicate labels and drop zeros") {
    auto s = make_space("t", 8);
    AlgebraElement v(s);
    v.add_term(3, Scalar::rational(1, 2));
    v.add_term(3, Scalar::rational(1, 2));
    v.add_term(5, Scalar(1));
    v.add_term(5, Scalar(-1));
    CHECK(v.term_count() == 1);
    CHECK(v.coeff(3) == Scalar(1));
    CHECK(v.coeff(5) == Scalar(0));
    auto w = AlgebraElement::basis(s, 3);
    CHECK(v == w);
    CHECK((v - w).is_zero());
    auto other = AlgebraElement::basis(make_space("u", 8), 0);
    CHECK_THROWS_AS(v += other, std::invalid_argument);
}

TEST_CASE("span rank matches dense elimination") {
    auto s = make_space("t", 40);
    for (std::uint64_t seed : {1u, 2u, 77u}) {
        auto fam = random_family(s, 25, 6, seed);
        CHECK(span_rank(fam) == oracle::dense_rank_of(fam));
    }
}

TEST_CASE("rank is invariant under scaling, permutation and row mixing") {
    auto s = make_space("t", 30);
    auto fam = random_family(s, 12, 5, 5);
    auto base = span_rank(fam);
    CHECK(base == oracle::dense_rank_of(fam));

    auto scaled = fam;
    for (auto& v : scaled) v = v.scaled(Scalar::rational(-7, 3));
    CHECK(span_rank(scaled) == base);

    auto shuffled = fam;
    std::reverse(shuffled.begin(), shuffled.end());
    CHECK(span_rank(shuffled) == base);

    auto mixed = fam;
    mixed.push_back(fam[0] + fam[1].scaled(Scalar::i()));
    CHECK(span_rank(mixed) == base);

    // a direction missing from every family vector must raise the rank
    auto big = make_space("t2", 200);
    auto sparse = random_family(big, 10, 4, 6);
    Label missing = 0;
    for (Label l = 0; l < big->dim(); ++l) {
        bool hit = false;
        for (const auto& v : sparse) hit = hit || !v.coeff(l).is_zero();
        if (!hit) { missing = l; break; }
    }
    auto grown = sparse;
    grown.push_back(AlgebraElement::basis(big, missing));
    CHECK(span_rank(grown) == span_rank(sparse) + 1);
}

TEST_CASE("span basis reduces, solves and detects membership") {
    auto s = make_space("t", 6);
    SpanBasis basis(s, {.parallel = false, .track_combos = true});
    auto e0 = AlgebraElement::basis(s, 0);
    auto e1 = AlgebraElement::basis(s, 1);
    auto v01 = e0 + e1.scaled(Scalar(2));
    CHECK(basis.insert(v01));
    CHECK(basis.insert(e0));
    CHECK_FALSE(basis.insert(e1)); // dependent on the first two
    CHECK(basis.rank() == 2);
    CHECK(basis.contains(e1));
    CHECK_FALSE(basis.contains(AlgebraElement::basis(s, 2)));

    auto target = e0.scaled(Scalar::rational(1, 3)) + e1.scaled(Scalar(4));
    auto combo = basis.solve(target);
    REQUIRE(combo.has_value());
    // recombine over the inserted vectors
    AlgebraElement rebuilt(s);
    std::vector<AlgebraElement> inserted{v01, e0, e1};
    for (std::size_t i = 0; i < combo->size(); ++i) rebuilt += inserted[i].scaled((*combo)[i]);
    CHECK(rebuilt == target);
    CHECK_FALSE(basis.solve(AlgebraElement::basis(s, 4)).has_value());
}

TEST_CASE("in_span returns exact coefficients") {
    auto s = make_space("t", 10);
    auto fam = random_family(s, 6, 4, 9);
    AlgebraElement target(s);
    std::vector<Scalar> expect;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        auto c = Scalar::rational(static_cast<long>(i) + 1, 7);
        expect.push_back(c);
        target += fam[i].scaled(c);
    }
    auto got = in_span(target, fam);
    REQUIRE(got.has_value());
    AlgebraElement rebuilt(s);
    for (std::size_t i = 0; i < got->size(); ++i) rebuilt += fam[i].scaled((*got)[i]);
    CHECK(rebuilt == target);

    auto e9 = AlgebraElement::basis(s, 9);
    auto fam_plus = fam;
    fam_plus.push_back(e9);
    bool outside = oracle::dense_rank_of(fam_plus) > oracle::dense_rank_of(fam);
    CHECK(in_span(e9, fam).has_value() == !outside);
}

TEST_CASE("parallel and serial elimination agree row by row") {
    auto s = make_space("t", 64);
    auto fam = random_family(s, 40, 8, 123);
    SpanBasis serial(s, {.parallel = false});
    SpanBasis parallel(s, {.parallel = true});
    for (const auto& v : fam) {
        bool a = serial.insert(v);
        bool b = parallel.insert(v);
        CHECK(a == b);
    }
    REQUIRE(serial.rank() == parallel.rank());
    for (std::size_t i = 0; i < serial.rows().size(); ++i)
        CHECK(serial.rows()[i] == parallel.rows()[i]);
}
