#include <doctest.h>

#include <stdexcept>

#include "gspin/quantum_double.hpp"
#include "gspin/twist.hpp"

using namespace gspin;

namespace {

struct Chain {
    FiniteGroup g = symmetric_group(3);
    Subgroup h{g, {4}}; // alternating subgroup {e,(123),(132)}
};

} // namespace

TEST_CASE("standard neighbor twists move letters with the crossed rules") {
    Chain c;
    // lower factor 0 is CH, upper factor 1 is functions on G:
    // delta_g crosses h to the right as h (x) delta_{h^-1 g}
    auto r01 = standard_twist(c.g, c.h, 0, 1);
    auto ix01 = r01.target_indexer();
    for (int hp = 0; hp < 3; ++hp) {
        for (Elem x = 0; x < 6; ++x) {
            auto out = r01.apply(x, hp); // upper label delta_x, lower label h
            REQUIRE(out.term_count() == 1);
            Elem moved = c.g.mul(c.g.inv(c.h.member(hp)), x);
            CHECK(out.coeff(ix01.make(hp, moved)) == Scalar(1));
        }
    }
    // lower factor 1 is functions, upper factor 2 is CH:
    // h crosses delta_g to the right as delta_{g h^-1} (x) h
    auto r12 = standard_twist(c.g, c.h, 1, 2);
    auto ix12 = r12.target_indexer();
    for (int hp = 0; hp < 3; ++hp) {
        for (Elem x = 0; x < 6; ++x) {
            auto out = r12.apply(hp, x);
            REQUIRE(out.term_count() == 1);
            Elem moved = c.g.mul(x, c.g.inv(c.h.member(hp)));
            CHECK(out.coeff(ix12.make(moved, hp)) == Scalar(1));
        }
    }
    // distance two: plain flip
    auto r02 = standard_twist(c.g, c.h, 0, 2);
    auto ix02 = r02.target_indexer();
    auto out = r02.apply(2, 1);
    CHECK(out == AlgebraElement::basis(r02.target_space(), ix02.make(1, 2)));
    CHECK_THROWS_AS(standard_twist(c.g, c.h, 1, 1), std::invalid_argument);
}

TEST_CASE("standard twists satisfy the product and unit compatibility conditions") {
    Chain c;
    for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {0, 2}, {1, 3}, {-1, 0}, {-2, 3}}) {
        auto rep = verify_twisting_map(standard_twist(c.g, c.h, i, j));
        CHECK(rep.pass());
    }
}

TEST_CASE("neighbor triples satisfy the hexagon identity") {
    Chain c;
    for (auto [i, j, k] : {std::tuple{0, 1, 2}, {1, 2, 3}, {0, 1, 3}, {0, 2, 3}, {-1, 0, 1}}) {
        auto rep = verify_hexagon(standard_twist(c.g, c.h, i, j), standard_twist(c.g, c.h, j, k),
                                  standard_twist(c.g, c.h, i, k));
        CHECK(rep.pass());
        CHECK(rep.find("hexagon") != nullptr);
    }
}

TEST_CASE("three-factor window multiplies by the hand-derived closed form") {
    Chain c;
    auto A = IteratedAlgebra::build(c.g, c.h, 0, 2);
    REQUIRE(A.dim() == 54);
    CHECK(A.factors() == 3);
    CHECK(A.lo() == 0);
    CHECK(A.hi() == 2);

    // digit layout is big-endian (factor 0 most significant)
    Label l = A.label_from_digits({2, 3, 1});
    CHECK(A.digits(l) == std::vector<int>{2, 3, 1});
    CHECK(l == 2 * 18 + 3 * 3 + 1);

    // (h1 (x) delta_g1 (x) f1)(h2 (x) delta_g2 (x) f2) is nonzero exactly when
    // h2^-1 g1 = g2 f1^-1, and then equals h1 h2 (x) delta_{h2^-1 g1} (x) f1 f2
    for (Label a = 0; a < 54; ++a) {
        auto da = A.digits(a);
        for (Label b = 0; b < 54; ++b) {
            auto db = A.digits(b);
            Elem h1 = c.h.member(da[0]), g1 = da[1], f1 = c.h.member(da[2]);
            Elem h2 = c.h.member(db[0]), g2 = db[1], f2 = c.h.member(db[2]);
            Elem lhs = c.g.mul(c.g.inv(h2), g1);
            Elem rhs = c.g.mul(g2, c.g.inv(f1));
            auto p = A.algebra().mul_basis(a, b);
            if (lhs == rhs) {
                Label expect = A.label_from_digits({c.h.index_of(c.g.mul(h1, h2)), lhs,
                                                    c.h.index_of(c.g.mul(f1, f2))});
                REQUIRE(p.term_count() == 1);
                CHECK(p.coeff(expect) == Scalar(1));
            } else {
                CHECK(p.is_zero());
            }
        }
    }
}

TEST_CASE("three-factor star matches the reversed-word computation") {
    Chain c;
    auto A02 = IteratedAlgebra::build(c.g, c.h, 0, 2);
    for (Label a = 0; a < A02.dim(); ++a) {
        auto d = A02.digits(a);
        Elem h1 = c.h.member(d[0]), g = d[1], h2 = c.h.member(d[2]);
        // (h1 (x) delta_g (x) h2)* = h1^-1 (x) delta_{h1 g h2} (x) h2^-1
        Label expect = A02.label_from_digits({c.h.index_of(c.g.inv(h1)),
                                              c.g.mul(c.g.mul(h1, g), h2),
                                              c.h.index_of(c.g.inv(h2))});
        CHECK(A02.algebra().star_basis(a) == AlgebraElement::basis(A02.space(), expect));
    }

    auto A13 = IteratedAlgebra::build(c.g, c.h, 1, 3);
    REQUIRE(A13.dim() == 108);
    for (Label a = 0; a < A13.dim(); ++a) {
        auto d = A13.digits(a);
        Elem g = d[0], h = c.h.member(d[1]), s = d[2];
        // (delta_g (x) h (x) delta_s)* = delta_{gh} (x) h^-1 (x) delta_{hs}
        Label expect = A13.label_from_digits({c.g.mul(g, h), c.h.index_of(c.g.inv(h)),
                                              c.g.mul(h, s)});
        CHECK(A13.algebra().star_basis(a) == AlgebraElement::basis(A13.space(), expect));
    }
}

TEST_CASE("window algebras are star algebras and bracketing order does not matter") {
    Chain c;
    auto A = IteratedAlgebra::build(c.g, c.h, 1, 3);
    CHECK(verify_star_algebra(A.algebra()).pass());
    for (Label a = 0; a < A.dim(); a += 7) {
        for (Label b = 0; b < A.dim(); b += 5) {
            CHECK(A.mul_ordered(a, b, BubbleOrder::rightmost) ==
                  A.mul_ordered(a, b, BubbleOrder::leftmost));
        }
    }
}

TEST_CASE("twist built from the conjugation module recovers the double") {
    Chain c;
    auto funcs = dual_subgroup_algebra(c.g, c.h);
    auto hopf = group_hopf(c.g);
    ModuleAction conj_action(hopf, funcs, [&](Label a, Label m) {
        Elem moved = c.g.conj(c.g.inv(static_cast<Elem>(a)), c.h.member(static_cast<int>(m)));
        int pos = c.h.index_of(moved);
        if (pos < 0) return AlgebraElement(funcs.space());
        return AlgebraElement::basis(funcs.space(), static_cast<Label>(pos));
    });
    CHECK(verify_module_algebra(conj_action).pass());

    auto R = twist_from_module(conj_action);
    CHECK(verify_twisting_map(R).pass());
    auto smash = twisted_pair_algebra(funcs, hopf.base(), R);

    auto D = build_double(c.g, c.h);
    REQUIRE(smash.dim() == D.dim());
    for (Label a = 0; a < D.dim(); ++a)
        for (Label b = 0; b < D.dim(); ++b)
            CHECK(smash.mul_basis(a, b).terms() == D.hopf.base().mul_basis(a, b).terms());
    CHECK(smash.unit().terms() == D.hopf.base().unit().terms());
    CHECK_THROWS_AS(smash.star_basis(0), std::logic_error);
}

TEST_CASE("window embeddings pad with units and preserve everything") {
    auto g = cyclic_group(2);
    auto h = Subgroup::whole(g);
    auto inner = IteratedAlgebra::build(g, h, 0, 2);
    auto outer = IteratedAlgebra::build(g, h, 0, 4);
    CHECK(verify_embedding(inner, outer).pass());
    // unit of the inner window maps to the unit of the outer one
    auto lifted = embed_window_elem(inner, outer, inner.algebra().unit());
    CHECK(lifted == outer.algebra().unit());
}

TEST_CASE("matrix representations of the small windows are faithful") {
    auto g = cyclic_group(2);
    auto h = Subgroup::whole(g);
    auto A02 = IteratedAlgebra::build(g, h, 0, 2);
    auto rep02 = repr_pi_02(g, h);
    CHECK(rep02.carrier == 4); // functions on G x G
    auto vr = verify_representation(A02, rep02);
    CHECK(vr.pass());
    CHECK(vr.find("representation-faithful") != nullptr);

    auto A13 = IteratedAlgebra::build(g, h, 1, 3);
    auto rep13 = repr_pi_13(g, h);
    CHECK(verify_representation(A13, rep13).pass());

    // explicit homomorphism spot-check with sparse matrices
    auto x = rep02.image(3);
    auto y = rep02.image(5);
    auto xy = x.mul(y);
    auto prod = A02.algebra().mul_basis(3, 5);
    CHECK(xy == rep02.image_elem(prod));
    CHECK(x.conj_transpose() == rep02.image_elem(A02.algebra().star_basis(3)));
}

TEST_CASE("sparse matrices multiply and flatten exactly") {
    auto a = SparseMat::zero(2, 2);
    a.add_entry(0, 1, Scalar::i());
    a.add_entry(1, 0, Scalar::rational(1, 2));
    // a^2 = (i/2) I
    CHECK(a.mul(a) == SparseMat::identity(2).scaled(Scalar::i() * Scalar::rational(1, 2)));
    // a* a = diag(1/4, 1)
    auto expect = SparseMat::zero(2, 2);
    expect.add_entry(0, 0, Scalar::rational(1, 4));
    expect.add_entry(1, 1, Scalar(1));
    CHECK(a.conj_transpose().mul(a) == expect);
    // entries that cancel disappear from the sparse form
    auto z = SparseMat::zero(2, 2);
    z.add_entry(0, 0, Scalar(1));
    z.add_entry(0, 0, Scalar(-1));
    CHECK(z == SparseMat::zero(2, 2));
    // flatten lays rows out in row-major order over the given space
    auto flat = a.flatten(make_space("m", 4));
    CHECK(flat.coeff(1) == Scalar::i());
    CHECK(flat.coeff(2) == Scalar::rational(1, 2));
    CHECK(flat.term_count() == 2);
}
