#include "gspin/quantum_double.hpp"

#include "gspin/errors.hpp"

namespace gspin {

DoubleAlgebra build_double(const FiniteGroup& G, const Subgroup& H, bool force_build) {
    if (!H.normal() && !force_build) {
        auto w = H.normality_witness();
        throw ValidationError("subgroup is not normal: conjugating member " +
                              G.name(w->second) + " by " + G.name(w->first) +
                              " leaves the subgroup");
    }

    auto g = std::make_shared<const FiniteGroup>(G);
    const int n = g->order();
    const int hn = H.order();
    Subgroup sub = H;

    auto space = make_space(
        "D(" + std::to_string(hn) + ";" + std::to_string(n) + ")",
        static_cast<std::uint64_t>(hn) * n, [g, sub, n](Label l) {
            return "(" + g->name(sub.member(static_cast<int>(l) / n)) + "," +
                   g->name(static_cast<Elem>(l % n)) + ")";
        });

    auto lab = [n](int h_pos, Elem gg) { return static_cast<Label>(h_pos) * n + gg; };
    auto split = [n, sub](Label l) {
        return std::pair<Elem, Elem>{sub.member(static_cast<int>(l) / n),
                                     static_cast<Elem>(l % n)};
    };

    auto mul = [g, sub, space, lab, split](Label a, Label b) {
        auto [h1, g1] = split(a);
        auto [h2, g2] = split(b);
        if (g->conj(g1, h1) != h2) return AlgebraElement(space);
        return AlgebraElement::basis(space, lab(sub.index_of(h1), g->mul(g1, g2)));
    };

    AlgebraElement unit(space);
    for (int hp = 0; hp < hn; ++hp) unit.add_term(lab(hp, g->identity()), Scalar(1));

    auto star = [g, sub, space, lab, split](Label a) {
        auto [h, gg] = split(a);
        int hp = sub.index_of(g->conj(gg, h));
        if (hp < 0) return AlgebraElement(space); // only reachable under force_build
        return AlgebraElement::basis(space, lab(hp, g->inv(gg)));
    };

    StructureAlgebra alg(space, mul, unit, star);

    auto sq = pair_space(space, space);
    const std::uint64_t d = alg.dim();
    auto comul = [g, sub, space, sq, d, lab, split](Label a) {
        auto [h, gg] = split(a);
        AlgebraElement out(sq);
        for (int p = 0; p < sub.order(); ++p) {
            Elem h1 = sub.member(p);
            Elem h2 = g->mul(g->inv(h1), h);
            int q = sub.index_of(h2);
            Label left = lab(p, gg), right = lab(q, gg);
            out.add_term(left * d + right, Scalar(1));
        }
        return out;
    };
    auto counit = [g, split](Label a) {
        return split(a).first == g->identity() ? Scalar(1) : Scalar(0);
    };
    auto antipode = [g, sub, space, lab, split](Label a) {
        auto [h, gg] = split(a);
        int hp = sub.index_of(g->conj(gg, g->inv(h)));
        if (hp < 0) return AlgebraElement(space);
        return AlgebraElement::basis(space, lab(hp, g->inv(gg)));
    };

    return DoubleAlgebra{HopfStructure(std::move(alg), comul, counit, antipode), g, std::move(sub)};
}

AlgebraElement integral_of(const DoubleAlgebra& D) {
    const FiniteGroup& G = *D.group;
    const int n = G.order();
    AlgebraElement z(D.space());
    const int e_pos = D.sub.index_of(G.identity());
    const Scalar w = Scalar::rational(1, n);
    for (Elem g = 0; g < n; ++g) z.add_term(D.label(e_pos, g), w);
    return z;
}

VerifyReport verify_integral(const DoubleAlgebra& D, const VerifyOptions& opts) {
    const auto& A = D.hopf.base();
    const auto S = A.space();
    const std::uint64_t d = A.dim();
    const Mode mode = resolve_mode(d, opts);
    const AlgebraElement z = integral_of(D);

    VerifyReport rep;
    rep.subject = S->name() + " integral";
    auto el = [&](Label l) { return AlgebraElement::basis(S, l); };
    auto neq = [](const AlgebraElement& a, const AlgebraElement& b) {
        return a == b ? std::string{} : "lhs = " + a.str() + "; rhs = " + b.str();
    };

    rep.laws.push_back(run_law(
        {"integral-left",
         {d},
         [&](std::span<const std::uint64_t> t) {
             return neq(A.mul(el(t[0]), z), z.scaled(D.hopf.counit_basis(t[0])));
         },
         {S}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"integral-right",
         {d},
         [&](std::span<const std::uint64_t> t) {
             return neq(A.mul(z, el(t[0])), z.scaled(D.hopf.counit_basis(t[0])));
         },
         {S}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"integral-idempotent",
         {},
         [&](std::span<const std::uint64_t>) { return neq(A.mul(z, z), z); },
         {}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"integral-star",
         {},
         [&](std::span<const std::uint64_t>) { return neq(A.star(z), z); },
         {}},
        mode, opts));
    return rep;
}

} // namespace gspin
