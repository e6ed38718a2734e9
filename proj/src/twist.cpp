#include "gspin/twist.hpp"

#include <algorithm>
#include <stdexcept>

#include "gspin/linalg.hpp"

namespace gspin {

namespace {

GroupRef share(const FiniteGroup& G) { return std::make_shared<const FiniteGroup>(G); }

} // namespace

StructureAlgebra group_algebra(const FiniteGroup& G) {
    auto g = share(G);
    auto space = make_space("C[G:" + std::to_string(g->order()) + "]", g->order(),
                            [g](Label l) { return g->name(static_cast<Elem>(l)); });
    auto mul = [g, space](Label a, Label b) {
        return AlgebraElement::basis(space, g->mul(static_cast<Elem>(a), static_cast<Elem>(b)));
    };
    auto star = [g, space](Label a) {
        return AlgebraElement::basis(space, g->inv(static_cast<Elem>(a)));
    };
    return StructureAlgebra(space, mul, AlgebraElement::basis(space, g->identity()), star);
}

HopfStructure group_hopf(const FiniteGroup& G) {
    StructureAlgebra alg = group_algebra(G);
    auto space = alg.space();
    const std::uint64_t d = alg.dim();
    auto g = share(G);
    auto sq = pair_space(space, space);
    auto comul = [sq, d](Label a) { return AlgebraElement::basis(sq, a * d + a); };
    auto counit = [](Label) { return Scalar(1); };
    auto antipode = [g, space](Label a) {
        return AlgebraElement::basis(space, g->inv(static_cast<Elem>(a)));
    };
    return HopfStructure(std::move(alg), comul, counit, antipode);
}

StructureAlgebra subgroup_group_algebra(const FiniteGroup& G, const Subgroup& H) {
    auto g = share(G);
    Subgroup sub = H;
    auto space = make_space("C[H:" + std::to_string(sub.order()) + "]", sub.order(),
                            [g, sub](Label l) { return g->name(sub.member(static_cast<int>(l))); });
    auto mul = [g, sub, space](Label a, Label b) {
        Elem p = g->mul(sub.member(static_cast<int>(a)), sub.member(static_cast<int>(b)));
        return AlgebraElement::basis(space, sub.index_of(p));
    };
    auto star = [g, sub, space](Label a) {
        return AlgebraElement::basis(space, sub.index_of(g->inv(sub.member(static_cast<int>(a)))));
    };
    Label e_pos = sub.index_of(g->identity());
    return StructureAlgebra(space, mul, AlgebraElement::basis(space, e_pos), star);
}

HopfStructure subgroup_group_hopf(const FiniteGroup& G, const Subgroup& H) {
    StructureAlgebra alg = subgroup_group_algebra(G, H);
    auto space = alg.space();
    const std::uint64_t d = alg.dim();
    auto g = share(G);
    Subgroup sub = H;
    auto sq = pair_space(space, space);
    auto comul = [sq, d](Label a) { return AlgebraElement::basis(sq, a * d + a); };
    auto counit = [](Label) { return Scalar(1); };
    auto antipode = [g, sub, space](Label a) {
        return AlgebraElement::basis(space, sub.index_of(g->inv(sub.member(static_cast<int>(a)))));
    };
    return HopfStructure(std::move(alg), comul, counit, antipode);
}

StructureAlgebra dual_group_algebra(const FiniteGroup& G) {
    auto g = share(G);
    auto space = make_space("F[G:" + std::to_string(g->order()) + "]", g->order(),
                            [g](Label l) { return "d[" + g->name(static_cast<Elem>(l)) + "]"; });
    auto mul = [space](Label a, Label b) {
        if (a != b) return AlgebraElement(space);
        return AlgebraElement::basis(space, a);
    };
    auto star = [space](Label a) { return AlgebraElement::basis(space, a); };
    AlgebraElement unit(space);
    for (std::uint64_t l = 0; l < space->dim(); ++l) unit.add_term(l, Scalar(1));
    return StructureAlgebra(space, mul, unit, star);
}

HopfStructure dual_group_hopf(const FiniteGroup& G) {
    StructureAlgebra alg = dual_group_algebra(G);
    auto space = alg.space();
    const std::uint64_t d = alg.dim();
    auto g = share(G);
    auto sq = pair_space(space, space);
    auto comul = [g, sq, d](Label a) {
        AlgebraElement out(sq);
        for (Elem x = 0; x < g->order(); ++x) {
            Elem y = g->mul(g->inv(x), static_cast<Elem>(a));
            out.add_term(static_cast<Label>(x) * d + y, Scalar(1));
        }
        return out;
    };
    auto counit = [g](Label a) {
        return static_cast<Elem>(a) == g->identity() ? Scalar(1) : Scalar(0);
    };
    auto antipode = [g, space](Label a) {
        return AlgebraElement::basis(space, g->inv(static_cast<Elem>(a)));
    };
    return HopfStructure(std::move(alg), comul, counit, antipode);
}

StructureAlgebra dual_subgroup_algebra(const FiniteGroup& G, const Subgroup& H) {
    auto g = share(G);
    Subgroup sub = H;
    auto space = make_space("F[H:" + std::to_string(sub.order()) + "]", sub.order(),
                            [g, sub](Label l) {
                                return "d[" + g->name(sub.member(static_cast<int>(l))) + "]";
                            });
    auto mul = [space](Label a, Label b) {
        if (a != b) return AlgebraElement(space);
        return AlgebraElement::basis(space, a);
    };
    auto star = [space](Label a) { return AlgebraElement::basis(space, a); };
    AlgebraElement unit(space);
    for (std::uint64_t l = 0; l < space->dim(); ++l) unit.add_term(l, Scalar(1));
    return StructureAlgebra(space, mul, unit, star);
}

TwistingMap::TwistingMap(StructureAlgebra lower, StructureAlgebra upper,
                         std::function<AlgebraElement(Label, Label)> rule)
    : lower_(std::move(lower)),
      upper_(std::move(upper)),
      target_(pair_space(lower_.space(), upper_.space())),
      rule_(std::move(rule)) {}

AlgebraElement TwistingMap::apply_elem(const AlgebraElement& b, const AlgebraElement& a) const {
    require_same_space(upper_.space(), b.space(), "TwistingMap::apply_elem (upper)");
    require_same_space(lower_.space(), a.space(), "TwistingMap::apply_elem (lower)");
    ElementAccumulator acc(target_);
    for (const auto& [lb, cb] : b.terms())
        for (const auto& [la, ca] : a.terms()) acc.add(rule_(lb, la), cb * ca);
    return acc.freeze();
}

TwistingMap flip_map(const StructureAlgebra& lower, const StructureAlgebra& upper) {
    auto space = pair_space(lower.space(), upper.space());
    const std::uint64_t ud = upper.dim();
    auto rule = [space, ud](Label b, Label a) {
        return AlgebraElement::basis(space, a * ud + b);
    };
    return TwistingMap(lower, upper, rule);
}

TwistingMap twist_from_module(const ModuleAction& action) {
    const StructureAlgebra& A = action.target();
    const HopfStructure& Bh = action.acting();
    const StructureAlgebra& B = Bh.base();
    auto space = pair_space(A.space(), B.space());
    const std::uint64_t bd = B.dim();
    TensorIndexer sq{bd};
    auto rule = [action, Bh, space, bd, sq](Label b, Label a) {
        ElementAccumulator acc(space);
        auto cb = Bh.comul_basis(b);
        for (const auto& [uv, c] : cb.terms()) {
            auto [b1, b2] = sq.split(uv);
            auto acted = action.act_basis(b1, a);
            for (const auto& [la, ca] : acted.terms()) {
                acc.add(la * bd + b2, c * ca);
            }
        }
        return acc.freeze();
    };
    return TwistingMap(A, B, rule);
}

VerifyReport verify_twisting_map(const TwistingMap& R, const VerifyOptions& opts) {
    const StructureAlgebra& A = R.lower();
    const StructureAlgebra& B = R.upper();
    const std::uint64_t da = A.dim(), db = B.dim();
    const Mode mode = resolve_mode(std::max(da, db), opts);
    const auto SA = A.space();
    const auto SB = B.space();
    const auto target = R.target_space();
    TensorIndexer ix{db};

    VerifyReport rep;
    rep.subject = "R: " + SB->name() + "(x)" + SA->name() + " -> " + SA->name() + "(x)" + SB->name();

    auto neq = [](const AlgebraElement& a, const AlgebraElement& b) {
        return a == b ? std::string{} : "lhs = " + a.str() + "; rhs = " + b.str();
    };

    rep.laws.push_back(run_law(
        {"twist-lower-product",
         {db, da, da},
         [&, R](std::span<const std::uint64_t> t) {
             // R(b (x) a1 a2) against threading R across a1 then a2
             ElementAccumulator lhs(target);
             auto prod_a = A.mul_basis(t[1], t[2]);
             for (const auto& [m, cm] : prod_a.terms()) lhs.add(R.apply(t[0], m), cm);
             ElementAccumulator rhs(target);
             auto first = R.apply(t[0], t[1]);
             for (const auto& [p1, c1] : first.terms()) {
                 auto [a1, b1] = ix.split(p1);
                 auto second = R.apply(b1, t[2]);
                 for (const auto& [p2, c2] : second.terms()) {
                     auto [a2, b2] = ix.split(p2);
                     auto prod = A.mul_basis(a1, a2);
                     for (const auto& [m, cm] : prod.terms()) {
                         rhs.add(m * db + b2, c1 * c2 * cm);
                     }
                 }
             }
             return neq(lhs.freeze(), rhs.freeze());
         },
         {SB, SA, SA}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"twist-upper-product",
         {db, db, da},
         [&, R](std::span<const std::uint64_t> t) {
             ElementAccumulator lhs(target);
             auto prod_b = B.mul_basis(t[0], t[1]);
             for (const auto& [m, cm] : prod_b.terms()) lhs.add(R.apply(m, t[2]), cm);
             ElementAccumulator rhs(target);
             auto first = R.apply(t[1], t[2]);
             for (const auto& [p2, c2] : first.terms()) {
                 auto [a2, b2] = ix.split(p2);
                 auto second = R.apply(t[0], a2);
                 for (const auto& [p1, c1] : second.terms()) {
                     auto [a1, b1] = ix.split(p1);
                     auto prod = B.mul_basis(b1, b2);
                     for (const auto& [m, cm] : prod.terms()) {
                         rhs.add(a1 * db + m, c1 * c2 * cm);
                     }
                 }
             }
             return neq(lhs.freeze(), rhs.freeze());
         },
         {SB, SB, SA}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"twist-lower-unit",
         {db},
         [&, R](std::span<const std::uint64_t> t) {
             auto b = AlgebraElement::basis(SB, t[0]);
             auto lhs = R.apply_elem(b, A.unit());
             ElementAccumulator rhs(target);
             for (const auto& [m, cm] : A.unit().terms()) rhs.add(m * db + t[0], cm);
             return neq(lhs, rhs.freeze());
         },
         {SB}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"twist-upper-unit",
         {da},
         [&, R](std::span<const std::uint64_t> t) {
             auto a = AlgebraElement::basis(SA, t[0]);
             auto lhs = R.apply_elem(B.unit(), a);
             ElementAccumulator rhs(target);
             for (const auto& [m, cm] : B.unit().terms()) rhs.add(t[0] * db + m, cm);
             return neq(lhs, rhs.freeze());
         },
         {SA}},
        mode, opts));
    return rep;
}

VerifyReport verify_hexagon(const TwistingMap& r_ij, const TwistingMap& r_jk,
                            const TwistingMap& r_ik, const VerifyOptions& opts) {
    const StructureAlgebra& Ai = r_ij.lower();
    const StructureAlgebra& Aj = r_ij.upper();
    const StructureAlgebra& Ak = r_jk.upper();
    if (!same_space(r_jk.lower().space(), Aj.space()) ||
        !same_space(r_ik.lower().space(), Ai.space()) ||
        !same_space(r_ik.upper().space(), Ak.space())) {
        throw std::invalid_argument("verify_hexagon: factor spaces do not line up");
    }
    const std::uint64_t di = Ai.dim(), dj = Aj.dim(), dk = Ak.dim();
    const Mode mode = resolve_mode(std::max({di, dj, dk}), opts);

    auto out_space = triple_space(Ai.space(), Aj.space(), Ak.space());
    // apply R at word positions (p, p+1); the word layout is tracked by caller
    auto apply_at = [](const TwistingMap& R, int p, const std::vector<std::array<Label, 3>>& words,
                       const std::vector<Scalar>& coeffs) {
        std::vector<std::array<Label, 3>> w2;
        std::vector<Scalar> c2;
        TensorIndexer ix = R.target_indexer();
        for (std::size_t t = 0; t < words.size(); ++t) {
            auto moved = R.apply(words[t][p], words[t][p + 1]);
            for (const auto& [lab, c] : moved.terms()) {
                auto [la, lb] = ix.split(lab);
                auto w = words[t];
                w[static_cast<std::size_t>(p)] = la;
                w[static_cast<std::size_t>(p) + 1] = lb;
                w2.push_back(w);
                c2.push_back(coeffs[t] * c);
            }
        }
        return std::pair{std::move(w2), std::move(c2)};
    };
    auto collapse = [&](const std::vector<std::array<Label, 3>>& words,
                        const std::vector<Scalar>& coeffs) {
        ElementAccumulator acc(out_space);
        for (std::size_t t = 0; t < words.size(); ++t) {
            acc.add((words[t][0] * dj + words[t][1]) * dk + words[t][2], coeffs[t]);
        }
        return acc.freeze();
    };

    VerifyReport rep;
    rep.subject = "hexagon: " + Ai.space()->name() + "," + Aj.space()->name() + "," +
                  Ak.space()->name();
    rep.laws.push_back(run_law(
        {"hexagon",
         {dk, dj, di},
         [&](std::span<const std::uint64_t> t) {
             std::vector<std::array<Label, 3>> w{{t[0], t[1], t[2]}}; // legs (k, j, i)
             std::vector<Scalar> c{Scalar(1)};
             // route 1: swap (j,i), then (k,i), then (k,j)
             auto [w1, c1] = apply_at(r_ij, 1, w, c);   // k, i, j
             std::tie(w1, c1) = apply_at(r_ik, 0, w1, c1); // i, k, j
             std::tie(w1, c1) = apply_at(r_jk, 1, w1, c1); // i, j, k
             // route 2: swap (k,j), then (k,i), then (j,i)
             auto [w2, c2] = apply_at(r_jk, 0, w, c);   // j, k, i
             std::tie(w2, c2) = apply_at(r_ik, 1, w2, c2); // j, i, k
             std::tie(w2, c2) = apply_at(r_ij, 0, w2, c2); // i, j, k
             auto lhs = collapse(w1, c1);
             auto rhs = collapse(w2, c2);
             return lhs == rhs ? std::string{}
                               : "routes differ: " + lhs.str() + " vs " + rhs.str();
         },
         {Ak.space(), Aj.space(), Ai.space()}},
        mode, opts));
    return rep;
}

StructureAlgebra twisted_pair_algebra(const StructureAlgebra& A, const StructureAlgebra& B,
                                      const TwistingMap& R,
                                      std::function<AlgebraElement(Label)> star) {
    if (!same_space(R.lower().space(), A.space()) || !same_space(R.upper().space(), B.space())) {
        throw std::invalid_argument("twisted_pair_algebra: twist does not match the factors");
    }
    auto space = pair_space(A.space(), B.space());
    const std::uint64_t db = B.dim();
    TensorIndexer ix{db};
    auto mul = [A, B, R, space, db, ix](Label p, Label q) {
        auto [a1, b1] = ix.split(p);
        auto [a2, b2] = ix.split(q);
        ElementAccumulator acc(space);
        auto moved = R.apply(b1, a2);
        for (const auto& [m, cm] : moved.terms()) {
            auto [am, bm] = ix.split(m);
            auto pa = A.mul_basis(a1, am);
            for (const auto& [al, ca] : pa.terms()) {
                auto pb = B.mul_basis(bm, b2);
                for (const auto& [bl, cb] : pb.terms()) {
                    acc.add(al * db + bl, cm * ca * cb);
                }
            }
        }
        return acc.freeze();
    };
    if (!star) {
        star = [space](Label) -> AlgebraElement {
            throw std::logic_error("star is not defined for this twisted pair");
        };
    }
    ElementAccumulator uacc(space);
    for (const auto& [la, ca] : A.unit().terms())
        for (const auto& [lb, cb] : B.unit().terms()) uacc.add(la * db + lb, ca * cb);
    return StructureAlgebra(space, mul, uacc.freeze(), std::move(star));
}

TwistingMap standard_twist(const FiniteGroup& G, const Subgroup& H, int i, int j) {
    if (i >= j) throw std::invalid_argument("standard_twist: need i < j");
    auto factor = [&](int k) {
        return factor_is_group_side(k) ? subgroup_group_algebra(G, H) : dual_group_algebra(G);
    };
    StructureAlgebra lower = factor(i);
    StructureAlgebra upper = factor(j);
    if (j - i >= 2) return flip_map(lower, upper);

    auto g = share(G);
    Subgroup sub = H;
    auto space = pair_space(lower.space(), upper.space());
    const std::uint64_t ud = upper.dim();
    if (factor_is_group_side(i)) {
        // lower CH, upper functions on G: d[g] (x) h -> h (x) d[h^-1 g]
        auto rule = [g, sub, space, ud](Label b, Label a) {
            Elem h = sub.member(static_cast<int>(a));
            Elem gg = g->mul(g->inv(h), static_cast<Elem>(b));
            return AlgebraElement::basis(space, a * ud + static_cast<Label>(gg));
        };
        return TwistingMap(lower, upper, rule);
    }
    // lower functions on G, upper CH: h (x) d[g] -> d[g h^-1] (x) h
    auto rule = [g, sub, space, ud](Label b, Label a) {
        Elem h = sub.member(static_cast<int>(b));
        Elem gg = g->mul(static_cast<Elem>(a), g->inv(h));
        return AlgebraElement::basis(space, static_cast<Label>(gg) * ud + b);
    };
    return TwistingMap(lower, upper, rule);
}

struct IterCore {
    GroupRef group;
    Subgroup sub;
    int lo = 0, hi = 0;
    MixedRadix radix;
    std::vector<StructureAlgebra> factors; // indexed by i - lo
    std::map<std::pair<int, int>, TwistingMap> twists;

    const StructureAlgebra& factor(int i) const { return factors[static_cast<std::size_t>(i - lo)]; }
};

namespace {

struct WordTerm {
    std::vector<int> letters;
    Scalar coeff;
};

AlgebraElement bubble_mul(const IterCore& core, const LabelSpaceRef& space, Label a, Label b,
                          BubbleOrder order) {
    const int k = core.hi - core.lo + 1;
    std::vector<int> seq(static_cast<std::size_t>(2 * k));
    for (int p = 0; p < k; ++p) {
        seq[static_cast<std::size_t>(p)] = core.lo + p;
        seq[static_cast<std::size_t>(k + p)] = core.lo + p;
    }
    auto da = core.radix.decode(a);
    auto db = core.radix.decode(b);
    WordTerm start;
    start.letters = da;
    start.letters.insert(start.letters.end(), db.begin(), db.end());
    start.coeff = Scalar(1);
    std::vector<WordTerm> terms{std::move(start)};

    while (true) {
        int pick = -1;
        for (int p = 0; p + 1 < static_cast<int>(seq.size()); ++p) {
            if (seq[static_cast<std::size_t>(p)] > seq[static_cast<std::size_t>(p) + 1]) {
                pick = p;
                if (order == BubbleOrder::leftmost) break;
            }
        }
        if (pick < 0) break;
        const int i = seq[static_cast<std::size_t>(pick) + 1];
        const int j = seq[static_cast<std::size_t>(pick)];
        const TwistingMap& R = core.twists.at({i, j});
        TensorIndexer ix = R.target_indexer();
        std::vector<WordTerm> next;
        next.reserve(terms.size());
        for (const auto& t : terms) {
            auto out = R.apply(static_cast<Label>(t.letters[static_cast<std::size_t>(pick)]),
                               static_cast<Label>(t.letters[static_cast<std::size_t>(pick) + 1]));
            for (const auto& [lab, c] : out.terms()) {
                auto [la, lb] = ix.split(lab);
                WordTerm n = t;
                n.letters[static_cast<std::size_t>(pick)] = static_cast<int>(la);
                n.letters[static_cast<std::size_t>(pick) + 1] = static_cast<int>(lb);
                n.coeff = t.coeff * c;
                next.push_back(std::move(n));
            }
        }
        terms = std::move(next);
        std::swap(seq[static_cast<std::size_t>(pick)], seq[static_cast<std::size_t>(pick) + 1]);
    }

    // seq is now lo,lo,lo+1,lo+1,...; merge each adjacent pair in its factor
    ElementAccumulator acc(space);
    std::vector<int> digits(static_cast<std::size_t>(k));
    for (const auto& t : terms) {
        // each factor product can branch, so expand with a small odometer
        std::vector<AlgebraElement> prods;
        prods.reserve(static_cast<std::size_t>(k));
        bool dead = false;
        for (int p = 0; p < k && !dead; ++p) {
            auto pr = core.factor(core.lo + p)
                          .mul_basis(static_cast<Label>(t.letters[static_cast<std::size_t>(2 * p)]),
                                     static_cast<Label>(t.letters[static_cast<std::size_t>(2 * p) + 1]));
            if (pr.is_zero()) dead = true;
            prods.push_back(std::move(pr));
        }
        if (dead) continue;
        std::vector<std::size_t> pos(static_cast<std::size_t>(k), 0);
        while (true) {
            Scalar c = t.coeff;
            for (int p = 0; p < k; ++p) {
                const auto& term = prods[static_cast<std::size_t>(p)].terms()[pos[static_cast<std::size_t>(p)]];
                digits[static_cast<std::size_t>(p)] = static_cast<int>(term.first);
                c *= term.second;
            }
            acc.add(core.radix.encode(digits), c);
            int p = k - 1;
            while (p >= 0) {
                if (++pos[static_cast<std::size_t>(p)] < prods[static_cast<std::size_t>(p)].terms().size()) break;
                pos[static_cast<std::size_t>(p)] = 0;
                --p;
            }
            if (p < 0) break;
        }
    }
    return acc.freeze();
}

} // namespace

IteratedAlgebra IteratedAlgebra::build(const FiniteGroup& G, const Subgroup& H, int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("IteratedAlgebra::build: need lo <= hi");
    auto core = std::make_shared<IterCore>();
    core->group = share(G);
    core->sub = H;
    core->lo = lo;
    core->hi = hi;
    for (int i = lo; i <= hi; ++i) {
        core->factors.push_back(factor_is_group_side(i) ? subgroup_group_algebra(G, H)
                                                        : dual_group_algebra(G));
        core->radix.radices.push_back(core->factors.back().dim());
    }
    for (int i = lo; i <= hi; ++i)
        for (int j = i + 1; j <= hi; ++j) core->twists.emplace(std::pair{i, j}, standard_twist(G, H, i, j));

    std::shared_ptr<const IterCore> ccore = core;
    std::string name = "A[" + std::to_string(lo) + ".." + std::to_string(hi) + ";H" +
                       std::to_string(H.order()) + ",G" + std::to_string(G.order()) + "]";
    auto space = make_space(name, core->radix.card(), [ccore](Label l) {
        auto d = ccore->radix.decode(l);
        std::string out;
        for (std::size_t p = 0; p < d.size(); ++p) {
            if (p) out += "(x)";
            out += ccore->factor(ccore->lo + static_cast<int>(p))
                       .space()
                       ->render(static_cast<Label>(d[p]));
        }
        return out;
    });

    auto mul = [ccore, space](Label a, Label b) {
        return bubble_mul(*ccore, space, a, b, BubbleOrder::rightmost);
    };

    // star: invert the group-side entries; a function-side entry d[g] picks up
    // the neighboring original group-side entries, d[g] -> d[hL g hR]
    auto g = core->group;
    Subgroup sub = core->sub;
    MixedRadix radix = core->radix;
    auto star = [ccore, g, sub, radix, space, lo, hi](Label l) {
        auto d = radix.decode(l);
        auto group_entry = [&](int i) {
            if (i < lo || i > hi || !factor_is_group_side(i)) return g->identity();
            return sub.member(d[static_cast<std::size_t>(i - lo)]);
        };
        std::vector<int> out(d.size());
        for (int i = lo; i <= hi; ++i) {
            const std::size_t p = static_cast<std::size_t>(i - lo);
            if (factor_is_group_side(i)) {
                out[p] = sub.index_of(g->inv(sub.member(d[p])));
            } else {
                Elem gg = g->mul(group_entry(i - 1), g->mul(static_cast<Elem>(d[p]), group_entry(i + 1)));
                out[p] = gg;
            }
        }
        return AlgebraElement::basis(space, radix.encode(out));
    };

    // unit: identity at group-side factors, full sum at function-side factors
    ElementAccumulator uacc(space);
    {
        std::vector<int> digitvec(core->factors.size(), 0);
        std::vector<std::vector<int>> choices;
        for (int i = lo; i <= hi; ++i) {
            if (factor_is_group_side(i)) {
                choices.push_back({core->sub.index_of(G.identity())});
            } else {
                std::vector<int> all(static_cast<std::size_t>(G.order()));
                for (int x = 0; x < G.order(); ++x) all[static_cast<std::size_t>(x)] = x;
                choices.push_back(std::move(all));
            }
        }
        std::vector<std::size_t> pos(choices.size(), 0);
        while (true) {
            for (std::size_t p = 0; p < choices.size(); ++p) digitvec[p] = choices[p][pos[p]];
            uacc.add(core->radix.encode(digitvec), Scalar(1));
            std::size_t p = choices.size();
            bool done = true;
            while (p-- > 0) {
                if (++pos[p] < choices[p].size()) { done = false; break; }
                pos[p] = 0;
            }
            if (done) break;
        }
    }

    IteratedAlgebra out;
    out.core_ = ccore;
    out.alg_ = StructureAlgebra(space, mul, uacc.freeze(), star);
    return out;
}

int IteratedAlgebra::lo() const { return core_->lo; }
int IteratedAlgebra::hi() const { return core_->hi; }
const FiniteGroup& IteratedAlgebra::group() const { return *core_->group; }
const Subgroup& IteratedAlgebra::subgroup() const { return core_->sub; }
const StructureAlgebra& IteratedAlgebra::factor(int i) const { return core_->factor(i); }
const TwistingMap& IteratedAlgebra::twist(int i, int j) const { return core_->twists.at({i, j}); }
std::vector<int> IteratedAlgebra::digits(Label l) const { return core_->radix.decode(l); }
Label IteratedAlgebra::label_from_digits(const std::vector<int>& d) const {
    return core_->radix.encode(d);
}
AlgebraElement IteratedAlgebra::mul_ordered(Label a, Label b, BubbleOrder order) const {
    return bubble_mul(*core_, alg_.space(), a, b, order);
}

AlgebraElement embed_window(const IteratedAlgebra& inner, const IteratedAlgebra& outer, Label l) {
    if (outer.lo() > inner.lo() || inner.hi() > outer.hi()) {
        throw std::invalid_argument("embed_window: inner window must sit inside the outer window");
    }
    if (inner.group().order() != outer.group().order() ||
        inner.subgroup().order() != outer.subgroup().order()) {
        throw std::invalid_argument("embed_window: windows built over different groups");
    }
    auto din = inner.digits(l);
    const FiniteGroup& G = outer.group();
    std::vector<std::vector<int>> choices;
    for (int i = outer.lo(); i <= outer.hi(); ++i) {
        if (i >= inner.lo() && i <= inner.hi()) {
            choices.push_back({din[static_cast<std::size_t>(i - inner.lo())]});
        } else if (factor_is_group_side(i)) {
            choices.push_back({outer.subgroup().index_of(G.identity())});
        } else {
            std::vector<int> all(static_cast<std::size_t>(G.order()));
            for (int x = 0; x < G.order(); ++x) all[static_cast<std::size_t>(x)] = x;
            choices.push_back(std::move(all));
        }
    }
    ElementAccumulator acc(outer.space());
    std::vector<int> digits(choices.size(), 0);
    std::vector<std::size_t> pos(choices.size(), 0);
    while (true) {
        for (std::size_t p = 0; p < choices.size(); ++p) digits[p] = choices[p][pos[p]];
        acc.add(outer.label_from_digits(digits), Scalar(1));
        std::size_t p = choices.size();
        bool done = true;
        while (p-- > 0) {
            if (++pos[p] < choices[p].size()) { done = false; break; }
            pos[p] = 0;
        }
        if (done) break;
    }
    return acc.freeze();
}

AlgebraElement embed_window_elem(const IteratedAlgebra& inner, const IteratedAlgebra& outer,
                                 const AlgebraElement& x) {
    require_same_space(inner.space(), x.space(), "embed_window_elem");
    ElementAccumulator acc(outer.space());
    for (const auto& [l, c] : x.terms()) acc.add(embed_window(inner, outer, l), c);
    return acc.freeze();
}

VerifyReport verify_embedding(const IteratedAlgebra& inner, const IteratedAlgebra& outer,
                              const VerifyOptions& opts) {
    const std::uint64_t d = inner.dim();
    const Mode mode = resolve_mode(d, opts);
    const auto S = inner.space();
    VerifyReport rep;
    rep.subject = S->name() + " -> " + outer.space()->name();
    auto neq = [](const AlgebraElement& a, const AlgebraElement& b) {
        return a == b ? std::string{} : "lhs = " + a.str() + "; rhs = " + b.str();
    };

    rep.laws.push_back(run_law(
        {"embedding-unital",
         {},
         [&](std::span<const std::uint64_t>) {
             return neq(embed_window_elem(inner, outer, inner.algebra().unit()),
                        outer.algebra().unit());
         },
         {}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"embedding-multiplicative",
         {d, d},
         [&](std::span<const std::uint64_t> t) {
             auto lhs = embed_window_elem(inner, outer, inner.algebra().mul_basis(t[0], t[1]));
             auto rhs = outer.algebra().mul(embed_window(inner, outer, t[0]),
                                            embed_window(inner, outer, t[1]));
             return neq(lhs, rhs);
         },
         {S, S}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"embedding-star",
         {d},
         [&](std::span<const std::uint64_t> t) {
             auto lhs = embed_window_elem(inner, outer, inner.algebra().star_basis(t[0]));
             auto rhs = outer.algebra().star(embed_window(inner, outer, t[0]));
             return neq(lhs, rhs);
         },
         {S}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"embedding-injective",
         {},
         [&](std::span<const std::uint64_t>) {
             std::vector<AlgebraElement> images;
             images.reserve(d);
             for (Label l = 0; l < d; ++l) images.push_back(embed_window(inner, outer, l));
             auto r = span_rank(images, {.parallel = opts.parallel});
             return r == d ? std::string{}
                           : "rank " + std::to_string(r) + " != dim " + std::to_string(d);
         },
         {}},
        mode, opts));
    return rep;
}

SparseMat MatrixRep::image_elem(const AlgebraElement& x) const {
    SparseMat out = SparseMat::zero(carrier, carrier);
    for (const auto& [l, c] : x.terms()) out = out.add(image(l).scaled(c));
    return out;
}

MatrixRep repr_pi_02(const FiniteGroup& G, const Subgroup& H) {
    auto g = share(G);
    Subgroup sub = H;
    const std::uint64_t n = static_cast<std::uint64_t>(G.order());
    const std::uint64_t carrier = n * n;
    MixedRadix radix{{static_cast<std::uint64_t>(sub.order()), n,
                      static_cast<std::uint64_t>(sub.order())}};
    MatrixRep rep;
    rep.carrier = carrier;
    rep.flat_space = make_space("pi02-mat", carrier * carrier);
    rep.image = [g, sub, n, carrier, radix](Label l) {
        auto d = radix.decode(l);
        Elem h0 = sub.member(d[0]);
        Elem gg = static_cast<Elem>(d[1]);
        Elem h2 = sub.member(d[2]);
        SparseMat m = SparseMat::zero(carrier, carrier);
        for (Elem g0 = 0; g0 < static_cast<Elem>(n); ++g0) {
            Elem g0h0 = g->mul(g0, h0);
            for (Elem g2 = 0; g2 < static_cast<Elem>(n); ++g2) {
                if (g->mul(g->inv(g0h0), g2) != gg) continue;
                Elem g2h2 = g->mul(g2, h2);
                m.data[static_cast<std::uint64_t>(g0) * n + g2].emplace_back(
                    static_cast<std::uint64_t>(g0h0) * n + g2h2, Scalar(1));
            }
        }
        return m;
    };
    return rep;
}

MatrixRep repr_pi_13(const FiniteGroup& G, const Subgroup& H) {
    auto g = share(G);
    Subgroup sub = H;
    const std::uint64_t n = static_cast<std::uint64_t>(G.order());
    const std::uint64_t carrier = n * n;
    MixedRadix radix{{n, static_cast<std::uint64_t>(sub.order()), n}};
    MatrixRep rep;
    rep.carrier = carrier;
    rep.flat_space = make_space("pi13-mat", carrier * carrier);
    rep.image = [g, sub, n, carrier, radix](Label l) {
        auto d = radix.decode(l);
        Elem gg = static_cast<Elem>(d[0]);
        Elem h = sub.member(d[1]);
        Elem s = static_cast<Elem>(d[2]);
        // row (a,b) has an entry iff a = gg and b = h s; column (a h, h^-1 b)
        SparseMat m = SparseMat::zero(carrier, carrier);
        Elem b = g->mul(h, s);
        m.data[static_cast<std::uint64_t>(gg) * n + b].emplace_back(
            static_cast<std::uint64_t>(g->mul(gg, h)) * n + s, Scalar(1));
        return m;
    };
    return rep;
}

VerifyReport verify_representation(const IteratedAlgebra& A, const MatrixRep& rep,
                                   const VerifyOptions& opts) {
    const std::uint64_t d = A.dim();
    const Mode mode = resolve_mode(d, opts);
    const auto S = A.space();
    VerifyReport out;
    out.subject = S->name() + " matrix representation";

    auto mneq = [](const SparseMat& a, const SparseMat& b) {
        return a == b ? std::string{} : std::string("matrices differ");
    };

    out.laws.push_back(run_law(
        {"representation-unit",
         {},
         [&](std::span<const std::uint64_t>) {
             return mneq(rep.image_elem(A.algebra().unit()), SparseMat::identity(rep.carrier));
         },
         {}},
        mode, opts));
    out.laws.push_back(run_law(
        {"representation-multiplicative",
         {d, d},
         [&](std::span<const std::uint64_t> t) {
             auto lhs = rep.image_elem(A.algebra().mul_basis(t[0], t[1]));
             auto rhs = rep.image(t[0]).mul(rep.image(t[1]));
             return mneq(lhs, rhs);
         },
         {S, S}},
        mode, opts));
    out.laws.push_back(run_law(
        {"representation-star",
         {d},
         [&](std::span<const std::uint64_t> t) {
             auto lhs = rep.image_elem(A.algebra().star_basis(t[0]));
             auto rhs = rep.image(t[0]).conj_transpose();
             return mneq(lhs, rhs);
         },
         {S}},
        mode, opts));
    out.laws.push_back(run_law(
        {"representation-faithful",
         {},
         [&](std::span<const std::uint64_t>) {
             std::vector<AlgebraElement> flats;
             flats.reserve(d);
             for (Label l = 0; l < d; ++l) flats.push_back(rep.image(l).flatten(rep.flat_space));
             auto r = span_rank(flats, {.parallel = opts.parallel});
             return r == d ? std::string{}
                           : "rank " + std::to_string(r) + " != dim " + std::to_string(d);
         },
         {}},
        mode, opts));
    return out;
}

} // namespace gspin
