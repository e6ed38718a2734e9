#include "gspin/verify.hpp"

#include <algorithm>
#include <random>

namespace gspin {

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::automatic: return "automatic";
        case Mode::exhaustive: return "exhaustive";
        case Mode::sampled: return "sampled";
    }
    return "?";
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

Mode resolve_mode(std::uint64_t dim, const VerifyOptions& opts) {
    if (opts.mode != Mode::automatic) return opts.mode;
    if (dim == 0) return Mode::exhaustive;
    if (dim > 100000) return Mode::sampled;
    return dim * dim * dim <= opts.tuple_limit ? Mode::exhaustive : Mode::sampled;
}

namespace {

std::uint64_t space_card(const std::vector<std::uint64_t>& dims) {
    std::uint64_t c = 1;
    for (auto d : dims) c *= d;
    return c;
}

void unrank(const std::vector<std::uint64_t>& dims, std::uint64_t t, std::vector<std::uint64_t>& out) {
    out.resize(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
        out[i] = t % dims[i];
        t /= dims[i];
    }
}

} // namespace

LawResult run_law(const LawSpec& spec, Mode resolved, const VerifyOptions& opts) {
    LawResult res;
    res.law = spec.name;

    // Sampled tuples are drawn up front so the evaluation loop is identical
    // for the serial and OpenMP paths.
    std::vector<std::vector<std::uint64_t>> sampled;
    std::uint64_t count = 0;
    const std::uint64_t card = space_card(spec.dims);
    if (resolved == Mode::sampled && card > opts.samples) {
        res.mode = "sampled";
        std::mt19937_64 gen(opts.seed ^ fnv1a(spec.name));
        sampled.resize(opts.samples);
        for (auto& tup : sampled) {
            tup.resize(spec.dims.size());
            for (std::size_t i = 0; i < spec.dims.size(); ++i) tup[i] = gen() % spec.dims[i];
        }
        count = opts.samples;
    } else {
        res.mode = resolved == Mode::sampled ? "sampled" : "exhaustive";
        count = card;
    }
    res.checked = count;

    auto tuple_at = [&](std::uint64_t t, std::vector<std::uint64_t>& buf) -> std::span<const std::uint64_t> {
        if (!sampled.empty()) return sampled[t];
        unrank(spec.dims, t, buf);
        return buf;
    };

    std::vector<std::uint64_t> bad;
    if (opts.parallel) {
#pragma omp parallel
        {
            std::vector<std::uint64_t> local;
            std::vector<std::uint64_t> buf;
#pragma omp for schedule(dynamic, 64) nowait
            for (std::uint64_t t = 0; t < count; ++t) {
                if (!spec.check(tuple_at(t, buf)).empty()) local.push_back(t);
            }
#pragma omp critical
            bad.insert(bad.end(), local.begin(), local.end());
        }
        std::sort(bad.begin(), bad.end());
    } else {
        std::vector<std::uint64_t> buf;
        for (std::uint64_t t = 0; t < count; ++t) {
            if (!spec.check(tuple_at(t, buf)).empty()) bad.push_back(t);
        }
    }

    res.failed = bad.size();
    const std::size_t nw = std::min(opts.max_witnesses, bad.size());
    std::vector<std::uint64_t> buf;
    for (std::size_t i = 0; i < nw; ++i) {
        auto tup = tuple_at(bad[i], buf);
        Witness w;
        w.tuple.assign(tup.begin(), tup.end());
        for (std::size_t k = 0; k < tup.size(); ++k) {
            if (k < spec.spaces.size() && spec.spaces[k]) {
                w.labels.push_back(spec.spaces[k]->render(tup[k]));
            } else {
                w.labels.push_back(std::to_string(tup[k]));
            }
        }
        w.detail = spec.check(tup);
        res.witnesses.push_back(std::move(w));
    }
    return res;
}

namespace {

std::string neq(const AlgebraElement& lhs, const AlgebraElement& rhs) {
    if (lhs == rhs) return "";
    return "lhs = " + lhs.str() + "; rhs = " + rhs.str();
}

} // namespace

VerifyReport verify_star_algebra(const StructureAlgebra& A, const VerifyOptions& opts) {
    const std::uint64_t d = A.dim();
    const Mode mode = resolve_mode(d, opts);
    const auto S = A.space();
    VerifyReport rep;
    rep.subject = S->name();

    auto el = [&](Label l) { return AlgebraElement::basis(S, l); };

    rep.laws.push_back(run_law(
        {"associativity",
         {d, d, d},
         [&, A](std::span<const std::uint64_t> t) {
             auto a = el(t[0]), b = el(t[1]), c = el(t[2]);
             return neq(A.mul(A.mul(a, b), c), A.mul(a, A.mul(b, c)));
         },
         {S, S, S}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"unit-left",
         {d},
         [&, A](std::span<const std::uint64_t> t) { return neq(A.mul(A.unit(), el(t[0])), el(t[0])); },
         {S}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"unit-right",
         {d},
         [&, A](std::span<const std::uint64_t> t) { return neq(A.mul(el(t[0]), A.unit()), el(t[0])); },
         {S}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"star-involution",
         {d},
         [&, A](std::span<const std::uint64_t> t) {
             return neq(A.star(A.star_basis(t[0])), el(t[0]));
         },
         {S}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"star-antimultiplicative",
         {d, d},
         [&, A](std::span<const std::uint64_t> t) {
             auto a = el(t[0]), b = el(t[1]);
             return neq(A.star(A.mul(a, b)), A.mul(A.star_basis(t[1]), A.star_basis(t[0])));
         },
         {S, S}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"star-unit",
         {},
         [&, A](std::span<const std::uint64_t>) { return neq(A.star(A.unit()), A.unit()); },
         {}},
        mode, opts));
    return rep;
}

AlgebraElement comul_left_leg(const HopfStructure& H, const AlgebraElement& pair_elem) {
    const std::uint64_t d = H.base().dim();
    TensorIndexer sq{d};
    auto tri = triple_space(H.base().space(), H.base().space(), H.base().space());
    ElementAccumulator acc(tri);
    for (const auto& [uv, c] : pair_elem.terms()) {
        auto [u, v] = sq.split(uv);
        auto cu = H.comul_basis(u);
        for (const auto& [pq, c2] : cu.terms()) acc.add(pq * d + v, c * c2);
    }
    return acc.freeze();
}

AlgebraElement comul_right_leg(const HopfStructure& H, const AlgebraElement& pair_elem) {
    const std::uint64_t d = H.base().dim();
    TensorIndexer sq{d};
    auto tri = triple_space(H.base().space(), H.base().space(), H.base().space());
    ElementAccumulator acc(tri);
    for (const auto& [uv, c] : pair_elem.terms()) {
        auto [u, v] = sq.split(uv);
        auto cv = H.comul_basis(v);
        for (const auto& [pq, c2] : cv.terms()) acc.add(u * d * d + pq, c * c2);
    }
    return acc.freeze();
}

AlgebraElement counit_left_leg(const HopfStructure& H, const AlgebraElement& pair_elem) {
    TensorIndexer sq{H.base().dim()};
    ElementAccumulator acc(H.base().space());
    for (const auto& [uv, c] : pair_elem.terms()) {
        auto [u, v] = sq.split(uv);
        acc.add(v, c * H.counit_basis(u));
    }
    return acc.freeze();
}

AlgebraElement counit_right_leg(const HopfStructure& H, const AlgebraElement& pair_elem) {
    TensorIndexer sq{H.base().dim()};
    ElementAccumulator acc(H.base().space());
    for (const auto& [uv, c] : pair_elem.terms()) {
        auto [u, v] = sq.split(uv);
        acc.add(u, c * H.counit_basis(v));
    }
    return acc.freeze();
}

AlgebraElement mul_pair(const HopfStructure& H, const AlgebraElement& pair_elem,
                        bool antipode_left, bool antipode_right) {
    TensorIndexer sq{H.base().dim()};
    const auto& A = H.base();
    ElementAccumulator acc(A.space());
    for (const auto& [uv, c] : pair_elem.terms()) {
        auto [u, v] = sq.split(uv);
        AlgebraElement lu = antipode_left ? H.antipode_basis(u) : AlgebraElement::basis(A.space(), u);
        AlgebraElement rv = antipode_right ? H.antipode_basis(v) : AlgebraElement::basis(A.space(), v);
        acc.add(A.mul(lu, rv), c);
    }
    return acc.freeze();
}

VerifyReport verify_hopf(const HopfStructure& H, const VerifyOptions& opts) {
    const auto& A = H.base();
    const std::uint64_t d = A.dim();
    const Mode mode = resolve_mode(d, opts);
    const auto S = A.space();
    VerifyReport rep;
    rep.subject = S->name() + " (hopf)";

    auto el = [&](Label l) { return AlgebraElement::basis(S, l); };
    StructureAlgebra sq_alg = tensor_square_algebra(A);

    rep.laws.push_back(run_law(
        {"coassociativity",
         {d},
         [&, H](std::span<const std::uint64_t> t) {
             auto dl = H.comul_basis(t[0]);
             return neq(comul_left_leg(H, dl), comul_right_leg(H, dl));
         },
         {S}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"counit-left",
         {d},
         [&, H](std::span<const std::uint64_t> t) {
             return neq(counit_left_leg(H, H.comul_basis(t[0])), el(t[0]));
         },
         {S}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"counit-right",
         {d},
         [&, H](std::span<const std::uint64_t> t) {
             return neq(counit_right_leg(H, H.comul_basis(t[0])), el(t[0]));
         },
         {S}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"comultiplication-multiplicative",
         {d, d},
         [&, H](std::span<const std::uint64_t> t) {
             auto prod = A.mul_basis(t[0], t[1]);
             return neq(H.comul(prod), sq_alg.mul(H.comul_basis(t[0]), H.comul_basis(t[1])));
         },
         {S, S}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"comultiplication-unit",
         {},
         [&, H](std::span<const std::uint64_t>) { return neq(H.comul(A.unit()), sq_alg.unit()); },
         {}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"counit-multiplicative",
         {d, d},
         [&, H](std::span<const std::uint64_t> t) {
             Scalar lhs = H.counit(A.mul_basis(t[0], t[1]));
             Scalar rhs = H.counit_basis(t[0]) * H.counit_basis(t[1]);
             return lhs == rhs ? std::string{} : "counit(ab) = " + lhs.str() + " vs " + rhs.str();
         },
         {S, S}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"counit-unit",
         {},
         [&, H](std::span<const std::uint64_t>) {
             Scalar v = H.counit(A.unit());
             return v == Scalar(1) ? std::string{} : "counit(1) = " + v.str();
         },
         {}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"antipode-left",
         {d},
         [&, H](std::span<const std::uint64_t> t) {
             auto lhs = mul_pair(H, H.comul_basis(t[0]), true, false);
             return neq(lhs, A.unit().scaled(H.counit_basis(t[0])));
         },
         {S}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"antipode-right",
         {d},
         [&, H](std::span<const std::uint64_t> t) {
             auto lhs = mul_pair(H, H.comul_basis(t[0]), false, true);
             return neq(lhs, A.unit().scaled(H.counit_basis(t[0])));
         },
         {S}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"star-comultiplication",
         {d},
         [&, H, sq_alg](std::span<const std::uint64_t> t) {
             // star on the tensor square is componentwise
             return neq(H.comul(A.star_basis(t[0])), sq_alg.star(H.comul_basis(t[0])));
         },
         {S}},
        mode, opts));
    return rep;
}

VerifyReport verify_module_algebra(const ModuleAction& action, const VerifyOptions& opts) {
    const auto& H = action.acting();
    const auto& A = H.base();
    const auto& M = action.target();
    const std::uint64_t da = A.dim(), dm = M.dim();
    const Mode mode = resolve_mode(dm, opts);
    const auto SA = A.space();
    const auto SM = M.space();
    VerifyReport rep;
    rep.subject = SA->name() + " acting on " + SM->name();

    auto ea = [&](Label l) { return AlgebraElement::basis(SA, l); };
    auto em = [&](Label l) { return AlgebraElement::basis(SM, l); };
    TensorIndexer sq{da};

    rep.laws.push_back(run_law(
        {"action-composition",
         {da, da, dm},
         [&, action](std::span<const std::uint64_t> t) {
             auto ab = A.mul_basis(t[0], t[1]);
             auto lhs = action.act(ab, em(t[2]));
             auto rhs = action.act(ea(t[0]), action.act_basis(t[1], t[2]));
             return neq(lhs, rhs);
         },
         {SA, SA, SM}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"action-unit",
         {dm},
         [&, action](std::span<const std::uint64_t> t) {
             return neq(action.act(A.unit(), em(t[0])), em(t[0]));
         },
         {SM}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"action-product-rule",
         {da, dm, dm},
         [&, action](std::span<const std::uint64_t> t) {
             auto lhs = action.act(ea(t[0]), M.mul_basis(t[1], t[2]));
             ElementAccumulator acc(SM);
             auto ct = H.comul_basis(t[0]);
             for (const auto& [uv, c] : ct.terms()) {
                 auto [u, v] = sq.split(uv);
                 acc.add(M.mul(action.act_basis(u, t[1]), action.act_basis(v, t[2])), c);
             }
             return neq(lhs, acc.freeze());
         },
         {SA, SM, SM}},
        mode, opts));
    rep.laws.push_back(run_law(
        {"action-on-unit",
         {da},
         [&, action](std::span<const std::uint64_t> t) {
             return neq(action.act(ea(t[0]), M.unit()), M.unit().scaled(H.counit_basis(t[0])));
         },
         {SA}},
        mode, opts));
    return rep;
}

} // namespace gspin
