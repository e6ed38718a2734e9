#include "gspin/observable.hpp"

#include <cstdlib>
#include <stdexcept>

#include "gspin/errors.hpp"
#include "gspin/parallel.hpp"

namespace gspin {

struct GammaCore {
    DoubleAlgebra dbl;
    FieldAlgebra fld;
};

namespace {

Elem monomial_total_shift(const GammaCore& core, Label m) {
    const FiniteGroup& G = core.fld.group();
    auto mono = core.fld.decode(m);
    Elem p = G.identity();
    for (Elem h : mono.rho) p = G.mul(p, h);
    return p;
}

AlgebraElement act_closed(const GammaCore& core, Label a, Label m) {
    const FiniteGroup& G = core.fld.group();
    const FieldAlgebra& F = core.fld;
    auto [h, g] = core.dbl.elems(a);
    if (G.conj(G.inv(g), monomial_total_shift(core, m)) != h) return AlgebraElement(F.space());
    auto mono = F.decode(m);
    for (auto& d : mono.delta) d = G.mul(g, d);
    for (auto& r : mono.rho) r = G.conj(G.inv(g), r);
    return AlgebraElement::basis(F.space(), F.encode(mono));
}

} // namespace

GammaAction::GammaAction(const DoubleAlgebra& D, const FieldAlgebra& F) {
    if (D.group->order() != F.group().order()) {
        throw std::invalid_argument("action needs matching groups");
    }
    if (D.sub.members() != F.subgroup().members()) {
        throw std::invalid_argument("action needs matching subgroups");
    }
    if (!F.subgroup().normal()) {
        throw ValidationError("the action is only defined for a normal shift subgroup");
    }
    core_ = std::make_shared<const GammaCore>(GammaCore{D, F});
}

const DoubleAlgebra& GammaAction::double_algebra() const { return core_->dbl; }
const FieldAlgebra& GammaAction::field() const { return core_->fld; }

Elem GammaAction::total_shift(Label m) const { return monomial_total_shift(*core_, m); }

AlgebraElement GammaAction::act_basis(Label a, Label m) const {
    return act_closed(*core_, a, m);
}

AlgebraElement GammaAction::act(const AlgebraElement& x, const AlgebraElement& v) const {
    require_same_space(x.space(), core_->dbl.space(), "GammaAction::act");
    require_same_space(v.space(), core_->fld.space(), "GammaAction::act");
    ElementAccumulator acc(core_->fld.space());
    for (const auto& [a, ca] : x.terms())
        for (const auto& [m, cm] : v.terms()) acc.add(act_basis(a, m), ca * cm);
    return acc.freeze();
}

namespace {

AlgebraElement act_word_rec(const GammaCore& core, Elem h, Elem g,
                            const std::vector<FieldFactor>& w, std::size_t idx) {
    const FiniteGroup& G = core.fld.group();
    const Subgroup& H = core.fld.subgroup();
    const FieldAlgebra& F = core.fld;
    if (idx == w.size()) {
        if (h == G.identity()) return F.algebra().unit();
        return AlgebraElement(F.space());
    }
    ElementAccumulator acc(F.space());
    const auto& f = w[idx];
    for (int hp = 0; hp < H.order(); ++hp) {
        Elem h1 = H.member(hp);
        AlgebraElement factor(F.space());
        if (f.is_delta) {
            if (h1 != G.identity()) continue;
            factor = F.delta_gen(G.mul(g, f.elem), f.code / 2);
        } else {
            if (h1 != G.conj(G.inv(g), f.elem)) continue;
            factor = F.rho_gen(h1, f.code);
        }
        Elem h2 = G.mul(G.inv(h1), h);
        auto rest = act_word_rec(core, h2, g, w, idx + 1);
        if (rest.is_zero()) continue;
        acc.add(F.algebra().mul(factor, rest), Scalar(1));
    }
    return acc.freeze();
}

} // namespace

AlgebraElement GammaAction::act_word(Label a, Label m) const {
    auto [h, g] = core_->dbl.elems(a);
    return act_word_rec(*core_, h, g, core_->fld.word_of(m), 0);
}

ModuleAction GammaAction::as_module_action() const {
    auto core = core_;
    return ModuleAction(core_->dbl.hopf, core_->fld.algebra(),
                        [core](Label a, Label m) { return act_closed(*core, a, m); });
}

AlgebraElement GammaAction::project_basis(Label m) const {
    const FiniteGroup& G = core_->fld.group();
    const FieldAlgebra& F = core_->fld;
    if (total_shift(m) != G.identity()) return AlgebraElement(F.space());
    ElementAccumulator acc(F.space());
    const Scalar weight = Scalar::rational(1, G.order());
    auto mono = F.decode(m);
    for (Elem g = 0; g < G.order(); ++g) {
        auto moved = mono;
        for (auto& d : moved.delta) d = G.mul(g, d);
        for (auto& r : moved.rho) r = G.conj(G.inv(g), r);
        acc.add(F.encode(moved), weight);
    }
    return acc.freeze();
}

AlgebraElement GammaAction::project(const AlgebraElement& v) const {
    require_same_space(v.space(), core_->fld.space(), "GammaAction::project");
    ElementAccumulator acc(core_->fld.space());
    for (const auto& [m, c] : v.terms()) acc.add(project_basis(m), c);
    return acc.freeze();
}

AlgebraElement v_generator(const FieldAlgebra& F, Elem h, int x) {
    const FiniteGroup& G = F.group();
    ElementAccumulator acc(F.space());
    for (Elem k = 0; k < G.order(); ++k) {
        acc.add(F.from_word({{false, 2 * x - 1, G.conj(G.inv(k), G.inv(h))},
                             {true, 2 * x, k},
                             {false, 2 * x + 1, G.conj(G.inv(k), h)}}),
                Scalar(1));
    }
    return acc.freeze();
}

AlgebraElement v_generator_truncated(const FieldAlgebra& F, Elem h, int x) {
    const FiniteGroup& G = F.group();
    ElementAccumulator acc(F.space());
    for (Elem k = 0; k < G.order(); ++k) {
        acc.add(F.from_word({{true, 2 * x, k}, {false, 2 * x + 1, G.conj(G.inv(k), h)}}),
                Scalar(1));
    }
    return acc.freeze();
}

AlgebraElement w_generator(const FieldAlgebra& F, Elem g, int half_code) {
    const FiniteGroup& G = F.group();
    ElementAccumulator acc(F.space());
    for (Elem k = 0; k < G.order(); ++k) {
        acc.add(F.from_word({{true, half_code - 1, k}, {true, half_code + 1, G.mul(k, g)}}),
                Scalar(1));
    }
    return acc.freeze();
}

std::vector<ObservableGenerator> observable_generators(const FieldAlgebra& F) {
    const LatticeWindow& w = F.window();
    const Subgroup& H = F.subgroup();
    std::vector<ObservableGenerator> out;
    for (int x = w.lo; x <= w.hi; ++x) {
        for (int hp = 0; hp < H.order(); ++hp) {
            Elem h = H.member(hp);
            out.push_back({true, 2 * x, h, v_generator(F, h, x)});
        }
    }
    for (int c = 2 * w.lo + 1; c <= 2 * w.hi - 1; c += 2) {
        for (Elem g = 0; g < F.group().order(); ++g) {
            out.push_back({false, c, g, w_generator(F, g, c)});
        }
    }
    return out;
}

SpanBasis generated_span(const FieldAlgebra& F, const LinalgOptions& lopts) {
    SpanBasis span(F.space(), lopts);
    auto gens = observable_generators(F);
    span.insert(F.algebra().unit());
    std::vector<AlgebraElement> frontier{F.algebra().unit()};
    while (!frontier.empty()) {
        std::vector<AlgebraElement> prods(frontier.size() * gens.size(), AlgebraElement(F.space()));
        parallel_for(prods.size(), lopts.parallel, [&](std::uint64_t i) {
            prods[i] = F.algebra().mul(frontier[i / gens.size()], gens[i % gens.size()].value);
        });
        std::vector<AlgebraElement> next;
        for (auto& p : prods) {
            if (span.insert(p)) next.push_back(std::move(p));
        }
        frontier = std::move(next);
    }
    return span;
}

ObservableSpans observable_spans(const GammaAction& act, const LinalgOptions& lopts) {
    const FieldAlgebra& F = act.field();
    ObservableSpans out{SpanBasis(F.space(), lopts), generated_span(F, lopts)};
    std::vector<AlgebraElement> projected(F.dim(), AlgebraElement(F.space()));
    parallel_for(F.dim(), lopts.parallel,
                 [&](std::uint64_t l) { projected[l] = act.project_basis(l); });
    for (const auto& p : projected) out.z_image.insert(p);
    return out;
}

VerifyReport verify_action(const GammaAction& act, const VerifyOptions& opts) {
    const FieldAlgebra& F = act.field();
    const DoubleAlgebra& D = act.double_algebra();
    const std::uint64_t fd = F.dim();
    const Mode mode = resolve_mode(fd, opts);
    const auto hn = static_cast<std::uint64_t>(F.subgroup().order());
    const auto n = static_cast<std::uint64_t>(F.group().order());
    const auto ni = static_cast<std::uint64_t>(F.window().num_int());
    const auto interior = static_cast<std::uint64_t>(F.window().num_half() - 2);

    VerifyReport out;
    out.subject = D.space()->name() + " acting on " + F.space()->name();
    auto eq = [](const AlgebraElement& a, const AlgebraElement& b) {
        return a == b ? std::string{} : std::string("values differ");
    };

    out.laws.push_back(run_law({"action-closed-matches-word",
                                {D.dim(), fd},
                                [&](std::span<const std::uint64_t> t) {
                                    return eq(act.act_basis(t[0], t[1]), act.act_word(t[0], t[1]));
                                },
                                {D.space(), F.space()}},
                               mode, opts));
    out.laws.push_back(run_law({"projection-idempotent",
                                {fd},
                                [&](std::span<const std::uint64_t> t) {
                                    auto p = act.project_basis(t[0]);
                                    return eq(act.project(p), p);
                                },
                                {F.space()}},
                               mode, opts));
    out.laws.push_back(run_law({"projection-fixes-shift-sandwich",
                                {ni, hn},
                                [&](std::span<const std::uint64_t> t) {
                                    auto v = v_generator(F, F.subgroup().member(static_cast<int>(t[1])),
                                                         F.window().lo + static_cast<int>(t[0]));
                                    return eq(act.project(v), v);
                                },
                                {}},
                               Mode::exhaustive, opts));
    out.laws.push_back(run_law({"projection-fixes-paired-projection",
                                {interior, n},
                                [&](std::span<const std::uint64_t> t) {
                                    auto w = w_generator(F, static_cast<Elem>(t[1]),
                                                         2 * F.window().lo + 1 + 2 * static_cast<int>(t[0]));
                                    return eq(act.project(w), w);
                                },
                                {}},
                               Mode::exhaustive, opts));
    return out;
}

VerifyReport verify_generator_relations(const FieldAlgebra& F, const VerifyOptions& opts) {
    const FiniteGroup& G = F.group();
    const Subgroup& H = F.subgroup();
    const LatticeWindow& w = F.window();
    const auto n = static_cast<std::uint64_t>(G.order());
    const auto hn = static_cast<std::uint64_t>(H.order());
    const auto ni = static_cast<std::uint64_t>(w.num_int());
    const auto interior = static_cast<std::uint64_t>(w.num_half() - 2);
    const auto gens = observable_generators(F);
    const auto ng = static_cast<std::uint64_t>(gens.size());
    const auto& A = F.algebra();

    auto vval = [&](std::uint64_t site, std::uint64_t hp) {
        return gens[site * hn + hp].value;
    };
    auto wval = [&](std::uint64_t site, std::uint64_t g) {
        return gens[ni * hn + site * n + g].value;
    };
    auto eq = [](const AlgebraElement& a, const AlgebraElement& b) {
        return a == b ? std::string{} : std::string("values differ");
    };

    VerifyReport out;
    out.subject = F.space()->name() + " generator relations";
    out.laws.push_back(run_law({"shift-family-multiplies",
                                {ni, hn, hn},
                                [&](std::span<const std::uint64_t> t) {
                                    Elem h1 = H.member(static_cast<int>(t[1]));
                                    Elem h2 = H.member(static_cast<int>(t[2]));
                                    auto prod = G.mul(h1, h2);
                                    return eq(A.mul(vval(t[0], t[1]), vval(t[0], t[2])),
                                              vval(t[0], static_cast<std::uint64_t>(H.index_of(prod))));
                                },
                                {}},
                               Mode::exhaustive, opts));
    out.laws.push_back(run_law({"shift-family-unital",
                                {ni},
                                [&](std::span<const std::uint64_t> t) {
                                    return eq(vval(t[0], static_cast<std::uint64_t>(
                                                             H.index_of(G.identity()))),
                                              A.unit());
                                },
                                {}},
                               Mode::exhaustive, opts));
    out.laws.push_back(run_law({"paired-projection-orthogonal",
                                {interior, n, n},
                                [&](std::span<const std::uint64_t> t) {
                                    auto prod = A.mul(wval(t[0], t[1]), wval(t[0], t[2]));
                                    if (t[1] == t[2]) return eq(prod, wval(t[0], t[1]));
                                    return prod.is_zero() ? std::string{}
                                                          : std::string("product not zero");
                                },
                                {}},
                               Mode::exhaustive, opts));
    out.laws.push_back(run_law({"paired-projection-resolution",
                                {interior},
                                [&](std::span<const std::uint64_t> t) {
                                    AlgebraElement sum(F.space());
                                    for (std::uint64_t g = 0; g < n; ++g) sum += wval(t[0], g);
                                    return eq(sum, A.unit());
                                },
                                {}},
                               Mode::exhaustive, opts));
    out.laws.push_back(run_law({"generator-star",
                                {ng},
                                [&](std::span<const std::uint64_t> t) {
                                    const auto& gen = gens[t[0]];
                                    if (!gen.is_v) return eq(A.star(gen.value), gen.value);
                                    return eq(A.star(gen.value),
                                              v_generator(F, G.inv(gen.elem), gen.code / 2));
                                },
                                {}},
                               Mode::exhaustive, opts));
    out.laws.push_back(run_law(
        {"generator-exchange",
         {ni > 0 ? ni - 1 : 0, hn, n},
         [&](std::span<const std::uint64_t> t) {
             const int x = w.lo + static_cast<int>(t[0]);
             Elem h = H.member(static_cast<int>(t[1]));
             Elem g = static_cast<Elem>(t[2]);
             auto v_left = vval(t[0], t[1]);       // at x
             auto v_right = vval(t[0] + 1, t[1]);  // at x + 1
             auto wmid = w_generator(F, g, 2 * x + 1);
             auto up = eq(A.mul(wmid, v_left),
                          A.mul(v_left, w_generator(F, G.mul(G.inv(h), g), 2 * x + 1)));
             if (!up.empty()) return "w v at " + std::to_string(x) + ": " + up;
             auto down = eq(A.mul(v_right, wmid),
                            A.mul(w_generator(F, G.mul(g, G.inv(h)), 2 * x + 1), v_right));
             if (!down.empty()) return "v w at " + std::to_string(x + 1) + ": " + down;
             return std::string{};
         },
         {}},
        Mode::exhaustive, opts));
    out.laws.push_back(run_law({"generator-distant-commute",
                                {ng, ng},
                                [&](std::span<const std::uint64_t> t) {
                                    const auto& a = gens[t[0]];
                                    const auto& b = gens[t[1]];
                                    if (std::abs(a.code - b.code) < 2) return std::string{};
                                    return eq(A.mul(a.value, b.value), A.mul(b.value, a.value));
                                },
                                {}},
                               Mode::exhaustive, opts));
    return out;
}

VerifyReport verify_observables(const GammaAction& act, const ObservableSpans& spans,
                                const VerifyOptions& opts) {
    const FieldAlgebra& F = act.field();
    const FiniteGroup& G = F.group();
    const auto n = static_cast<std::uint64_t>(G.order());
    const auto ni = static_cast<std::uint64_t>(F.window().num_int());

    VerifyReport out;
    out.subject = F.space()->name() + " invariant subalgebra";
    out.laws.push_back(run_law({"projection-image-in-generated",
                                {spans.z_image.rank()},
                                [&](std::span<const std::uint64_t> t) {
                                    return spans.vw.contains(spans.z_image.rows()[t[0]])
                                               ? std::string{}
                                               : std::string("row escapes the generated span");
                                },
                                {}},
                               Mode::exhaustive, opts));
    out.laws.push_back(run_law({"generated-in-projection-image",
                                {spans.vw.rank()},
                                [&](std::span<const std::uint64_t> t) {
                                    return spans.z_image.contains(spans.vw.rows()[t[0]])
                                               ? std::string{}
                                               : std::string("row escapes the projection image");
                                },
                                {}},
                               Mode::exhaustive, opts));
    out.laws.push_back(run_law(
        {"rank-matches-factor-count",
         {},
         [&](std::span<const std::uint64_t>) {
             std::uint64_t expect = 1;
             for (std::uint64_t i = 0; i < ni; ++i) {
                 expect *= static_cast<std::uint64_t>(F.subgroup().order());
             }
             for (std::uint64_t i = 0; i + 1 < ni; ++i) expect *= n;
             if (spans.z_image.rank() != expect || spans.vw.rank() != expect) {
                 return "ranks " + std::to_string(spans.z_image.rank()) + ", " +
                        std::to_string(spans.vw.rank()) + " != " + std::to_string(expect);
             }
             return std::string{};
         },
         {}},
        Mode::exhaustive, opts));
    if (ni >= 2) {
        out.laws.push_back(run_law(
            {"adjacent-pair-projection",
             {ni - 1, n, n},
             [&](std::span<const std::uint64_t> t) {
                 const int x = F.window().lo + static_cast<int>(t[0]);
                 Elem g1 = static_cast<Elem>(t[1]);
                 Elem g2 = static_cast<Elem>(t[2]);
                 auto pair = F.algebra().mul(F.delta_gen(g1, x), F.delta_gen(g2, x + 1));
                 auto expect =
                     w_generator(F, G.mul(G.inv(g1), g2), 2 * x + 1).scaled(Scalar::rational(1, G.order()));
                 return act.project(pair) == expect ? std::string{}
                                                    : std::string("projection differs");
             },
             {}},
            Mode::exhaustive, opts));
    }
    return out;
}

GeneratorProductMap::GeneratorProductMap(const IteratedAlgebra& A, const FieldAlgebra& F) {
    if (A.lo() != 2 * F.window().lo || A.hi() != 2 * F.window().hi) {
        throw std::invalid_argument("map needs the doubled window of the field algebra");
    }
    if (A.group().order() != F.group().order() ||
        A.subgroup().members() != F.subgroup().members()) {
        throw std::invalid_argument("map needs matching groups");
    }
    dom_ = std::make_shared<const IteratedAlgebra>(A);
    cod_ = std::make_shared<const FieldAlgebra>(F);
    auto images = std::make_shared<std::vector<AlgebraElement>>();
    images->reserve(A.dim());
    for (Label l = 0; l < A.dim(); ++l) {
        auto digits = A.digits(l);
        AlgebraElement acc = F.algebra().unit();
        for (int i = A.lo(); i <= A.hi(); ++i) {
            const int d = digits[static_cast<std::size_t>(i - A.lo())];
            AlgebraElement factor =
                i % 2 == 0 ? v_generator(F, F.subgroup().member(d), i / 2)
                           : w_generator(F, static_cast<Elem>(d), i);
            acc = F.algebra().mul(acc, factor);
        }
        images->push_back(std::move(acc));
    }
    images_ = std::move(images);
}

const IteratedAlgebra& GeneratorProductMap::domain() const { return *dom_; }
const FieldAlgebra& GeneratorProductMap::codomain() const { return *cod_; }

const AlgebraElement& GeneratorProductMap::image_basis(Label l) const { return (*images_)[l]; }

AlgebraElement GeneratorProductMap::image(const AlgebraElement& x) const {
    require_same_space(x.space(), dom_->space(), "GeneratorProductMap::image");
    ElementAccumulator acc(cod_->space());
    for (const auto& [l, c] : x.terms()) acc.add(image_basis(l), c);
    return acc.freeze();
}

VerifyReport verify_generator_product_map(const GeneratorProductMap& phi,
                                          const ObservableSpans* spans,
                                          const VerifyOptions& opts) {
    const IteratedAlgebra& A = phi.domain();
    const FieldAlgebra& F = phi.codomain();
    const std::uint64_t d = A.dim();
    const Mode mode = resolve_mode(d, opts);
    auto eq = [](const AlgebraElement& a, const AlgebraElement& b) {
        return a == b ? std::string{} : std::string("values differ");
    };

    VerifyReport out;
    out.subject = A.space()->name() + " -> " + F.space()->name();
    out.laws.push_back(run_law({"map-unital",
                                {},
                                [&](std::span<const std::uint64_t>) {
                                    return eq(phi.image(A.algebra().unit()), F.algebra().unit());
                                },
                                {}},
                               Mode::exhaustive, opts));
    out.laws.push_back(run_law({"map-multiplicative",
                                {d, d},
                                [&](std::span<const std::uint64_t> t) {
                                    return eq(phi.image(A.algebra().mul_basis(t[0], t[1])),
                                              F.algebra().mul(phi.image_basis(t[0]),
                                                              phi.image_basis(t[1])));
                                },
                                {A.space(), A.space()}},
                               mode, opts));
    out.laws.push_back(run_law({"map-star",
                                {d},
                                [&](std::span<const std::uint64_t> t) {
                                    return eq(phi.image(A.algebra().star_basis(t[0])),
                                              F.algebra().star(phi.image_basis(t[0])));
                                },
                                {A.space()}},
                               Mode::exhaustive, opts));
    out.laws.push_back(run_law(
        {"map-injective",
         {},
         [&](std::span<const std::uint64_t>) {
             std::vector<AlgebraElement> images;
             images.reserve(d);
             for (Label l = 0; l < d; ++l) images.push_back(phi.image_basis(l));
             auto r = span_rank(images, {.parallel = opts.parallel});
             if (r != d) return "rank " + std::to_string(r) + " != " + std::to_string(d);
             return std::string{};
         },
         {}},
        Mode::exhaustive, opts));
    if (spans != nullptr) {
        out.laws.push_back(run_law({"map-image-in-generated",
                                    {d},
                                    [&](std::span<const std::uint64_t> t) {
                                        return spans->vw.contains(phi.image_basis(t[0]))
                                                   ? std::string{}
                                                   : std::string("image escapes the span");
                                    },
                                    {A.space()}},
                                   Mode::exhaustive, opts));
        auto img_span = std::make_shared<SpanBasis>(F.space(), LinalgOptions{.parallel = opts.parallel});
        for (Label l = 0; l < d; ++l) img_span->insert(phi.image_basis(l));
        out.laws.push_back(run_law({"generated-in-map-image",
                                    {spans->vw.rank()},
                                    [&, img_span](std::span<const std::uint64_t> t) {
                                        return img_span->contains(spans->vw.rows()[t[0]])
                                                   ? std::string{}
                                                   : std::string("span row escapes the image");
                                    },
                                    {}},
                                   Mode::exhaustive, opts));
    }
    return out;
}

VerifyReport verify_map_tower(const GeneratorProductMap& inner, const GeneratorProductMap& outer,
                              const VerifyOptions& opts) {
    VerifyReport out;
    out.subject = inner.domain().space()->name() + " inside " + outer.domain().space()->name();
    out.laws.push_back(run_law(
        {"tower-compatible",
         {inner.domain().dim()},
         [&](std::span<const std::uint64_t> t) {
             auto via_domain = outer.image(embed_window(inner.domain(), outer.domain(), t[0]));
             auto via_field =
                 transport_field_elem(inner.codomain(), outer.codomain(), inner.image_basis(t[0]));
             return via_domain == via_field ? std::string{} : std::string("paths differ");
         },
         {inner.domain().space()}},
        Mode::exhaustive, opts));
    return out;
}

} // namespace gspin
