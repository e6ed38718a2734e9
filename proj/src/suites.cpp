#include "gspin/suites.hpp"

#include <json.hpp>
#include <optional>
#include <sstream>

#include "gspin/errors.hpp"
#include "gspin/field.hpp"
#include "gspin/observable.hpp"
#include "gspin/quantum_double.hpp"
#include "gspin/twist.hpp"

namespace gspin {

std::uint64_t SuiteResult::failed_laws() const {
    std::uint64_t n = 0;
    for (const auto& r : reports)
        for (const auto& l : r.laws)
            if (!l.pass()) ++n;
    return n;
}

bool SuiteResult::pass() const {
    return expect_failures ? failed_laws() > 0 : failed_laws() == 0;
}

bool RunReport::pass() const {
    for (const auto& s : suites)
        if (!s.pass()) return false;
    return true;
}

const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> names = {"group",  "double",     "hopf", "twist",
                                                   "hexagon", "field",      "action",
                                                   "observable", "phi",    "inclusion",
                                                   "negative"};
    return names;
}

namespace {

struct RunContext {
    const RunConfig& cfg;
    GroupRef G;
    Subgroup H;
    std::optional<DoubleAlgebra> dbl;
    std::optional<FieldAlgebra> fld;
    std::optional<GammaAction> act;
    std::optional<ObservableSpans> spans;
    std::optional<IteratedAlgebra> iter;

    explicit RunContext(const RunConfig& c) : cfg(c) {
        if (cfg.window_lo > cfg.window_hi) throw ConfigError("window needs lo <= hi");
        G = std::make_shared<const FiniteGroup>(parse_group_spec(cfg.group, cfg.max_group_order));
        H = parse_subgroup_spec(*G, cfg.subgroup);
    }

    LatticeWindow window() const { return {cfg.window_lo, cfg.window_hi}; }
    LinalgOptions lopts() const { return {.parallel = cfg.verify.parallel}; }

    const DoubleAlgebra& require_double() {
        if (!dbl) dbl = build_double(*G, H);
        return *dbl;
    }
    const FieldAlgebra& require_field() {
        if (!fld) fld = FieldAlgebra(*G, H, window(), cfg.max_basis);
        return *fld;
    }
    const GammaAction& require_action() {
        if (!act) act = GammaAction(require_double(), require_field());
        return *act;
    }
    const ObservableSpans& require_spans() {
        if (!spans) spans = observable_spans(require_action(), lopts());
        return *spans;
    }
    const IteratedAlgebra& require_iter() {
        if (!iter) iter = IteratedAlgebra::build(*G, H, 2 * cfg.window_lo, 2 * cfg.window_hi);
        return *iter;
    }
};

SuiteResult suite_group(RunContext& ctx) {
    SuiteResult out{"group"};
    const FiniteGroup& G = *ctx.G;
    const auto& opts = ctx.cfg.verify;
    const auto n = static_cast<std::uint64_t>(G.order());
    const auto hn = static_cast<std::uint64_t>(ctx.H.order());

    VerifyReport rep;
    rep.subject = ctx.cfg.group + " with subgroup {" + ctx.cfg.subgroup + "}";
    rep.laws.push_back(run_law({"associativity",
                                {n, n, n},
                                [&](std::span<const std::uint64_t> t) {
                                    auto a = static_cast<Elem>(t[0]);
                                    auto b = static_cast<Elem>(t[1]);
                                    auto c = static_cast<Elem>(t[2]);
                                    return G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
                                               ? std::string{}
                                               : std::string("products differ");
                                },
                                {}},
                               Mode::exhaustive, opts));
    rep.laws.push_back(run_law({"identity-element",
                                {n},
                                [&](std::span<const std::uint64_t> t) {
                                    auto a = static_cast<Elem>(t[0]);
                                    return G.mul(G.identity(), a) == a && G.mul(a, G.identity()) == a
                                               ? std::string{}
                                               : std::string("identity fails");
                                },
                                {}},
                               Mode::exhaustive, opts));
    rep.laws.push_back(run_law({"inverse-element",
                                {n},
                                [&](std::span<const std::uint64_t> t) {
                                    auto a = static_cast<Elem>(t[0]);
                                    return G.mul(a, G.inv(a)) == G.identity() &&
                                                   G.mul(G.inv(a), a) == G.identity()
                                               ? std::string{}
                                               : std::string("inverse fails");
                                },
                                {}},
                               Mode::exhaustive, opts));
    rep.laws.push_back(run_law({"subgroup-closed",
                                {hn, hn},
                                [&](std::span<const std::uint64_t> t) {
                                    Elem p = G.mul(ctx.H.member(static_cast<int>(t[0])),
                                                   ctx.H.member(static_cast<int>(t[1])));
                                    return ctx.H.contains(p) ? std::string{}
                                                             : std::string("product escapes");
                                },
                                {}},
                               Mode::exhaustive, opts));
    rep.laws.push_back(run_law({"subgroup-inverse-closed",
                                {hn},
                                [&](std::span<const std::uint64_t> t) {
                                    return ctx.H.contains(G.inv(ctx.H.member(static_cast<int>(t[0]))))
                                               ? std::string{}
                                               : std::string("inverse escapes");
                                },
                                {}},
                               Mode::exhaustive, opts));
    out.reports.push_back(std::move(rep));

    out.stats.emplace_back("order", n);
    out.stats.emplace_back("abelian", G.is_abelian() ? 1 : 0);
    out.stats.emplace_back("subgroup-order", hn);
    out.stats.emplace_back("subgroup-index", n / hn);
    out.stats.emplace_back("subgroup-normal", ctx.H.normal() ? 1 : 0);
    if (auto w = ctx.H.normality_witness()) {
        out.notes.push_back("not normal: conjugating " + G.name(w->second) + " by " +
                            G.name(w->first) + " leaves the subgroup");
    }
    return out;
}

SuiteResult suite_double(RunContext& ctx) {
    SuiteResult out{"double"};
    const auto& D = ctx.require_double();
    out.reports.push_back(verify_star_algebra(D.hopf.base(), ctx.cfg.verify));
    out.reports.push_back(verify_integral(D, ctx.cfg.verify));
    out.stats.emplace_back("dim", D.dim());
    return out;
}

SuiteResult suite_hopf(RunContext& ctx) {
    SuiteResult out{"hopf"};
    const auto& D = ctx.require_double();
    out.reports.push_back(verify_hopf(D.hopf, ctx.cfg.verify));
    out.stats.emplace_back("dim", D.dim());
    return out;
}

SuiteResult suite_twist(RunContext& ctx) {
    SuiteResult out{"twist"};
    const FiniteGroup& G = *ctx.G;
    const auto& opts = ctx.cfg.verify;
    const int lo2 = 2 * ctx.cfg.window_lo - 2;
    const int hi2 = 2 * ctx.cfg.window_hi + 2;

    for (int i = lo2; i <= hi2; ++i) {
        for (int j = i + 1; j <= hi2; ++j) {
            auto rep = verify_twisting_map(standard_twist(G, ctx.H, i, j), opts);
            rep.subject = "R(" + std::to_string(i) + "," + std::to_string(j) + ") " + rep.subject;
            out.reports.push_back(std::move(rep));
        }
    }
    out.stats.emplace_back("factor-range-pairs",
                           static_cast<std::uint64_t>((hi2 - lo2 + 1) * (hi2 - lo2) / 2));

    if (ctx.H.normal()) {
        auto hopf = group_hopf(G);
        auto target = dual_subgroup_algebra(G, ctx.H);
        auto space = target.space();
        Subgroup H = ctx.H;
        GroupRef g = ctx.G;
        ModuleAction conj_act(hopf, target, [g, H, space](Label a, Label m) {
            int pos = H.index_of(g->conj(g->inv(static_cast<Elem>(a)), H.member(static_cast<int>(m))));
            if (pos < 0) return AlgebraElement(space);
            return AlgebraElement::basis(space, static_cast<Label>(pos));
        });
        auto mrep = verify_module_algebra(conj_act, opts);
        mrep.subject = "conjugation module: " + mrep.subject;
        out.reports.push_back(std::move(mrep));

        auto R = twist_from_module(conj_act);
        auto trep = verify_twisting_map(R, opts);
        trep.subject = "conjugation twist: " + trep.subject;
        out.reports.push_back(std::move(trep));

        const auto& D = ctx.require_double();
        auto smash = twisted_pair_algebra(target, group_algebra(G), R);
        VerifyReport cmp;
        cmp.subject = "smash product against " + D.space()->name();
        const std::uint64_t d = D.dim();
        cmp.laws.push_back(run_law({"smash-product-matches",
                                    {d, d},
                                    [&](std::span<const std::uint64_t> t) {
                                        return smash.mul_basis(t[0], t[1]).terms() ==
                                                       D.hopf.base().mul_basis(t[0], t[1]).terms()
                                                   ? std::string{}
                                                   : std::string("structure constants differ");
                                    },
                                    {D.space(), D.space()}},
                                   Mode::exhaustive, opts));
        cmp.laws.push_back(run_law({"smash-unit-matches",
                                    {},
                                    [&](std::span<const std::uint64_t>) {
                                        return smash.unit().terms() == D.hopf.base().unit().terms()
                                                   ? std::string{}
                                                   : std::string("units differ");
                                    },
                                    {}},
                                   Mode::exhaustive, opts));
        out.reports.push_back(std::move(cmp));
    } else {
        out.notes.push_back("smash recovery skipped: subgroup is not normal");
    }

    auto A02 = IteratedAlgebra::build(G, ctx.H, 0, 2);
    auto r02 = verify_representation(A02, repr_pi_02(G, ctx.H), opts);
    out.reports.push_back(std::move(r02));
    auto A13 = IteratedAlgebra::build(G, ctx.H, 1, 3);
    auto r13 = verify_representation(A13, repr_pi_13(G, ctx.H), opts);
    out.reports.push_back(std::move(r13));
    out.stats.emplace_back("three-factor-even-dim", A02.dim());
    out.stats.emplace_back("three-factor-odd-dim", A13.dim());
    return out;
}

SuiteResult suite_hexagon(RunContext& ctx) {
    SuiteResult out{"hexagon"};
    const FiniteGroup& G = *ctx.G;
    const auto& opts = ctx.cfg.verify;
    const int lo2 = 2 * ctx.cfg.window_lo - 2;
    const int hi2 = 2 * ctx.cfg.window_hi + 2;

    std::uint64_t triples = 0;
    for (int i = lo2; i <= hi2; ++i) {
        for (int j = i + 1; j <= hi2; ++j) {
            for (int k = j + 1; k <= hi2; ++k) {
                auto rep = verify_hexagon(standard_twist(G, ctx.H, i, j),
                                          standard_twist(G, ctx.H, j, k),
                                          standard_twist(G, ctx.H, i, k), opts);
                rep.subject = "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                              std::to_string(k) + ") " + rep.subject;
                out.reports.push_back(std::move(rep));
                ++triples;
            }
        }
    }
    out.stats.emplace_back("triples", triples);

    auto bracketing = [&](const IteratedAlgebra& A) {
        VerifyReport rep;
        rep.subject = A.space()->name() + " bracketing";
        const std::uint64_t d = A.dim();
        rep.laws.push_back(run_law({"bracketing-orders-agree",
                                    {d, d},
                                    [&](std::span<const std::uint64_t> t) {
                                        return A.mul_ordered(t[0], t[1], BubbleOrder::rightmost) ==
                                                       A.mul_ordered(t[0], t[1], BubbleOrder::leftmost)
                                                   ? std::string{}
                                                   : std::string("orders disagree");
                                    },
                                    {A.space(), A.space()}},
                                   resolve_mode(d, opts), opts));
        return rep;
    };
    const auto& A_even = ctx.require_iter();
    out.reports.push_back(bracketing(A_even));
    auto A_odd = IteratedAlgebra::build(G, ctx.H, 2 * ctx.cfg.window_lo + 1,
                                        2 * ctx.cfg.window_hi + 1);
    out.reports.push_back(bracketing(A_odd));
    out.reports.push_back(verify_star_algebra(A_even.algebra(), opts));
    out.stats.emplace_back("window-dim", A_even.dim());
    out.stats.emplace_back("shifted-window-dim", A_odd.dim());
    return out;
}

SuiteResult suite_field(RunContext& ctx) {
    SuiteResult out{"field"};
    const auto& F = ctx.require_field();
    const auto& opts = ctx.cfg.verify;
    out.reports.push_back(verify_star_algebra(F.algebra(), opts));

    VerifyReport rw;
    rw.subject = F.space()->name() + " word rewriting";
    const std::uint64_t d = F.dim();
    const Mode mode = resolve_mode(d, opts);
    rw.laws.push_back(run_law(
        {"product-matches-rewrite",
         {d, d},
         [&](std::span<const std::uint64_t> t) {
             auto closed = F.algebra().mul_basis(t[0], t[1]);
             if (closed != F.mul_basis_rewrite(t[0], t[1], ReduceStrategy::leftmost)) {
                 return std::string("leftmost rewrite differs");
             }
             if (closed != F.mul_basis_rewrite(t[0], t[1], ReduceStrategy::rightmost)) {
                 return std::string("rightmost rewrite differs");
             }
             return std::string{};
         },
         {F.space(), F.space()}},
        mode, opts));
    rw.laws.push_back(run_law(
        {"star-matches-rewrite",
         {d},
         [&](std::span<const std::uint64_t> t) {
             auto closed = F.algebra().star_basis(t[0]);
             if (closed != F.star_basis_rewrite(t[0], ReduceStrategy::leftmost)) {
                 return std::string("leftmost rewrite differs");
             }
             if (closed != F.star_basis_rewrite(t[0], ReduceStrategy::rightmost)) {
                 return std::string("rightmost rewrite differs");
             }
             return std::string{};
         },
         {F.space()}},
        mode, opts));
    out.reports.push_back(std::move(rw));

    auto rep = lattice_representation(F);
    out.reports.push_back(verify_lattice(F, rep, opts));
    out.stats.emplace_back("dim", d);
    out.stats.emplace_back("lattice-carrier", rep.carrier);
    if (rep.carrier <= 100) {
        out.stats.emplace_back("lattice-rank", lattice_rank(F, rep, opts.parallel));
    } else {
        out.notes.push_back("lattice rank skipped: carrier " + std::to_string(rep.carrier) +
                            " above the reporting bound");
    }
    return out;
}

SuiteResult suite_action(RunContext& ctx) {
    SuiteResult out{"action"};
    const auto& act = ctx.require_action();
    const auto& opts = ctx.cfg.verify;
    out.reports.push_back(verify_action(act, opts));
    out.reports.push_back(verify_module_algebra(act.as_module_action(), opts));
    out.reports.push_back(verify_generator_relations(ctx.require_field(), opts));
    out.stats.emplace_back("double-dim", act.double_algebra().dim());
    out.stats.emplace_back("field-dim", act.field().dim());
    return out;
}

SuiteResult suite_observable(RunContext& ctx) {
    SuiteResult out{"observable"};
    const auto& act = ctx.require_action();
    const auto& spans = ctx.require_spans();
    out.reports.push_back(verify_observables(act, spans, ctx.cfg.verify));
    out.stats.emplace_back("field-dim", act.field().dim());
    out.stats.emplace_back("projection-image-rank", spans.z_image.rank());
    out.stats.emplace_back("generated-rank", spans.vw.rank());
    return out;
}

SuiteResult suite_phi(RunContext& ctx) {
    SuiteResult out{"phi"};
    const auto& opts = ctx.cfg.verify;
    const auto& A = ctx.require_iter();
    const auto& F = ctx.require_field();
    GeneratorProductMap phi(A, F);
    out.reports.push_back(verify_generator_product_map(phi, &ctx.require_spans(), opts));
    out.stats.emplace_back("domain-dim", A.dim());
    out.stats.emplace_back("field-dim", F.dim());

    if (F.window().num_int() >= 2) {
        FieldAlgebra F_in(*ctx.G, ctx.H, {ctx.cfg.window_lo, ctx.cfg.window_hi - 1},
                          ctx.cfg.max_basis);
        auto A_in = IteratedAlgebra::build(*ctx.G, ctx.H, 2 * ctx.cfg.window_lo,
                                           2 * ctx.cfg.window_hi - 2);
        out.reports.push_back(verify_embedding(A_in, A, opts));
        GeneratorProductMap phi_in(A_in, F_in);
        out.reports.push_back(verify_map_tower(phi_in, phi, opts));
        out.stats.emplace_back("inner-domain-dim", A_in.dim());
    } else {
        out.notes.push_back("tower check skipped: window has a single site");
    }
    return out;
}

SuiteResult suite_inclusion(RunContext& ctx) {
    SuiteResult out{"inclusion"};
    const FiniteGroup& G = *ctx.G;
    if (ctx.H.order() == G.order()) {
        out.notes.push_back("inclusion skipped: subgroup is the whole group");
        return out;
    }
    const auto& F_sub = ctx.require_field();
    auto span_sub = generated_span(F_sub, ctx.lopts());
    FieldAlgebra F_all(G, Subgroup::whole(G), ctx.window(), ctx.cfg.max_basis);
    auto span_all = generated_span(F_all, ctx.lopts());

    VerifyReport rep;
    rep.subject = F_sub.space()->name() + " into " + F_all.space()->name();
    rep.laws.push_back(run_law({"generated-span-included",
                                {span_sub.rank()},
                                [&](std::span<const std::uint64_t> t) {
                                    auto moved = transport_field_elem(F_sub, F_all,
                                                                     span_sub.rows()[t[0]]);
                                    return span_all.contains(moved)
                                               ? std::string{}
                                               : std::string("row escapes the ambient span");
                                },
                                {}},
                               Mode::exhaustive, ctx.cfg.verify));
    out.reports.push_back(std::move(rep));
    out.stats.emplace_back("generated-rank", span_sub.rank());
    out.stats.emplace_back("ambient-generated-rank", span_all.rank());
    return out;
}

SuiteResult suite_negative(RunContext& ctx) {
    SuiteResult out{"negative"};
    out.expect_failures = true;
    const FiniteGroup& G = *ctx.G;
    const auto& opts = ctx.cfg.verify;
    bool any_control = false;

    if (!ctx.H.normal()) {
        any_control = true;
        auto forced = build_double(G, ctx.H, true);
        auto r1 = verify_star_algebra(forced.hopf.base(), opts);
        r1.subject = "force-built " + r1.subject;
        auto r2 = verify_hopf(forced.hopf, opts);
        r2.subject = "force-built " + r2.subject;
        out.reports.push_back(std::move(r1));
        out.reports.push_back(std::move(r2));
        out.notes.push_back(
            "double force-built over a non-normal subgroup; axiom failures are the expected defect");
    }

    if (ctx.H.normal() && ctx.H.order() > 1) {
        any_control = true;
        const auto& F = ctx.require_field();
        const auto& act = ctx.require_action();
        const auto ni = static_cast<std::uint64_t>(F.window().num_int());
        const auto hn = static_cast<std::uint64_t>(ctx.H.order());
        VerifyReport rep;
        rep.subject = F.space()->name() + " truncated shift sandwich";
        rep.laws.push_back(run_law(
            {"truncated-generator-invariant",
             {ni, hn},
             [&](std::span<const std::uint64_t> t) {
                 auto v = v_generator_truncated(F, ctx.H.member(static_cast<int>(t[1])),
                                                F.window().lo + static_cast<int>(t[0]));
                 return act.project(v) == v ? std::string{}
                                            : std::string("projection moves the generator");
             },
             {}},
            Mode::exhaustive, opts));
        out.reports.push_back(std::move(rep));
        out.notes.push_back(
            "the truncated generator drops its left shift leg; invariance is expected to fail "
            "whenever the sandwiched element is nontrivial");
    }

    if (ctx.H.order() < G.order()) {
        any_control = true;
        auto hopf = group_hopf(G);
        auto target = dual_subgroup_algebra(G, ctx.H);
        auto space = target.space();
        Subgroup H = ctx.H;
        GroupRef g = ctx.G;
        ModuleAction gated(hopf, target, [g, H, space](Label a, Label m) {
            auto ga = static_cast<Elem>(a);
            if (!H.contains(ga)) return AlgebraElement(space);
            int pos = H.index_of(g->mul(H.member(static_cast<int>(m)), g->inv(ga)));
            return AlgebraElement::basis(space, static_cast<Label>(pos));
        });
        auto rep = verify_module_algebra(gated, opts);
        rep.subject = "membership-gated translation: " + rep.subject;
        out.reports.push_back(std::move(rep));
        out.notes.push_back(
            "translation gated on subgroup membership is not an action; the composition law is "
            "expected to fail when a factor leaves the subgroup");
    }

    if (!any_control) {
        out.expect_failures = false;
        out.notes.push_back("no negative control applies to this instance");
    }
    return out;
}

SuiteResult dispatch(RunContext& ctx, const std::string& name) {
    if (name == "group") return suite_group(ctx);
    if (name == "double") return suite_double(ctx);
    if (name == "hopf") return suite_hopf(ctx);
    if (name == "twist") return suite_twist(ctx);
    if (name == "hexagon") return suite_hexagon(ctx);
    if (name == "field") return suite_field(ctx);
    if (name == "action") return suite_action(ctx);
    if (name == "observable") return suite_observable(ctx);
    if (name == "phi") return suite_phi(ctx);
    if (name == "inclusion") return suite_inclusion(ctx);
    if (name == "negative") return suite_negative(ctx);
    throw ConfigError("unknown suite '" + name + "'");
}

} // namespace

RunReport run_suites(const RunConfig& cfg) {
    RunContext ctx(cfg);
    std::vector<std::string> list = cfg.suites;
    if (list.empty() || (list.size() == 1 && list[0] == "all")) list = known_suites();
    RunReport out{cfg, {}};
    out.suites.reserve(list.size());
    for (const auto& name : list) out.suites.push_back(dispatch(ctx, name));
    return out;
}

namespace {

nlohmann::ordered_json law_json(const LawResult& l) {
    nlohmann::ordered_json j;
    j["law"] = l.law;
    j["mode"] = l.mode;
    j["checked"] = l.checked;
    j["failed"] = l.failed;
    auto ws = nlohmann::ordered_json::array();
    for (const auto& w : l.witnesses) {
        nlohmann::ordered_json wj;
        wj["tuple"] = w.tuple;
        wj["labels"] = w.labels;
        wj["detail"] = w.detail;
        ws.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(ws);
    return j;
}

nlohmann::ordered_json report_json_obj(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["subject"] = r.subject;
    j["pass"] = r.pass();
    auto laws = nlohmann::ordered_json::array();
    for (const auto& l : r.laws) laws.push_back(law_json(l));
    j["laws"] = std::move(laws);
    return j;
}

} // namespace

std::string report_json(const RunReport& r) {
    nlohmann::ordered_json j;
    j["version"] = report_schema_version;
    nlohmann::ordered_json cfg;
    cfg["group"] = r.config.group;
    cfg["subgroup"] = r.config.subgroup;
    cfg["window"] = {r.config.window_lo, r.config.window_hi};
    cfg["suites"] = r.config.suites.empty() ? known_suites() : r.config.suites;
    cfg["mode"] = mode_name(r.config.verify.mode);
    cfg["samples"] = r.config.verify.samples;
    cfg["seed"] = r.config.verify.seed;
    cfg["max_basis"] = r.config.max_basis;
    if (!r.config.name.empty()) cfg["name"] = r.config.name;
    j["config"] = std::move(cfg);

    auto suites = nlohmann::ordered_json::array();
    for (const auto& s : r.suites) {
        nlohmann::ordered_json sj;
        sj["suite"] = s.suite;
        sj["pass"] = s.pass();
        sj["expect_failures"] = s.expect_failures;
        sj["failed_laws"] = s.failed_laws();
        nlohmann::ordered_json stats;
        for (const auto& [k, v] : s.stats) stats[k] = v;
        sj["stats"] = std::move(stats);
        sj["notes"] = s.notes;
        auto reps = nlohmann::ordered_json::array();
        for (const auto& rep : s.reports) reps.push_back(report_json_obj(rep));
        sj["reports"] = std::move(reps);
        suites.push_back(std::move(sj));
    }
    j["suites"] = std::move(suites);
    j["overall"] = r.pass();
    return j.dump(2) + "\n";
}

std::string report_markdown(const RunReport& r) {
    std::ostringstream os;
    const auto& c = r.config;
    os << "# verification: " << (c.name.empty() ? c.group : c.name) << "\n\n";
    os << "group `" << c.group << "`, subgroup `" << c.subgroup << "`, window [" << c.window_lo
       << ", " << c.window_hi << "], mode " << mode_name(c.verify.mode) << ", samples "
       << c.verify.samples << ", seed " << c.verify.seed << "\n";
    for (const auto& s : r.suites) {
        os << "\n## suite " << s.suite << " - " << (s.pass() ? "pass" : "FAIL") << "\n";
        if (!s.stats.empty()) {
            os << "\n";
            for (const auto& [k, v] : s.stats) os << "- " << k << ": " << v << "\n";
        }
        for (const auto& note : s.notes) os << "- note: " << note << "\n";
        for (const auto& rep : s.reports) {
            os << "\n### " << rep.subject << " - " << (rep.pass() ? "pass" : "FAIL") << "\n\n";
            os << "| law | mode | checked | failed |\n|---|---|---:|---:|\n";
            for (const auto& l : rep.laws) {
                os << "| " << l.law << " | " << l.mode << " | " << l.checked << " | " << l.failed
                   << " |\n";
            }
            for (const auto& l : rep.laws) {
                for (const auto& w : l.witnesses) {
                    os << "- " << l.law << " at (";
                    for (std::size_t i = 0; i < w.tuple.size(); ++i) {
                        os << (i ? ", " : "") << w.tuple[i];
                    }
                    os << ")";
                    if (!w.labels.empty()) {
                        os << " = ";
                        for (std::size_t i = 0; i < w.labels.size(); ++i) {
                            os << (i ? " , " : "") << w.labels[i];
                        }
                    }
                    if (!w.detail.empty()) os << ": " << w.detail;
                    os << "\n";
                }
            }
        }
    }
    os << "\noverall: " << (r.pass() ? "pass" : "FAIL") << "\n";
    return os.str();
}

} // namespace gspin
