// Acceptance gate: every release-blocking property on one page. Each
// criterion prints exactly one PASS/FAIL line; the process exits 0 only if
// all of them pass. All checks run with exact arithmetic; equalities are
// on-the-nose, never approximate.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "gspin/observable.hpp"
#include "gspin/suites.hpp"

using namespace gspin;

namespace {

using clock_type = std::chrono::steady_clock;

struct Gate {
    int failed = 0;

    void run(int n, const std::string& what, const std::function<bool(std::string&)>& body) {
        std::string note;
        bool ok = false;
        auto t0 = clock_type::now();
        try {
            ok = body(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock_type::now() - t0);
        std::printf("criterion %2d: %s  %s (%lld ms)%s%s\n", n, ok ? "PASS" : "FAIL", what.c_str(),
                    static_cast<long long>(ms.count()), note.empty() ? "" : " -- ", note.c_str());
        std::fflush(stdout);
        if (!ok) ++failed;
    }
};

VerifyOptions exhaustive_opts() {
    VerifyOptions o;
    o.mode = Mode::exhaustive;
    return o;
}

bool all_exhaustive(const VerifyReport& r) {
    for (const auto& l : r.laws)
        if (l.mode != "exhaustive") return false;
    return true;
}

bool within(clock_type::time_point t0, double seconds, std::string& note) {
    double got = std::chrono::duration<double>(clock_type::now() - t0).count();
    if (got <= seconds) return true;
    note = "took " + std::to_string(got) + "s, budget " + std::to_string(seconds) + "s";
    return false;
}

} // namespace

int main() {
    Gate gate;

    gate.run(1, "double Hopf axioms and integral law, exhaustive, on seven instances",
             [](std::string& note) {
                 const std::vector<std::pair<std::string, std::string>> instances = {
                     {"cyclic:2", "all"},    {"cyclic:4", "2"},      {"symmetric:3", "4"},
                     {"dihedral:4", "2"},    {"quaternion", "1"},    {"symmetric:3", "all"},
                     {"symmetric:3", "e"},
                 };
                 for (const auto& [gs, hs] : instances) {
                     auto t0 = clock_type::now();
                     auto G = parse_group_spec(gs);
                     auto H = parse_subgroup_spec(G, hs);
                     auto D = build_double(G, H);
                     auto opts = exhaustive_opts();
                     auto star = verify_star_algebra(D.hopf.base(), opts);
                     auto hopf = verify_hopf(D.hopf, opts);
                     auto intg = verify_integral(D, opts);
                     if (!star.pass() || !hopf.pass() || !intg.pass()) {
                         note = gs + "/" + hs + " has a failing law";
                         return false;
                     }
                     if (!all_exhaustive(star) || !all_exhaustive(hopf) || !all_exhaustive(intg)) {
                         note = gs + "/" + hs + " fell back to sampling";
                         return false;
                     }
                     if (!within(t0, 30.0, note)) {
                         note = gs + "/" + hs + ": " + note;
                         return false;
                     }
                 }
                 return true;
             });

    gate.run(2, "force-built double over a non-normal subgroup fails with a witness",
             [](std::string& note) {
                 auto G = parse_group_spec("symmetric:3");
                 auto H = parse_subgroup_spec(G, "1");
                 if (H.normal()) {
                     note = "control subgroup unexpectedly normal";
                     return false;
                 }
                 auto forced = build_double(G, H, true);
                 auto rep = verify_hopf(forced.hopf, exhaustive_opts());
                 if (rep.pass()) {
                     note = "every axiom passed; the control found nothing";
                     return false;
                 }
                 bool witnessed = false;
                 for (const auto& l : rep.laws)
                     if (!l.pass() && !l.witnesses.empty()) witnessed = true;
                 if (!witnessed) {
                     note = "failure carried no witness";
                     return false;
                 }
                 RunConfig cfg;
                 cfg.group = "symmetric:3";
                 cfg.subgroup = "1";
                 cfg.suites = {"negative"};
                 auto suite = run_suites(cfg);
                 if (!suite.pass() || suite.suites.at(0).failed_laws() == 0) {
                     note = "negative suite did not pass by expected failure";
                     return false;
                 }
                 return true;
             });

    gate.run(3, "all standard twists, every hexagon triple in [-2,4], both bracketings",
             [](std::string& note) {
                 auto t0 = clock_type::now();
                 auto G = symmetric_group(3);
                 Subgroup H(G, {4});
                 auto opts = exhaustive_opts();
                 for (int i = -2; i <= 4; ++i)
                     for (int j = i + 1; j <= 4; ++j)
                         if (!verify_twisting_map(standard_twist(G, H, i, j), opts).pass()) {
                             note = "twist conditions fail at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")";
                             return false;
                         }
                 for (int i = -2; i <= 4; ++i)
                     for (int j = i + 1; j <= 4; ++j)
                         for (int k = j + 1; k <= 4; ++k) {
                             auto rep = verify_hexagon(standard_twist(G, H, i, j),
                                                       standard_twist(G, H, j, k),
                                                       standard_twist(G, H, i, k), opts);
                             if (!rep.pass()) {
                                 note = "hexagon fails at (" + std::to_string(i) + "," +
                                        std::to_string(j) + "," + std::to_string(k) + ")";
                                 return false;
                             }
                         }
                 for (auto [lo, hi] : {std::pair<int, int>{0, 2}, std::pair<int, int>{1, 3}}) {
                     auto A = IteratedAlgebra::build(G, H, lo, hi);
                     for (Label a = 0; a < A.dim(); ++a)
                         for (Label b = 0; b < A.dim(); ++b)
                             if (A.mul_ordered(a, b, BubbleOrder::rightmost) !=
                                 A.mul_ordered(a, b, BubbleOrder::leftmost)) {
                                 note = "bracketings disagree on window [" + std::to_string(lo) +
                                        "," + std::to_string(hi) + "]";
                                 return false;
                             }
                 }
                 return within(t0, 60.0, note);
             });

    gate.run(4, "the twist built from the conjugation module recovers the double exactly",
             [](std::string& note) {
                 auto G = symmetric_group(3);
                 Subgroup H(G, {4});
                 auto funcs = dual_subgroup_algebra(G, H);
                 auto hopf = group_hopf(G);
                 ModuleAction conj_action(hopf, funcs, [&](Label a, Label m) {
                     Elem moved = G.conj(G.inv(static_cast<Elem>(a)), H.member(static_cast<int>(m)));
                     int pos = H.index_of(moved);
                     if (pos < 0) return AlgebraElement(funcs.space());
                     return AlgebraElement::basis(funcs.space(), static_cast<Label>(pos));
                 });
                 if (!verify_module_algebra(conj_action, exhaustive_opts()).pass()) {
                     note = "conjugation is not a module-algebra action here";
                     return false;
                 }
                 auto smash = twisted_pair_algebra(funcs, hopf.base(), twist_from_module(conj_action));
                 auto D = build_double(G, H);
                 if (smash.dim() != D.dim()) {
                     note = "dimension mismatch";
                     return false;
                 }
                 for (Label a = 0; a < D.dim(); ++a)
                     for (Label b = 0; b < D.dim(); ++b)
                         if (smash.mul_basis(a, b).terms() != D.hopf.base().mul_basis(a, b).terms()) {
                             note = "structure constants differ at (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")";
                             return false;
                         }
                 return smash.unit().terms() == D.hopf.base().unit().terms();
             });

    gate.run(5, "matrix representations of both three-factor windows are faithful",
             [](std::string& note) {
                 auto t0 = clock_type::now();
                 auto G = symmetric_group(3);
                 Subgroup H(G, {4});
                 auto opts = exhaustive_opts();

                 auto A02 = IteratedAlgebra::build(G, H, 0, 2);
                 auto rep02 = repr_pi_02(G, H);
                 if (A02.dim() != 54 || !verify_representation(A02, rep02, opts).pass()) {
                     note = "window [0,2] representation fails";
                     return false;
                 }
                 std::vector<AlgebraElement> flats02;
                 for (Label l = 0; l < A02.dim(); ++l)
                     flats02.push_back(rep02.image(l).flatten(rep02.flat_space));
                 if (span_rank(flats02) != 54) {
                     note = "window [0,2] rank is not 54";
                     return false;
                 }

                 auto A13 = IteratedAlgebra::build(G, H, 1, 3);
                 auto rep13 = repr_pi_13(G, H);
                 if (A13.dim() != 6 * 3 * 6 || !verify_representation(A13, rep13, opts).pass()) {
                     note = "window [1,3] representation fails";
                     return false;
                 }
                 std::vector<AlgebraElement> flats13;
                 for (Label l = 0; l < A13.dim(); ++l)
                     flats13.push_back(rep13.image(l).flatten(rep13.flat_space));
                 if (span_rank(flats13) != 108) {
                     note = "window [1,3] rank is not 108";
                     return false;
                 }
                 return within(t0, 60.0, note);
             });

    gate.run(6, "field relations hold in the lattice model; products and star verify",
             [](std::string& note) {
                 auto z2 = cyclic_group(2);
                 FieldAlgebra F2(z2, Subgroup::whole(z2), {0, 1});
                 auto opts = exhaustive_opts();
                 if (!verify_lattice(F2, lattice_representation(F2), opts).pass()) {
                     note = "lattice relations fail on the two-element group";
                     return false;
                 }
                 auto r2 = verify_star_algebra(F2.algebra(), opts);
                 if (!r2.pass() || !all_exhaustive(r2)) {
                     note = "exhaustive product/star laws fail on the two-element group";
                     return false;
                 }
                 const auto* assoc = r2.find("associativity");
                 if (assoc == nullptr || assoc->checked != 32768) {
                     note = "exhaustive associativity did not cover 32^3 triples";
                     return false;
                 }

                 auto G = symmetric_group(3);
                 Subgroup H(G, {4});
                 FieldAlgebra F(G, H, {0, 1});
                 VerifyOptions sampled;
                 sampled.mode = Mode::sampled;
                 sampled.samples = 500;
                 auto rs = verify_star_algebra(F.algebra(), sampled);
                 if (!rs.pass()) {
                     note = "sampled product/star laws fail on the non-abelian pair";
                     return false;
                 }
                 for (const char* law : {"associativity", "star-antimultiplicative", "star-involution"}) {
                     const auto* l = rs.find(law);
                     if (l == nullptr || l->checked != 500) {
                         note = std::string(law) + " did not run its 500 samples";
                         return false;
                     }
                 }
                 return true;
             });

    gate.run(7, "closed-form action matches the coproduct path; the projection chains to w",
             [](std::string& note) {
                 auto z2 = cyclic_group(2);
                 auto all2 = Subgroup::whole(z2);
                 GammaAction small(build_double(z2, all2), FieldAlgebra(z2, all2, {0, 1}));
                 auto rep2 = verify_action(small, exhaustive_opts());
                 if (!rep2.pass() || !all_exhaustive(rep2)) {
                     note = "exhaustive action laws fail on the two-element group";
                     return false;
                 }

                 auto G = symmetric_group(3);
                 Subgroup A3(G, {4});
                 GammaAction act(build_double(G, A3), FieldAlgebra(G, A3, {0, 1}));
                 VerifyOptions sampled;
                 sampled.mode = Mode::sampled;
                 auto reps = verify_action(act, sampled);
                 if (!reps.pass()) {
                     note = "sampled action laws fail on the non-abelian pair";
                     return false;
                 }
                 for (const char* law :
                      {"action-closed-matches-word", "projection-idempotent",
                       "projection-fixes-shift-sandwich", "projection-fixes-paired-projection"}) {
                     if (rep2.find(law) == nullptr || reps.find(law) == nullptr) {
                         note = std::string("missing law ") + law;
                         return false;
                     }
                 }

                 auto whole = Subgroup::whole(G);
                 FieldAlgebra Fw(G, whole, {1, 2});
                 GammaAction actw(build_double(G, whole), Fw);
                 for (Elem g1 = 0; g1 < 6; ++g1)
                     for (Elem g2 = 0; g2 < 6; ++g2) {
                         auto pair = Fw.from_word({{true, 2, g1}, {true, 4, g2}});
                         auto expect = w_generator(Fw, G.mul(G.inv(g1), g2), 3)
                                           .scaled(Scalar::rational(1, 6));
                         if (actw.project(pair) != expect) {
                             note = "chain identity fails at (" + std::to_string(g1) + "," +
                                    std::to_string(g2) + ")";
                             return false;
                         }
                     }
                 return true;
             });

    gate.run(8, "the generator product map is an exact isomorphism onto the invariants",
             [](std::string& note) {
                 auto t0 = clock_type::now();
                 {
                     auto G = symmetric_group(3);
                     Subgroup H(G, {4});
                     FieldAlgebra F(G, H, {0, 1});
                     GeneratorProductMap phi(IteratedAlgebra::build(G, H, 0, 2), F);
                     GammaAction act(build_double(G, H), F);
                     auto spans = observable_spans(act);
                     auto rep = verify_generator_product_map(phi, &spans, exhaustive_opts());
                     if (!rep.pass() || !all_exhaustive(rep)) {
                         note = "map laws fail on the non-abelian pair";
                         return false;
                     }
                     const auto* mult = rep.find("map-multiplicative");
                     const auto* star = rep.find("map-star");
                     if (mult == nullptr || mult->checked != 54 * 54 || star == nullptr ||
                         star->checked != 54) {
                         note = "exhaustive coverage shrank on the non-abelian pair";
                         return false;
                     }
                     if (spans.vw.rank() != 54) {
                         note = "generated span rank is not 54";
                         return false;
                     }
                 }
                 {
                     auto G = parse_group_spec("cyclic:4");
                     auto H = parse_subgroup_spec(G, "2");
                     FieldAlgebra F(G, H, {0, 2});
                     GeneratorProductMap phi(IteratedAlgebra::build(G, H, 0, 4), F);
                     if (phi.domain().dim() != 128) {
                         note = "five-factor domain dimension is not 128";
                         return false;
                     }
                     GammaAction act(build_double(G, H), F);
                     auto spans = observable_spans(act);
                     auto rep = verify_generator_product_map(phi, &spans, exhaustive_opts());
                     if (!rep.pass()) {
                         note = "map laws fail on the five-factor window";
                         return false;
                     }
                 }
                 return within(t0, 300.0, note);
             });

    gate.run(9, "window embedding commutes with the generator product maps",
             [](std::string& note) {
                 auto G = parse_group_spec("cyclic:4");
                 auto H = parse_subgroup_spec(G, "2");
                 auto A_in = IteratedAlgebra::build(G, H, 0, 2);
                 auto A_out = IteratedAlgebra::build(G, H, 0, 4);
                 auto opts = exhaustive_opts();
                 if (!verify_embedding(A_in, A_out, opts).pass()) {
                     note = "embedding is not a unital injective star homomorphism";
                     return false;
                 }
                 GeneratorProductMap inner(A_in, FieldAlgebra(G, H, {0, 1}));
                 GeneratorProductMap outer(A_out, FieldAlgebra(G, H, {0, 2}));
                 auto rep = verify_map_tower(inner, outer, opts);
                 if (!rep.pass()) {
                     note = "maps disagree through the embedding";
                     return false;
                 }
                 const auto* law = rep.find("tower-compatible");
                 return law != nullptr && law->checked == A_in.dim();
             });

    gate.run(10, "invariants of the proper pair sit inside those of the full pair",
             [](std::string& note) {
                 auto G = symmetric_group(3);
                 Subgroup H(G, {4});
                 FieldAlgebra F_sub(G, H, {0, 1});
                 FieldAlgebra F_all(G, Subgroup::whole(G), {0, 1});
                 auto span_sub = generated_span(F_sub);
                 auto span_all = generated_span(F_all);
                 if (span_sub.rank() != 54 || span_all.rank() != 216) {
                     note = "span ranks are not 54 and 216";
                     return false;
                 }
                 for (const auto& row : span_sub.rows())
                     if (!span_all.contains(transport_field_elem(F_sub, F_all, row))) {
                         note = "a generated element escapes the ambient span";
                         return false;
                     }
                 return true;
             });

    gate.run(11, "dropping a shift leg from v is detected as an invariance failure",
             [](std::string& note) {
                 auto G = symmetric_group(3);
                 Subgroup H(G, {4});
                 GammaAction act(build_double(G, H), FieldAlgebra(G, H, {0, 1}));
                 const auto& F = act.field();
                 bool broken = false;
                 for (int hp = 1; hp < H.order(); ++hp) {
                     auto cut = v_generator_truncated(F, H.member(hp), 0);
                     if (act.project(cut) != cut) broken = true;
                 }
                 if (!broken) {
                     note = "truncation went unnoticed";
                     return false;
                 }
                 RunConfig cfg;
                 cfg.group = "symmetric:3";
                 cfg.subgroup = "4";
                 cfg.suites = {"negative"};
                 auto suite = run_suites(cfg);
                 return suite.pass() && suite.suites.at(0).failed_laws() > 0;
             });

    gate.run(12, "identical configuration and seed give byte-identical reports",
             [](std::string& note) {
                 RunConfig cfg;
                 cfg.group = "symmetric:3";
                 cfg.subgroup = "4";
                 cfg.suites = {"group", "double", "field", "action"};
                 cfg.verify.seed = 77;
                 cfg.name = "determinism";
                 auto first = report_json(run_suites(cfg));
                 auto second = report_json(run_suites(cfg));
                 if (first != second) {
                     note = "serialized reports differ between runs";
                     return false;
                 }
                 return !first.empty();
             });

    if (gate.failed == 0) {
        std::printf("acceptance: 12/12 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", gate.failed);
    return 1;
}
