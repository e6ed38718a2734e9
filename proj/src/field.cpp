#include "gspin/field.hpp"

#include <algorithm>
#include <stdexcept>

#include "gspin/errors.hpp"
#include "gspin/linalg.hpp"
#include "gspin/mixed_radix.hpp"

namespace gspin {

std::vector<int> LatticeWindow::int_codes() const {
    std::vector<int> out;
    for (int x = lo; x <= hi; ++x) out.push_back(2 * x);
    return out;
}

std::vector<int> LatticeWindow::half_codes() const {
    std::vector<int> out;
    for (int c = 2 * lo - 1; c <= 2 * hi + 1; c += 2) out.push_back(c);
    return out;
}

std::string LatticeWindow::site_str(int code) {
    if (code % 2 == 0) return std::to_string(code / 2);
    return std::to_string(code) + "/2";
}

namespace {

std::pair<int, int> order_key(const FieldFactor& f) { return {f.is_delta ? 0 : 1, f.code}; }

} // namespace

std::optional<std::vector<FieldFactor>> reduce_field_word(const FiniteGroup& G,
                                                          std::vector<FieldFactor> word,
                                                          ReduceStrategy strategy) {
    auto reducible = [&](std::size_t p) {
        const auto& a = word[p];
        const auto& b = word[p + 1];
        if (a.is_delta == b.is_delta && a.code == b.code) return true;
        return order_key(a) > order_key(b);
    };
    while (true) {
        int pick = -1;
        for (int p = 0; p + 1 < static_cast<int>(word.size()); ++p) {
            if (reducible(static_cast<std::size_t>(p))) {
                pick = p;
                if (strategy == ReduceStrategy::leftmost) break;
            }
        }
        if (pick < 0) break;
        auto& a = word[static_cast<std::size_t>(pick)];
        auto& b = word[static_cast<std::size_t>(pick) + 1];
        if (a.is_delta == b.is_delta && a.code == b.code) {
            if (a.is_delta) {
                if (a.elem != b.elem) return std::nullopt; // orthogonal projections
                word.erase(word.begin() + pick + 1);
            } else {
                a.elem = G.mul(a.elem, b.elem);
                word.erase(word.begin() + pick + 1);
            }
            continue;
        }
        if (!a.is_delta && b.is_delta) {
            // r[h]@l d[g]@x -> d[hg]@x r[h]@l when l < x, plain swap otherwise
            if (a.code < b.code) b.elem = G.mul(a.elem, b.elem);
            std::swap(a, b);
            continue;
        }
        if (!a.is_delta && !b.is_delta) {
            // r[h]@l1 r[h2]@l2 with l1 > l2 -> r[h2]@l2 r[h2^-1 h h2]@l1
            Elem conj = G.conj(b.elem, a.elem);
            FieldFactor moved{false, a.code, conj};
            a = b;
            b = moved;
            continue;
        }
        std::swap(a, b); // projections at different sites commute
    }
    std::erase_if(word, [&](const FieldFactor& f) { return !f.is_delta && f.elem == G.identity(); });
    return word;
}

struct FieldCore {
    GroupRef group;
    Subgroup sub;
    LatticeWindow win;
    MixedRadix radix; // num_int digits of |G|, then num_half digits of |H|
    LabelSpaceRef space;

    int int_pos(int code) const { return (code - 2 * win.lo) / 2; }
    int half_pos(int code) const { return (code - (2 * win.lo - 1)) / 2; }

    FieldAlgebra::Monomial decode(Label l) const {
        auto d = radix.decode(l);
        FieldAlgebra::Monomial m;
        const int ni = win.num_int(), nh = win.num_half();
        m.delta.resize(static_cast<std::size_t>(ni));
        m.rho.resize(static_cast<std::size_t>(nh));
        for (int i = 0; i < ni; ++i) m.delta[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i)];
        for (int i = 0; i < nh; ++i) {
            m.rho[static_cast<std::size_t>(i)] = sub.member(d[static_cast<std::size_t>(ni + i)]);
        }
        return m;
    }
    Label encode(const FieldAlgebra::Monomial& m) const {
        std::vector<int> d;
        d.reserve(m.delta.size() + m.rho.size());
        for (Elem g : m.delta) d.push_back(g);
        for (Elem h : m.rho) d.push_back(sub.index_of(h));
        return radix.encode(d);
    }
    std::vector<FieldFactor> word(Label l) const {
        auto m = decode(l);
        std::vector<FieldFactor> out;
        out.reserve(m.delta.size() + m.rho.size());
        auto ics = win.int_codes();
        auto hcs = win.half_codes();
        for (std::size_t i = 0; i < ics.size(); ++i) out.push_back({true, ics[i], m.delta[i]});
        for (std::size_t i = 0; i < hcs.size(); ++i) out.push_back({false, hcs[i], m.rho[i]});
        return out;
    }

    /// Prefix shift products: entry j is the product of the first j shift
    /// entries (ascending), entry 0 the identity.
    std::vector<Elem> prefixes(const FieldAlgebra::Monomial& m) const {
        std::vector<Elem> p(m.rho.size() + 1);
        p[0] = group->identity();
        for (std::size_t j = 0; j < m.rho.size(); ++j) p[j + 1] = group->mul(p[j], m.rho[j]);
        return p;
    }

    /// Monomial product in closed form: the right factor's projections are
    /// pulled through the left factor's shifts, and the shift blocks merge
    /// so that prefix products multiply cut by cut.
    std::optional<Label> mul_closed(Label a, Label b) const {
        auto m1 = decode(a);
        auto m2 = decode(b);
        auto p1 = prefixes(m1);
        for (std::size_t i = 0; i < m1.delta.size(); ++i) {
            if (m1.delta[i] != group->mul(p1[i + 1], m2.delta[i])) return std::nullopt;
        }
        auto p2 = prefixes(m2);
        FieldAlgebra::Monomial out;
        out.delta = m1.delta;
        out.rho.resize(m1.rho.size());
        Elem prev = group->identity();
        for (std::size_t j = 0; j < out.rho.size(); ++j) {
            Elem cur = group->mul(p1[j + 1], p2[j + 1]);
            out.rho[j] = group->mul(group->inv(prev), cur);
            prev = cur;
        }
        return encode(out);
    }

    Label star_closed(Label a) const {
        auto m = decode(a);
        auto p = prefixes(m);
        FieldAlgebra::Monomial out;
        out.delta.resize(m.delta.size());
        out.rho.resize(m.rho.size());
        for (std::size_t i = 0; i < m.delta.size(); ++i) {
            out.delta[i] = group->mul(group->inv(p[i + 1]), m.delta[i]);
        }
        for (std::size_t j = 0; j < m.rho.size(); ++j) {
            out.rho[j] = group->mul(p[j], group->inv(p[j + 1]));
        }
        return encode(out);
    }

    /// Expand a reduced word over the monomial basis.
    AlgebraElement expand(const std::optional<std::vector<FieldFactor>>& reduced) const {
        AlgebraElement zero(space);
        if (!reduced) return zero;
        const int ni = win.num_int(), nh = win.num_half();
        std::vector<Elem> delta(static_cast<std::size_t>(ni), -1);
        std::vector<Elem> rho(static_cast<std::size_t>(nh), group->identity());
        for (const auto& f : *reduced) {
            if (f.is_delta) {
                delta[static_cast<std::size_t>(int_pos(f.code))] = f.elem;
            } else {
                rho[static_cast<std::size_t>(half_pos(f.code))] = f.elem;
            }
        }
        std::vector<int> free_pos;
        for (int i = 0; i < ni; ++i) {
            if (delta[static_cast<std::size_t>(i)] < 0) free_pos.push_back(i);
        }
        AlgebraElement out(space);
        const int n = group->order();
        std::vector<int> choice(free_pos.size(), 0);
        FieldAlgebra::Monomial m;
        m.delta = delta;
        m.rho = rho;
        while (true) {
            for (std::size_t i = 0; i < free_pos.size(); ++i) {
                m.delta[static_cast<std::size_t>(free_pos[i])] = choice[i];
            }
            out.add_term(encode(m), Scalar(1));
            std::size_t p = free_pos.size();
            bool done = true;
            while (p-- > 0) {
                if (++choice[p] < n) { done = false; break; }
                choice[p] = 0;
            }
            if (done) break;
        }
        return out;
    }
};

FieldAlgebra::FieldAlgebra(const FiniteGroup& G, const Subgroup& H, LatticeWindow w,
                           std::uint64_t max_dim) {
    if (w.lo > w.hi) throw ConfigError("field window needs lo <= hi");
    auto core = std::make_shared<FieldCore>();
    core->group = std::make_shared<const FiniteGroup>(G);
    core->sub = H;
    core->win = w;
    for (int i = 0; i < w.num_int(); ++i) core->radix.radices.push_back(static_cast<std::uint64_t>(G.order()));
    for (int i = 0; i < w.num_half(); ++i) core->radix.radices.push_back(static_cast<std::uint64_t>(H.order()));
    const std::uint64_t d = core->radix.card();
    if (d > max_dim) {
        throw ResourceCapError("field algebra dimension " + std::to_string(d) +
                               " exceeds the cap " + std::to_string(max_dim) +
                               " (set GSPIN_MAX_BASIS to raise it)");
    }

    // snapshot for the renderer, taken before the space is wired in so the
    // space does not keep its own core alive
    auto rcore = std::make_shared<const FieldCore>(*core);
    core->space = make_space(
        "F[H" + std::to_string(H.order()) + ",G" + std::to_string(G.order()) + ";" +
            std::to_string(w.lo) + ".." + std::to_string(w.hi) + "]",
        d, [rcore](Label l) {
            auto m = rcore->decode(l);
            auto ics = rcore->win.int_codes();
            auto hcs = rcore->win.half_codes();
            std::string out;
            for (std::size_t i = 0; i < ics.size(); ++i) {
                if (!out.empty()) out += " ";
                out += "d[" + rcore->group->name(m.delta[i]) + "]@" + LatticeWindow::site_str(ics[i]);
            }
            for (std::size_t i = 0; i < hcs.size(); ++i) {
                out += " r[" + rcore->group->name(m.rho[i]) + "]@" + LatticeWindow::site_str(hcs[i]);
            }
            return out;
        });

    std::shared_ptr<const FieldCore> ccore = core;
    auto mul = [ccore](Label a, Label b) {
        auto p = ccore->mul_closed(a, b);
        if (!p) return AlgebraElement(ccore->space);
        return AlgebraElement::basis(ccore->space, *p);
    };
    auto star = [ccore](Label a) {
        return AlgebraElement::basis(ccore->space, ccore->star_closed(a));
    };
    AlgebraElement unit = core->expand(std::vector<FieldFactor>{});

    core_ = ccore;
    alg_ = StructureAlgebra(core->space, mul, unit, star);
}

const LatticeWindow& FieldAlgebra::window() const { return core_->win; }
const FiniteGroup& FieldAlgebra::group() const { return *core_->group; }
const Subgroup& FieldAlgebra::subgroup() const { return core_->sub; }

FieldAlgebra::Monomial FieldAlgebra::decode(Label l) const { return core_->decode(l); }
Label FieldAlgebra::encode(const Monomial& m) const { return core_->encode(m); }
std::vector<FieldFactor> FieldAlgebra::word_of(Label l) const { return core_->word(l); }

AlgebraElement FieldAlgebra::delta_gen(Elem g, int x) const {
    return from_word({{true, 2 * x, g}});
}

AlgebraElement FieldAlgebra::rho_gen(Elem h, int half_code) const {
    return from_word({{false, half_code, h}});
}

AlgebraElement FieldAlgebra::mul_basis_rewrite(Label a, Label b, ReduceStrategy strategy) const {
    auto word = core_->word(a);
    auto wb = core_->word(b);
    word.insert(word.end(), wb.begin(), wb.end());
    return core_->expand(reduce_field_word(*core_->group, std::move(word), strategy));
}

AlgebraElement FieldAlgebra::star_basis_rewrite(Label a, ReduceStrategy strategy) const {
    auto word = core_->word(a);
    std::reverse(word.begin(), word.end());
    for (auto& f : word) {
        if (!f.is_delta) f.elem = core_->group->inv(f.elem);
    }
    return core_->expand(reduce_field_word(*core_->group, std::move(word), strategy));
}

AlgebraElement FieldAlgebra::from_word(const std::vector<FieldFactor>& word,
                                       ReduceStrategy strategy) const {
    const FiniteGroup& G = *core_->group;
    for (const auto& f : word) {
        if (!core_->win.holds_code(f.code) || (f.is_delta != (f.code % 2 == 0))) {
            throw std::out_of_range("field word factor at site " + LatticeWindow::site_str(f.code) +
                                    " is outside the window");
        }
        if (f.elem < 0 || f.elem >= G.order()) {
            throw std::invalid_argument("field word factor has an out-of-range element");
        }
        if (!f.is_delta && !core_->sub.contains(f.elem)) {
            throw std::invalid_argument("shift element " + G.name(f.elem) +
                                        " is not in the subgroup");
        }
    }
    return core_->expand(reduce_field_word(G, word, strategy));
}

// ---------------------------------------------------------------------------
// lattice representation oracle

namespace {

std::vector<int> rep_site_codes(const LatticeWindow& w) {
    auto out = w.int_codes();
    out.push_back(2 * (w.hi + 1)); // virtual site just past the window
    return out;
}

MixedRadix rep_radix(const FieldCore& core) {
    MixedRadix r;
    const auto n = static_cast<std::uint64_t>(core.group->order());
    for (std::size_t i = 0; i < rep_site_codes(core.win).size(); ++i) r.radices.push_back(n);
    return r;
}

} // namespace

SparseMat LatticeRep::delta_mat(Elem g, int x) const {
    MixedRadix radix = rep_radix(*core);
    auto codes = rep_site_codes(core->win);
    const std::size_t pos =
        static_cast<std::size_t>(std::find(codes.begin(), codes.end(), 2 * x) - codes.begin());
    SparseMat m = SparseMat::zero(carrier, carrier);
    for (std::uint64_t s = 0; s < carrier; ++s) {
        if (radix.decode(s)[pos] == g) m.data[s].emplace_back(s, Scalar(1));
    }
    return m;
}

SparseMat LatticeRep::rho_mat(Elem h, int half_code) const {
    MixedRadix radix = rep_radix(*core);
    auto codes = rep_site_codes(core->win);
    const FiniteGroup& G = *core->group;
    const Elem hinv = G.inv(h);
    SparseMat m = SparseMat::zero(carrier, carrier);
    for (std::uint64_t s = 0; s < carrier; ++s) {
        auto cfg = radix.decode(s);
        for (std::size_t i = 0; i < codes.size(); ++i) {
            if (codes[i] > half_code) cfg[i] = G.mul(hinv, cfg[i]);
        }
        m.data[s].emplace_back(radix.encode(cfg), Scalar(1));
    }
    return m;
}

SparseMat LatticeRep::monomial_mat(Label l) const {
    MixedRadix radix = rep_radix(*core);
    auto codes = rep_site_codes(core->win);
    const FiniteGroup& G = *core->group;
    auto m = core->decode(l);
    auto hcs = core->win.half_codes();
    // prefix shift felt at each represented site: product of shifts to its left
    std::vector<Elem> pre(codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i) {
        Elem p = G.identity();
        for (std::size_t k = 0; k < hcs.size(); ++k) {
            if (hcs[k] < codes[i]) p = G.mul(p, m.rho[k]);
        }
        pre[i] = G.inv(p);
    }
    SparseMat out = SparseMat::zero(carrier, carrier);
    for (std::uint64_t s = 0; s < carrier; ++s) {
        auto cfg = radix.decode(s);
        bool match = true;
        for (std::size_t i = 0; i + 1 < codes.size() && match; ++i) {
            match = cfg[i] == m.delta[i];
        }
        if (!match) continue;
        for (std::size_t i = 0; i < codes.size(); ++i) cfg[i] = G.mul(pre[i], cfg[i]);
        out.data[s].emplace_back(radix.encode(cfg), Scalar(1));
    }
    return out;
}

SparseMat LatticeRep::mat_elem(const AlgebraElement& x) const {
    SparseMat out = SparseMat::zero(carrier, carrier);
    for (const auto& [l, c] : x.terms()) out = out.add(monomial_mat(l).scaled(c));
    return out;
}

LatticeRep lattice_representation(const FieldAlgebra& F) {
    FieldCore core;
    core.group = std::make_shared<const FiniteGroup>(F.group());
    core.sub = F.subgroup();
    core.win = F.window();
    const auto n = static_cast<std::uint64_t>(F.group().order());
    for (int i = 0; i < core.win.num_int(); ++i) core.radix.radices.push_back(n);
    for (int i = 0; i < core.win.num_half(); ++i) {
        core.radix.radices.push_back(static_cast<std::uint64_t>(F.subgroup().order()));
    }
    LatticeRep rep;
    std::uint64_t carrier = 1;
    for (std::size_t i = 0; i < rep_site_codes(core.win).size(); ++i) carrier *= n;
    rep.carrier = carrier;
    rep.flat_space = make_space("lattice-mat:" + F.space()->name(), carrier * carrier);
    rep.core = std::make_shared<const FieldCore>(std::move(core));
    return rep;
}

VerifyReport verify_lattice(const FieldAlgebra& F, const LatticeRep& rep,
                            const VerifyOptions& opts) {
    const FiniteGroup& G = F.group();
    const Subgroup& H = F.subgroup();
    const LatticeWindow& w = F.window();
    const auto n = static_cast<std::uint64_t>(G.order());
    const auto hn = static_cast<std::uint64_t>(H.order());
    const auto ni = static_cast<std::uint64_t>(w.num_int());
    const auto nh = static_cast<std::uint64_t>(w.num_half());
    const std::uint64_t d = F.dim();
    const Mode mode = resolve_mode(d, opts);
    auto ics = w.int_codes();
    auto hcs = w.half_codes();

    VerifyReport out;
    out.subject = F.space()->name() + " lattice representation";
    auto mneq = [](const SparseMat& a, const SparseMat& b) {
        return a == b ? std::string{} : std::string("matrices differ");
    };
    const SparseMat id = SparseMat::identity(rep.carrier);

    out.laws.push_back(run_law(
        {"lattice-unit-resolutions",
         {ni + nh},
         [&](std::span<const std::uint64_t> t) {
             if (t[0] < ni) {
                 SparseMat sum = SparseMat::zero(rep.carrier, rep.carrier);
                 for (Elem g = 0; g < static_cast<Elem>(n); ++g) {
                     sum = sum.add(rep.delta_mat(g, ics[t[0]] / 2));
                 }
                 return mneq(sum, id);
             }
             return mneq(rep.rho_mat(G.identity(), hcs[t[0] - ni]), id);
         },
         {}},
        Mode::exhaustive, opts));
    out.laws.push_back(run_law(
        {"lattice-projection-orthogonality",
         {ni, n, n},
         [&](std::span<const std::uint64_t> t) {
             const int x = ics[t[0]] / 2;
             auto lhs = rep.delta_mat(static_cast<Elem>(t[1]), x)
                            .mul(rep.delta_mat(static_cast<Elem>(t[2]), x));
             auto rhs = t[1] == t[2] ? rep.delta_mat(static_cast<Elem>(t[1]), x)
                                     : SparseMat::zero(rep.carrier, rep.carrier);
             return mneq(lhs, rhs);
         },
         {}},
        Mode::exhaustive, opts));
    out.laws.push_back(run_law(
        {"lattice-shift-homomorphism",
         {nh, hn, hn},
         [&](std::span<const std::uint64_t> t) {
             const int c = hcs[t[0]];
             Elem h1 = H.member(static_cast<int>(t[1])), h2 = H.member(static_cast<int>(t[2]));
             return mneq(rep.rho_mat(h1, c).mul(rep.rho_mat(h2, c)),
                         rep.rho_mat(G.mul(h1, h2), c));
         },
         {}},
        Mode::exhaustive, opts));
    out.laws.push_back(run_law(
        {"lattice-projection-commute",
         {ni, ni, n, n},
         [&](std::span<const std::uint64_t> t) {
             if (t[0] == t[1]) return std::string{};
             auto a = rep.delta_mat(static_cast<Elem>(t[2]), ics[t[0]] / 2);
             auto b = rep.delta_mat(static_cast<Elem>(t[3]), ics[t[1]] / 2);
             return mneq(a.mul(b), b.mul(a));
         },
         {}},
        Mode::exhaustive, opts));
    out.laws.push_back(run_law(
        {"lattice-shift-projection-exchange",
         {nh, ni, hn, n},
         [&](std::span<const std::uint64_t> t) {
             const int c = hcs[t[0]];
             const int x = ics[t[1]] / 2;
             Elem h = H.member(static_cast<int>(t[2]));
             Elem g = static_cast<Elem>(t[3]);
             auto lhs = rep.rho_mat(h, c).mul(rep.delta_mat(g, x));
             auto rhs = c < 2 * x ? rep.delta_mat(G.mul(h, g), x).mul(rep.rho_mat(h, c))
                                  : rep.delta_mat(g, x).mul(rep.rho_mat(h, c));
             return mneq(lhs, rhs);
         },
         {}},
        Mode::exhaustive, opts));
    out.laws.push_back(run_law(
        {"lattice-shift-exchange",
         {nh, nh, hn, hn},
         [&](std::span<const std::uint64_t> t) {
             if (t[0] <= t[1]) return std::string{};
             const int c1 = hcs[t[0]], c2 = hcs[t[1]];
             Elem h1 = H.member(static_cast<int>(t[2])), h2 = H.member(static_cast<int>(t[3]));
             auto lhs = rep.rho_mat(h1, c1).mul(rep.rho_mat(h2, c2));
             auto rhs = rep.rho_mat(h2, c2).mul(rep.rho_mat(G.conj(h2, h1), c1));
             return mneq(lhs, rhs);
         },
         {}},
        Mode::exhaustive, opts));
    out.laws.push_back(run_law(
        {"lattice-monomial-homomorphism",
         {d, d},
         [&, rep](std::span<const std::uint64_t> t) {
             auto lhs = rep.mat_elem(F.algebra().mul_basis(t[0], t[1]));
             auto rhs = rep.monomial_mat(t[0]).mul(rep.monomial_mat(t[1]));
             return mneq(lhs, rhs);
         },
         {F.space(), F.space()}},
        mode, opts));
    out.laws.push_back(run_law(
        {"lattice-star",
         {d},
         [&, rep](std::span<const std::uint64_t> t) {
             auto lhs = rep.mat_elem(F.algebra().star_basis(t[0]));
             return mneq(lhs, rep.monomial_mat(t[0]).conj_transpose());
         },
         {F.space()}},
        mode, opts));
    return out;
}

std::uint64_t lattice_rank(const FieldAlgebra& F, const LatticeRep& rep, bool parallel) {
    std::vector<AlgebraElement> flats;
    flats.reserve(F.dim());
    for (Label l = 0; l < F.dim(); ++l) flats.push_back(rep.monomial_mat(l).flatten(rep.flat_space));
    return span_rank(flats, {.parallel = parallel});
}

AlgebraElement transport_field_elem(const FieldAlgebra& from, const FieldAlgebra& to,
                                    const AlgebraElement& x) {
    require_same_space(x.space(), from.space(), "transport_field_elem");
    if (from.group().order() != to.group().order()) {
        throw std::invalid_argument("transport_field_elem needs matching groups");
    }
    if (to.window().lo > from.window().lo || to.window().hi < from.window().hi) {
        throw std::invalid_argument("transport_field_elem needs a containing target window");
    }
    ElementAccumulator acc(to.space());
    for (const auto& [l, c] : x.terms()) acc.add(to.from_word(from.word_of(l)), c);
    return acc.freeze();
}

} // namespace gspin
