#include "gspin/linalg.hpp"

#include <stdexcept>

namespace gspin {

SpanBasis::SpanBasis(LabelSpaceRef space, LinalgOptions opts)
    : space_(std::move(space)), opts_(opts) {}

AlgebraElement SpanBasis::reduce(const AlgebraElement& v) const {
    require_same_space(space_, v.space(), "SpanBasis::reduce");
    AlgebraElement r = v;
    // RREF makes the coefficient against each row a direct read at its pivot.
    // Collect first, then subtract, so the walk is over the original terms.
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& [l, c] : v.terms()) {
        auto it = pivot_row_.find(l);
        if (it != pivot_row_.end()) hits.emplace_back(it->second, c);
    }
    for (const auto& [row, c] : hits) r -= rows_[row].scaled(c);
    return r;
}

bool SpanBasis::insert(const AlgebraElement& v) {
    require_same_space(space_, v.space(), "SpanBasis::insert");
    const std::uint64_t my_index = inserted_++;

    AlgebraElement r = v;
    std::vector<Scalar> combo;
    if (opts_.track_combos) combo.assign(static_cast<std::size_t>(my_index) + 1, Scalar(0));

    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& [l, c] : v.terms()) {
        auto it = pivot_row_.find(l);
        if (it != pivot_row_.end()) hits.emplace_back(it->second, c);
    }
    for (const auto& [row, c] : hits) {
        r -= rows_[row].scaled(c);
        if (opts_.track_combos) {
            const auto& rc = combos_[row];
            for (std::size_t k = 0; k < rc.size(); ++k) combo[k] -= rc[k] * c;
        }
    }
    if (r.is_zero()) return false;

    const Label pivot = r.terms().front().first;
    const Scalar lead = r.terms().front().second;
    r = r.scaled(Scalar(1) / lead);
    if (opts_.track_combos) {
        for (auto& s : combo) s = s / lead;
        combo[static_cast<std::size_t>(my_index)] = Scalar(1) / lead;
    }

    // Clear the new pivot column in every existing row.
    const std::size_t n = rows_.size();
    std::vector<Scalar> col(n, Scalar(0));
    std::vector<char> touched(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Scalar c = rows_[i].coeff(pivot);
        if (!c.is_zero()) { col[i] = c; touched[i] = 1; }
    }
    const bool par = opts_.parallel && n >= 32;
#pragma omp parallel for schedule(dynamic, 8) if (par)
    for (std::size_t i = 0; i < n; ++i) {
        if (touched[i]) rows_[i] -= r.scaled(col[i]);
    }
    if (opts_.track_combos) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!touched[i]) continue;
            auto& rc = combos_[i];
            rc.resize(combo.size(), Scalar(0));
            for (std::size_t k = 0; k < combo.size(); ++k) rc[k] -= combo[k] * col[i];
        }
    }

    pivot_row_[pivot] = rows_.size();
    rows_.push_back(std::move(r));
    if (opts_.track_combos) combos_.push_back(std::move(combo));
    return true;
}

std::optional<std::vector<Scalar>> SpanBasis::solve(const AlgebraElement& v) const {
    if (!opts_.track_combos) throw std::logic_error("SpanBasis::solve: combos not tracked");
    require_same_space(space_, v.space(), "SpanBasis::solve");
    AlgebraElement r = v;
    std::vector<Scalar> out(static_cast<std::size_t>(inserted_), Scalar(0));
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& [l, c] : v.terms()) {
        auto it = pivot_row_.find(l);
        if (it != pivot_row_.end()) hits.emplace_back(it->second, c);
    }
    for (const auto& [row, c] : hits) {
        r -= rows_[row].scaled(c);
        const auto& rc = combos_[row];
        for (std::size_t k = 0; k < rc.size(); ++k) out[k] += rc[k] * c;
    }
    if (!r.is_zero()) return std::nullopt;
    return out;
}

std::uint64_t span_rank(const std::vector<AlgebraElement>& elems, LinalgOptions opts) {
    if (elems.empty()) return 0;
    opts.track_combos = false;
    SpanBasis basis(elems.front().space(), opts);
    for (const auto& e : elems) basis.insert(e);
    return basis.rank();
}

std::optional<std::vector<Scalar>> in_span(const AlgebraElement& target,
                                           const std::vector<AlgebraElement>& family,
                                           LinalgOptions opts) {
    opts.track_combos = true;
    SpanBasis basis(target.space(), opts);
    for (const auto& e : family) basis.insert(e);
    auto sol = basis.solve(target);
    if (!sol) return std::nullopt;
    sol->resize(family.size(), Scalar(0));
    return sol;
}

} // namespace gspin
