#include "gspin/sparse_mat.hpp"

#include <algorithm>
#include <stdexcept>

namespace gspin {

void SparseMat::add_entry(std::uint64_t r, std::uint64_t c, const Scalar& v) {
    if (v.is_zero()) return;
    auto& row = data[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::uint64_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

SparseMat SparseMat::mul(const SparseMat& o) const {
    if (cols != o.rows) throw std::invalid_argument("SparseMat::mul: shape mismatch");
    SparseMat out = zero(rows, o.cols);
    for (std::uint64_t r = 0; r < rows; ++r) {
        std::map<std::uint64_t, Scalar> acc;
        for (const auto& [k, a] : data[r]) {
            for (const auto& [c, b] : o.data[k]) {
                auto [it, fresh] = acc.try_emplace(c, a * b);
                if (!fresh) it->second += a * b;
            }
        }
        auto& row = out.data[r];
        for (auto& [c, v] : acc) {
            if (!v.is_zero()) row.emplace_back(c, std::move(v));
        }
    }
    return out;
}

SparseMat SparseMat::add(const SparseMat& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("SparseMat::add: shape mismatch");
    SparseMat out = *this;
    for (std::uint64_t r = 0; r < rows; ++r)
        for (const auto& [c, v] : o.data[r]) out.add_entry(r, c, v);
    return out;
}

SparseMat SparseMat::scaled(const Scalar& s) const {
    SparseMat out = zero(rows, cols);
    if (s.is_zero()) return out;
    for (std::uint64_t r = 0; r < rows; ++r) {
        out.data[r].reserve(data[r].size());
        for (const auto& [c, v] : data[r]) out.data[r].emplace_back(c, v * s);
    }
    return out;
}

SparseMat SparseMat::conj_transpose() const {
    SparseMat out = zero(cols, rows);
    for (std::uint64_t r = 0; r < rows; ++r)
        for (const auto& [c, v] : data[r]) out.data[c].emplace_back(r, v.conj());
    for (auto& row : out.data) {
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return out;
}

AlgebraElement SparseMat::flatten(const LabelSpaceRef& space) const {
    AlgebraElement out(space);
    for (std::uint64_t r = 0; r < rows; ++r)
        for (const auto& [c, v] : data[r]) out.add_term(r * cols + c, v);
    return out;
}

} // namespace gspin
