#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gspin/element.hpp"

namespace gspin {

/// Row-sparse exact matrix; rows hold (col, scalar) pairs sorted by column.
struct SparseMat {
    std::uint64_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<std::uint64_t, Scalar>>> data;

    static SparseMat zero(std::uint64_t r, std::uint64_t c) {
        SparseMat m;
        m.rows = r;
        m.cols = c;
        m.data.resize(r);
        return m;
    }
    static SparseMat identity(std::uint64_t n) {
        SparseMat m = zero(n, n);
        for (std::uint64_t i = 0; i < n; ++i) m.data[i].emplace_back(i, Scalar(1));
        return m;
    }

    void add_entry(std::uint64_t r, std::uint64_t c, const Scalar& v);

    SparseMat mul(const SparseMat& o) const;
    SparseMat add(const SparseMat& o) const;
    SparseMat scaled(const Scalar& s) const;
    SparseMat conj_transpose() const;

    friend bool operator==(const SparseMat& a, const SparseMat& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }

    /// Row-major flattening into a rows*cols label space.
    AlgebraElement flatten(const LabelSpaceRef& space) const;
};

} // namespace gspin
