#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gspin/element.hpp"

namespace gspin {

struct LinalgOptions {
    bool parallel = true;       // OpenMP row elimination; results are identical either way
    bool track_combos = false;  // keep each row expressed over the inserted inputs
};

/// Incremental exact row-reduced (RREF) basis of a subspace.
///
/// Pivot of a row is its smallest nonzero label; pivot coefficient is 1 and
/// every other row is zero at that label. Insertion order never changes the
/// resulting rank, and reduction against the basis is a direct coefficient read.
class SpanBasis {
public:
    explicit SpanBasis(LabelSpaceRef space, LinalgOptions opts = {});

    /// Reduce v against the basis and adjoin the residual if nonzero.
    /// Returns true when the rank grew.
    bool insert(const AlgebraElement& v);

    std::uint64_t rank() const { return rows_.size(); }
    const LabelSpaceRef& space() const { return space_; }
    const std::vector<AlgebraElement>& rows() const { return rows_; }

    /// Residual of v after subtracting its projection onto the span.
    AlgebraElement reduce(const AlgebraElement& v) const;

    bool contains(const AlgebraElement& v) const { return reduce(v).is_zero(); }

    /// Coefficients of v over the *inserted* vectors (requires track_combos
    /// and that every insert so far grew the rank... see in_span for the
    /// general case). Empty optional when v is outside the span.
    std::optional<std::vector<Scalar>> solve(const AlgebraElement& v) const;

    std::uint64_t inserted_count() const { return inserted_; }

private:
    LabelSpaceRef space_;
    LinalgOptions opts_;
    std::vector<AlgebraElement> rows_;        // RREF rows, ordered by insertion
    std::vector<std::vector<Scalar>> combos_; // row i = sum combos_[i][k] * input_k
    std::map<Label, std::size_t> pivot_row_;
    std::uint64_t inserted_ = 0;
};

/// Rank of the span of a family of elements (exact arithmetic).
std::uint64_t span_rank(const std::vector<AlgebraElement>& elems, LinalgOptions opts = {});

/// Coefficients expressing target in the given family, or empty if outside
/// its span. When the family is linearly dependent one valid expression is
/// returned (deterministic in the family order).
std::optional<std::vector<Scalar>> in_span(const AlgebraElement& target,
                                           const std::vector<AlgebraElement>& family,
                                           LinalgOptions opts = {});

} // namespace gspin
