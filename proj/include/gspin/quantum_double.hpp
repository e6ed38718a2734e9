#pragma once

#include "gspin/algebra.hpp"
#include "gspin/group.hpp"
#include "gspin/verify.hpp"

namespace gspin {

/// The crossed-product Hopf *-algebra built from functions on a normal
/// subgroup H and the group algebra of G. Basis labels are pairs (h, g)
/// with h running over H's members and g over G, ordered h-major.
struct DoubleAlgebra {
    HopfStructure hopf;
    GroupRef group;
    Subgroup sub;

    const LabelSpaceRef& space() const { return hopf.base().space(); }
    std::uint64_t dim() const { return hopf.base().dim(); }

    Label label(int h_pos, Elem g) const {
        return static_cast<Label>(h_pos) * group->order() + g;
    }
    /// (h, g) as parent-group elements.
    std::pair<Elem, Elem> elems(Label l) const {
        const int n = group->order();
        return {sub.member(static_cast<int>(l) / n), static_cast<Elem>(l % n)};
    }
};

/// Builds the double. H must be normal in G; with force_build the maps are
/// assembled anyway (values escaping H truncate to zero), which deliberately
/// breaks some axioms and is used for negative controls.
DoubleAlgebra build_double(const FiniteGroup& G, const Subgroup& H, bool force_build = false);

/// The normalized two-sided integral: the average over G of the pairs
/// (identity of H, g).
AlgebraElement integral_of(const DoubleAlgebra& D);

/// a z = z a = counit(a) z on every basis label, z* = z, z z = z.
VerifyReport verify_integral(const DoubleAlgebra& D, const VerifyOptions& opts = {});

} // namespace gspin
