#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "gspin/element.hpp"

namespace gspin {

/// A unital *-algebra presented by a basis-label space, a product rule on
/// basis labels, a unit element, and a star rule on basis labels. Products
/// and star extend (bi)linearly; star is conjugate-linear and antimultiplicative
/// by construction of the extension, so the verifier only probes the rules.
class StructureAlgebra {
public:
    StructureAlgebra() = default;
    StructureAlgebra(LabelSpaceRef space,
                     std::function<AlgebraElement(Label, Label)> mul,
                     AlgebraElement unit,
                     std::function<AlgebraElement(Label)> star);

    const LabelSpaceRef& space() const { return space_; }
    std::uint64_t dim() const { return space_->dim(); }
    const AlgebraElement& unit() const { return unit_; }

    AlgebraElement mul_basis(Label a, Label b) const { return mul_(a, b); }
    AlgebraElement star_basis(Label a) const { return star_(a); }

    AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const;
    AlgebraElement star(const AlgebraElement& x) const;

private:
    LabelSpaceRef space_;
    std::function<AlgebraElement(Label, Label)> mul_;
    AlgebraElement unit_{LabelSpaceRef{}};
    std::function<AlgebraElement(Label)> star_;
};

/// Index arithmetic for a two-factor tensor space (left-major ordering).
struct TensorIndexer {
    std::uint64_t right_dim = 1;
    Label make(Label l, Label r) const { return l * right_dim + r; }
    std::pair<Label, Label> split(Label v) const { return {v / right_dim, v % right_dim}; }
};

LabelSpaceRef pair_space(const LabelSpaceRef& a, const LabelSpaceRef& b);
LabelSpaceRef triple_space(const LabelSpaceRef& a, const LabelSpaceRef& b, const LabelSpaceRef& c);

/// x (x) y inside pair_space(x.space, y.space).
AlgebraElement tensor(const AlgebraElement& x, const AlgebraElement& y);

/// Componentwise algebra structure on A (x) A (star componentwise as well).
StructureAlgebra tensor_square_algebra(const StructureAlgebra& A);

/// Hopf structure layered over a StructureAlgebra: coproduct into the tensor
/// square, counit, antipode, all given on basis labels and extended linearly.
class HopfStructure {
public:
    HopfStructure() = default;
    HopfStructure(StructureAlgebra base,
                  std::function<AlgebraElement(Label)> comul,
                  std::function<Scalar(Label)> counit,
                  std::function<AlgebraElement(Label)> antipode);

    const StructureAlgebra& base() const { return base_; }
    const LabelSpaceRef& square_space() const { return square_; }
    TensorIndexer square_indexer() const { return {base_.dim()}; }

    AlgebraElement comul_basis(Label a) const { return comul_(a); }
    AlgebraElement comul(const AlgebraElement& x) const;
    Scalar counit_basis(Label a) const { return counit_(a); }
    Scalar counit(const AlgebraElement& x) const;
    AlgebraElement antipode_basis(Label a) const { return antipode_(a); }
    AlgebraElement antipode(const AlgebraElement& x) const;

private:
    StructureAlgebra base_;
    LabelSpaceRef square_;
    std::function<AlgebraElement(Label)> comul_;
    std::function<Scalar(Label)> counit_;
    std::function<AlgebraElement(Label)> antipode_;
};

/// Left action of a Hopf algebra on a *-algebra, given on basis labels.
class ModuleAction {
public:
    ModuleAction(HopfStructure acting, StructureAlgebra target,
                 std::function<AlgebraElement(Label, Label)> act);

    const HopfStructure& acting() const { return acting_; }
    const StructureAlgebra& target() const { return target_; }

    AlgebraElement act_basis(Label a, Label m) const { return act_(a, m); }
    AlgebraElement act(const AlgebraElement& a, const AlgebraElement& m) const;

private:
    HopfStructure acting_;
    StructureAlgebra target_;
    std::function<AlgebraElement(Label, Label)> act_;
};

} // namespace gspin
