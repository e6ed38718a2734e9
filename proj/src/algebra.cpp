#include "gspin/algebra.hpp"

#include <stdexcept>

namespace gspin {

StructureAlgebra::StructureAlgebra(LabelSpaceRef space,
                                   std::function<AlgebraElement(Label, Label)> mul,
                                   AlgebraElement unit,
                                   std::function<AlgebraElement(Label)> star)
    : space_(std::move(space)), mul_(std::move(mul)), unit_(std::move(unit)), star_(std::move(star)) {
    require_same_space(space_, unit_.space(), "StructureAlgebra: unit");
}

AlgebraElement StructureAlgebra::mul(const AlgebraElement& x, const AlgebraElement& y) const {
    require_same_space(space_, x.space(), "StructureAlgebra::mul");
    require_same_space(space_, y.space(), "StructureAlgebra::mul");
    ElementAccumulator acc(space_);
    for (const auto& [lx, cx] : x.terms())
        for (const auto& [ly, cy] : y.terms()) acc.add(mul_(lx, ly), cx * cy);
    return acc.freeze();
}

AlgebraElement StructureAlgebra::star(const AlgebraElement& x) const {
    require_same_space(space_, x.space(), "StructureAlgebra::star");
    ElementAccumulator acc(space_);
    for (const auto& [l, c] : x.terms()) acc.add(star_(l), c.conj());
    return acc.freeze();
}

LabelSpaceRef pair_space(const LabelSpaceRef& a, const LabelSpaceRef& b) {
    const std::uint64_t bd = b->dim();
    LabelSpaceRef ac = a, bc = b;
    return make_space(a->name() + "(x)" + b->name(), a->dim() * bd, [ac, bc, bd](Label v) {
        return ac->render(v / bd) + "(x)" + bc->render(v % bd);
    });
}

LabelSpaceRef triple_space(const LabelSpaceRef& a, const LabelSpaceRef& b, const LabelSpaceRef& c) {
    const std::uint64_t bd = b->dim(), cd = c->dim();
    LabelSpaceRef ac = a, bc = b, cc = c;
    return make_space(a->name() + "(x)" + b->name() + "(x)" + c->name(), a->dim() * bd * cd,
                      [ac, bc, cc, bd, cd](Label v) {
                          return ac->render(v / (bd * cd)) + "(x)" + bc->render((v / cd) % bd) +
                                 "(x)" + cc->render(v % cd);
                      });
}

AlgebraElement tensor(const AlgebraElement& x, const AlgebraElement& y) {
    auto space = pair_space(x.space(), y.space());
    TensorIndexer ix{y.space()->dim()};
    ElementAccumulator acc(space);
    for (const auto& [lx, cx] : x.terms())
        for (const auto& [ly, cy] : y.terms()) acc.add(ix.make(lx, ly), cx * cy);
    return acc.freeze();
}

StructureAlgebra tensor_square_algebra(const StructureAlgebra& A) {
    auto space = pair_space(A.space(), A.space());
    TensorIndexer ix{A.dim()};
    auto mul = [A, ix, space](Label p, Label q) {
        auto [pa, pb] = ix.split(p);
        auto [qa, qb] = ix.split(q);
        AlgebraElement left = A.mul_basis(pa, qa);
        AlgebraElement right = A.mul_basis(pb, qb);
        ElementAccumulator acc(space);
        for (const auto& [l, cl] : left.terms())
            for (const auto& [r, cr] : right.terms()) acc.add(ix.make(l, r), cl * cr);
        return acc.freeze();
    };
    auto star = [A, ix, space](Label p) {
        auto [pa, pb] = ix.split(p);
        AlgebraElement left = A.star_basis(pa);
        AlgebraElement right = A.star_basis(pb);
        ElementAccumulator acc(space);
        for (const auto& [l, cl] : left.terms())
            for (const auto& [r, cr] : right.terms()) acc.add(ix.make(l, r), cl * cr);
        return acc.freeze();
    };
    AlgebraElement unit = tensor(A.unit(), A.unit());
    // rebuild over the shared pair space object so equality checks line up
    ElementAccumulator uacc(space);
    for (const auto& [l, c] : unit.terms()) uacc.add(l, c);
    return StructureAlgebra(space, mul, uacc.freeze(), star);
}

HopfStructure::HopfStructure(StructureAlgebra base,
                             std::function<AlgebraElement(Label)> comul,
                             std::function<Scalar(Label)> counit,
                             std::function<AlgebraElement(Label)> antipode)
    : base_(std::move(base)),
      square_(pair_space(base_.space(), base_.space())),
      comul_(std::move(comul)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {}

AlgebraElement HopfStructure::comul(const AlgebraElement& x) const {
    require_same_space(base_.space(), x.space(), "HopfStructure::comul");
    ElementAccumulator acc(square_);
    for (const auto& [l, c] : x.terms()) acc.add(comul_(l), c);
    return acc.freeze();
}

Scalar HopfStructure::counit(const AlgebraElement& x) const {
    require_same_space(base_.space(), x.space(), "HopfStructure::counit");
    Scalar out(0);
    for (const auto& [l, c] : x.terms()) out += counit_(l) * c;
    return out;
}

AlgebraElement HopfStructure::antipode(const AlgebraElement& x) const {
    require_same_space(base_.space(), x.space(), "HopfStructure::antipode");
    ElementAccumulator acc(base_.space());
    for (const auto& [l, c] : x.terms()) acc.add(antipode_(l), c);
    return acc.freeze();
}

ModuleAction::ModuleAction(HopfStructure acting, StructureAlgebra target,
                           std::function<AlgebraElement(Label, Label)> act)
    : acting_(std::move(acting)), target_(std::move(target)), act_(std::move(act)) {}

AlgebraElement ModuleAction::act(const AlgebraElement& a, const AlgebraElement& m) const {
    require_same_space(acting_.base().space(), a.space(), "ModuleAction::act");
    require_same_space(target_.space(), m.space(), "ModuleAction::act");
    ElementAccumulator acc(target_.space());
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lm, cm] : m.terms()) acc.add(act_(la, lm), ca * cm);
    return acc.freeze();
}

} // namespace gspin
