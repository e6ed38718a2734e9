#pragma once

#include <memory>
#include <vector>

#include "gspin/field.hpp"
#include "gspin/linalg.hpp"
#include "gspin/quantum_double.hpp"
#include "gspin/twist.hpp"

namespace gspin {

struct GammaCore;

/// Action of the double on the field algebra over the same group pair and
/// window: the group leg simultaneously translates every projection and
/// conjugates every shift, the function leg matches the total shift.
class GammaAction {
public:
    GammaAction(const DoubleAlgebra& D, const FieldAlgebra& F);

    const DoubleAlgebra& double_algebra() const;
    const FieldAlgebra& field() const;

    /// Ascending product of a monomial's shift entries.
    Elem total_shift(Label m) const;

    AlgebraElement act_basis(Label a, Label m) const;
    AlgebraElement act(const AlgebraElement& x, const AlgebraElement& v) const;

    /// Reference path: iterate the coproduct over the monomial's defining
    /// word and act factor by factor. Must agree with act_basis.
    AlgebraElement act_word(Label a, Label m) const;

    ModuleAction as_module_action() const;

    /// Averaged action of the integral; an idempotent onto the invariants.
    AlgebraElement project_basis(Label m) const;
    AlgebraElement project(const AlgebraElement& v) const;

private:
    std::shared_ptr<const GammaCore> core_;
};

/// Shift-sandwich generator at an integer site:
///   sum over k of r[k h^-1 k^-1]@(x-1/2) d[k]@x r[k h k^-1]@(x+1/2).
AlgebraElement v_generator(const FieldAlgebra& F, Elem h, int x);

/// v with its left shift leg dropped; not invariant under the projection.
AlgebraElement v_generator_truncated(const FieldAlgebra& F, Elem h, int x);

/// Paired-projection generator across an interior half site:
///   sum over k of d[k]@(l-1/2) d[kg]@(l+1/2).
AlgebraElement w_generator(const FieldAlgebra& F, Elem g, int half_code);

/// One generator of the invariant subalgebra, with its site and label.
struct ObservableGenerator {
    bool is_v = true;
    int code = 0;   // doubled site coordinate
    Elem elem = 0;  // subgroup member for v, group element for w
    AlgebraElement value;
};

/// Every v over the window's integer sites and every w over its interior
/// half sites.
std::vector<ObservableGenerator> observable_generators(const FieldAlgebra& F);

/// Span of the unital subalgebra generated by the v and w families,
/// computed breadth-first; insertion order is fixed, so the basis does not
/// depend on thread count.
SpanBasis generated_span(const FieldAlgebra& F, const LinalgOptions& lopts = {});

struct ObservableSpans {
    SpanBasis z_image; // projections of all basis monomials
    SpanBasis vw;      // subalgebra generated by the v and w families
};

ObservableSpans observable_spans(const GammaAction& act, const LinalgOptions& lopts = {});

/// Laws of the action: the closed form against the coproduct path,
/// idempotence of the projection, and invariance of the generators.
VerifyReport verify_action(const GammaAction& act, const VerifyOptions& opts = {});

/// Relations of the generator families: shifts multiply, paired projections
/// are orthogonal resolutions, star values, the site exchange rules, and
/// commutation at a distance.
VerifyReport verify_generator_relations(const FieldAlgebra& F, const VerifyOptions& opts = {});

/// The two spans coincide, their rank is the predicted product of factor
/// sizes, and projecting adjacent projection pairs lands on a w generator.
VerifyReport verify_observables(const GammaAction& act, const ObservableSpans& spans,
                                const VerifyOptions& opts = {});

/// Maps each basis tuple of the iterated twisted product on the doubled
/// window to the site-ordered product of generators (v on even slots, w on
/// odd slots). Images are cached once at construction.
class GeneratorProductMap {
public:
    GeneratorProductMap(const IteratedAlgebra& A, const FieldAlgebra& F);

    const IteratedAlgebra& domain() const;
    const FieldAlgebra& codomain() const;

    const AlgebraElement& image_basis(Label l) const;
    AlgebraElement image(const AlgebraElement& x) const;

private:
    std::shared_ptr<const IteratedAlgebra> dom_;
    std::shared_ptr<const FieldAlgebra> cod_;
    std::shared_ptr<const std::vector<AlgebraElement>> images_;
};

/// Unital injective *-homomorphism laws for the map, plus (when spans are
/// given) mutual containment between its image and the generated span.
VerifyReport verify_generator_product_map(const GeneratorProductMap& phi,
                                          const ObservableSpans* spans = nullptr,
                                          const VerifyOptions& opts = {});

/// The map on a nested window agrees with the map on a containing window
/// through unit padding on one side and field transport on the other.
VerifyReport verify_map_tower(const GeneratorProductMap& inner, const GeneratorProductMap& outer,
                              const VerifyOptions& opts = {});

} // namespace gspin
