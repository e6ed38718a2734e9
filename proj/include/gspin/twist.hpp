#pragma once

#include <map>
#include <vector>

#include "gspin/algebra.hpp"
#include "gspin/group.hpp"
#include "gspin/mixed_radix.hpp"
#include "gspin/sparse_mat.hpp"
#include "gspin/verify.hpp"

namespace gspin {

// Building blocks for the alternating factor chains: group algebras and
// function algebras with their standard Hopf structures.
StructureAlgebra group_algebra(const FiniteGroup& G);
HopfStructure group_hopf(const FiniteGroup& G);
StructureAlgebra subgroup_group_algebra(const FiniteGroup& G, const Subgroup& H);
HopfStructure subgroup_group_hopf(const FiniteGroup& G, const Subgroup& H);
StructureAlgebra dual_group_algebra(const FiniteGroup& G);
HopfStructure dual_group_hopf(const FiniteGroup& G);
StructureAlgebra dual_subgroup_algebra(const FiniteGroup& G, const Subgroup& H);

/// Linear map R from upper (x) lower into lower (x) upper, used to multiply
/// across a displaced pair in a twisted tensor product: the compatibility
/// conditions make (a (x) b)(a' (x) b') = a R(b (x) a') b' associative.
class TwistingMap {
public:
    TwistingMap(StructureAlgebra lower, StructureAlgebra upper,
                std::function<AlgebraElement(Label, Label)> rule);

    const StructureAlgebra& lower() const { return lower_; }
    const StructureAlgebra& upper() const { return upper_; }
    const LabelSpaceRef& target_space() const { return target_; }
    TensorIndexer target_indexer() const { return {upper_.dim()}; }

    /// R(upper basis b (x) lower basis a), an element of lower (x) upper.
    AlgebraElement apply(Label b, Label a) const { return rule_(b, a); }
    AlgebraElement apply_elem(const AlgebraElement& b, const AlgebraElement& a) const;

private:
    StructureAlgebra lower_, upper_;
    LabelSpaceRef target_;
    std::function<AlgebraElement(Label, Label)> rule_;
};

TwistingMap flip_map(const StructureAlgebra& lower, const StructureAlgebra& upper);

/// Smash-product twist from a left module-algebra action:
/// R(b (x) a) = sum b1.a (x) b2 over the coproduct of b.
TwistingMap twist_from_module(const ModuleAction& action);

/// Checks both product-compatibility conditions and the unit conditions.
VerifyReport verify_twisting_map(const TwistingMap& R, const VerifyOptions& opts = {});

/// Compatibility of the three maps on triples (hexagon): both ways of carrying
/// A_k (x) A_j (x) A_i to A_i (x) A_j (x) A_k agree.
VerifyReport verify_hexagon(const TwistingMap& r_ij, const TwistingMap& r_jk,
                            const TwistingMap& r_ik, const VerifyOptions& opts = {});

/// Two-factor twisted tensor product as a plain algebra over the pair space.
/// A star rule may be supplied; by default star throws when used.
StructureAlgebra twisted_pair_algebra(const StructureAlgebra& A, const StructureAlgebra& B,
                                      const TwistingMap& R,
                                      std::function<AlgebraElement(Label)> star = {});

enum class BubbleOrder { rightmost, leftmost };

/// The standard twist between chain factors i < j: neighbor rules between a
/// subgroup algebra and a dual group algebra, plain flip when j - i >= 2.
TwistingMap standard_twist(const FiniteGroup& G, const Subgroup& H, int i, int j);

/// Is chain factor i a copy of the subgroup algebra (even) or the dual group
/// algebra (odd)?
inline bool factor_is_group_side(int i) { return i % 2 == 0; }

struct IterCore;

/// Iterated twisted tensor product of the alternating chain A_lo (x) ... (x) A_hi,
/// factors CH at even index and functions-on-G at odd index. Basis labels are
/// big-endian digit tuples; the product reorders the concatenated word with
/// the standard twists, rightmost displaced pair first.
class IteratedAlgebra {
public:
    static IteratedAlgebra build(const FiniteGroup& G, const Subgroup& H, int lo, int hi);

    const StructureAlgebra& algebra() const { return alg_; }
    const LabelSpaceRef& space() const { return alg_.space(); }
    std::uint64_t dim() const { return alg_.dim(); }
    int lo() const;
    int hi() const;
    int factors() const { return hi() - lo() + 1; }
    const FiniteGroup& group() const;
    const Subgroup& subgroup() const;

    const StructureAlgebra& factor(int i) const;
    const TwistingMap& twist(int i, int j) const;

    std::vector<int> digits(Label l) const;
    Label label_from_digits(const std::vector<int>& d) const;

    /// Product with an explicit reordering strategy; the default product uses
    /// BubbleOrder::rightmost. Leftmost corresponds to the other bracketing of
    /// a three-factor window.
    AlgebraElement mul_ordered(Label a, Label b, BubbleOrder order) const;

private:
    IteratedAlgebra() = default;
    std::shared_ptr<const IterCore> core_;
    StructureAlgebra alg_;
};

/// Pad an inner-window basis tuple with units to land in the outer window.
/// Windows must satisfy outer.lo <= inner.lo and inner.hi <= outer.hi.
AlgebraElement embed_window(const IteratedAlgebra& inner, const IteratedAlgebra& outer, Label l);
AlgebraElement embed_window_elem(const IteratedAlgebra& inner, const IteratedAlgebra& outer,
                                 const AlgebraElement& x);

/// unital, multiplicative, star-preserving, injective (by rank).
VerifyReport verify_embedding(const IteratedAlgebra& inner, const IteratedAlgebra& outer,
                              const VerifyOptions& opts = {});

/// Matrix *-representation of a three-factor window on functions over G x G.
struct MatrixRep {
    std::uint64_t carrier = 0;
    LabelSpaceRef flat_space; // carrier^2 labels, row-major
    std::function<SparseMat(Label)> image;

    SparseMat image_elem(const AlgebraElement& x) const;
};

/// Representation of the window [0,2] chain (CH (x) C(G) (x) CH).
MatrixRep repr_pi_02(const FiniteGroup& G, const Subgroup& H);
/// Representation of the window [1,3] chain (C(G) (x) CH (x) C(G)).
MatrixRep repr_pi_13(const FiniteGroup& G, const Subgroup& H);

/// Homomorphism, star-compatibility, unit and faithfulness (rank equals dim).
VerifyReport verify_representation(const IteratedAlgebra& A, const MatrixRep& rep,
                                   const VerifyOptions& opts = {});

} // namespace gspin
