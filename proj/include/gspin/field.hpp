#pragma once

#include <optional>
#include <vector>

#include "gspin/algebra.hpp"
#include "gspin/group.hpp"
#include "gspin/sparse_mat.hpp"
#include "gspin/verify.hpp"

namespace gspin {

/// Observable window of integer sites lo..hi. The surrounding field window
/// adds the half sites lo-1/2 .. hi+1/2. Site coordinates are stored doubled:
/// integer site x has code 2x, half site t+1/2 has code 2t+1.
struct LatticeWindow {
    int lo = 0, hi = 0;

    int num_int() const { return hi - lo + 1; }
    int num_half() const { return hi - lo + 2; }
    std::vector<int> int_codes() const;
    std::vector<int> half_codes() const;
    bool holds_code(int code) const {
        return code >= 2 * lo - 1 && code <= 2 * hi + 1;
    }
    /// "0", "1", "-1/2", "3/2", ...
    static std::string site_str(int code);
};

/// One generator occurrence in a word: a projection d[g]@x on an integer
/// site or a shift r[h]@l on a half site.
struct FieldFactor {
    bool is_delta = true;
    int code = 0;
    Elem elem = 0;
};

enum class ReduceStrategy { leftmost, rightmost };

/// Rewrites a word of generators into the normal order (projections by
/// ascending site, then shifts by ascending site), applying the exchange
/// relations. Returns nullopt when a same-site projection clash kills the
/// word. The strategy picks which reducible adjacent pair is rewritten
/// first; both strategies produce the same normal form.
std::optional<std::vector<FieldFactor>> reduce_field_word(const FiniteGroup& G,
                                                          std::vector<FieldFactor> word,
                                                          ReduceStrategy strategy);

struct FieldCore;

/// Truncated field algebra on a window: basis monomials assign one group
/// element to every integer site (projection) and one subgroup member to
/// every half site (shift). Products and star go through word rewriting.
class FieldAlgebra {
public:
    struct Monomial {
        std::vector<Elem> delta; // per integer site, ascending
        std::vector<Elem> rho;   // per half site, ascending; members of H
    };

    FieldAlgebra(const FiniteGroup& G, const Subgroup& H, LatticeWindow w,
                 std::uint64_t max_dim = 100000);

    const StructureAlgebra& algebra() const { return alg_; }
    const LabelSpaceRef& space() const { return alg_.space(); }
    std::uint64_t dim() const { return alg_.dim(); }
    const LatticeWindow& window() const;
    const FiniteGroup& group() const;
    const Subgroup& subgroup() const;

    Monomial decode(Label l) const;
    Label encode(const Monomial& m) const;
    /// The defining word of a basis monomial: all projections, then all
    /// shifts (identity shifts included), sites ascending.
    std::vector<FieldFactor> word_of(Label l) const;

    AlgebraElement delta_gen(Elem g, int x) const;
    AlgebraElement rho_gen(Elem h, int half_code) const;

    /// Normal-order an arbitrary in-window word and expand it over the
    /// monomial basis (missing projections become resolutions of identity).
    AlgebraElement from_word(const std::vector<FieldFactor>& word,
                             ReduceStrategy strategy = ReduceStrategy::leftmost) const;

    /// Reference product and star computed by concatenating defining words
    /// and rewriting; must agree with the closed forms used by algebra()
    /// under either strategy.
    AlgebraElement mul_basis_rewrite(Label a, Label b,
                                     ReduceStrategy strategy = ReduceStrategy::leftmost) const;
    AlgebraElement star_basis_rewrite(Label a,
                                      ReduceStrategy strategy = ReduceStrategy::leftmost) const;

private:
    std::shared_ptr<const FieldCore> core_;
    StructureAlgebra alg_;
};

/// Shift-and-match oracle on functions over configurations: one group element
/// per integer site plus one virtual site just past the right edge. The shift
/// r[h]@l multiplies every configuration entry strictly right of l by h^-1.
struct LatticeRep {
    std::uint64_t carrier = 0;
    LabelSpaceRef flat_space;
    std::shared_ptr<const FieldCore> core;

    SparseMat delta_mat(Elem g, int x) const;
    SparseMat rho_mat(Elem h, int half_code) const;
    SparseMat monomial_mat(Label l) const;
    SparseMat mat_elem(const AlgebraElement& x) const;
};

LatticeRep lattice_representation(const FieldAlgebra& F);

/// All defining relations as matrix identities, plus homomorphism and star
/// compatibility of monomial images.
VerifyReport verify_lattice(const FieldAlgebra& F, const LatticeRep& rep,
                            const VerifyOptions& opts = {});

/// Rank of the monomial images; reported by the field suite, not asserted.
std::uint64_t lattice_rank(const FieldAlgebra& F, const LatticeRep& rep, bool parallel = true);

/// Re-express an element of one field algebra inside another over the same
/// group whose window contains the source window and whose shift subgroup
/// contains every shift that occurs (missing projections are resolved,
/// missing shifts stay trivial). Acts as an injective unital *-homomorphism.
AlgebraElement transport_field_elem(const FieldAlgebra& from, const FieldAlgebra& to,
                                    const AlgebraElement& x);

} // namespace gspin
