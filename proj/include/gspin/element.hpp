#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gspin/scalar.hpp"

namespace gspin {

using Label = std::uint64_t;

/// An enumerable basis-label space: dimension plus a renderer for labels.
/// Spaces are identified by (name, dim); elements of different spaces never mix.
class LabelSpace {
public:
    LabelSpace(std::string name, std::uint64_t dim,
               std::function<std::string(Label)> render)
        : name_(std::move(name)), dim_(dim), render_(std::move(render)) {}

    const std::string& name() const { return name_; }
    std::uint64_t dim() const { return dim_; }
    std::string render(Label l) const { return render_ ? render_(l) : std::to_string(l); }

private:
    std::string name_;
    std::uint64_t dim_;
    std::function<std::string(Label)> render_;
};

using LabelSpaceRef = std::shared_ptr<const LabelSpace>;

inline LabelSpaceRef make_space(std::string name, std::uint64_t dim,
                                std::function<std::string(Label)> render = {}) {
    return std::make_shared<LabelSpace>(std::move(name), dim, std::move(render));
}

inline bool same_space(const LabelSpaceRef& a, const LabelSpaceRef& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->name() == b->name() && a->dim() == b->dim();
}

/// Sparse vector over a label space: sorted (label, nonzero scalar) terms.
class AlgebraElement {
public:
    using Term = std::pair<Label, Scalar>;

    explicit AlgebraElement(LabelSpaceRef space) : space_(std::move(space)) {}

    static AlgebraElement basis(LabelSpaceRef space, Label l, Scalar c = Scalar(1)) {
        AlgebraElement e(std::move(space));
        if (!c.is_zero()) e.terms_.emplace_back(l, std::move(c));
        return e;
    }

    const LabelSpaceRef& space() const { return space_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of a basis label (zero if absent).
    Scalar coeff(Label l) const;

    /// Accumulate a single term, keeping the invariant (sorted, no zeros).
    void add_term(Label l, const Scalar& c);

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { a += b; return a; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { a -= b; return a; }

    AlgebraElement scaled(const Scalar& c) const;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return same_space(a.space_, b.space_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    std::string str() const;

private:
    LabelSpaceRef space_;
    std::vector<Term> terms_;
};

/// Order-insensitive accumulator; freeze() produces a canonical element.
class ElementAccumulator {
public:
    explicit ElementAccumulator(LabelSpaceRef space) : space_(std::move(space)) {}

    void add(Label l, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = acc_.try_emplace(l, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) acc_.erase(it);
        }
    }
    void add(const AlgebraElement& e, const Scalar& c = Scalar(1));

    AlgebraElement freeze() const;

private:
    LabelSpaceRef space_;
    std::map<Label, Scalar> acc_;
};

void require_same_space(const LabelSpaceRef& a, const LabelSpaceRef& b, const char* who);

} // namespace gspin
