#include "gspin/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace gspin {

void require_same_space(const LabelSpaceRef& a, const LabelSpaceRef& b, const char* who) {
    if (!same_space(a, b)) {
        throw std::invalid_argument(std::string(who) + ": label spaces differ (" +
                                    (a ? a->name() : "<null>") + " vs " +
                                    (b ? b->name() : "<null>") + ")");
    }
}

Scalar AlgebraElement::coeff(Label l) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), l,
                               [](const Term& t, Label v) { return t.first < v; });
    if (it != terms_.end() && it->first == l) return it->second;
    return Scalar(0);
}

void AlgebraElement::add_term(Label l, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), l,
                               [](const Term& t, Label v) { return t.first < v; });
    if (it != terms_.end() && it->first == l) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {l, c});
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    require_same_space(space_, o.space_, "AlgebraElement::operator+=");
    if (o.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae && b != be) {
        if (a->first < b->first) {
            merged.push_back(*a++);
        } else if (b->first < a->first) {
            merged.push_back(*b++);
        } else {
            Scalar s = a->second + b->second;
            if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
            ++a; ++b;
        }
    }
    merged.insert(merged.end(), a, ae);
    merged.insert(merged.end(), b, be);
    terms_ = std::move(merged);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    return *this += o.scaled(Scalar(-1));
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement out(space_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& [l, s] : terms_) out.terms_.emplace_back(l, s * c);
    return out;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [l, s] : terms_) {
        if (!first) out += " + ";
        first = false;
        if (s.is_one()) {
            out += space_->render(l);
        } else {
            out += "(" + s.str() + ")*" + space_->render(l);
        }
    }
    return out;
}

void ElementAccumulator::add(const AlgebraElement& e, const Scalar& c) {
    require_same_space(space_, e.space(), "ElementAccumulator::add");
    if (c.is_zero()) return;
    for (const auto& [l, s] : e.terms()) add(l, s * c);
}

AlgebraElement ElementAccumulator::freeze() const {
    AlgebraElement out(space_);
    for (const auto& [l, s] : acc_) out.add_term(l, s);
    return out;
}

} // namespace gspin
