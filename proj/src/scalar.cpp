#include "gspin/scalar.hpp"

#include <stdexcept>

namespace gspin {

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
    mpq_class n = b.re_ * b.re_ + b.im_ * b.im_;
    mpq_class re = (a.re_ * b.re_ + a.im_ * b.im_) / n;
    mpq_class im = (a.im_ * b.re_ - a.re_ * b.im_) / n;
    return Scalar(re, im);
}

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

std::string imag_str(const mpq_class& q) {
    if (q == 1) return "i";
    if (q == -1) return "-i";
    return rat_str(q) + "i";
}

} // namespace

std::string Scalar::str() const {
    if (im_ == 0) return rat_str(re_);
    if (re_ == 0) return imag_str(im_);
    std::string s = rat_str(re_);
    if (im_ > 0) s += "+";
    return s + imag_str(im_);
}

} // namespace gspin
