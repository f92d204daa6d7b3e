#include "mhk/scalar.hpp"

#include <stdexcept>

namespace mhk {

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    Rational n = re_ * re_ + im_ * im_;
    return Scalar(re_ / n, -im_ / n);
}

static std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

std::string Scalar::str() const {
    if (im_ == 0) return rational_str(re_);
    std::string s = rational_str(re_);
    s += (im_ > 0) ? "+" : "-";
    s += rational_str(abs(im_));
    s += "*i";
    return s;
}

}  // namespace mhk
