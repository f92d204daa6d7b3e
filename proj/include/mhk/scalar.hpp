#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace mhk {

using Rational = boost::multiprecision::cpp_rational;

/// Exact Gaussian rational scalar: a + b*i with a, b arbitrary-precision
/// rationals. Arithmetic never leaves this field, so equality is decidable.
class Scalar {
public:
    Scalar() = default;
    Scalar(std::int64_t n) : re_(n) {}  // NOLINT: implicit on purpose
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar fraction(std::int64_t num, std::int64_t den) {
        return Scalar(Rational(num, den));
    }
    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    Scalar inverse() const;
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Serialized as "num/den" (or "num" when den is 1); complex values as
    /// "re+im*i" with each part in that form.
    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

}  // namespace mhk
