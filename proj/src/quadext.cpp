#include "lsgdd/quadext.hpp"

#include <cmath>
#include <stdexcept>

namespace lsgdd {

QuadExt::QuadExt(Rational a, Rational b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_ < 0) throw std::domain_error("QuadExt: d must be nonnegative");
    normalize();
}

void QuadExt::normalize() {
    if (d_ == 0) {
        b_ = 0;
    } else if (d_ == 1) {
        a_ += b_;
        b_ = 0;
    }
    if (b_ == 0) d_ = 0;
}

Int QuadExt::unify_d(const QuadExt& x, const QuadExt& y) {
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    if (x.d_ != y.d_)
        throw std::domain_error("QuadExt: mixed radical contexts sqrt(" + x.d_.str() + ") vs sqrt(" +
                                y.d_.str() + ")");
    return x.d_;
}

Rational QuadExt::as_rational() const {
    if (b_ != 0) throw std::domain_error("QuadExt: value " + to_string() + " is irrational");
    return a_;
}

bool QuadExt::is_integer() const {
    return b_ == 0 && boost::multiprecision::denominator(a_) == 1;
}

int QuadExt::sign() const {
    const int sa = a_ == 0 ? 0 : (a_ > 0 ? 1 : -1);
    if (b_ == 0) return sa;
    const int sb = b_ > 0 ? 1 : -1;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with d*b^2.
    Rational lhs = a_ * a_;
    Rational rhs = Rational(d_) * b_ * b_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

Int QuadExt::floor() const {
    if (b_ == 0) {
        Int num = boost::multiprecision::numerator(a_);
        Int den = boost::multiprecision::denominator(a_);
        Int q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }
    // Start from a double estimate, then fix up with exact comparisons.
    double approx = static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(static_cast<double>(d_));
    Int n(static_cast<long long>(std::floor(approx)));
    while ((*this - QuadExt(n)).sign() < 0) --n;
    while ((*this - QuadExt(n + 1)).sign() >= 0) ++n;
    return n;
}

QuadExt QuadExt::operator-() const {
    QuadExt r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    d_ = unify_d(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    d_ = unify_d(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    Int d = unify_d(*this, o);
    Rational a = a_ * o.a_ + Rational(d) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = std::move(d);
    normalize();
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    if (o.is_zero()) throw std::domain_error("QuadExt: division by zero");
    Int d = unify_d(*this, o);
    // 1/(a+b*sqrt(d)) = (a-b*sqrt(d))/(a^2-d*b^2)
    Rational norm = o.a_ * o.a_ - Rational(d) * o.b_ * o.b_;
    QuadExt inv(o.a_ / norm, -o.b_ / norm, d);
    return *this *= inv;
}

std::string QuadExt::to_string() const {
    if (b_ == 0) return rational_to_string(a_);
    std::string surd = (b_ == 1 ? "" : (b_ == -1 ? "-" : rational_to_string(b_) + "*")) + "sqrt(" + d_.str() + ")";
    if (a_ == 0) return surd;
    if (b_ > 0) return rational_to_string(a_) + "+" + surd;
    return rational_to_string(a_) + surd;  // surd already carries the minus sign
}

QuadExt QuadExt::sqrt_of(const Rational& r) {
    if (r < 0) throw std::domain_error("QuadExt::sqrt_of: negative radicand");
    if (r == 0) return QuadExt(0);
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    // sqrt(num/den) = sqrt(num*den)/den
    Int nd = num * den;
    Int s = squarefree_part(nd);
    Int t2 = nd / s;
    Int t;
    is_perfect_square(t2, &t);
    return QuadExt(0, Rational(t, den), s);
}

}  // namespace lsgdd
