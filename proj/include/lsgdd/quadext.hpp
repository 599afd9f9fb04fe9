#pragma once

#include <string>

#include "lsgdd/int_types.hpp"

namespace lsgdd {

/// Exact scalar a + b*sqrt(d) with a, b rational and d a fixed squarefree
/// nonnegative integer. Values with b == 0 are context-free and combine with
/// any d; mixing two irrational values with different d is an error.
///
/// d in {0, 1} is folded away at construction, so the rational subfield has a
/// single canonical representation and equality is componentwise.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
    QuadExt(const Int& a) : a_(Rational(a)), b_(0), d_(0) {} // NOLINT(google-explicit-constructor)
    QuadExt(long long a) : a_(Rational(a)), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rational a, Rational b, Int d);

    [[nodiscard]] const Rational& a() const { return a_; }
    [[nodiscard]] const Rational& b() const { return b_; }
    [[nodiscard]] const Int& d() const { return d_; }

    [[nodiscard]] bool is_rational() const { return b_ == 0; }
    [[nodiscard]] bool is_zero() const { return a_ == 0 && b_ == 0; }
    /// Rational part accessor; throws if the value is irrational.
    [[nodiscard]] Rational as_rational() const;
    [[nodiscard]] bool is_integer() const;

    /// -1, 0 or +1, decided exactly.
    [[nodiscard]] int sign() const;
    /// Largest integer <= value.
    [[nodiscard]] Int floor() const;

    QuadExt operator-() const;
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    [[nodiscard]] std::string to_string() const;

    /// Exact square root of a nonnegative rational: r = (t/q)^2 * s with s
    /// squarefree, giving (t/q)*sqrt(s). Result is rational when s == 1.
    static QuadExt sqrt_of(const Rational& r);

private:
    void normalize();
    static Int unify_d(const QuadExt& x, const QuadExt& y);

    Rational a_, b_;
    Int d_;
};

}  // namespace lsgdd
