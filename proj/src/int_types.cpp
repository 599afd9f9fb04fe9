#include "lsgdd/int_types.hpp"

#include <limits>
#include <stdexcept>

namespace lsgdd {

Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Int& n, Int* root) {
    if (n < 0) return false;
    Int r = isqrt_floor(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

Int squarefree_part(Int n) {
    if (n <= 0) throw std::domain_error("squarefree_part: argument must be positive");
    Int s = 1;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e % 2 == 1) s *= p;
    }
    return s * n;  // remaining n is 1 or a prime appearing once
}

std::string rational_to_string(const Rational& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("rational_from_string: zero denominator");
    return Rational(num, den);
}

long long to_int64(const Int& n) {
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
        throw std::overflow_error("to_int64: value out of range");
    return static_cast<long long>(n);
}

}  // namespace lsgdd
