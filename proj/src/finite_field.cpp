#include "lsgdd/finite_field.hpp"

#include <stdexcept>

namespace lsgdd {

namespace {

// Remainder of a mod b over Z_p, coefficients lowest-degree first, b monic.
std::vector<long long> poly_mod(std::vector<long long> a, const std::vector<long long>& b, long long p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        long long lead = a.back() % p;
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) {
                a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p * p) % p;
            }
        }
        a.pop_back();
    }
    return a;
}

bool is_zero_poly(const std::vector<long long>& a) {
    for (long long c : a)
        if (c != 0) return false;
    return true;
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<long long>& poly, long long p) {
    const std::size_t d = poly.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    // Trial division by every monic polynomial of degree 1..d/2.
    for (std::size_t k = 1; k <= d / 2; ++k) {
        long long count = 1;
        for (std::size_t i = 0; i < k; ++i) count *= p;
        for (long long v = 0; v < count; ++v) {
            std::vector<long long> div(k + 1, 0);
            long long rest = v;
            for (std::size_t i = 0; i < k; ++i) {
                div[i] = rest % p;
                rest /= p;
            }
            div[k] = 1;
            if (is_zero_poly(poly_mod(poly, div, p))) return false;
        }
    }
    return true;
}

FiniteField::FiniteField(long long p, int n) : p_(p), n_(n) {
    if (!is_prime(p)) throw std::invalid_argument("FiniteField: p must be prime");
    if (n < 1) throw std::invalid_argument("FiniteField: extension degree must be >= 1");
    // Lexicographically least monic irreducible of degree n.
    long long count = 1;
    for (int i = 0; i < n; ++i) count *= p;
    for (long long v = 0; v < count; ++v) {
        std::vector<long long> cand(static_cast<std::size_t>(n) + 1, 0);
        long long rest = v;
        for (int i = 0; i < n; ++i) {
            cand[static_cast<std::size_t>(i)] = rest % p;
            rest /= p;
        }
        cand[static_cast<std::size_t>(n)] = 1;
        if (is_irreducible_mod_p(cand, p)) {
            *this = FiniteField(p, n, cand);
            return;
        }
    }
    throw std::logic_error("FiniteField: no irreducible modulus found");  // unreachable
}

FiniteField::FiniteField(long long p, int n, std::vector<long long> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw std::invalid_argument("FiniteField: p must be prime");
    if (n < 1) throw std::invalid_argument("FiniteField: extension degree must be >= 1");
    if (modulus_.size() != static_cast<std::size_t>(n) + 1 || modulus_.back() != 1)
        throw std::invalid_argument("FiniteField: modulus must be monic of degree n");
    for (auto& c : modulus_) c = ((c % p) + p) % p;
    if (!is_irreducible_mod_p(modulus_, p))
        throw std::invalid_argument("FiniteField: modulus is reducible over Z_p");

    q_ = 1;
    for (int i = 0; i < n; ++i) q_ *= p;
    if (q_ > 4096) throw std::invalid_argument("FiniteField: order too large for table-based arithmetic");

    const auto q = static_cast<std::size_t>(q_);
    mul_table_.assign(q, std::vector<FieldElem>(q, 0));
    for (std::size_t a = 0; a < q; ++a) {
        const auto ca = coeffs(a);
        for (std::size_t b = a; b < q; ++b) {
            const auto cb = coeffs(b);
            std::vector<long long> prod(2 * static_cast<std::size_t>(n) - 1, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    prod[static_cast<std::size_t>(i + j)] =
                        (prod[static_cast<std::size_t>(i + j)] + ca[static_cast<std::size_t>(i)] * cb[static_cast<std::size_t>(j)]) % p_;
            auto rem = poly_mod(std::move(prod), modulus_, p_);
            rem.resize(static_cast<std::size_t>(n), 0);
            FieldElem r = from_coeffs(rem);
            mul_table_[a][b] = r;
            mul_table_[b][a] = r;
        }
    }
}

std::vector<FieldElem> FiniteField::elements() const {
    std::vector<FieldElem> e(static_cast<std::size_t>(q_));
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = i;
    return e;
}

void FiniteField::check(FieldElem a) const {
    if (a >= static_cast<std::size_t>(q_)) throw std::invalid_argument("FiniteField: element index out of range");
}

std::vector<long long> FiniteField::coeffs(FieldElem a) const {
    check(a);
    std::vector<long long> c(static_cast<std::size_t>(n_));
    auto rest = static_cast<long long>(a);
    for (int i = 0; i < n_; ++i) {
        c[static_cast<std::size_t>(i)] = rest % p_;
        rest /= p_;
    }
    return c;
}

FieldElem FiniteField::from_coeffs(const std::vector<long long>& c) const {
    long long v = 0;
    for (std::size_t i = c.size(); i > 0; --i) v = v * p_ + c[i - 1];
    return static_cast<FieldElem>(v);
}

FieldElem FiniteField::add(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    auto ca = coeffs(a);
    const auto cb = coeffs(b);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % p_;
    return from_coeffs(ca);
}

FieldElem FiniteField::neg(FieldElem a) const {
    check(a);
    auto c = coeffs(a);
    for (auto& x : c) x = (p_ - x) % p_;
    return from_coeffs(c);
}

FieldElem FiniteField::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FiniteField::mul(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    return mul_table_[a][b];
}

FieldElem FiniteField::inv(FieldElem a) const {
    check(a);
    if (a == 0) throw std::domain_error("FiniteField: division by zero");
    for (std::size_t b = 1; b < static_cast<std::size_t>(q_); ++b)
        if (mul_table_[a][b] == 1) return b;
    throw std::logic_error("FiniteField: no inverse found");  // unreachable in a field
}

FieldElem FiniteField::div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

std::string FiniteField::name(FieldElem a) const {
    check(a);
    return std::to_string(a);
}

AbelianGroup FiniteField::additive_group() const {
    return AbelianGroup(std::vector<long long>(static_cast<std::size_t>(n_), p_));
}

GroupElement FiniteField::to_group_element(FieldElem a) const {
    return GroupElement{coeffs(a)};
}

}  // namespace lsgdd
