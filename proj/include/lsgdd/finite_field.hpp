#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsgdd/group.hpp"

namespace lsgdd {

/// An element of GF(p^n) is addressed by its index in the field's fixed
/// enumeration (0 is the additive identity).
using FieldElem = std::size_t;

/// GF(p^n) realized as Z_p[x]/(modulus) with a monic irreducible modulus.
/// Elements are enumerated with the prime subfield first in natural order and
/// the rest in lexicographic order on polynomial coefficients (base-p value of
/// the coefficient vector), so alpha_0 = 0, alpha_1 = 1, ...
class FiniteField {
public:
    /// Uses the lexicographically least monic irreducible modulus of degree n.
    FiniteField(long long p, int n);
    /// coefficients c_0..c_n of a monic modulus (c_n = 1); irreducibility is
    /// verified by trial factorization.
    FiniteField(long long p, int n, std::vector<long long> modulus);

    [[nodiscard]] long long p() const { return p_; }
    [[nodiscard]] int degree() const { return n_; }
    [[nodiscard]] long long size() const { return q_; }
    [[nodiscard]] const std::vector<long long>& modulus() const { return modulus_; }

    [[nodiscard]] FieldElem zero() const { return 0; }
    [[nodiscard]] FieldElem one() const { return 1; }
    [[nodiscard]] std::vector<FieldElem> elements() const;

    [[nodiscard]] FieldElem add(FieldElem a, FieldElem b) const;
    [[nodiscard]] FieldElem sub(FieldElem a, FieldElem b) const;
    [[nodiscard]] FieldElem neg(FieldElem a) const;
    [[nodiscard]] FieldElem mul(FieldElem a, FieldElem b) const;
    [[nodiscard]] FieldElem inv(FieldElem a) const;  // throws on a == 0
    [[nodiscard]] FieldElem div(FieldElem a, FieldElem b) const;

    /// Polynomial coefficients (c_0..c_{n-1}) of the element.
    [[nodiscard]] std::vector<long long> coeffs(FieldElem a) const;
    [[nodiscard]] std::string name(FieldElem a) const;  // decimal base-p value

    /// The additive group (Z_p)^n; element coordinates are the coefficients.
    [[nodiscard]] AbelianGroup additive_group() const;
    [[nodiscard]] GroupElement to_group_element(FieldElem a) const;

private:
    void check(FieldElem a) const;
    [[nodiscard]] FieldElem from_coeffs(const std::vector<long long>& c) const;

    long long p_;
    int n_;
    long long q_;
    std::vector<long long> modulus_;
    std::vector<std::vector<FieldElem>> mul_table_;
};

/// True iff the monic polynomial (coefficients c_0..c_d) is irreducible over Z_p.
bool is_irreducible_mod_p(const std::vector<long long>& poly, long long p);

}  // namespace lsgdd
