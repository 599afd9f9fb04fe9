#pragma once

#include <vector>

#include "lsgdd/matrix.hpp"

namespace lsgdd {

/// Element of a direct sum of cyclic groups, stored with coordinates reduced
/// mod the cyclic orders.
struct GroupElement {
    std::vector<long long> coords;

    friend bool operator==(const GroupElement& x, const GroupElement& y) { return x.coords == y.coords; }
    friend bool operator!=(const GroupElement& x, const GroupElement& y) { return !(x == y); }
    friend bool operator<(const GroupElement& x, const GroupElement& y) { return x.coords < y.coords; }
};

/// Finite abelian group Z_{n_1} + ... + Z_{n_t} of order prod n_i, with the
/// permutation representation phi(x) = kron_i r_{n_i}^{x_i} where r_p is the
/// circulant with first row (0,1,0,...,0).
class AbelianGroup {
public:
    explicit AbelianGroup(std::vector<long long> cyclic_orders);

    [[nodiscard]] const std::vector<long long>& cyclic_orders() const { return orders_; }
    [[nodiscard]] long long order() const { return order_; }

    [[nodiscard]] GroupElement identity() const;
    [[nodiscard]] GroupElement element(std::vector<long long> coords) const;  // reduces mod orders
    [[nodiscard]] GroupElement add(const GroupElement& x, const GroupElement& y) const;
    [[nodiscard]] GroupElement neg(const GroupElement& x) const;
    [[nodiscard]] GroupElement sub(const GroupElement& x, const GroupElement& y) const;

    /// All elements in lexicographic coordinate order.
    [[nodiscard]] std::vector<GroupElement> elements() const;

    /// Index of x in the elements() enumeration.
    [[nodiscard]] std::size_t index_of(const GroupElement& x) const;

    /// The order x order permutation matrix phi(x).
    [[nodiscard]] IntMatrix phi(const GroupElement& x) const;

    friend bool operator==(const AbelianGroup& x, const AbelianGroup& y) { return x.orders_ == y.orders_; }
    friend bool operator!=(const AbelianGroup& x, const AbelianGroup& y) { return !(x == y); }

private:
    void check_member(const GroupElement& x) const;

    std::vector<long long> orders_;
    long long order_;
};

}  // namespace lsgdd
