#include "lsgdd/group.hpp"

#include <stdexcept>

namespace lsgdd {

AbelianGroup::AbelianGroup(std::vector<long long> cyclic_orders) : orders_(std::move(cyclic_orders)) {
    if (orders_.empty()) throw std::invalid_argument("AbelianGroup: no cyclic factors");
    order_ = 1;
    for (long long n : orders_) {
        if (n < 1) throw std::invalid_argument("AbelianGroup: cyclic orders must be >= 1");
        order_ *= n;
    }
}

GroupElement AbelianGroup::identity() const {
    return GroupElement{std::vector<long long>(orders_.size(), 0)};
}

GroupElement AbelianGroup::element(std::vector<long long> coords) const {
    if (coords.size() != orders_.size())
        throw std::invalid_argument("AbelianGroup: coordinate count does not match cyclic factors");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        coords[i] %= orders_[i];
        if (coords[i] < 0) coords[i] += orders_[i];
    }
    return GroupElement{std::move(coords)};
}

void AbelianGroup::check_member(const GroupElement& x) const {
    if (x.coords.size() != orders_.size())
        throw std::invalid_argument("AbelianGroup: element has wrong coordinate count");
    for (std::size_t i = 0; i < x.coords.size(); ++i)
        if (x.coords[i] < 0 || x.coords[i] >= orders_[i])
            throw std::invalid_argument("AbelianGroup: coordinate out of range");
}

GroupElement AbelianGroup::add(const GroupElement& x, const GroupElement& y) const {
    check_member(x);
    check_member(y);
    std::vector<long long> c(orders_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (x.coords[i] + y.coords[i]) % orders_[i];
    return GroupElement{std::move(c)};
}

GroupElement AbelianGroup::neg(const GroupElement& x) const {
    check_member(x);
    std::vector<long long> c(orders_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coords[i] == 0 ? 0 : orders_[i] - x.coords[i];
    return GroupElement{std::move(c)};
}

GroupElement AbelianGroup::sub(const GroupElement& x, const GroupElement& y) const {
    return add(x, neg(y));
}

std::vector<GroupElement> AbelianGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (long long v = 0; v < order_; ++v) {
        std::vector<long long> c(orders_.size());
        long long rest = v;
        for (std::size_t i = orders_.size(); i > 0; --i) {
            c[i - 1] = rest % orders_[i - 1];
            rest /= orders_[i - 1];
        }
        out.push_back(GroupElement{std::move(c)});
    }
    return out;
}

std::size_t AbelianGroup::index_of(const GroupElement& x) const {
    check_member(x);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i)
        idx = idx * static_cast<std::size_t>(orders_[i]) + static_cast<std::size_t>(x.coords[i]);
    return idx;
}

IntMatrix AbelianGroup::phi(const GroupElement& x) const {
    check_member(x);
    IntMatrix m = IntMatrix::identity(1);
    for (std::size_t f = 0; f < orders_.size(); ++f) {
        const auto p = static_cast<std::size_t>(orders_[f]);
        IntMatrix r(p, p);
        for (std::size_t i = 0; i < p; ++i)
            r(i, (i + static_cast<std::size_t>(x.coords[f])) % p) = 1;
        m = m.kron(r);
    }
    return m;
}

}  // namespace lsgdd
