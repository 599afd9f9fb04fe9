#include "lsgdd/hadamard.hpp"

#include <map>
#include <stdexcept>

namespace lsgdd {

Report check_gh(const GeneralizedHadamard& h) {
    Report report;
    const std::size_t size = h.size();
    const auto g = static_cast<std::size_t>(h.group.order());
    if (h.lambda < 1) {
        report.fail("lambda", "lambda must be positive");
        return report;
    }
    if (size != g * static_cast<std::size_t>(h.lambda)) {
        report.fail("size", "matrix order " + std::to_string(size) + " != g*lambda");
        return report;
    }
    for (const auto& row : h.entries)
        if (row.size() != size) {
            report.fail("size", "ragged rows");
            return report;
        }
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t k = 0; k < size; ++k) {
            if (i == k) continue;
            std::map<GroupElement, long long> counts;
            for (std::size_t j = 0; j < size; ++j)
                counts[h.group.sub(h.entries[i][j], h.entries[k][j])] += 1;
            for (const auto& x : h.group.elements()) {
                auto it = counts.find(x);
                const long long c = it == counts.end() ? 0 : it->second;
                if (c != h.lambda) {
                    std::string coords;
                    for (long long t : x.coords) coords += (coords.empty() ? "" : ",") + std::to_string(t);
                    report.fail("row-difference",
                                "rows (" + std::to_string(i) + "," + std::to_string(k) + "): element (" +
                                    coords + ") appears " + std::to_string(c) + " times, expected " +
                                    std::to_string(h.lambda));
                    return report;
                }
            }
        }
    return report;
}

GeneralizedHadamard verify_gh(GeneralizedHadamard h) {
    require_ok(check_gh(h));
    return h;
}

GeneralizedHadamard gh_from_field(const FiniteField& field) {
    const auto q = static_cast<std::size_t>(field.size());
    GeneralizedHadamard h{field.additive_group(), 1, {}};
    h.entries.assign(q, std::vector<GroupElement>());
    for (std::size_t i = 0; i < q; ++i) {
        h.entries[i].reserve(q);
        for (std::size_t j = 0; j < q; ++j)
            h.entries[i].push_back(field.to_group_element(field.mul(i, j)));
    }
    return verify_gh(std::move(h));
}

GeneralizedHadamard gh_compose(const GeneralizedHadamard& a, const GeneralizedHadamard& b) {
    if (a.group != b.group) throw std::invalid_argument("gh_compose: groups differ");
    const std::size_t sa = a.size(), sb = b.size();
    GeneralizedHadamard h{a.group, static_cast<long long>(sa * sb) / a.group.order(), {}};
    h.entries.assign(sa * sb, std::vector<GroupElement>(sa * sb, a.group.identity()));
    for (std::size_t i = 0; i < sa; ++i)
        for (std::size_t j = 0; j < sa; ++j)
            for (std::size_t x = 0; x < sb; ++x)
                for (std::size_t y = 0; y < sb; ++y)
                    h.entries[i * sb + x][j * sb + y] = a.group.add(a.entries[i][j], b.entries[x][y]);
    return verify_gh(std::move(h));
}

std::vector<IntMatrix> c_matrices(const GeneralizedHadamard& h) {
    const std::size_t size = h.size();
    const auto g = static_cast<std::size_t>(h.group.order());
    const BlockIndex idx{size, size, g};
    std::vector<IntMatrix> cs;
    cs.reserve(size);
    for (std::size_t k = 0; k < size; ++k) {
        IntMatrix c(size * g, size * g);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j)
                c.set_block(idx, i, j, h.group.phi(h.group.sub(h.entries[k][j], h.entries[k][i])));
        cs.push_back(std::move(c));
    }
    return cs;
}

Report check_c_lemma(const GeneralizedHadamard& h) {
    Report report;
    const auto cs = c_matrices(h);
    const std::size_t size = h.size();
    const auto g = static_cast<std::size_t>(h.group.order());
    const std::size_t order = size * g;
    const Int gl = Int(h.lambda) * h.group.order();

    IntMatrix sum(order, order);
    for (const auto& c : cs) sum += c;
    IntMatrix expected = IntMatrix::identity(order).scaled(gl);
    IntMatrix jblocks = (IntMatrix::ones(size, size) - IntMatrix::identity(size)).kron(IntMatrix::ones(g, g));
    expected += jblocks.scaled(Int(h.lambda));
    if (std::string d = first_difference(sum, expected); !d.empty())
        report.fail("c-sum", "sum identity differs at " + d);

    const IntMatrix lj = IntMatrix::ones(order, order).scaled(Int(h.lambda));
    for (std::size_t k = 0; k < size; ++k)
        for (std::size_t l = 0; l < size; ++l) {
            const IntMatrix prod = cs[k] * cs[l].transpose();
            const IntMatrix want = k == l ? cs[k].scaled(gl) : lj;
            if (std::string d = first_difference(prod, want); !d.empty()) {
                report.fail("c-product", "C_" + std::to_string(k) + " C_" + std::to_string(l) +
                                             "^T differs at " + d);
                return report;
            }
        }
    return report;
}

SgddInstance phi_of_gh(const GeneralizedHadamard& h) {
    const std::size_t size = h.size();
    const auto g = static_cast<std::size_t>(h.group.order());
    const BlockIndex idx{size, size, g};
    IntMatrix a(size * g, size * g);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) a.set_block(idx, i, j, h.group.phi(h.entries[i][j]));
    const Int gv = h.group.order();
    const Int l = h.lambda;
    GddParams params{gv * gv * l, gv * l, gv * l, gv, 0, l};
    return verify_sgdd(a, params);
}

IntMatrix d_matrix(const GeneralizedHadamard& h, std::size_t i, std::size_t j) {
    const std::size_t size = h.size();
    const auto g = static_cast<std::size_t>(h.group.order());
    const BlockIndex idx{size, size, g};
    IntMatrix d(size * g, size * g);
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b)
            d.set_block(idx, a, b, h.group.phi(h.group.sub(h.entries[i][b], h.entries[j][a])));
    return d;
}

SgddInstance m_matrix(const GeneralizedHadamard& h) {
    const std::size_t size = h.size();
    const auto g = static_cast<std::size_t>(h.group.order());
    const std::size_t dorder = size * g;
    const BlockIndex idx{size, size, dorder};
    IntMatrix m(size * dorder, size * dorder);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) m.set_block(idx, i, j, d_matrix(h, i, j));
    const Int gv = h.group.order();
    const Int l = h.lambda;
    GddParams params{gv * gv * gv * l * l, gv * gv * l * l, gv * gv * l * l, gv, 0, gv * l * l};
    return verify_sgdd(m, params);
}

Report check_cd_lemma(const GeneralizedHadamard& h) {
    Report report;
    const auto cs = c_matrices(h);
    const std::size_t size = h.size();
    const Int gl = Int(h.lambda) * h.group.order();
    const std::size_t order = cs[0].rows();
    const IntMatrix lj = IntMatrix::ones(order, order).scaled(Int(h.lambda));

    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            const IntMatrix dij = d_matrix(h, i, j);
            const IntMatrix dji = d_matrix(h, j, i);
            if (cs[j] * dij != dij.scaled(gl))
                report.fail("cd", "C_j D_ij != gl D_ij at (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");
            if (dji * cs[j] != dji.scaled(gl))
                report.fail("cd", "D_ji C_j != gl D_ji at (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");
            for (std::size_t k = 0; k < size; ++k) {
                if (k == j) continue;
                if (cs[k] * dij != lj)
                    report.fail("cd", "C_k D_ij != l J at (i,j,k)=(" + std::to_string(i) + "," +
                                          std::to_string(j) + "," + std::to_string(k) + ")");
                if (dji * cs[k] != lj)
                    report.fail("cd", "D_ji C_k != l J at (i,j,k)=(" + std::to_string(i) + "," +
                                          std::to_string(j) + "," + std::to_string(k) + ")");
            }
            if (!report.ok()) return report;
        }
    return report;
}

HadamardMatrix::HadamardMatrix(IntMatrix e) : entries(std::move(e)) {
    const std::size_t m = entries.rows();
    if (entries.cols() != m) throw std::invalid_argument("HadamardMatrix: matrix must be square");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (entries(i, j) != 1 && entries(i, j) != -1)
                throw std::invalid_argument("HadamardMatrix: entries must be +-1");
    if (entries * entries.transpose() != IntMatrix::identity(m).scaled(Int(m)))
        throw std::invalid_argument("HadamardMatrix: H H^T != m I");
}

HadamardMatrix normalize_hadamard(const HadamardMatrix& h) {
    IntMatrix e = h.entries;
    for (std::size_t j = 0; j < e.cols(); ++j)
        if (e(0, j) == -1)
            for (std::size_t i = 0; i < e.rows(); ++i) e(i, j) = -e(i, j);
    return HadamardMatrix(e);
}

SgddInstance hadamard_to_sgdd(const HadamardMatrix& h) {
    const std::size_t m = h.order();
    if (m % 2 != 0) throw std::invalid_argument("hadamard_to_sgdd: order must be even");
    IntMatrix a1(m, m), a2(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) (h.entries(i, j) == 1 ? a1 : a2)(i, j) = 1;
    const IntMatrix i2 = IntMatrix::identity(2);
    const IntMatrix j2mi2 = IntMatrix::ones(2, 2) - i2;
    IntMatrix a = a1.kron(i2) + a2.kron(j2mi2);
    const Int mm = Int(m);
    GddParams params{2 * mm, mm, mm, 2, 0, mm / 2};
    return verify_sgdd(a, params);
}

HadamardMatrix sgdd_to_hadamard(const SgddInstance& inst) {
    const GddParams& p = inst.params;
    if (p.n != 2 || p.k != p.m || p.lambda1 != 0 || p.v != 2 * p.m || 2 * p.lambda2 != p.m)
        throw std::invalid_argument("sgdd_to_hadamard: parameters " + p.to_string() +
                                    " are not of the form (2m,m,m,2,0,m/2)");
    SgddInstance checked = inst;  // block-sum condition is part of the hypothesis
    if (!check_block_sums(checked))
        throw std::invalid_argument("sgdd_to_hadamard: block-sum condition fails");
    const auto m = static_cast<std::size_t>(to_int64(p.m));
    const BlockIndex idx{m, m, 2};
    const IntMatrix i2 = IntMatrix::identity(2);
    const IntMatrix j2mi2 = IntMatrix::ones(2, 2) - i2;
    IntMatrix e(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const IntMatrix blk = inst.matrix.block(idx, i, j);
            if (blk == i2)
                e(i, j) = 1;
            else if (blk == j2mi2)
                e(i, j) = -1;
            else
                throw std::invalid_argument("sgdd_to_hadamard: block (" + std::to_string(i) + "," +
                                            std::to_string(j) + ") is neither I_2 nor J_2-I_2");
        }
    return HadamardMatrix(e);
}

bool mub_hadamard_check(const std::vector<HadamardMatrix>& hs) {
    if (hs.size() < 2) return true;
    const std::size_t m = hs[0].order();
    for (const auto& h : hs)
        if (h.order() != m) throw std::invalid_argument("mub_hadamard_check: orders differ");
    Int root;
    if (!is_perfect_square(Int(m), &root)) return false;
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            const IntMatrix prod = hs[i].entries * hs[j].entries.transpose();
            for (std::size_t x = 0; x < m; ++x)
                for (std::size_t y = 0; y < m; ++y)
                    if (prod(x, y) != root && prod(x, y) != -root) return false;
        }
    return true;
}

std::pair<HadamardMatrix, HadamardMatrix> find_unbiased_pair_order4() {
    // All order-4 Hadamard matrices, encoded by 16-bit masks (bit = entry -1),
    // in increasing mask order.
    std::vector<IntMatrix> all;
    for (unsigned mask = 0; mask < (1u << 16); ++mask) {
        IntMatrix e(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) e(i, j) = (mask >> (i * 4 + j)) & 1u ? -1 : 1;
        bool ok = true;
        for (std::size_t i = 0; i < 4 && ok; ++i)
            for (std::size_t k = i + 1; k < 4 && ok; ++k) {
                Int dot = 0;
                for (std::size_t j = 0; j < 4; ++j) dot += e(i, j) * e(k, j);
                ok = dot == 0;
            }
        if (ok) all.push_back(std::move(e));
    }
    auto unbiased_both_ways = [](const IntMatrix& a, const IntMatrix& b) {
        for (const IntMatrix& prod : {a * b.transpose(), a.transpose() * b}) {
            for (std::size_t x = 0; x < 4; ++x)
                for (std::size_t y = 0; y < 4; ++y)
                    if (prod(x, y) != 2 && prod(x, y) != -2) return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (unbiased_both_ways(all[i], all[j]))
                return {HadamardMatrix(all[i]), HadamardMatrix(all[j])};
    throw std::logic_error("find_unbiased_pair_order4: no pair found");  // cannot happen
}

}  // namespace lsgdd
