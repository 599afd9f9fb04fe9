#include "lsgdd/designs.hpp"

#include <stdexcept>

namespace lsgdd {

void GddParams::validate() const {
    if (m < 2 || n < 2) throw std::invalid_argument("GddParams: m and n must be >= 2: " + to_string());
    if (v != m * n) throw std::invalid_argument("GddParams: v != m*n: " + to_string());
    if (k <= 0 || k >= v) throw std::invalid_argument("GddParams: need 0 < k < v: " + to_string());
    if (lambda1 < 0 || lambda2 < 0)
        throw std::invalid_argument("GddParams: concurrence counts must be nonnegative: " + to_string());
    if (k * k != k + lambda1 * (n - 1) + lambda2 * (v - n))
        throw std::invalid_argument("GddParams: k^2 = k + l1(n-1) + l2(v-n) fails: " + to_string());
}

std::string GddParams::to_string() const {
    return "(" + v.str() + "," + k.str() + "," + m.str() + "," + n.str() + "," + lambda1.str() + "," +
           lambda2.str() + ")";
}

IntMatrix gdd_gram_rhs(const GddParams& p) {
    const auto m = static_cast<std::size_t>(to_int64(p.m));
    const auto n = static_cast<std::size_t>(to_int64(p.n));
    const auto v = m * n;
    IntMatrix rhs(v, v);
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < v; ++j) {
            if (i == j)
                rhs(i, j) = p.k;
            else if (i / n == j / n)
                rhs(i, j) = p.lambda1;
            else
                rhs(i, j) = p.lambda2;
        }
    return rhs;
}

BlockIndex SgddInstance::partition() const {
    const auto m = static_cast<std::size_t>(to_int64(params.m));
    const auto n = static_cast<std::size_t>(to_int64(params.n));
    return BlockIndex{m, m, n};
}

Report check_sgdd(const IntMatrix& a, const GddParams& params) {
    Report report;
    params.validate();
    const auto v = static_cast<std::size_t>(to_int64(params.v));
    if (a.rows() != v || a.cols() != v) {
        report.fail("shape", "matrix is " + a.shape() + ", parameters need " + std::to_string(v) + "x" +
                                 std::to_string(v));
        return report;
    }
    if (!is_zero_one(a)) {
        report.fail("entries", "matrix has entries outside {0,1}");
        return report;
    }
    for (std::size_t i = 0; i < v; ++i) {
        if (a.row_sum(i) != params.k) {
            report.fail("row-sum", "row " + std::to_string(i) + " sums to " + a.row_sum(i).str() +
                                       ", expected k=" + params.k.str());
            return report;
        }
        if (a.col_sum(i) != params.k) {
            report.fail("col-sum", "column " + std::to_string(i) + " sums to " + a.col_sum(i).str() +
                                       ", expected k=" + params.k.str());
            return report;
        }
    }
    const IntMatrix rhs = gdd_gram_rhs(params);
    const IntMatrix at = a.transpose();
    if (std::string d = first_difference(a * at, rhs); !d.empty()) {
        report.fail("gram-AAt", "A*A^T differs from the design identity at " + d);
        return report;
    }
    if (std::string d = first_difference(at * a, rhs); !d.empty()) {
        report.fail("gram-AtA", "A^T*A differs from the design identity at " + d);
        return report;
    }
    return report;
}

SgddInstance verify_sgdd(const IntMatrix& a, const GddParams& params) {
    require_ok(check_sgdd(a, params));
    return SgddInstance{params, a};
}

SgddInstance complement(const SgddInstance& inst) {
    const GddParams& p = inst.params;
    GddParams cp{p.v, p.v - p.k, p.m, p.n, p.v - 2 * p.k + p.lambda1, p.v - 2 * p.k + p.lambda2};
    if (cp.lambda1 < 0 || cp.lambda2 < 0)
        throw std::invalid_argument("complement: parameters " + cp.to_string() + " are negative");
    IntMatrix a = IntMatrix::ones(inst.matrix.rows(), inst.matrix.cols());
    a -= inst.matrix;
    return verify_sgdd(a, cp);
}

bool check_bose_identity(const SgddInstance& inst) {
    const GddParams& p = inst.params;
    const auto m = static_cast<std::size_t>(to_int64(p.m));
    const auto n = static_cast<std::size_t>(to_int64(p.n));
    const Int d = p.lambda1 - p.lambda2;
    const IntMatrix imjn = IntMatrix::identity(m).kron(IntMatrix::ones(n, n));
    const IntMatrix lhs = (inst.matrix * imjn * inst.matrix.transpose()).scaled(d);
    IntMatrix rhs = imjn.scaled(p.n * d + p.k - p.lambda1);
    rhs += IntMatrix::ones(m * n, m * n).scaled(p.n * p.lambda2);
    return lhs == rhs.scaled(d);
}

bool check_block_sums(const SgddInstance& inst) {
    const GddParams& p = inst.params;
    if (p.k % p.m != 0)
        throw std::invalid_argument("check_block_sums: m does not divide k for " + p.to_string());
    const auto m = static_cast<std::size_t>(to_int64(p.m));
    const auto n = static_cast<std::size_t>(to_int64(p.n));
    const IntMatrix imjn = IntMatrix::identity(m).kron(IntMatrix::ones(n, n));
    const IntMatrix target = IntMatrix::ones(m * n, m * n).scaled(p.k / p.m);
    return inst.matrix * imjn == target && imjn * inst.matrix == target;
}

}  // namespace lsgdd
