#pragma once

#include <string>

#include "lsgdd/matrix.hpp"
#include "lsgdd/report.hpp"

namespace lsgdd {

/// Parameter tuple (v,k,m,n,lambda1,lambda2) of a symmetric group divisible
/// design. validate() enforces v = m*n, the range constraints, and the
/// counting identity k^2 = k + lambda1*(n-1) + lambda2*(v-n).
struct GddParams {
    Int v, k, m, n, lambda1, lambda2;

    [[nodiscard]] bool proper() const { return lambda1 != lambda2; }
    void validate() const;  // throws std::invalid_argument
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const GddParams& a, const GddParams& b) {
        return a.v == b.v && a.k == b.k && a.m == b.m && a.n == b.n && a.lambda1 == b.lambda1 &&
               a.lambda2 == b.lambda2;
    }
    friend bool operator!=(const GddParams& a, const GddParams& b) { return !(a == b); }
};

/// Right-hand side of the defining identity
///   A A^T = A^T A = k I + lambda1 (I_m x J_n - I) + lambda2 (J - I_m x J_n)
/// under the canonical consecutive-block point ordering.
IntMatrix gdd_gram_rhs(const GddParams& p);

/// A certified incidence matrix together with its parameters. Constructed via
/// verify_sgdd only.
struct SgddInstance {
    GddParams params;
    IntMatrix matrix;

    [[nodiscard]] BlockIndex partition() const;
};

/// Entry-wise check of the defining identity for both A A^T and A^T A plus
/// constant row/column sums k. Failures name the first violated cell.
Report check_sgdd(const IntMatrix& a, const GddParams& params);

/// check_sgdd, returning the certified instance or throwing VerificationError.
SgddInstance verify_sgdd(const IntMatrix& a, const GddParams& params);

/// Complement design J - A with parameters (v, v-k, m, n, v-2k+l1, v-2k+l2).
/// Throws if the complement parameters would be negative.
SgddInstance complement(const SgddInstance& inst);

/// Quotient-type identity every symmetric GDD satisfies:
///   (l1-l2) A (I_m x J_n) A^T = (l1-l2)((n(l1-l2)+k-l1) I_m x J_n + n l2 J).
bool check_bose_identity(const SgddInstance& inst);

/// True iff A (I_m x J_n) = (I_m x J_n) A = (k/m) J. Requires m | k.
bool check_block_sums(const SgddInstance& inst);

}  // namespace lsgdd
