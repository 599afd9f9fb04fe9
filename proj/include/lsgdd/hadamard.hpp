#pragma once

#include <utility>
#include <vector>

#include "lsgdd/designs.hpp"
#include "lsgdd/finite_field.hpp"
#include "lsgdd/group.hpp"

namespace lsgdd {

/// Square array of group elements such that every pair of distinct rows has
/// difference multiset covering the group exactly lambda times.
struct GeneralizedHadamard {
    AbelianGroup group;
    long long lambda = 1;
    std::vector<std::vector<GroupElement>> entries;  // (g*lambda) x (g*lambda)

    [[nodiscard]] std::size_t size() const { return entries.size(); }
};

/// Exhaustive row-difference check; failures name the row pair and the
/// element whose count is off.
Report check_gh(const GeneralizedHadamard& h);
GeneralizedHadamard verify_gh(GeneralizedHadamard h);  // throws on failure

/// Multiplication table (x_i * x_j) over the additive group: a GH(q,1).
GeneralizedHadamard gh_from_field(const FiniteField& field);

/// Kronecker-style composition: block (i,j) is a_ij + B entrywise, giving a
/// GH(g, g*lambda_a*lambda_b). Groups must match.
GeneralizedHadamard gh_compose(const GeneralizedHadamard& a, const GeneralizedHadamard& b);

/// C_k = (phi(-h_ki + h_kj))_{i,j}, order g^2*lambda, for k = 0..g*lambda-1.
std::vector<IntMatrix> c_matrices(const GeneralizedHadamard& h);

/// The three C-matrix identities: sum, self-product, cross-product.
Report check_c_lemma(const GeneralizedHadamard& h);

/// phi applied entrywise: incidence matrix of an SGDD with parameters
/// (g^2 l, g l, g l, g, 0, l). Verified.
SgddInstance phi_of_gh(const GeneralizedHadamard& h);

/// D_ij = phi(h_j)^T phi(h_i), blocks phi(-h_ja + h_ib).
IntMatrix d_matrix(const GeneralizedHadamard& h, std::size_t i, std::size_t j);

/// Block matrix of the D_ij: SGDD with parameters
/// (g^3 l^2, g^2 l^2, g^2 l^2, g, 0, g l^2). Verified.
SgddInstance m_matrix(const GeneralizedHadamard& h);

/// Product identities tying C and D matrices together:
///   C_j D_ij = gl D_ij,  D_ji C_j = gl D_ji,
///   C_k D_ij = D_ji C_k = l J for k != j.
Report check_cd_lemma(const GeneralizedHadamard& h);

/// Real Hadamard matrix: entries +-1 with H H^T = m I.
struct HadamardMatrix {
    IntMatrix entries;

    explicit HadamardMatrix(IntMatrix e);
    [[nodiscard]] std::size_t order() const { return entries.rows(); }
};

/// Flips column signs so the first row is all ones.
HadamardMatrix normalize_hadamard(const HadamardMatrix& h);

/// A = A1 x I_2 + A2 x (J_2 - I_2) with A1 the +1 indicator:
/// SGDD (2m, m, m, 2, 0, m/2). Requires even order.
SgddInstance hadamard_to_sgdd(const HadamardMatrix& h);

/// Inverse conversion; requires parameters (2m, m, m, 2, 0, m/2) and every
/// 2x2 block equal to I_2 or J_2 - I_2.
HadamardMatrix sgdd_to_hadamard(const SgddInstance& inst);

/// True iff all pairwise products H_i H_j^T have every entry of absolute
/// value sqrt(m); false (never throws) when m is not a perfect square.
bool mub_hadamard_check(const std::vector<HadamardMatrix>& hs);

/// First (lexicographically) pair of order-4 Hadamard matrices over the full
/// exhaustive enumeration such that both H1 H2^T and H1^T H2 have entries
/// +-2. Deterministic.
std::pair<HadamardMatrix, HadamardMatrix> find_unbiased_pair_order4();

}  // namespace lsgdd
