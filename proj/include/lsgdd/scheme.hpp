#pragma once

#include <array>
#include <map>
#include <tuple>
#include <vector>

#include "lsgdd/linked.hpp"

namespace lsgdd {

/// Symmetric association scheme: A_0 = I, sum J, each A_i symmetric (0,1),
/// products expanding integrally over the basis. Intersection numbers are
/// filled by the axiom check.
struct AssociationScheme {
    std::size_t npoints = 0;
    std::vector<IntMatrix> adjacency;          // A_0..A_d
    std::vector<std::vector<std::vector<Int>>> p;  // p[i][j][k]

    [[nodiscard]] std::size_t classes() const { return adjacency.size() - 1; }
    /// Intersection matrix B_i = (p_{i,j}^k)_{j,k}.
    [[nodiscard]] IntMatrix intersection_matrix(std::size_t i) const;
};

/// Entry-wise verification of the scheme axioms; fills scheme.p on success.
/// Failures name (i,j) and the first offending cell.
Report check_scheme_axioms(AssociationScheme& scheme);

/// The five relations on f*v points: A_1 within-class, A_2 the block matrix of
/// the A_{i,j}, A_3 its cross-fiber complement, A_4 the rest of each fiber.
/// Requires the block-sum condition; fully axiom-checked.
AssociationScheme build_scheme(const LinkedSystem& sys);

/// Structural data of a 4-class scheme of this family, recovered from
/// intersection numbers (independent of the point order).
struct SchemeShape {
    int f = 0;
    GddParams params;
    std::optional<Int> sigma, tau;
};

SchemeShape derive_shape(const AssociationScheme& scheme);

struct UniformityResult {
    Report report;
    /// a[(i,j,k)]: fiber-independent expansion coefficients.
    std::map<std::tuple<int, int, int>, Int> coeffs;
};

/// Checks imprimitivity w.r.t. I = {0,1,4}, the 1-class quotient, and that all
/// fiber-restricted products expand with fiber-independent coefficients.
UniformityResult check_uniformity(const AssociationScheme& scheme);

/// Recovers the linked system: fibers from I = {0,1,4}, classes from A_1,
/// parameters (mn, p220/(f-1), m, n, p221/(f-1), p224/(f-1)); verified.
/// Accepts schemes with permuted points (canonicalizes first).
LinkedSystem extract_linked(const AssociationScheme& scheme);

struct SchemeSpectrum {
    Int points;                        // |X|
    Int d_context;                     // squarefree radical context
    QuadMatrix P, Q;                   // first and second eigenmatrices
    std::vector<Int> multiplicities;   // m_j = Q_{0,j}
    std::vector<QuadMatrix> krein;     // B*_i = (q_{i,j}^k)_{j,k}
    Report certification;
};

/// Exact eigen- and Krein data. Q is instantiated from the closed forms for
/// the derived shape, E_j idempotency/orthogonality is certified through the
/// verified intersection numbers, and the Krein numbers are recomputed from P
/// by the eigenmatrix formula and cross-checked against the closed forms.
SchemeSpectrum spectrum(const AssociationScheme& scheme);

/// Closed-form eigenmatrices of the family.
QuadMatrix eigenmatrix_P(const GddParams& params, int f);
QuadMatrix eigenmatrix_Q(const GddParams& params, int f);

/// Closed-form Krein matrices B*_0..B*_4 of the family.
std::vector<QuadMatrix> krein_closed_forms(const GddParams& params, int f);

/// q_{1,1}^3 = (1/f)(m(n-2) - (mn-2k) sqrt(m(n-1)/(k(mn-k)))); zero exactly
/// when n = 2 and k = m.
QuadExt krein_q113(const GddParams& params, int f);

/// Krein nonnegativity and the multiplicity inequalities, evaluated on the
/// closed forms for the given f.
Report check_krein_conditions(const GddParams& params, int f);
Report check_krein_conditions(const SchemeSpectrum& spec);

}  // namespace lsgdd
