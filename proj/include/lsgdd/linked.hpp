#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lsgdd/designs.hpp"
#include "lsgdd/hadamard.hpp"
#include "lsgdd/latin.hpp"
#include "lsgdd/quadext.hpp"

namespace lsgdd {

/// Base SGDD parameters plus the two triangle counts sigma (incident pair)
/// and tau (non-incident pair). The counts are meaningful only when f >= 3;
/// degenerate f = 2 systems may leave them unset.
struct LinkedParams {
    GddParams base;
    std::optional<Int> sigma, tau;

    /// Checks k^2 = sigma*k + tau*(v-k), (sigma-tau)^2 = k - lambda1, and for
    /// f >= 3 the identity (k-lambda1) + n*(lambda1-lambda2) = 0. Presence of
    /// sigma/tau is required when f >= 3.
    void validate(int f) const;
    [[nodiscard]] std::optional<Int> alpha() const;  // k/m when integral
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const LinkedParams& a, const LinkedParams& b) {
        return a.base == b.base && a.sigma == b.sigma && a.tau == b.tau;
    }
};

enum class RootSign { Plus, Minus };

/// sigma/tau from the closed forms; exact surd values are always filled,
/// params only when both are nonnegative integers.
struct SigmaTauDerivation {
    QuadExt sigma, tau;
    bool integral = false;
    std::optional<LinkedParams> params;
};

/// Evaluates the sigma/tau closed forms for the given parameters. The proper
/// and improper (lambda1 == lambda2) cases take different branches.
SigmaTauDerivation derive_params(const GddParams& base, RootSign sign);

/// Family of (0,1) incidence matrices A_{i,j} (i != j) with A_{j,i} = A_{i,j}^T.
/// The constructor fills missing transposes; supplying both members of a pair
/// keeps them as given (verify_linked checks the pairing).
class LinkedSystem {
public:
    LinkedSystem(int f, LinkedParams params, std::map<std::pair<int, int>, IntMatrix> matrices);

    [[nodiscard]] int f() const { return f_; }
    [[nodiscard]] const LinkedParams& params() const { return params_; }
    [[nodiscard]] const IntMatrix& at(int i, int j) const;

private:
    int f_;
    LinkedParams params_;
    std::map<std::pair<int, int>, IntMatrix> mats_;
};

struct LinkedCertificate {
    Report report;
    bool measured_valid = false;  // true when some (L2) triple was measured
    Int measured_sigma = 0, measured_tau = 0;

    [[nodiscard]] bool ok() const { return report.ok(); }
};

/// Checks transpose-pairing, (L1) for every ordered pair, (L2) for every
/// ordered triple, block sums for proper systems with f >= 3, and the
/// parameter identities. Failures name the pair/triple and first cell.
LinkedCertificate verify_linked(const LinkedSystem& sys);

/// Complements every matrix: parameters (v, v-k, m, n, v-2k+l1, v-2k+l2) with
/// sigma' = v-2k+tau, tau' = v-2k+sigma. Re-verified.
LinkedSystem complement_system(const LinkedSystem& sys);

/// Builds A_{i,j} from pairwise two-valued products A_i A_j^T of designs that
/// share parameters and satisfy the k/m block-sum condition. The output
/// parameters are the g-transform of the inputs; fully verified.
LinkedSystem from_two_valued_family(const std::vector<SgddInstance>& family);

/// Matrix family hypotheses of the unifying construction: sum identity with
/// constants (k, lambda1, lambda2) over the (m, n) partition, self-products
/// alpha*C_a and cross-products beta*J.
struct CFamily {
    std::vector<IntMatrix> mats;
    Int k, lambda1, lambda2;
    Int m, n;
    Int alpha, beta;

    [[nodiscard]] Int l() const { return Int(mats.size()); }
};

Report check_c_family(const CFamily& fam);

/// Output parameters (l*m*n, alpha*k, m*, n*, alpha*lambda1, l*beta); the
/// (m*, n*) branch follows from which of alpha*l1 != alpha*l2 == beta*l or
/// alpha*l1 == alpha*l2 != beta*l holds. Throws when neither does.
GddParams c_family_output_params(const CFamily& fam);
std::pair<Int, Int> c_family_sigma_tau(const CFamily& fam);

/// Block matrix replacing each symbol of the square by the matrix of the same
/// index.
IntMatrix substitute(const LatinSquare& square, const std::vector<IntMatrix>& mats);

/// Single-square branch: a verified SGDD with the family's output parameters.
SgddInstance construct_sgdd_from_c_family(const CFamily& fam, const LatinSquare& square);

/// Linked-family branch: A_{i,j} = substitution into L_{i,j}; verified.
LinkedSystem construct_theorem_general(const CFamily& fam, const LinkedUfsFamily& squares);

/// GH(g,l) plus f pairwise-UFS squares of order g*l: the substituted squares
/// together with the D-block matrix reduce to a two-valued family, giving a
/// linked system of f+1 designs (g^3 l^2, g^2 l^2, g^2 l^2, g, 0, g l^2) with
/// (sigma, tau) = ((g + g*l - 1) l, (g*l - 1) l).
LinkedSystem construct_gh_ufs(const GeneralizedHadamard& h, const std::vector<LatinSquare>& squares);

/// GH(g,1) plus a linked UFS family of order g+1 (C_0 = I x J joins the C_k):
/// parameters (g^2(g+1), g(g+1), g+1, g^2, g, g+1), (sigma, tau) = (2g, g).
LinkedSystem construct_gh1_linked(const GeneralizedHadamard& h, const LinkedUfsFamily& fam);

/// Combined C-family of a GH(g, g*l) and a GH(g, l) over the same group.
CFamily two_gh_c_family(const GeneralizedHadamard& h, const GeneralizedHadamard& k);

struct TwoGhHypothesisReport {
    Report report;
    GddParams derived_params;
    std::pair<Int, Int> derived_sigma_tau;  // from the general construction
    std::pair<Int, Int> stated_sigma_tau;   // published closed form
    bool sigma_tau_match = false;           // mismatch is surfaced, never reconciled
};

TwoGhHypothesisReport check_two_gh_hypotheses(const GeneralizedHadamard& h, const GeneralizedHadamard& k);

/// Two-GH construction; requires a linked UFS family of order g(g+1)l.
/// Measured sigma/tau come from the verifier.
LinkedSystem construct_two_gh(const GeneralizedHadamard& h, const GeneralizedHadamard& k,
                              const LinkedUfsFamily& fam);

/// Rank-one family of a normalized Hadamard matrix of order n = 0 (mod 4):
/// P_l = positive part of r_l^T r_l for l = 2..n.
CFamily biangular_c_family(const HadamardMatrix& h);

/// Biangular construction: parameters
/// (n(n-1), n(n-1)/2, n-1, n, n(n-2)/4, n(n-1)/4), (sigma,tau) = (n^2/4, n(n-2)/4).
LinkedSystem construct_biangular(const HadamardMatrix& h, const LinkedUfsFamily& fam);
LinkedSystem construct_biangular(const HadamardMatrix& h, const std::vector<LatinSquare>& squares);
/// Field-backed variant; over odd characteristic the family gains the
/// sum-table fiber, so GF(q) yields f = q.
LinkedSystem construct_biangular_from_field(const HadamardMatrix& h, const FiniteField& field);

/// f-1 >= 2 mutually unbiased Hadamard matrices of square order m give a
/// linked system of f designs (2m, m, m, 2, 0, m/2).
LinkedSystem construct_from_mub_hadamard(const std::vector<HadamardMatrix>& hs);

/// Inverse direction: recovers the Hadamard list H_{1,2}, ..., H_{1,f}.
std::vector<HadamardMatrix> extract_mub_hadamard(const LinkedSystem& sys);

struct FeasibleRow {
    GddParams params;
    Int sigma = 0, tau = 0, alpha = 0;
    QuadExt sigma_exact, tau_exact;
    Int upper_bound = 0;  // table 1 only
};

struct FeasibleTables {
    std::vector<FeasibleRow> table1;  // v < vmax, all of l1, l2, alpha, sigma, tau integral,
                                      // sigma-tau > 0, excluding (k,n) = (m,2)
    std::vector<FeasibleRow> table2;  // 2k <= v <= vmax, integral l1, l2, k/m, sigma or tau
                                      // non-integral
};

FeasibleTables enumerate_feasible(long long vmax);

/// Upper bound on the number of linkable designs:
///   (m,n) == (k,2)          -> floor(m/2 + 1)
///   m*n - 2k >= 0           -> floor((m(n-1)+2)(m(n-1)-1) / (2(mn-1)))
///   m*n - 2k <  0           -> floor(m(n-2) / ((2k-mn) sqrt(m(n-1)/(k(mn-k)))))
/// Requires parameters satisfying the feasibility identities.
Int bound_f(const GddParams& params);

/// For lambda1 = 0 feasible parameters, the witness (n, l) of the normal form
/// (n^3 l^2, n^2 l^2, n^2 l^2, n, 0, n l^2); nullopt when not of that form.
std::optional<std::pair<Int, Int>> lambda1_zero_form(const GddParams& params);

}  // namespace lsgdd
