#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lsgdd/finite_field.hpp"
#include "lsgdd/report.hpp"

namespace lsgdd {

/// n x n array over an abstract symbol set; every row and column is a
/// permutation of the symbols. Cells store symbol indices.
class LatinSquare {
public:
    LatinSquare(std::vector<std::string> symbols, std::vector<std::vector<int>> cells);

    [[nodiscard]] std::size_t order() const { return symbols_.size(); }
    [[nodiscard]] const std::vector<std::string>& symbols() const { return symbols_; }
    [[nodiscard]] const std::vector<std::vector<int>>& cells() const { return cells_; }
    [[nodiscard]] int cell(std::size_t r, std::size_t c) const { return cells_[r][c]; }

    [[nodiscard]] LatinSquare transposed() const;
    /// Same cells, new symbol labels (size must match).
    [[nodiscard]] LatinSquare relabeled(std::vector<std::string> symbols) const;

    friend bool operator==(const LatinSquare& x, const LatinSquare& y) {
        return x.symbols_ == y.symbols_ && x.cells_ == y.cells_;
    }
    friend bool operator!=(const LatinSquare& x, const LatinSquare& y) { return !(x == y); }

private:
    std::vector<std::string> symbols_;
    std::vector<std::vector<int>> cells_;
};

/// True iff every row of a superimposed on every row of b agrees in exactly
/// one column. Requires a common symbol set.
bool are_ufs(const LatinSquare& a, const LatinSquare& b);

/// The square whose (i,j) entry is the unique common symbol of row i of a and
/// row j of b. Throws if some row pair has no unique common symbol.
LatinSquare compose(const LatinSquare& a, const LatinSquare& b);

/// Difference-table squares S_e = (e*(x_i - x_j)) for every nonzero e, on the
/// field elements as symbols; pairwise UFS.
std::vector<LatinSquare> mutually_ufs_from_field(const FiniteField& field);

/// Family {L_{i,j}} on fibers 0..f-1 such that for all distinct i,j,k the
/// pair (L_{i,k}, L_{j,k}) is UFS and composes to L_{i,j}.
struct LinkedUfsFamily {
    int f = 0;
    std::vector<std::string> symbols;
    std::map<std::pair<int, int>, LatinSquare> squares;  // keys (i,j), i != j

    [[nodiscard]] const LatinSquare& at(int i, int j) const;
    [[nodiscard]] std::size_t order() const { return symbols.size(); }
};

/// Confirms both linked-family conditions for every ordered triple.
Report verify_linked_family(const LinkedUfsFamily& fam);

/// Characteristic-2 construction: fibers are the nonzero field elements and
/// L_{i,j} = S_m with m = e_i*e_j/(e_i+e_j). Verified before return.
LinkedUfsFamily linked_ufs_from_char2_field(const FiniteField& field);

/// L_{i,j} = compose(L_i, L_j) from pairwise-UFS input squares. Verified.
LinkedUfsFamily linked_family_from_mutually_ufs(const std::vector<LatinSquare>& squares);

/// Odd-characteristic construction with one extra fiber: the difference-table
/// composition family extended by the sum-table squares T_e = (e*(x_i + x_j)),
/// giving f = q fibers of order q. Verified before return.
LinkedUfsFamily linked_ufs_from_odd_field(const FiniteField& field);

}  // namespace lsgdd
