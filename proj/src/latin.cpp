#include "lsgdd/latin.hpp"

#include <set>
#include <stdexcept>

namespace lsgdd {

LatinSquare::LatinSquare(std::vector<std::string> symbols, std::vector<std::vector<int>> cells)
    : symbols_(std::move(symbols)), cells_(std::move(cells)) {
    const std::size_t n = symbols_.size();
    if (n == 0) throw std::invalid_argument("LatinSquare: empty symbol set");
    if (std::set<std::string>(symbols_.begin(), symbols_.end()).size() != n)
        throw std::invalid_argument("LatinSquare: duplicate symbols");
    if (cells_.size() != n) throw std::invalid_argument("LatinSquare: cell grid is not order x order");
    for (const auto& row : cells_) {
        if (row.size() != n) throw std::invalid_argument("LatinSquare: ragged cell grid");
        std::vector<bool> seen(n, false);
        for (int s : row) {
            if (s < 0 || static_cast<std::size_t>(s) >= n || seen[static_cast<std::size_t>(s)])
                throw std::invalid_argument("LatinSquare: row is not a permutation of the symbols");
            seen[static_cast<std::size_t>(s)] = true;
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<bool> seen(n, false);
        for (std::size_t r = 0; r < n; ++r) {
            int s = cells_[r][c];
            if (seen[static_cast<std::size_t>(s)])
                throw std::invalid_argument("LatinSquare: column is not a permutation of the symbols");
            seen[static_cast<std::size_t>(s)] = true;
        }
    }
}

LatinSquare LatinSquare::transposed() const {
    const std::size_t n = order();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) t[c][r] = cells_[r][c];
    return LatinSquare(symbols_, std::move(t));
}

LatinSquare LatinSquare::relabeled(std::vector<std::string> symbols) const {
    if (symbols.size() != symbols_.size())
        throw std::invalid_argument("LatinSquare::relabeled: symbol count mismatch");
    return LatinSquare(std::move(symbols), cells_);
}

namespace {

void check_compatible(const LatinSquare& a, const LatinSquare& b) {
    if (a.symbols() != b.symbols())
        throw std::invalid_argument("UFS: squares are not on the same symbol set");
}

// Columns where row ra of a agrees with row rb of b.
std::vector<std::size_t> agreements(const LatinSquare& a, std::size_t ra, const LatinSquare& b, std::size_t rb) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < a.order(); ++c)
        if (a.cell(ra, c) == b.cell(rb, c)) cols.push_back(c);
    return cols;
}

}  // namespace

bool are_ufs(const LatinSquare& a, const LatinSquare& b) {
    check_compatible(a, b);
    if (a.order() != b.order()) return false;
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < b.order(); ++j)
            if (agreements(a, i, b, j).size() != 1) return false;
    return true;
}

LatinSquare compose(const LatinSquare& a, const LatinSquare& b) {
    check_compatible(a, b);
    const std::size_t n = a.order();
    if (b.order() != n) throw std::invalid_argument("compose: order mismatch");
    std::vector<std::vector<int>> cells(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto cols = agreements(a, i, b, j);
            if (cols.size() != 1)
                throw std::domain_error("compose: rows " + std::to_string(i) + "," + std::to_string(j) +
                                        " share " + std::to_string(cols.size()) + " symbols, not one");
            cells[i][j] = a.cell(i, cols[0]);
        }
    return LatinSquare(a.symbols(), std::move(cells));
}

std::vector<LatinSquare> mutually_ufs_from_field(const FiniteField& field) {
    const auto q = static_cast<std::size_t>(field.size());
    std::vector<std::string> symbols(q);
    for (std::size_t i = 0; i < q; ++i) symbols[i] = field.name(i);
    std::vector<LatinSquare> out;
    for (FieldElem e = 1; e < q; ++e) {
        std::vector<std::vector<int>> cells(q, std::vector<int>(q));
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j)
                cells[i][j] = static_cast<int>(field.mul(e, field.sub(i, j)));
        out.emplace_back(symbols, std::move(cells));
    }
    return out;
}

const LatinSquare& LinkedUfsFamily::at(int i, int j) const {
    auto it = squares.find({i, j});
    if (it == squares.end())
        throw std::out_of_range("LinkedUfsFamily: no square for fibers (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
    return it->second;
}

Report verify_linked_family(const LinkedUfsFamily& fam) {
    Report report;
    if (fam.f < 2) {
        report.fail("family-size", "need at least 2 fibers, have " + std::to_string(fam.f));
        return report;
    }
    for (int i = 0; i < fam.f; ++i)
        for (int j = 0; j < fam.f; ++j) {
            if (i == j) continue;
            if (fam.squares.find({i, j}) == fam.squares.end()) {
                report.fail("family-complete", "missing square (" + std::to_string(i) + "," + std::to_string(j) + ")");
                return report;
            }
            if (fam.at(i, j).symbols() != fam.symbols) {
                report.fail("family-symbols", "square (" + std::to_string(i) + "," + std::to_string(j) +
                                                  ") is on a different symbol set");
                return report;
            }
        }
    for (int i = 0; i < fam.f; ++i)
        for (int j = 0; j < fam.f; ++j)
            for (int k = 0; k < fam.f; ++k) {
                if (i == j || j == k || i == k) continue;
                const std::string triple =
                    "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
                if (!are_ufs(fam.at(i, k), fam.at(j, k))) {
                    report.fail("ufs", "pair (L_" + std::to_string(i) + "," + std::to_string(k) + ", L_" +
                                           std::to_string(j) + "," + std::to_string(k) + ") of triple " + triple +
                                           " is not UFS");
                    continue;
                }
                if (compose(fam.at(i, k), fam.at(j, k)) != fam.at(i, j))
                    report.fail("composition", "compose(L_" + std::to_string(i) + "," + std::to_string(k) +
                                                   ", L_" + std::to_string(j) + "," + std::to_string(k) +
                                                   ") != L_" + std::to_string(i) + "," + std::to_string(j) +
                                                   " at triple " + triple);
            }
    return report;
}

LinkedUfsFamily linked_ufs_from_char2_field(const FiniteField& field) {
    if (field.p() != 2)
        throw std::invalid_argument("linked_ufs_from_char2_field: field characteristic must be 2");
    if (field.size() < 4)
        throw std::invalid_argument("linked_ufs_from_char2_field: field order must be >= 4");
    const auto q = static_cast<std::size_t>(field.size());
    const auto squares = mutually_ufs_from_field(field);  // squares[e-1] = S_e

    LinkedUfsFamily fam;
    fam.f = static_cast<int>(q - 1);
    fam.symbols = squares[0].symbols();
    for (int i = 0; i < fam.f; ++i)
        for (int j = 0; j < fam.f; ++j) {
            if (i == j) continue;
            const FieldElem ei = static_cast<FieldElem>(i) + 1;
            const FieldElem ej = static_cast<FieldElem>(j) + 1;
            FieldElem m = field.div(field.mul(ei, ej), field.add(ei, ej));
            fam.squares.insert({{i, j}, squares[m - 1]});
        }
    require_ok(verify_linked_family(fam));
    return fam;
}

LinkedUfsFamily linked_family_from_mutually_ufs(const std::vector<LatinSquare>& squares) {
    if (squares.size() < 2)
        throw std::invalid_argument("linked_family_from_mutually_ufs: need at least 2 squares");
    LinkedUfsFamily fam;
    fam.f = static_cast<int>(squares.size());
    fam.symbols = squares[0].symbols();
    for (int i = 0; i < fam.f; ++i)
        for (int j = 0; j < fam.f; ++j) {
            if (i == j) continue;
            if (!are_ufs(squares[static_cast<std::size_t>(i)], squares[static_cast<std::size_t>(j)]))
                throw std::invalid_argument("linked_family_from_mutually_ufs: squares " + std::to_string(i) +
                                            " and " + std::to_string(j) + " are not UFS");
            fam.squares.insert(
                {{i, j}, compose(squares[static_cast<std::size_t>(i)], squares[static_cast<std::size_t>(j)])});
        }
    require_ok(verify_linked_family(fam));
    return fam;
}

LinkedUfsFamily linked_ufs_from_odd_field(const FiniteField& field) {
    if (field.p() == 2)
        throw std::invalid_argument("linked_ufs_from_odd_field: field characteristic must be odd");
    if (field.size() < 3) throw std::invalid_argument("linked_ufs_from_odd_field: field order must be >= 3");
    const auto q = static_cast<std::size_t>(field.size());
    const auto squares = mutually_ufs_from_field(field);

    LinkedUfsFamily fam = linked_family_from_mutually_ufs(squares);

    // Extra fiber: sum-table squares. L_{t,i} = L_{i,t} = T_{e_i} with
    // T_e(r,c) = e*(x_r + x_c); symmetric, so the family stays
    // transpose-coherent under matrix substitution.
    const int t = fam.f;
    for (int i = 0; i < fam.f; ++i) {
        const FieldElem ei = static_cast<FieldElem>(i) + 1;
        std::vector<std::vector<int>> cells(q, std::vector<int>(q));
        for (std::size_t r = 0; r < q; ++r)
            for (std::size_t c = 0; c < q; ++c)
                cells[r][c] = static_cast<int>(field.mul(ei, field.add(r, c)));
        LatinSquare sum_square(fam.symbols, std::move(cells));
        fam.squares.insert({{t, i}, sum_square});
        fam.squares.insert({{i, t}, sum_square});
    }
    fam.f += 1;
    require_ok(verify_linked_family(fam));
    return fam;
}

}  // namespace lsgdd
