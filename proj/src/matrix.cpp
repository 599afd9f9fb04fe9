#include "lsgdd/matrix.hpp"

namespace lsgdd {

std::set<Int> entry_values(const IntMatrix& m) {
    std::set<Int> s;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s.insert(m(i, j));
    return s;
}

bool is_zero_one(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0 && m(i, j) != 1) return false;
    return true;
}

std::string first_difference(const IntMatrix& lhs, const IntMatrix& rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        throw std::invalid_argument("first_difference: shape mismatch " + lhs.shape() + " vs " + rhs.shape());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
            if (lhs(i, j) != rhs(i, j))
                return "(" + std::to_string(i) + "," + std::to_string(j) + "): " + lhs(i, j).str() +
                       " vs " + rhs(i, j).str();
    return "";
}

IntMatrix to_int_matrix(const QuadMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const QuadExt& q = m(i, j);
            if (!q.is_integer())
                throw std::domain_error("to_int_matrix: non-integer entry " + q.to_string());
            r(i, j) = boost::multiprecision::numerator(q.as_rational());
        }
    return r;
}

QuadMatrix to_quad_matrix(const IntMatrix& m) {
    QuadMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = QuadExt(m(i, j));
    return r;
}

}  // namespace lsgdd
