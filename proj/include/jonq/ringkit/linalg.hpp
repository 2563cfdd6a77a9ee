#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jonq/ringkit/scalar.hpp"

namespace jonq {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

struct RowEchelon {
    ScalarMatrix reduced;              ///< reduced row echelon form
    std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination; `cols` is needed when the matrix has no rows.
RowEchelon row_reduce(ScalarMatrix m, Field field, std::size_t cols);
std::size_t rank(const ScalarMatrix& m, Field field, std::size_t cols);
/// Basis of {v : m v = 0}.
std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& m, Field field, std::size_t cols);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<ScalarMatrix> inverse(const ScalarMatrix& m, Field field);
ScalarMatrix identity_matrix(std::size_t n, Field field);
ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b, Field field);

} // namespace jonq
