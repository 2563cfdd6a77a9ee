#include "jonq/ringkit/linalg.hpp"

#include <utility>

#include "jonq/error.hpp"

namespace jonq {

RowEchelon row_reduce(ScalarMatrix m, Field field, std::size_t cols)
{
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col].is_zero())
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[row]);
        const Scalar inv = m[row][col].inverse();
        for (auto& x : m[row])
            x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero())
                continue;
            const Scalar f = m[i][col];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] -= f * m[row][j];
        }
        out.pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    (void)field;
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const ScalarMatrix& m, Field field, std::size_t cols)
{
    return row_reduce(m, field, cols).rank();
}

std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& m, Field field, std::size_t cols)
{
    const RowEchelon e = row_reduce(m, field, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Scalar> v(cols, Scalar::zero(field));
        v[free] = Scalar::one(field);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.reduced[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

ScalarMatrix identity_matrix(std::size_t n, Field field)
{
    ScalarMatrix id(n, std::vector<Scalar>(n, Scalar::zero(field)));
    for (std::size_t i = 0; i < n; ++i)
        id[i][i] = Scalar::one(field);
    return id;
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& m, Field field)
{
    const std::size_t n = m.size();
    if (n == 0)
        return ScalarMatrix{};
    ScalarMatrix aug = m;
    for (std::size_t i = 0; i < n; ++i) {
        if (aug[i].size() != n)
            raise(Errc::NotSquare, "inverse of a non-square matrix");
        for (std::size_t j = 0; j < n; ++j)
            aug[i].push_back(i == j ? Scalar::one(field) : Scalar::zero(field));
    }
    const RowEchelon e = row_reduce(std::move(aug), field, 2 * n);
    if (e.rank() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    ScalarMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i)
        inv[i].assign(e.reduced[i].begin() + static_cast<std::ptrdiff_t>(n), e.reduced[i].end());
    return inv;
}

ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b, Field field)
{
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b[0].size() : 0;
    ScalarMatrix out(a.size(), std::vector<Scalar>(cols, Scalar::zero(field)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner)
            raise(Errc::DimensionMismatch, "matrix product shape mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

} // namespace jonq
