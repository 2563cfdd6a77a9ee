#pragma once

#include <string>
#include <vector>

#include "jonq/ringkit/polynomial.hpp"

namespace jonq {

/// Map of graded free modules F -> G written as a matrix acting on columns.
/// Twists are the degrees of the basis elements: column j is a generator of
/// F of degree col_twists[j], row i one of G of degree row_twists[i]. Entry
/// (i, j) is zero or homogeneous of degree col_twists[j] - row_twists[i].
class GradedMatrix {
public:
    GradedMatrix() = default;
    /// The zero map between the given modules.
    GradedMatrix(Ring ring, std::vector<int> row_twists, std::vector<int> col_twists);
    /// Validates degrees; throws NotHomogeneous, DegreeMismatch, DimensionMismatch.
    GradedMatrix(Ring ring, const PolyMatrix& entries, std::vector<int> row_twists, std::vector<int> col_twists);
    /// 1 x k row (g_1 .. g_k) out of degree-zero S, twists read off the entries.
    static GradedMatrix row(Ring ring, const std::vector<Polynomial>& gens);

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return row_twists_.size(); }
    std::size_t cols() const { return col_twists_.size(); }
    const std::vector<int>& row_twists() const { return row_twists_; }
    const std::vector<int>& col_twists() const { return col_twists_; }

    const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
    void set(std::size_t i, std::size_t j, Polynomial p);
    std::vector<Polynomial> column(std::size_t j) const;
    PolyMatrix entries() const;

    bool is_zero() const;
    /// Position of the first nonzero constant entry (row-major), if any.
    bool find_unit(std::size_t& row, std::size_t& col) const;

    GradedMatrix without_row(std::size_t i) const;
    GradedMatrix without_column(std::size_t j) const;
    GradedMatrix operator-() const;

    std::string to_string() const;

private:
    Ring ring_;
    std::vector<int> row_twists_;
    std::vector<int> col_twists_;
    std::vector<Polynomial> entries_;
};

/// Composition a * b; throws DimensionMismatch. Twists come from b's columns
/// and a's rows.
GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);

} // namespace jonq
