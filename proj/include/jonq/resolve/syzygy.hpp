#pragma once

#include <optional>
#include <vector>

#include "jonq/groebner/module.hpp"
#include "jonq/resolve/graded_matrix.hpp"

namespace jonq {

/// Submodule of a graded free module spanned by the columns of a matrix, with
/// its position-over-term Groebner basis.
class Submodule {
public:
    explicit Submodule(const GradedMatrix& columns);

    bool contains(const std::vector<Polynomial>& v) const;
    /// Every column of `other` lies in this submodule.
    bool contains_all(const GradedMatrix& other) const;

private:
    FreeModule module_;
    std::vector<ModVec> basis_;
};

/// Two-sided inclusion test for column spans in the same free module.
bool same_span(const GradedMatrix& a, const GradedMatrix& b);

/// Groebner data for M : F -> G on the augmented vectors (M e_j ; e_j),
/// from which both the kernel and preimages are read.
class ModuleMap {
public:
    explicit ModuleMap(const GradedMatrix& m);

    /// Minimal homogeneous generators of ker M, as the columns of a matrix
    /// whose rows are indexed by the columns of M.
    GradedMatrix kernel() const;
    /// Some h with M h = v, or nullopt when v is not in the image.
    std::optional<std::vector<Polynomial>> lift(const std::vector<Polynomial>& v) const;

private:
    GradedMatrix map_;
    FreeModule augmented_;
    std::vector<ModVec> basis_;
};

GradedMatrix syzygies(const GradedMatrix& m);

/// Drops columns that lie in the span of earlier ones, scanning by degree.
/// For homogeneous input the result is a minimal generating set.
GradedMatrix minimal_columns(const GradedMatrix& m);

} // namespace jonq
