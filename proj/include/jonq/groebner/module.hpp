#pragma once

#include <cstdint>
#include <vector>

#include "jonq/ringkit/polynomial.hpp"

namespace jonq {

/// Free module R^rank with a degree shift per component. Terms are ordered
/// position over term: a smaller component index is larger, ties go to the
/// ring's monomial order.
struct FreeModule {
    Ring ring;
    std::size_t rank = 1;
    /// Degree of the basis vector e_i; used for sugar only.
    std::vector<int> weights;

    FreeModule() = default;
    FreeModule(Ring r, std::size_t rk, std::vector<int> w = {});

    int compare(std::uint32_t ca, const Monomial& a, std::uint32_t cb, const Monomial& b) const
    {
        if (ca != cb)
            return ca < cb ? 1 : -1;
        return ring.compare(a, b);
    }
    int weight(std::uint32_t c) const { return weights.empty() ? 0 : weights[c]; }
};

struct ModTerm {
    std::uint32_t component = 0;
    Monomial monomial;
    Scalar coefficient;
};

/// Module element: terms sorted descending in the FreeModule order, no zeros.
using ModVec = std::vector<ModTerm>;

ModVec to_modvec(const Polynomial& p, std::uint32_t component = 0);
/// Entries of v in a vector of `rank` polynomials over `ring`.
std::vector<Polynomial> to_columns(const ModVec& v, const FreeModule& m);
/// Builds a vector from polynomial entries (any ring order; re-sorted).
ModVec from_entries(const std::vector<Polynomial>& entries, const FreeModule& m);
/// Entry `component` of v as a polynomial.
Polynomial component_of(const ModVec& v, std::uint32_t component, const FreeModule& m);

/// a - c * mono * b
ModVec sub_multiple(const ModVec& a, const Scalar& c, const Monomial& mono, const ModVec& b, const FreeModule& m);
ModVec scale(const ModVec& v, const Scalar& c);
ModVec make_monic(const ModVec& v);

/// Full normal form of v modulo `basis` (leading terms used for division).
ModVec reduce(const ModVec& v, const std::vector<ModVec>& basis, const FreeModule& m);

/// Reduced Groebner basis of the submodule generated by `gens`: monic, no
/// leading term divides another, tails fully reduced, sorted ascending.
/// The product criterion is used only for rank one. Counts reductions against
/// the thread's budget and optionally certifies the result.
std::vector<ModVec> module_groebner(std::vector<ModVec> gens, const FreeModule& m);

/// True iff every S-pair of same-component leading terms reduces to zero.
bool check_certificate(const std::vector<ModVec>& basis, const FreeModule& m);

} // namespace jonq
