#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jonq/groebner/ideal.hpp"
#include "jonq/resolve/graded_matrix.hpp"

namespace jonq {

/// Graded free complex 0 <- F_0 <- F_1 <- ... with maps[k] = d_{k+1}.
struct FreeResolution {
    Ring ring;
    std::vector<GradedMatrix> maps;

    /// Number of differentials, i.e. the length of the complex.
    std::size_t length() const { return maps.size(); }
    const GradedMatrix& d(std::size_t k) const { return maps.at(k - 1); }
    /// Twists of F_k.
    std::vector<int> twists(std::size_t k) const;
    /// d_k * d_{k+1} = 0 for every k.
    bool is_complex() const;
    /// rank d_k + rank d_{k+1} = rank F_k over the fraction field for 1 <= k < length.
    bool ranks_exact() const;
};

/// beta_{i,j}: generators of degree j in homological position i.
using BettiTable = std::map<std::pair<int, int>, int>;

/// Resolution of S/I starting from the given generators (not minimalized),
/// continued by minimal syzygies. Throws NotHomogeneous.
FreeResolution resolve_generators(const Ring& ring, const std::vector<Polynomial>& gens);
/// Minimal graded free resolution of S/I. Throws NotHomogeneous, UnitIdeal.
FreeResolution free_resolution(const Ideal& I);

/// Splits off trivial summands at every nonzero scalar entry, scanning in
/// (homological index, row, column) order.
FreeResolution minimize(FreeResolution r);

/// Throws NotMinimal when a differential still has a scalar entry.
BettiTable betti(const FreeResolution& r);

struct ProjectiveDimension {
    int pd;
    bool perfect;
};
ProjectiveDimension projective_dimension(const Ideal& I);

/// Resolution of (qI, f) assembled as the mapping cone of multiplication by f
/// from the resolution of S/q(IS:f), shifted, to that of S/qIS. I may live in
/// the ring without the last variable. Not minimal in general.
/// Throws NotCoprime, DegreeMismatch.
FreeResolution mapping_cone_qf(const Ideal& I, const Polynomial& q, const Polynomial& f);

/// Human-readable table, rows by j - i, columns by i.
std::string betti_display(const BettiTable& b);
std::string betti_to_string(const BettiTable& b);

} // namespace jonq
