#pragma once

#include <string>
#include <vector>

#include "jonq/groebner/ideal.hpp"
#include "jonq/ringkit/polynomial.hpp"

namespace jonq {

/// Rational map P^n -> P^n given by n+1 forms of one degree in n+1 variables.
/// Maps built by make_map have coprime coordinates and a monic first nonzero
/// coordinate, so equal maps compare equal coordinatewise.
class RationalMap {
public:
    RationalMap() = default;

    /// Coordinates as given, only validated. Throws LengthMismatch, AllZero,
    /// NotHomogeneous, DegreeMismatch.
    static RationalMap raw(std::vector<Polynomial> coords);
    static RationalMap identity(const Ring& ring);

    const Ring& ring() const { return ring_; }
    /// n, the dimension of the projective space.
    std::size_t dimension() const { return coords_.size() - 1; }
    const std::vector<Polynomial>& coords() const { return coords_; }
    const Polynomial& operator[](std::size_t i) const { return coords_[i]; }
    int degree() const { return degree_; }
    bool normalized() const { return normalized_; }

    std::string to_string() const;

    friend bool operator==(const RationalMap& a, const RationalMap& b);

private:
    Ring ring_;
    std::vector<Polynomial> coords_;
    int degree_ = 0;
    bool normalized_ = false;

    friend RationalMap make_map(std::vector<Polynomial> forms);
};

/// Removes the common factor of the forms and rescales.
RationalMap make_map(std::vector<Polynomial> forms);

/// F o G: the coordinates of G substituted into F, without normalizing.
RationalMap compose_raw(const RationalMap& F, const RationalMap& G);
/// F o G, normalized. Throws DimensionMismatch.
RationalMap compose(const RationalMap& F, const RationalMap& G);

/// Coordinates are (x0, ..., xn) times one nonzero scalar.
bool is_identity(const RationalMap& F);
/// Both composites are the identity.
bool check_inverse(const RationalMap& F, const RationalMap& G);
/// Coordinates agree up to one common nonzero scalar.
bool same_map(const RationalMap& F, const RationalMap& G);

Ideal base_ideal(const RationalMap& F);

/// A degree one map, as the (n+1) x (n+1) matrix of coefficients with rows
/// indexed by coordinates; throws DegreeMismatch for other degrees.
std::vector<std::vector<Scalar>> linear_matrix(const RationalMap& F);
/// Inverse of a linear map; throws SingularDeterminant.
RationalMap linear_inverse(const RationalMap& F);

/// Castelnuovo-Harris type bound for the geometric genus of a variety of
/// degree l and dimension m in P^r: with l - 1 = s(r - m) + e, 0 <= e < r - m,
/// returns C(s, m+1)(r - m) + C(s, m) e.
struct GenusBoundQuery {
    long l;
    long r;
    long m;
};
struct GenusBound {
    long s;
    long e;
    long bound;
};
GenusBound ch_bound(const GenusBoundQuery& query);

} // namespace jonq
