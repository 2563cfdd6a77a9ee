#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "jonq/jonquieres/mobius.hpp"
#include "jonq/rmap/rational_map.hpp"

namespace jonq {

/// F = (q g_0 : ... : q g_{n-1} : f) with center (0 : ... : 0 : 1). G lives on
/// P^{n-1} (the ring without x_n); q and f are x_n-monoids in the ring of F.
struct JonquieresDecomposition {
    RationalMap G;
    Polynomial q;
    Polynomial f;

    /// t = deg q
    int t() const { return graded_degree(q); }
};

enum class JonquieresFailure {
    Dimension,
    LeadingCoordinatesZero,
    UnderlyingInvolvesLast,
    QNotMonoid,
    FNotMonoid,
    NotCoprime,
    NoLastVariable,
};

std::string_view failure_name(JonquieresFailure failure);

/// Why a map is not of de Jonquieres type in the fixed coordinates.
struct NotJonquieres {
    JonquieresFailure failure;
    std::string message;
};

std::variant<JonquieresDecomposition, NotJonquieres> detect_jonquieres(const RationalMap& F);
/// As detect_jonquieres; throws NotJonquieres on refusal.
JonquieresDecomposition require_jonquieres(const RationalMap& F);

/// sigma(t) = (x0 t_0 : ... : x0 t_{n-1} : t_0 x_n), normalized.
RationalMap sigma_lift(const RationalMap& t);
/// The underlying map G. Throws NotJonquieres.
RationalMap rho_project(const RationalMap& F);

/// F as sigma(cremona_part) o mobius_to_map(mobius_part).
struct SemidirectElement {
    RationalMap map;
    JonquieresDecomposition decomposition;
    MobiusElement mobius_part;
    RationalMap cremona_part;
};

/// An inverse of a map of P^n when one is at hand: linear maps, involutions,
/// and de Jonquieres maps whose underlying map again has one.
std::optional<RationalMap> derive_inverse(const RationalMap& G);

/// Throws NotJonquieres, UnderlyingInverseUnavailable, BadUnderlyingInverse.
SemidirectElement split_semidirect(const RationalMap& F, const std::optional<RationalMap>& underlying_inverse = {});
/// mobius_to_map(mobius_inverse(part)) o sigma(G^-1). Throws BadUnderlyingInverse.
RationalMap jonquieres_inverse(const RationalMap& F, const RationalMap& underlying_inverse);
/// Same with the underlying inverse derived; throws UnderlyingInverseUnavailable.
RationalMap jonquieres_inverse(const RationalMap& F);

/// (q g_0 : ... : q g_{n-1} : f) for G on P^{n-1}. Throws NotCoprime, DegreeMismatch.
RationalMap qf_map(const RationalMap& G, const Polynomial& q, const Polynomial& f);

/// (x1 x2 ... : ...) the standard Cremona map of P^{n-1}: coordinate i is the
/// product of all variables but x_i.
RationalMap standard_cremona(const Ring& ring);

struct ContractionLocus {
    /// (ad - bc) q jac(G), where q = c x_n + d and f = a x_n + b
    Polynomial locus;
    long degree;
    long bound;
    bool bound_ok;
};
/// Throws ZeroJacobian, SingularDeterminant.
ContractionLocus contraction_locus(const JonquieresDecomposition& J);

/// The three conditions for P = (x0, x1, x2) to be an embedded prime of the
/// base ideal J of a Mobius map of P^3.
struct EmbeddedCriterion {
    bool gamma_zero;
    bool degree_at_least_3;
    /// both monoids lie in P
    bool containment;
    /// P is associated (after removing components through x3 = 0) and not minimal
    bool embedded;

    bool degree_condition() const { return gamma_zero || degree_at_least_3; }
    bool consistent() const { return degree_condition() == containment && containment == embedded; }
};
/// Throws DimensionMismatch unless mu acts on P^3.
EmbeddedCriterion embedded_criterion(const MobiusElement& mu);

} // namespace jonq
