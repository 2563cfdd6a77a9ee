#pragma once

#include <string>

#include "jonq/rmap/rational_map.hpp"

namespace jonq {

/// The element x_n -> (a x_n + b) / (c x_n + d) of PGL(2) over the function
/// field of P^{n-1}. The forms live in the ring of P^n and do not involve the
/// last variable. Nonzero entries have degrees r-1, r, r-2, r-1.
struct MobiusElement {
    Ring ring;
    Polynomial a, b, c, d;
    int r = 1;

    std::size_t dimension() const { return ring.nvars() - 1; }
    /// c x_n + d
    Polynomial q() const;
    /// a x_n + b
    Polynomial f() const;
    Polynomial determinant() const { return a * d - b * c; }
    std::string to_string() const;
};

/// Validates the degree pattern, ad - bc != 0 and gcd(f, q) = 1. The forms
/// must share one ring with at least two variables. Throws DegeneratePattern,
/// SingularDeterminant, NotCoprime.
MobiusElement make_mobius(const Polynomial& a, const Polynomial& b, const Polynomial& c, const Polynomial& d);
/// (1, 0, 0, 1) over `ring`.
MobiusElement mobius_identity(const Ring& ring);

/// ((c x_n + d) x_0 : ... : (c x_n + d) x_{n-1} : a x_n + b)
RationalMap mobius_to_map(const MobiusElement& mu);

/// Matrix product [[a, b], [c, d]] [[a', b'], [c', d']] with the common factor
/// of the four entries removed; the map of the result is the composite.
MobiusElement mobius_compose(const MobiusElement& mu1, const MobiusElement& mu2);
/// (d, -b, -c, a)
MobiusElement mobius_inverse(const MobiusElement& mu);
/// Equal as elements of PGL(2): the matrices agree up to a scalar.
bool same_mobius(const MobiusElement& mu1, const MobiusElement& mu2);
/// b = c = 0 and a = d.
bool is_mobius_identity(const MobiusElement& mu);

} // namespace jonq
