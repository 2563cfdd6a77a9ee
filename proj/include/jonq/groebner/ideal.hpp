#pragma once

#include <vector>

#include "jonq/ringkit/polynomial.hpp"

namespace jonq {

/// Ideal given by generators. Zero generators are dropped, so the zero ideal
/// has no generators.
class Ideal {
public:
    explicit Ideal(Ring ring) : ring_(ring) {}
    Ideal(Ring ring, std::vector<Polynomial> generators);

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_homogeneous() const;
    std::size_t size() const { return gens_.size(); }
    const Polynomial& operator[](std::size_t i) const { return gens_[i]; }

    std::string to_string() const;

private:
    Ring ring_;
    std::vector<Polynomial> gens_;
};

/// Reduced Groebner basis: monic elements sorted ascending by leading term,
/// living in the ring with the basis' term order.
class GroebnerBasis {
public:
    GroebnerBasis(Ring ring, std::vector<Polynomial> elements) : ring_(ring), elems_(std::move(elements)) {}

    const Ring& ring() const { return ring_; }
    TermOrder order() const { return ring_.order(); }
    const std::vector<Polynomial>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool is_unit() const { return elems_.size() == 1 && elems_[0].is_constant(); }
    Ideal ideal() const { return Ideal(ring_, elems_); }

private:
    Ring ring_;
    std::vector<Polynomial> elems_;
};

GroebnerBasis groebner(const Ideal& I, TermOrder order = TermOrder::grevlex());

/// Remainder of full division by G, expressed in p's ring. Throws RingMismatch
/// when the variable count or field differ.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G);
bool contains(const GroebnerBasis& G, const Polynomial& p);

struct Division {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};
/// Multivariate division of p by `divisors` in the ring order of p:
/// p = sum quotients[i] * divisors[i] + remainder.
Division divide(const Polynomial& p, const std::vector<Polynomial>& divisors);

bool is_subset(const Ideal& I, const Ideal& J);
bool ideal_equal(const Ideal& I, const Ideal& J);

Ideal intersect(const Ideal& I, const Ideal& J);
Ideal colon(const Ideal& I, const Ideal& J);
Ideal saturate(const Ideal& I, const Ideal& J);

/// Monic gcd in the ambient order, via lcm = generator of (f) cap (g).
Polynomial gcd_forms(const Polynomial& f, const Polynomial& g);
Polynomial lcm_forms(const Polynomial& f, const Polynomial& g);
/// gcd of a list of polynomials (zeros ignored); AllZero when nothing is left.
Polynomial gcd_all(const std::vector<Polynomial>& polys);

/// (number of variables) - dim(S/I). Throws UnitIdeal.
int codim(const Ideal& I);
/// Smallest degree of a nonzero element of a homogeneous ideal; -1 for zero.
int initial_degree(const Ideal& I);

/// Generators with redundant ones removed, greedily by increasing degree. For a
/// homogeneous ideal the result is a minimal generating set.
Ideal minimalize(const Ideal& I);

} // namespace jonq
