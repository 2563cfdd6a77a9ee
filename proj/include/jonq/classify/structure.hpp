#pragma once

#include <array>
#include <vector>

#include "jonq/classify/templates.hpp"
#include "jonq/groebner/ideal.hpp"
#include "jonq/resolve/resolution.hpp"
#include "jonq/ringkit/linalg.hpp"

namespace jonq {

/// J = (q l0, q l1, q l2, q0 l0 + q1 l1 + q2 l2) with l_i the entries of the
/// last syzygy. All forms are in the original coordinates; `change` has rows
/// l0, l1, l2, l3, so the new coordinates are x' = change * x.
struct MainTheoremExtraction {
    int d;
    ScalarMatrix change;
    Ideal P;
    Polynomial q;
    std::array<Polynomial, 3> qi;
    Ideal unmixed_part;
    /// (d - 1) d
    int ci_degree;
};

/// Throws TemplateMismatch, EntriesNotIndependent, UnmixedForD2.
MainTheoremExtraction verify_main_theorem(const Ideal& J);

/// colon(J, P) != J. Throws NotLinearPrime unless P is generated by linearly
/// independent linear forms.
bool is_associated(const Ideal& J, const Ideal& P);
/// saturate(J, P)
Ideal unmixed_part(const Ideal& J, const Ideal& P);

struct LinearPrimeReport {
    Ideal prime;
    bool associated;
    /// J : P^inf is not contained in P
    bool minimal;
    bool embedded() const { return associated && !minimal; }
};

/// Associated codimension-3 primes spanned by three independent candidate
/// linear forms: the linear entries of the resolution and their pairwise
/// differences. Each prime is tested once.
std::vector<LinearPrimeReport> linear_prime_sweep(const Ideal& J, const FreeResolution& r);

struct SchemeReport {
    Ideal ideal;
    BettiTable betti;
    TemplateMatch match;
    /// associated codimension-3 primes found by the sweep
    std::vector<LinearPrimeReport> codim3;
    int minimal_count() const;
    int embedded_count() const;
};
SchemeReport scheme_report(const Ideal& J);

Ideal noether_ideal(Field field = Field::rationals());
Ideal subhankel_ideal(Field field = Field::rationals());

struct SubhankelReport {
    SchemeReport subhankel;
    SchemeReport noether;
    bool betti_ok;
    /// exactly one associated codimension-3 prime, and it is embedded
    bool unique_embedded;
    /// Noether: two minimal and one embedded codimension-3 prime
    bool noether_shape;
};
SubhankelReport subhankel_demo();

} // namespace jonq
