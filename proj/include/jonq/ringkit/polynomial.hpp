#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jonq/ringkit/monomial.hpp"
#include "jonq/ringkit/scalar.hpp"

namespace jonq {

/// Polynomial ring k[x0..x_{nvars-1}] together with its ambient term order.
/// Two rings are the same iff all three attributes agree.
class Ring {
public:
    Ring() = default;
    Ring(std::size_t nvars, Field field, TermOrder order = TermOrder::grevlex());

    std::size_t nvars() const { return nvars_; }
    Field field() const { return field_; }
    TermOrder order() const { return order_; }

    Ring with_order(TermOrder order) const { return Ring(nvars_, field_, order); }
    Ring with_nvars(std::size_t nvars) const { return Ring(nvars, field_, order_); }

    int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b, nvars_); }

    friend bool operator==(const Ring& a, const Ring& b)
    {
        return a.nvars_ == b.nvars_ && a.field_ == b.field_ && a.order_ == b.order_;
    }

    std::string to_string() const;

private:
    std::size_t nvars_ = 0;
    Field field_{};
    TermOrder order_{};
};

struct Term {
    Monomial monomial;
    Scalar coefficient;
};

/// Sparse polynomial. Terms are kept sorted strictly descending in the ring's
/// order with no zero coefficients, so structural equality is value equality.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(ring) {}

    static Polynomial constant(Ring ring, const Scalar& c);
    static Polynomial constant(Ring ring, long c) { return constant(ring, Scalar::from_int(ring.field(), c)); }
    static Polynomial variable(Ring ring, std::size_t index);
    static Polynomial monomial(Ring ring, const Monomial& m, const Scalar& c);
    static Polynomial monomial(Ring ring, const Monomial& m) { return monomial(ring, m, Scalar::one(ring.field())); }
    /// Sorts, merges equal monomials and drops zeros.
    static Polynomial from_terms(Ring ring, std::vector<Term> terms);
    /// Unchecked: terms must already be strictly descending with nonzero coefficients.
    static Polynomial from_sorted_terms(Ring ring, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
    std::size_t size() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }

    /// Precondition: nonzero.
    const Term& leading_term() const { return terms_.front(); }
    const Monomial& leading_monomial() const { return terms_.front().monomial; }
    const Scalar& leading_coefficient() const { return terms_.front().coefficient; }

    Scalar coefficient(const Monomial& m) const;
    /// Maximum total degree of a term; -1 for zero.
    int total_degree() const;
    /// Minimum total degree of a term; -1 for zero.
    int min_degree() const;
    bool is_homogeneous() const;
    /// Highest power of x_var occurring; -1 for zero.
    int degree_in(std::size_t var) const;
    bool involves(std::size_t var) const { return degree_in(var) > 0; }
    /// The polynomial coefficient of x_var^power (collecting in x_var).
    Polynomial coefficient_in(std::size_t var, unsigned power) const;
    /// Greatest monomial dividing every term; 1 for zero.
    Monomial monomial_content() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    Polynomial scaled(const Scalar& c) const;
    Polynomial times_term(const Monomial& m, const Scalar& c) const;
    /// Divides every monomial by m; the caller guarantees m divides each term.
    Polynomial divided_by_monomial(const Monomial& m) const;
    Polynomial pow(unsigned exponent) const;
    /// Scaled so the leading coefficient is one (zero stays zero).
    Polynomial monic() const;
    Polynomial derivative(std::size_t var) const;

    /// Same polynomial in another ring: reorders for a different term order and
    /// embeds into more variables or restricts to fewer when the dropped
    /// variables do not occur. Fields must match.
    Polynomial in_ring(const Ring& target) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// Canonical text: descending grevlex, explicit '*' and '^', p/q coefficients.
    std::string to_string() const;

private:
    Ring ring_;
    std::vector<Term> terms_;
};

void require_same_ring(const Polynomial& a, const Polynomial& b);

/// Image of p under x_i -> images[i]. All images share one ring, which is the
/// ring of the result.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

/// Exact quotient p / q; nullopt when q does not divide p.
std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& q);
/// Exact quotient p / q; throws NotDivisible.
Polynomial exact_divide(const Polynomial& p, const Polynomial& q);

/// d such that every term of p has total degree d. Throws ZeroPolynomial and
/// NotHomogeneous (with the first two distinct degrees met).
int graded_degree(const Polynomial& p);

/// Row-major square matrix of polynomials over one ring.
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Determinant by fraction-free Bareiss elimination.
Polynomial determinant(PolyMatrix matrix);
/// Rank over the fraction field, by fraction-free elimination.
std::size_t rank_over_fraction_field(PolyMatrix matrix);

/// det(d forms_i / d x_j) for n forms in n variables. Throws NotSquare.
Polynomial jacobian_det(std::span<const Polynomial> forms);

} // namespace jonq
