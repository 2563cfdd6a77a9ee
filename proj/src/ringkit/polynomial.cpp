#include "jonq/ringkit/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "jonq/error.hpp"

namespace jonq {

namespace {

void normalize_terms(const Ring& ring, std::vector<Term>& terms)
{
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ring.compare(a.monomial, b.monomial) > 0; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        Term acc = std::move(terms[i]);
        std::size_t j = i + 1;
        for (; j < terms.size() && terms[j].monomial == acc.monomial; ++j)
            acc.coefficient += terms[j].coefficient;
        if (!acc.coefficient.is_zero())
            terms[out++] = std::move(acc);
        i = j;
    }
    terms.resize(out);
}

void check_monomial_fits(const Ring& ring, const Monomial& m)
{
    if (m.support_end() > ring.nvars())
        raise(Errc::UnknownVariable, "monomial " + m.to_string() + " uses a variable outside " + ring.to_string());
}

} // namespace

Ring::Ring(std::size_t nvars, Field field, TermOrder order) : nvars_(nvars), field_(field), order_(order)
{
    if (nvars > kMaxVariables)
        raise(Errc::InvalidArgument, "at most " + std::to_string(kMaxVariables) + " variables are supported");
}

std::string Ring::to_string() const
{
    return field_.name() + "[x0..x" + std::to_string(nvars_ == 0 ? 0 : nvars_ - 1) + "] " + order_.name();
}

Polynomial Polynomial::constant(Ring ring, const Scalar& c)
{
    return monomial(ring, Monomial{}, c);
}

Polynomial Polynomial::variable(Ring ring, std::size_t index)
{
    if (index >= ring.nvars())
        raise(Errc::UnknownVariable, "x" + std::to_string(index) + " is not a variable of " + ring.to_string());
    return monomial(ring, Monomial::variable(index));
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m, const Scalar& c)
{
    if (!(c.field() == ring.field()))
        raise(Errc::FieldMismatch, "coefficient over " + c.field().name() + " in ring over " + ring.field().name());
    check_monomial_fits(ring, m);
    Polynomial p(ring);
    if (!c.is_zero())
        p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms)
{
    for (const auto& t : terms) {
        if (!(t.coefficient.field() == ring.field()))
            raise(Errc::FieldMismatch, "coefficient over " + t.coefficient.field().name());
        check_monomial_fits(ring, t.monomial);
    }
    normalize_terms(ring, terms);
    Polynomial p(ring);
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::from_sorted_terms(Ring ring, std::vector<Term> terms)
{
    Polynomial p(ring);
    p.terms_ = std::move(terms);
    return p;
}

Scalar Polynomial::coefficient(const Monomial& m) const
{
    for (const auto& t : terms_)
        if (t.monomial == m)
            return t.coefficient;
    return Scalar::zero(ring_.field());
}

int Polynomial::total_degree() const
{
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, static_cast<int>(t.monomial.degree()));
    return d;
}

int Polynomial::min_degree() const
{
    if (terms_.empty())
        return -1;
    int d = static_cast<int>(terms_[0].monomial.degree());
    for (const auto& t : terms_)
        d = std::min(d, static_cast<int>(t.monomial.degree()));
    return d;
}

bool Polynomial::is_homogeneous() const
{
    for (const auto& t : terms_)
        if (t.monomial.degree() != terms_[0].monomial.degree())
            return false;
    return true;
}

int Polynomial::degree_in(std::size_t var) const
{
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, static_cast<int>(t.monomial[var]));
    return d;
}

Polynomial Polynomial::coefficient_in(std::size_t var, unsigned power) const
{
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.monomial[var] != power)
            continue;
        Monomial m = t.monomial;
        m.set(var, 0);
        out.push_back({m, t.coefficient});
    }
    return from_terms(ring_, std::move(out));
}

Monomial Polynomial::monomial_content() const
{
    if (terms_.empty())
        return {};
    Monomial g = terms_[0].monomial;
    for (const auto& t : terms_)
        g = Monomial::gcd(g, t.monomial);
    return g;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& t : r.terms_)
        t.coefficient = -t.coefficient;
    return r;
}

void require_same_ring(const Polynomial& a, const Polynomial& b)
{
    if (!(a.ring() == b.ring()))
        raise(Errc::RingMismatch, "polynomials from " + a.ring().to_string() + " and " + b.ring().to_string());
}

namespace {

Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract)
{
    require_same_ring(a, b);
    const Ring& ring = a.ring();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto ta = a.terms();
    auto tb = b.terms();
    std::size_t i = 0, j = 0;
    while (i < ta.size() && j < tb.size()) {
        const int c = ring.compare(ta[i].monomial, tb[j].monomial);
        if (c > 0) {
            out.push_back(ta[i++]);
        } else if (c < 0) {
            out.push_back({tb[j].monomial, subtract ? -tb[j].coefficient : tb[j].coefficient});
            ++j;
        } else {
            Scalar s = subtract ? ta[i].coefficient - tb[j].coefficient : ta[i].coefficient + tb[j].coefficient;
            if (!s.is_zero())
                out.push_back({ta[i].monomial, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < ta.size(); ++i)
        out.push_back(ta[i]);
    for (; j < tb.size(); ++j)
        out.push_back({tb[j].monomial, subtract ? -tb[j].coefficient : tb[j].coefficient});
    return Polynomial::from_sorted_terms(ring, std::move(out));
}

} // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    return merge(a, b, false);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    return merge(a, b, true);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    require_same_ring(a, b);
    if (a.is_zero() || b.is_zero())
        return Polynomial(a.ring());
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            out.push_back({x.monomial * y.monomial, x.coefficient * y.coefficient});
    return Polynomial::from_terms(a.ring(), std::move(out));
}

Polynomial Polynomial::scaled(const Scalar& c) const
{
    if (c.is_zero())
        return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_)
        t.coefficient *= c;
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const
{
    if (c.is_zero())
        return Polynomial(ring_);
    check_monomial_fits(ring_, m);
    Polynomial r = *this;
    for (auto& t : r.terms_) {
        t.monomial = t.monomial * m;
        t.coefficient *= c;
    }
    return r;
}

Polynomial Polynomial::divided_by_monomial(const Monomial& m) const
{
    Polynomial r = *this;
    for (auto& t : r.terms_) {
        if (!m.divides(t.monomial))
            raise(Errc::NotDivisible, m.to_string() + " does not divide " + t.monomial.to_string());
        t.monomial = t.monomial / m;
    }
    return r;
}

Polynomial Polynomial::pow(unsigned exponent) const
{
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (exponent) {
        if (exponent & 1)
            result = result * base;
        exponent >>= 1;
        if (exponent)
            base = base * base;
    }
    return result;
}

Polynomial Polynomial::monic() const
{
    if (is_zero() || leading_coefficient().is_one())
        return *this;
    return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::derivative(std::size_t var) const
{
    std::vector<Term> out;
    for (const auto& t : terms_) {
        const unsigned e = t.monomial[var];
        if (e == 0)
            continue;
        Monomial m = t.monomial;
        m.set(var, e - 1);
        out.push_back({m, t.coefficient * Scalar::from_int(ring_.field(), e)});
    }
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::in_ring(const Ring& target) const
{
    if (!(target.field() == ring_.field()))
        raise(Errc::FieldMismatch, "cannot move a polynomial from " + ring_.field().name() + " to " + target.field().name());
    if (target == ring_)
        return *this;
    std::vector<Term> terms = terms_;
    return from_terms(target, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (a.size() != b.size())
        return false;
    if (!(a.ring().field() == b.ring().field()) || a.ring().nvars() != b.ring().nvars())
        return false;
    if (!(a.ring() == b.ring()))
        return a.in_ring(b.ring()) == b;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& x = a.terms()[i];
        const auto& y = b.terms()[i];
        if (!(x.monomial == y.monomial) || !(x.coefficient == y.coefficient))
            return false;
    }
    return true;
}

std::string Polynomial::to_string() const
{
    if (is_zero())
        return "0";
    const Polynomial p = ring_.order() == TermOrder::grevlex() ? *this : in_ring(ring_.with_order(TermOrder::grevlex()));
    std::string out;
    bool first = true;
    for (const auto& t : p.terms_) {
        mpq_class c = t.coefficient.to_rational();
        const bool negative = sgn(c) < 0;
        if (negative)
            c = -c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        const bool unit = c == 1;
        if (t.monomial.is_one()) {
            out += c.get_str();
        } else {
            if (!unit)
                out += c.get_str() + "*";
            out += t.monomial.to_string();
        }
    }
    return out;
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images)
{
    if (images.size() != p.ring().nvars())
        raise(Errc::LengthMismatch, "substitution needs " + std::to_string(p.ring().nvars()) + " images, got " +
                                        std::to_string(images.size()));
    if (images.empty())
        return p;
    const Ring& target = images[0].ring();
    for (const auto& im : images)
        if (!(im.ring() == target))
            raise(Errc::RingMismatch, "substitution images live in different rings");
    if (!(target.field() == p.ring().field()))
        raise(Errc::FieldMismatch, "substitution across fields");

    // powers[i][e] = images[i]^e, filled lazily
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.push_back(Polynomial::constant(target, 1));
        while (cache.size() <= e)
            cache.push_back(cache.back() * images[i]);
        return cache[e];
    };

    std::vector<Term> acc;
    for (const auto& t : p.terms()) {
        Polynomial prod = Polynomial::constant(target, t.coefficient);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (const unsigned e = t.monomial[i])
                prod = prod * power(i, e);
        acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
    }
    return Polynomial::from_terms(target, std::move(acc));
}

std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& q)
{
    require_same_ring(p, q);
    if (q.is_zero())
        raise(Errc::ZeroPolynomial, "division by the zero polynomial");
    const Ring& ring = p.ring();
    const Term& lead = q.leading_term();
    const Scalar lead_inv = lead.coefficient.inverse();
    std::vector<Term> quotient;
    Polynomial r = p;
    while (!r.is_zero()) {
        const Term& t = r.leading_term();
        if (!lead.monomial.divides(t.monomial))
            return std::nullopt;
        const Monomial m = t.monomial / lead.monomial;
        const Scalar c = t.coefficient * lead_inv;
        quotient.push_back({m, c});
        r = r - q.times_term(m, c);
    }
    return Polynomial::from_terms(ring, std::move(quotient));
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& q)
{
    if (auto r = try_divide(p, q))
        return *std::move(r);
    raise(Errc::NotDivisible, q.to_string() + " does not divide " + p.to_string());
}

int graded_degree(const Polynomial& p)
{
    if (p.is_zero())
        raise(Errc::ZeroPolynomial, "the zero polynomial has no degree");
    const int d = static_cast<int>(p.leading_monomial().degree());
    for (const auto& t : p.terms()) {
        const int e = static_cast<int>(t.monomial.degree());
        if (e != d)
            raise(Errc::NotHomogeneous, "terms of degrees " + std::to_string(std::max(d, e)) + " and " +
                                            std::to_string(std::min(d, e)),
                  {{"degree_a", std::max(d, e)}, {"degree_b", std::min(d, e)}});
    }
    return d;
}

namespace {

// Fraction-free elimination in place; returns the rank and, for square input,
// the determinant via the last pivot (with sign from row swaps).
std::size_t bareiss(PolyMatrix& m, const Ring& ring, Polynomial* det)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    Polynomial prev = Polynomial::constant(ring, 1);
    bool negate = false;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows) {
            if (det) {
                *det = Polynomial(ring);
                return rank;
            }
            continue;
        }
        if (pivot != rank) {
            std::swap(m[pivot], m[rank]);
            negate = !negate;
        }
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = exact_divide(m[rank][col] * m[i][j] - m[i][col] * m[rank][j], prev);
            m[i][col] = Polynomial(ring);
        }
        prev = m[rank][col];
        ++rank;
    }
    if (det)
        *det = negate ? -prev : prev;
    return rank;
}

Ring matrix_ring(const PolyMatrix& m)
{
    if (m.empty() || m[0].empty())
        raise(Errc::InvalidArgument, "empty polynomial matrix");
    const Ring ring = m[0][0].ring();
    for (const auto& row : m) {
        if (row.size() != m[0].size())
            raise(Errc::DimensionMismatch, "ragged polynomial matrix");
        for (const auto& e : row)
            if (!(e.ring() == ring))
                raise(Errc::RingMismatch, "matrix entries from different rings");
    }
    return ring;
}

} // namespace

Polynomial determinant(PolyMatrix matrix)
{
    const Ring ring = matrix_ring(matrix);
    if (matrix.size() != matrix[0].size())
        raise(Errc::NotSquare, "determinant of a " + std::to_string(matrix.size()) + "x" +
                                   std::to_string(matrix[0].size()) + " matrix");
    Polynomial det(ring);
    bareiss(matrix, ring, &det);
    return det;
}

std::size_t rank_over_fraction_field(PolyMatrix matrix)
{
    if (matrix.empty() || matrix[0].empty())
        return 0;
    const Ring ring = matrix_ring(matrix);
    return bareiss(matrix, ring, nullptr);
}

Polynomial jacobian_det(std::span<const Polynomial> forms)
{
    if (forms.empty())
        raise(Errc::NotSquare, "jacobian of an empty system");
    const Ring ring = forms[0].ring();
    if (forms.size() != ring.nvars())
        raise(Errc::NotSquare, std::to_string(forms.size()) + " forms in " + std::to_string(ring.nvars()) + " variables",
              {{"forms", static_cast<std::int64_t>(forms.size())}, {"variables", static_cast<std::int64_t>(ring.nvars())}});
    PolyMatrix m(forms.size());
    for (std::size_t i = 0; i < forms.size(); ++i) {
        require_same_ring(forms[i], forms[0]);
        for (std::size_t j = 0; j < ring.nvars(); ++j)
            m[i].push_back(forms[i].derivative(j));
    }
    return determinant(std::move(m));
}

} // namespace jonq
