#include "jonq/jonquieres/mobius.hpp"

#include <optional>

#include "jonq/error.hpp"

namespace jonq {

Polynomial MobiusElement::q() const
{
    return c * Polynomial::variable(ring, dimension()) + d;
}

Polynomial MobiusElement::f() const
{
    return a * Polynomial::variable(ring, dimension()) + b;
}

std::string MobiusElement::to_string() const
{
    return "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ", " + d.to_string() + ")";
}

MobiusElement make_mobius(const Polynomial& a, const Polynomial& b, const Polynomial& c, const Polynomial& d)
{
    require_same_ring(a, b);
    require_same_ring(a, c);
    require_same_ring(a, d);
    const Ring& ring = a.ring();
    if (ring.nvars() < 2)
        raise(Errc::DegeneratePattern, "Mobius elements need at least two variables");
    const std::size_t xn = ring.nvars() - 1;
    if (a.is_zero() && c.is_zero())
        raise(Errc::DegeneratePattern, "a and c are both zero");

    // offsets of deg a, deg b, deg c, deg d from r
    const Polynomial* entries[4] = {&a, &b, &c, &d};
    const char* names[4] = {"a", "b", "c", "d"};
    const int offsets[4] = {-1, 0, -2, -1};
    std::optional<int> r;
    for (int i = 0; i < 4; ++i) {
        const Polynomial& p = *entries[i];
        if (p.is_zero())
            continue;
        if (p.involves(xn))
            raise(Errc::DegeneratePattern, std::string(names[i]) + " involves the last variable");
        if (!p.is_homogeneous())
            raise(Errc::DegeneratePattern, std::string(names[i]) + " is not a form");
        const int implied = p.total_degree() - offsets[i];
        if (r && *r != implied)
            raise(Errc::DegeneratePattern, "degrees of a, b, c, d do not follow r-1, r, r-2, r-1",
                  {{"r", *r}, {"conflicting_r", implied}});
        r = implied;
    }
    if (*r < 1)
        raise(Errc::DegeneratePattern, "degree r must be at least 1", {{"r", *r}});

    MobiusElement mu{ring, a, b, c, d, *r};
    if (mu.determinant().is_zero())
        raise(Errc::SingularDeterminant, "ad - bc = 0 for " + mu.to_string());
    const Polynomial g = gcd_forms(mu.f(), mu.q());
    if (!g.is_constant())
        raise(Errc::NotCoprime, "a x_n + b and c x_n + d share the factor " + g.to_string());
    return mu;
}

MobiusElement mobius_identity(const Ring& ring)
{
    const Polynomial one = Polynomial::constant(ring, 1);
    const Polynomial zero(ring);
    return make_mobius(one, zero, zero, one);
}

RationalMap mobius_to_map(const MobiusElement& mu)
{
    const Polynomial q = mu.q();
    std::vector<Polynomial> coords;
    for (std::size_t i = 0; i < mu.dimension(); ++i)
        coords.push_back(q * Polynomial::variable(mu.ring, i));
    coords.push_back(mu.f());
    return make_map(std::move(coords));
}

MobiusElement mobius_compose(const MobiusElement& mu1, const MobiusElement& mu2)
{
    if (mu1.dimension() != mu2.dimension())
        raise(Errc::DimensionMismatch, "Mobius elements over P^" + std::to_string(mu1.dimension()) + " and P^" +
                                           std::to_string(mu2.dimension()));
    Polynomial e[4] = {
        mu1.a * mu2.a + mu1.b * mu2.c,
        mu1.a * mu2.b + mu1.b * mu2.d,
        mu1.c * mu2.a + mu1.d * mu2.c,
        mu1.c * mu2.b + mu1.d * mu2.d,
    };
    std::vector<Polynomial> nonzero;
    for (const auto& p : e)
        if (!p.is_zero())
            nonzero.push_back(p);
    const Polynomial g = gcd_all(nonzero);
    if (!g.is_constant())
        for (auto& p : e)
            if (!p.is_zero())
                p = exact_divide(p, g);
    return make_mobius(e[0], e[1], e[2], e[3]);
}

MobiusElement mobius_inverse(const MobiusElement& mu)
{
    MobiusElement out = mu;
    out.a = mu.d;
    out.b = -mu.b;
    out.c = -mu.c;
    out.d = mu.a;
    return out;
}

bool same_mobius(const MobiusElement& mu1, const MobiusElement& mu2)
{
    if (mu1.dimension() != mu2.dimension())
        return false;
    const Polynomial* x[4] = {&mu1.a, &mu1.b, &mu1.c, &mu1.d};
    const Polynomial* y[4] = {&mu2.a, &mu2.b, &mu2.c, &mu2.d};
    std::optional<Scalar> ratio;
    for (int i = 0; i < 4; ++i) {
        if (x[i]->is_zero() != y[i]->is_zero())
            return false;
        if (x[i]->is_zero())
            continue;
        if (!ratio)
            ratio = y[i]->leading_coefficient() / x[i]->leading_coefficient();
        if (!(x[i]->scaled(*ratio) == *y[i]))
            return false;
    }
    return true;
}

bool is_mobius_identity(const MobiusElement& mu)
{
    return mu.b.is_zero() && mu.c.is_zero() && mu.a == mu.d;
}

} // namespace jonq
