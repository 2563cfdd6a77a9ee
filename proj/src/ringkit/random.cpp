#include "jonq/ringkit/random.hpp"

#include <algorithm>

namespace jonq {

long Rng::uniform(long lo, long hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
}

Scalar Rng::scalar(Field field, long range, bool nonzero)
{
    for (;;) {
        const long v = uniform(-range, range);
        if (v != 0 || !nonzero)
            return Scalar::from_int(field, v);
    }
}

Polynomial Rng::form(const Ring& ring, unsigned degree, std::size_t vars, unsigned density, long range)
{
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(degree, vars))
        if (coin(density))
            terms.push_back({m, scalar(ring.field(), range, true)});
    return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial Rng::nonzero_form(const Ring& ring, unsigned degree, std::size_t vars, unsigned density, long range)
{
    for (;;) {
        Polynomial p = form(ring, degree, vars, density, range);
        if (!p.is_zero())
            return p;
    }
}

namespace {

void fill(std::vector<Monomial>& out, Monomial& m, std::size_t var, unsigned left, std::size_t vars)
{
    if (var + 1 == vars) {
        m.set(var, left);
        out.push_back(m);
        m.set(var, 0);
        return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
        m.set(var, e);
        fill(out, m, var + 1, left - e, vars);
    }
    m.set(var, 0);
}

} // namespace

std::vector<Monomial> monomials_of_degree(unsigned degree, std::size_t vars)
{
    std::vector<Monomial> out;
    if (vars == 0) {
        if (degree == 0)
            out.emplace_back();
        return out;
    }
    Monomial m;
    fill(out, m, 0, degree, vars);
    std::sort(out.begin(), out.end(), [vars](const Monomial& a, const Monomial& b) {
        return TermOrder::grevlex().compare(a, b, vars) > 0;
    });
    return out;
}

} // namespace jonq
