#include "jonq/rmap/rational_map.hpp"

#include <algorithm>
#include <gmpxx.h>

#include "jonq/error.hpp"
#include "jonq/ringkit/linalg.hpp"

namespace jonq {

RationalMap RationalMap::raw(std::vector<Polynomial> coords)
{
    if (coords.size() < 2)
        raise(Errc::LengthMismatch, "a map of P^n needs at least two coordinates");
    const Ring ring = coords[0].ring();
    if (ring.nvars() != coords.size())
        raise(Errc::LengthMismatch,
              std::to_string(coords.size()) + " coordinates in a ring with " + std::to_string(ring.nvars()) + " variables",
              {{"coordinates", static_cast<std::int64_t>(coords.size())}, {"variables", static_cast<std::int64_t>(ring.nvars())}});
    int degree = -1;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        require_same_ring(coords[0], coords[i]);
        if (coords[i].is_zero())
            continue;
        const int d = graded_degree(coords[i]);
        if (degree >= 0 && d != degree)
            raise(Errc::DegreeMismatch,
                  "coordinate " + std::to_string(i) + " has degree " + std::to_string(d) + ", expected " + std::to_string(degree),
                  {{"coordinate", static_cast<std::int64_t>(i)}, {"degree", d}, {"expected", degree}});
        degree = d;
    }
    if (degree < 0)
        raise(Errc::AllZero, "all coordinates are zero");
    RationalMap F;
    F.ring_ = ring;
    F.coords_ = std::move(coords);
    F.degree_ = degree;
    return F;
}

RationalMap RationalMap::identity(const Ring& ring)
{
    std::vector<Polynomial> xs;
    for (std::size_t i = 0; i < ring.nvars(); ++i)
        xs.push_back(Polynomial::variable(ring, i));
    return make_map(std::move(xs));
}

std::string RationalMap::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i)
        out += (i ? " : " : "") + coords_[i].to_string();
    return out + ")";
}

bool operator==(const RationalMap& a, const RationalMap& b)
{
    return a.coords_ == b.coords_;
}

RationalMap make_map(std::vector<Polynomial> forms)
{
    RationalMap F = RationalMap::raw(std::move(forms));
    std::vector<const Polynomial*> order;
    for (const auto& c : F.coords_)
        if (!c.is_zero())
            order.push_back(&c);
    std::stable_sort(order.begin(), order.end(), [](const Polynomial* a, const Polynomial* b) { return a->size() < b->size(); });
    std::vector<Polynomial> nonzero;
    for (const auto* p : order)
        nonzero.push_back(*p);
    const Polynomial g = gcd_all(nonzero);

    Scalar scale;
    bool have_scale = false;
    for (auto& c : F.coords_) {
        if (c.is_zero())
            continue;
        if (!g.is_constant())
            c = exact_divide(c, g);
        if (!have_scale) {
            scale = c.leading_coefficient().inverse();
            have_scale = true;
        }
        c = c.scaled(scale);
    }
    F.degree_ -= graded_degree(g);
    F.normalized_ = true;
    return F;
}

namespace {

void require_same_space(const RationalMap& F, const RationalMap& G)
{
    if (F.dimension() != G.dimension())
        raise(Errc::DimensionMismatch,
              "maps of P^" + std::to_string(F.dimension()) + " and P^" + std::to_string(G.dimension()),
              {{"left", static_cast<std::int64_t>(F.dimension())}, {"right", static_cast<std::int64_t>(G.dimension())}});
    if (!(F.ring().field() == G.ring().field()))
        raise(Errc::FieldMismatch, "maps over different fields");
}

} // namespace

RationalMap compose_raw(const RationalMap& F, const RationalMap& G)
{
    require_same_space(F, G);
    std::vector<Polynomial> out;
    out.reserve(F.coords().size());
    for (const auto& c : F.coords())
        out.push_back(substitute(c, G.coords()));
    return RationalMap::raw(std::move(out));
}

RationalMap compose(const RationalMap& F, const RationalMap& G)
{
    return make_map(compose_raw(F, G).coords());
}

bool same_map(const RationalMap& F, const RationalMap& G)
{
    if (F.dimension() != G.dimension() || !(F.ring().field() == G.ring().field()))
        return false;
    std::size_t pivot = 0;
    while (pivot < F.coords().size() && F[pivot].is_zero())
        ++pivot;
    if (G[pivot].is_zero())
        return false;
    const Scalar ratio = G[pivot].leading_coefficient() / F[pivot].leading_coefficient();
    for (std::size_t i = 0; i < F.coords().size(); ++i)
        if (!(F[i].scaled(ratio) == G[i]))
            return false;
    return true;
}

bool is_identity(const RationalMap& F)
{
    return F.degree() == 1 && same_map(F, RationalMap::identity(F.ring()));
}

bool check_inverse(const RationalMap& F, const RationalMap& G)
{
    return is_identity(compose(F, G)) && is_identity(compose(G, F));
}

Ideal base_ideal(const RationalMap& F)
{
    return Ideal(F.ring(), F.coords());
}

std::vector<std::vector<Scalar>> linear_matrix(const RationalMap& F)
{
    if (F.degree() != 1)
        raise(Errc::DegreeMismatch, "map of degree " + std::to_string(F.degree()) + " is not linear",
              {{"degree", F.degree()}});
    const std::size_t n = F.coords().size();
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar::zero(F.ring().field())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = F[i].coefficient(Monomial::variable(j));
    return m;
}

RationalMap linear_inverse(const RationalMap& F)
{
    const auto inv = inverse(linear_matrix(F), F.ring().field());
    if (!inv)
        raise(Errc::SingularDeterminant, "the linear map " + F.to_string() + " is singular");
    std::vector<Polynomial> coords;
    for (const auto& row : *inv) {
        Polynomial c(F.ring());
        for (std::size_t j = 0; j < row.size(); ++j)
            c += Polynomial::monomial(F.ring(), Monomial::variable(j), row[j]);
        coords.push_back(c);
    }
    return make_map(std::move(coords));
}

GenusBound ch_bound(const GenusBoundQuery& query)
{
    const auto [l, r, m] = query;
    if (l < 1)
        raise(Errc::BadRange, "degree must be at least 1", {{"l", l}});
    if (m < 1 || m > r - 1)
        raise(Errc::BadRange, "need 1 <= m <= r - 1", {{"r", r}, {"m", m}});
    const long s = (l - 1) / (r - m);
    const long e = (l - 1) % (r - m);
    auto binom = [](long top, long bottom) {
        mpz_class out;
        if (bottom <= top)
            mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
        return out;
    };
    const mpz_class bound = binom(s, m + 1) * (r - m) + binom(s, m) * e;
    if (!bound.fits_slong_p())
        raise(Errc::BadRange, "bound does not fit in a machine integer");
    return {s, e, bound.get_si()};
}

} // namespace jonq
