#include "jonq/groebner/ideal.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "jonq/error.hpp"
#include "jonq/groebner/module.hpp"

namespace jonq {

namespace {

void require_compatible(const Ring& a, const Ring& b)
{
    if (a.nvars() != b.nvars() || !(a.field() == b.field()))
        raise(Errc::RingMismatch, "rings " + a.to_string() + " and " + b.to_string() + " are not compatible");
}

// x_i -> x_{i+offset} into a ring with more variables
Polynomial shift_up(const Polynomial& p, const Ring& target, std::size_t offset)
{
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m;
        for (std::size_t i = 0; i < p.ring().nvars(); ++i)
            m.set(i + offset, t.monomial[i]);
        terms.push_back({m, t.coefficient});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

Polynomial shift_down(const Polynomial& p, const Ring& target, std::size_t offset)
{
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m;
        for (std::size_t i = 0; i < target.nvars(); ++i)
            m.set(i, t.monomial[i + offset]);
        terms.push_back({m, t.coefficient});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

Ideal unit_ideal(const Ring& ring)
{
    return Ideal(ring, {Polynomial::constant(ring, 1)});
}

bool has_unit(const Ideal& I)
{
    return std::any_of(I.generators().begin(), I.generators().end(), [](const Polynomial& g) { return g.is_constant(); });
}

} // namespace

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators) : ring_(ring)
{
    for (auto& g : generators) {
        if (g.is_zero())
            continue;
        require_compatible(g.ring(), ring_);
        gens_.push_back(g.in_ring(ring_));
    }
}

bool Ideal::is_homogeneous() const
{
    return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

std::string Ideal::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i)
        out += (i ? ", " : "") + gens_[i].to_string();
    return out + ")";
}

GroebnerBasis groebner(const Ideal& I, TermOrder order)
{
    const Ring ring = I.ring().with_order(order);
    const FreeModule m(ring, 1);
    std::vector<ModVec> gens;
    for (const auto& g : I.generators())
        gens.push_back(to_modvec(g.in_ring(ring)));
    std::vector<Polynomial> elems;
    for (const auto& v : module_groebner(std::move(gens), m))
        elems.push_back(component_of(v, 0, m));
    return GroebnerBasis(ring, std::move(elems));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G)
{
    require_compatible(p.ring(), G.ring());
    const FreeModule m(G.ring(), 1);
    std::vector<ModVec> basis;
    basis.reserve(G.size());
    for (const auto& g : G.elements())
        basis.push_back(to_modvec(g));
    return component_of(reduce(to_modvec(p.in_ring(G.ring())), basis, m), 0, m).in_ring(p.ring());
}

bool contains(const GroebnerBasis& G, const Polynomial& p)
{
    return normal_form(p, G).is_zero();
}

Division divide(const Polynomial& p, const std::vector<Polynomial>& divisors)
{
    const Ring& ring = p.ring();
    Division out{std::vector<Polynomial>(divisors.size(), Polynomial(ring)), Polynomial(ring)};
    std::vector<Polynomial> divs;
    for (const auto& d : divisors) {
        require_compatible(d.ring(), ring);
        divs.push_back(d.in_ring(ring));
    }
    std::vector<Term> rem;
    Polynomial r = p;
    while (!r.is_zero()) {
        const Term lead = r.leading_term();
        bool divided = false;
        for (std::size_t i = 0; i < divs.size(); ++i) {
            if (divs[i].is_zero() || !divs[i].leading_monomial().divides(lead.monomial))
                continue;
            const Monomial m = lead.monomial / divs[i].leading_monomial();
            const Scalar c = lead.coefficient / divs[i].leading_coefficient();
            out.quotients[i] += Polynomial::monomial(ring, m, c);
            r -= divs[i].times_term(m, c);
            divided = true;
            break;
        }
        if (!divided) {
            rem.push_back(lead);
            r -= Polynomial::monomial(ring, lead.monomial, lead.coefficient);
        }
    }
    out.remainder = Polynomial::from_sorted_terms(ring, std::move(rem));
    return out;
}

bool is_subset(const Ideal& I, const Ideal& J)
{
    require_compatible(I.ring(), J.ring());
    if (I.is_zero())
        return true;
    const GroebnerBasis G = groebner(J);
    return std::all_of(I.generators().begin(), I.generators().end(),
                       [&](const Polynomial& g) { return contains(G, g); });
}

bool ideal_equal(const Ideal& I, const Ideal& J)
{
    return is_subset(I, J) && is_subset(J, I);
}

Ideal intersect(const Ideal& I, const Ideal& J)
{
    require_compatible(I.ring(), J.ring());
    const Ring& ring = I.ring();
    if (I.is_zero() || J.is_zero())
        return Ideal(ring);
    if (has_unit(I))
        return J;
    if (has_unit(J))
        return I;

    const Ring big(ring.nvars() + 1, ring.field(), TermOrder::elimination(1));
    const Polynomial t = Polynomial::variable(big, 0);
    const Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators())
        gens.push_back(t * shift_up(f, big, 1));
    for (const auto& g : J.generators())
        gens.push_back(one_minus_t * shift_up(g, big, 1));

    const GroebnerBasis G = groebner(Ideal(big, std::move(gens)), big.order());
    std::vector<Polynomial> out;
    for (const auto& g : G.elements())
        if (g.leading_monomial()[0] == 0)
            out.push_back(shift_down(g, ring, 1));
    return minimalize(Ideal(ring, std::move(out)));
}

Ideal colon(const Ideal& I, const Ideal& J)
{
    require_compatible(I.ring(), J.ring());
    const Ring& ring = I.ring();
    if (J.is_zero())
        return unit_ideal(ring);
    if (I.is_zero())
        return Ideal(ring);

    std::optional<Ideal> acc;
    for (const auto& g : J.generators()) {
        Ideal part = I;
        if (!g.is_constant()) {
            std::vector<Polynomial> quotients;
            const Ideal meet = intersect(I, Ideal(ring, {g}));
            for (const auto& h : meet.generators())
                quotients.push_back(exact_divide(h, g));
            part = Ideal(ring, std::move(quotients));
        }
        acc = acc ? intersect(*acc, part) : part;
    }
    return minimalize(*acc);
}

Ideal saturate(const Ideal& I, const Ideal& J)
{
    Ideal current = I;
    for (;;) {
        Ideal next = colon(current, J);
        if (is_subset(next, current))
            return next;
        current = std::move(next);
    }
}

Polynomial gcd_forms(const Polynomial& f, const Polynomial& g)
{
    require_same_ring(f, g);
    if (f.is_zero() || g.is_zero())
        raise(Errc::ZeroPolynomial, "gcd of a zero polynomial");
    const Ring& ring = f.ring();
    const Monomial mf = f.monomial_content();
    const Monomial mg = g.monomial_content();
    const Polynomial fp = f.divided_by_monomial(mf);
    const Polynomial gp = g.divided_by_monomial(mg);
    const Polynomial mono = Polynomial::monomial(ring, Monomial::gcd(mf, mg));

    Polynomial core = Polynomial::constant(ring, 1);
    if (fp.is_constant() || gp.is_constant()) {
        // nothing beyond the monomial part
    } else if (try_divide(fp, gp)) {
        core = gp;
    } else if (try_divide(gp, fp)) {
        core = fp;
    } else {
        const Ideal l = intersect(Ideal(ring, {fp}), Ideal(ring, {gp}));
        if (l.size() != 1)
            raise(Errc::Internal, "intersection of principal ideals is not principal");
        core = exact_divide(fp * gp, l[0]);
    }
    return (mono * core).monic();
}

Polynomial lcm_forms(const Polynomial& f, const Polynomial& g)
{
    return exact_divide(f * g, gcd_forms(f, g)).monic();
}

Polynomial gcd_all(const std::vector<Polynomial>& polys)
{
    std::optional<Polynomial> acc;
    for (const auto& p : polys) {
        if (p.is_zero())
            continue;
        acc = acc ? gcd_forms(*acc, p) : p.monic();
        if (acc->is_constant())
            return *acc;
    }
    if (!acc)
        raise(Errc::AllZero, "gcd of zero polynomials only");
    return *acc;
}

int codim(const Ideal& I)
{
    if (I.is_zero())
        return 0;
    const GroebnerBasis G = groebner(I);
    if (G.is_unit())
        raise(Errc::UnitIdeal, "the unit ideal has no codimension");
    const std::size_t n = I.ring().nvars();
    std::vector<std::uint32_t> supports;
    for (const auto& g : G.elements()) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (g.leading_monomial()[i])
                s |= 1u << i;
        supports.push_back(s);
    }
    int dim = 0;
    for (std::uint32_t set = 0; set < (1u << n); ++set) {
        const int size = std::popcount(set);
        if (size <= dim)
            continue;
        const bool independent =
            std::none_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & ~set) == 0; });
        if (independent)
            dim = size;
    }
    return static_cast<int>(n) - dim;
}

int initial_degree(const Ideal& I)
{
    int d = -1;
    for (const auto& g : I.generators())
        if (d < 0 || g.min_degree() < d)
            d = g.min_degree();
    return d;
}

Ideal minimalize(const Ideal& I)
{
    std::vector<Polynomial> gens = I.generators();
    std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() < b.total_degree();
        return a.ring().compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<Polynomial> kept;
    std::optional<GroebnerBasis> G;
    for (const auto& g : gens) {
        if (g.is_constant())
            return unit_ideal(I.ring());
        if (!kept.empty()) {
            if (!G)
                G = groebner(Ideal(I.ring(), kept));
            if (contains(*G, g))
                continue;
        }
        kept.push_back(g.monic());
        G.reset();
    }
    return Ideal(I.ring(), std::move(kept));
}

} // namespace jonq
