#include <doctest.h>

#include <algorithm>

#include "jonq/error.hpp"
#include "jonq/groebner/ideal.hpp"
#include "jonq/groebner/limits.hpp"
#include "jonq/ringkit/parse.hpp"
#include "jonq/ringkit/random.hpp"

using namespace jonq;

namespace {

const Ring Q4(4, Field::rationals());
const Ring GF3(3, Field::prime(kDefaultPrime));
const Ring GF4(4, Field::prime(kDefaultPrime));

Polynomial P(const char* text, const Ring& ring = Q4)
{
    return parse_polynomial(text, ring);
}

Ideal I(std::initializer_list<const char*> gens, const Ring& ring = Q4)
{
    std::vector<Polynomial> v;
    for (const char* g : gens)
        v.push_back(P(g, ring));
    return Ideal(ring, v);
}

Ideal noether()
{
    return I({"x0*x3", "x1*x3", "x0*x1 - x0*x2", "x0*x1 - x1^2"});
}

bool has_element(const GroebnerBasis& G, const Polynomial& p)
{
    return std::any_of(G.elements().begin(), G.elements().end(), [&](const Polynomial& g) { return g == p; });
}

// Checks every basis computed inside the test body.
struct Certified {
    LimitScope scope{EngineLimits{kDefaultBudget, true}};
    std::uint64_t before = engine_stats().certificate_failures;
    ~Certified() { CHECK(engine_stats().certificate_failures == before); }
};

} // namespace

TEST_CASE("groebner examples")
{
    Certified cert;
    const GroebnerBasis a = groebner(I({"x0", "x1"}));
    CHECK(a.size() == 2);
    CHECK(has_element(a, P("x0")));
    CHECK(has_element(a, P("x1")));

    // S(f, g) = x1*f - x0*g = -x1^2*x2
    const GroebnerBasis b = groebner(I({"x0^2 - x1*x2", "x0*x1"}));
    CHECK(has_element(b, P("x1^2*x2")));

    CHECK(groebner(Ideal(Q4)).size() == 0);
    CHECK(groebner(I({"x0 + 1", "x0"})).is_unit());

    const GroebnerBasis lex = groebner(I({"x0^2 - x1", "x0*x1 - 1"}), TermOrder::lex());
    CHECK(has_element(lex, parse_polynomial("x1^3 - 1", Q4.with_order(TermOrder::lex()))));
}

TEST_CASE("reduced basis shape")
{
    Certified cert;
    const GroebnerBasis G = groebner(noether());
    for (std::size_t i = 0; i < G.size(); ++i) {
        CHECK(G.elements()[i].leading_coefficient().is_one());
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j)
                continue;
            for (const auto& t : G.elements()[j].terms())
                CHECK_FALSE(G.elements()[i].leading_monomial().divides(t.monomial));
        }
        if (i > 0)
            CHECK(Q4.compare(G.elements()[i - 1].leading_monomial(), G.elements()[i].leading_monomial()) < 0);
    }
    // same ideal from shuffled, rescaled generators gives the identical basis
    const Ideal shuffled = I({"-x1^2 + x0*x1", "2*x1*x3", "x0*x3 + x1*x3", "3*x0*x1 - 3*x0*x2"});
    const GroebnerBasis H = groebner(shuffled);
    REQUIRE(H.size() == G.size());
    for (std::size_t i = 0; i < G.size(); ++i)
        CHECK(G.elements()[i] == H.elements()[i]);
}

TEST_CASE("normal_form examples")
{
    Certified cert;
    const GroebnerBasis G = groebner(I({"x0", "x1"}));
    CHECK(normal_form(P("x0*x1"), G).is_zero());
    CHECK(normal_form(P("x2^2"), G) == P("x2^2"));
    CHECK(normal_form(P("x0*x2 + x2^2 + 3*x1"), G) == P("x2^2"));
    CHECK(normal_form(P("x1*x3 - x0*x2"), groebner(noether())) == P("-x0*x2"));
    CHECK_THROWS_AS(normal_form(P("x0", GF4), G), Error);
}

TEST_CASE("division identity")
{
    Certified cert;
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k)
            gens.push_back(rng.nonzero_form(GF4, static_cast<unsigned>(rng.uniform(1, 2)), 4));
        const GroebnerBasis G = groebner(Ideal(GF4, gens));
        Polynomial p = rng.form(GF4, 3, 4);
        if (trial % 2 == 0)
            p += gens[0] * rng.form(GF4, 1, 4);
        const Division d = divide(p, G.elements());
        Polynomial rebuilt = d.remainder;
        for (std::size_t i = 0; i < G.size(); ++i)
            rebuilt += d.quotients[i] * G.elements()[i];
        CHECK(rebuilt == p);
        CHECK(d.remainder == normal_form(p, G));
        CHECK(contains(G, p) == d.remainder.is_zero());
        for (const auto& t : d.remainder.terms())
            for (const auto& g : G.elements())
                CHECK_FALSE(g.leading_monomial().divides(t.monomial));
    }
}

TEST_CASE("intersect examples")
{
    Certified cert;
    CHECK(ideal_equal(intersect(I({"x0"}), I({"x1"})), I({"x0*x1"})));
    CHECK(ideal_equal(intersect(I({"x0"}), I({"x0"})), I({"x0"})));
    const Ideal m = intersect(I({"x0^2*x1"}), I({"x0*x1^2"}));
    REQUIRE(m.size() == 1);
    CHECK(m[0] == P("x0^2*x1^2"));
    CHECK(ideal_equal(intersect(I({"x0", "x1"}), I({"x2", "x3"})),
                      I({"x0*x2", "x0*x3", "x1*x2", "x1*x3"})));
    CHECK(intersect(I({"x0"}), Ideal(Q4)).is_zero());
}

TEST_CASE("colon examples")
{
    Certified cert;
    CHECK(ideal_equal(colon(I({"x0*x1"}), I({"x0"})), I({"x1"})));
    const Ideal c = colon(noether(), I({"x0", "x1", "x3"}));
    CHECK(initial_degree(c) == 2);
    CHECK_FALSE(ideal_equal(c, noether()));
    CHECK(ideal_equal(colon(noether(), I({"1"})), noether()));
    CHECK(ideal_equal(colon(I({"x0", "x1"}), I({"x0"})), I({"1"})));
}

TEST_CASE("saturate examples")
{
    Certified cert;
    // (x0^2, x0*x1) = x0*(x0, x1): one colon gives (x0, x1) cap-free part x0
    CHECK(ideal_equal(saturate(I({"x0^2", "x0*x1"}, GF3), I({"x0", "x1"}, GF3)), I({"x0"}, GF3)));
    CHECK(ideal_equal(saturate(noether(), I({"x0", "x1", "x2", "x3"})), noether()));
    const Ideal k = I({"x0^2*x2", "x1*x3 + x2^2"});
    CHECK(ideal_equal(saturate(k, I({"1"})), k));
}

TEST_CASE("gcd examples")
{
    Certified cert;
    CHECK(gcd_forms(P("x0^2*x1"), P("x0*x1^2")) == P("x0*x1"));
    // T3 composed with itself, coordinate by coordinate
    const std::vector<Polynomial> composed{P("x0^5*x1^2*x2^2"), P("x0^4*x1^3*x2^2"), P("x0^4*x1^2*x2^3"),
                                           P("x0^4*x1^2*x2^2*x3")};
    CHECK(gcd_all(composed) == P("x0^4*x1^2*x2^2"));
    CHECK(gcd_forms(P("x0 + x1"), P("x0 - x1")) == P("1"));
    CHECK(gcd_forms(P("x0*x2 + x1*x2"), P("x0^2 - x1^2")) == P("x0 + x1"));
    const Polynomial c = P("x0*x3 + x1^2 - x2^2");
    CHECK(gcd_forms(c * P("x0 - 2*x3"), c * P("x1^2 + x2*x3")) == c);
    CHECK(gcd_forms(P("-2*x1"), P("4*x1")) == P("x1"));
    CHECK_THROWS_AS(gcd_all({P("0")}), Error);
}

TEST_CASE("gcd times lcm equals the product, 200 seeded pairs")
{
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial common = rng.nonzero_form(GF3, static_cast<unsigned>(rng.uniform(0, 2)), 3);
        const Polynomial f = common * rng.nonzero_form(GF3, static_cast<unsigned>(rng.uniform(1, 2)), 3);
        const Polynomial g = common * rng.nonzero_form(GF3, static_cast<unsigned>(rng.uniform(1, 2)), 3);
        const Polynomial d = gcd_forms(f, g);
        const Ideal l = intersect(Ideal(GF3, {f}), Ideal(GF3, {g}));
        REQUIRE(l.size() == 1);
        CHECK((d * l[0]).monic() == (f * g).monic());
        CHECK(try_divide(d, common).has_value());
        CHECK(try_divide(f, d).has_value());
        CHECK(try_divide(g, d).has_value());
    }
}

TEST_CASE("codim examples")
{
    Certified cert;
    CHECK(codim(I({"x0", "x1", "x2"})) == 3);
    CHECK(codim(noether()) == 2);
    CHECK(codim(Ideal(Q4)) == 0);
    CHECK(codim(I({"x0*x1"})) == 1);
    CHECK(codim(I({"x0^2", "x1^3", "x2*x3"})) == 3);
    try {
        codim(I({"x0", "x0 + 1"}));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnitIdeal);
    }
}

TEST_CASE("saturation is idempotent")
{
    Rng rng(8);
    const Ideal m = I({"x0", "x1", "x2"}, GF3);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k)
            gens.push_back(rng.nonzero_form(GF3, 2, 3) * Polynomial::variable(GF3, static_cast<std::size_t>(k)));
        const Ideal s = saturate(Ideal(GF3, gens), m);
        CHECK(ideal_equal(saturate(s, m), s));
    }
}

TEST_CASE("colon agrees with brute force on monomial ideals")
{
    Rng rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Polynomial> ig, jg;
        for (int k = 0; k < 3; ++k) {
            const auto ms = monomials_of_degree(static_cast<unsigned>(rng.uniform(1, 2)), 3);
            ig.push_back(Polynomial::monomial(GF3, ms[static_cast<std::size_t>(rng.uniform(0, long(ms.size()) - 1))]));
        }
        for (int k = 0; k < 2; ++k) {
            const auto ms = monomials_of_degree(static_cast<unsigned>(rng.uniform(1, 2)), 3);
            jg.push_back(Polynomial::monomial(GF3, ms[static_cast<std::size_t>(rng.uniform(0, long(ms.size()) - 1))]));
        }
        const Ideal A(GF3, ig), B(GF3, jg);
        const GroebnerBasis GA = groebner(A);
        std::vector<Polynomial> brute;
        for (unsigned d = 0; d <= 4; ++d) {
            for (const auto& m : monomials_of_degree(d, 3)) {
                const Polynomial pm = Polynomial::monomial(GF3, m);
                if (std::all_of(jg.begin(), jg.end(), [&](const Polynomial& j) { return contains(GA, pm * j); }))
                    brute.push_back(pm);
            }
        }
        CHECK(ideal_equal(colon(A, B), Ideal(GF3, brute)));
    }
}

TEST_CASE("budget is enforced")
{
    LimitScope scope(EngineLimits{2, false});
    try {
        groebner(noether());
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BudgetExceeded);
    }
}
