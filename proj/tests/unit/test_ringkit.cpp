#include <doctest.h>

#include <vector>

#include "jonq/error.hpp"
#include "jonq/ringkit/linalg.hpp"
#include "jonq/ringkit/parse.hpp"
#include "jonq/ringkit/random.hpp"

using namespace jonq;

namespace {

const Ring Q4(4, Field::rationals());
const Ring GF4(4, Field::prime(kDefaultPrime));

Polynomial P(const char* text, const Ring& ring = Q4)
{
    return parse_polynomial(text, ring);
}

Errc code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::Internal;
}

} // namespace

TEST_CASE("scalars over Q and GF(p)")
{
    const Field gf = Field::prime(7);
    CHECK(Scalar::from_int(gf, -1).residue() == 6);
    CHECK((Scalar::from_int(gf, 3) * Scalar::from_int(gf, 5)).residue() == 1);
    CHECK(Scalar::from_int(gf, 3).inverse().residue() == 5);
    CHECK(Scalar::from_int(gf, 6).to_string() == "-1");
    CHECK(Scalar::from_rational(gf, mpq_class(1, 2)).residue() == 4);
    CHECK(code_of([&] { Scalar::from_rational(gf, mpq_class(1, 7)); }) == Errc::BadCharacteristic);
    CHECK(code_of([] { Field::prime(9); }) == Errc::InvalidArgument);
    CHECK(code_of([] { Field::prime(2); }) == Errc::InvalidArgument);

    const Field q = Field::rationals();
    const Scalar h = Scalar::from_rational(q, mpq_class(2, 4));
    CHECK(h.to_string() == "1/2");
    CHECK((h + h).is_one());
    CHECK(code_of([&] { (void)(h + Scalar::one(gf)); }) == Errc::FieldMismatch);
    CHECK(Field::parse("GF(32003)").characteristic() == 32003);
    CHECK(Field::parse("gf:32003").characteristic() == 32003);
    CHECK(Field::parse("Q").is_rational());
}

TEST_CASE("term orders")
{
    const Monomial a{2, 0, 0};
    const Monomial b{0, 1, 1};
    CHECK(TermOrder::grevlex().compare(a, b, 3) > 0);
    CHECK(TermOrder::lex().compare(a, b, 3) > 0);
    // x0*x2 vs x1^2: grevlex prefers the one with smaller last exponent
    CHECK(TermOrder::grevlex().compare(Monomial{1, 0, 1}, Monomial{0, 2, 0}, 3) < 0);
    CHECK(TermOrder::lex().compare(Monomial{1, 0, 1}, Monomial{0, 2, 0}, 3) > 0);
    // elimination of x0 beats any degree in the rest
    CHECK(TermOrder::elimination(1).compare(Monomial{1, 0, 0}, Monomial{0, 5, 5}, 3) > 0);
    CHECK(TermOrder::parse("elim(2)") == TermOrder::elimination(2));
}

TEST_CASE("parse_poly examples")
{
    const Polynomial t = P("x0*x1*x2");
    CHECK(t.size() == 1);
    CHECK(t.leading_monomial() == Monomial{1, 1, 1, 0});
    CHECK(P("0").is_zero());

    const Polynomial h = P("x2^2 - 2/3*x1*x3");
    CHECK(h.size() == 2);
    CHECK(h.coefficient(Monomial{0, 1, 0, 1}).to_rational() == mpq_class(-2, 3));
    CHECK(h.to_string() == "x2^2 - 2/3*x1*x3");

    CHECK(P("-x0 + 3 * x1").to_string() == "-x0 + 3*x1");
    CHECK(P("x0*x0").to_string() == "x0^2");
    CHECK(P("x1 + x0 - x0").to_string() == "x1");
    CHECK(P("5").to_string() == "5");
    CHECK(P("2*x1^3*x3 - x0^4 + 7/2").to_string() == "-x0^4 + 2*x1^3*x3 + 7/2");
}

TEST_CASE("parse errors carry positions")
{
    try {
        P("x0 + * x1");
        FAIL("no error");
    } catch (const SyntaxError& e) {
        CHECK(e.column() == 6);
        CHECK(e.expected() == "variable 'x<index>'");
    }
    try {
        P("x0 x1");
        FAIL("no error");
    } catch (const SyntaxError& e) {
        CHECK(e.column() == 4);
    }
    CHECK(code_of([] { P("x4"); }) == Errc::UnknownVariable);
    CHECK(code_of([] { P("x0/3"); }) == Errc::SyntaxError);
    CHECK(code_of([] { P("1/0*x0"); }) == Errc::SyntaxError);
    CHECK(code_of([] { P(""); }) == Errc::SyntaxError);
    CHECK(code_of([] { parse_polynomial("1/32003*x0", GF4); }) == Errc::BadCharacteristic);
}

TEST_CASE("arith examples")
{
    CHECK((P("x0") + P("-x0")).is_zero());
    CHECK(P("x0+x1") * P("x0-x1") == P("x0^2-x1^2"));
    CHECK(P("x0+x1").pow(2) == P("x0^2+2*x0*x1+x1^2"));
    CHECK(P("x0+x1").pow(0) == P("1"));
    const Polynomial a = P("x0^2 + x1*x3");
    const Polynomial b = P("x2^3 - x0");
    CHECK((a * b).total_degree() == a.total_degree() + b.total_degree());
    CHECK(code_of([&] { (void)(a + P("x0", GF4)); }) == Errc::RingMismatch);
    const Ring lex = Q4.with_order(TermOrder::lex());
    CHECK(code_of([&] { (void)(a * a.in_ring(lex)); }) == Errc::RingMismatch);
    CHECK(a.in_ring(lex) == a);
}

TEST_CASE("substitute examples")
{
    const Ring r2(2, Field::rationals());
    const Polynomial x0x1 = parse_polynomial("x0*x1", r2);
    const std::vector<Polynomial> swap{Polynomial::variable(r2, 1), Polynomial::variable(r2, 0)};
    CHECK(substitute(x0x1, swap) == x0x1);

    const std::vector<Polynomial> im{P("x0"), P("x1"), P("x2"), P("x1*x3+x2^2")};
    CHECK(substitute(P("x3^2"), im) == P("x1*x3+x2^2").pow(2));

    const std::vector<Polynomial> t3{P("x0*x1*x2"), P("x0^2*x2"), P("x0^2*x1"), P("x1*x2*x3")};
    const Polynomial first = substitute(t3[0], t3);
    CHECK(first == P("x0^5*x1^2*x2^2"));
    CHECK(graded_degree(first) == 9);

    CHECK(code_of([&] { substitute(P("x0"), std::vector<Polynomial>{P("x0")}); }) == Errc::LengthMismatch);
}

TEST_CASE("jacobian_det examples")
{
    const Ring r2(2, Field::rationals());
    const Ring r3(3, Field::rationals());
    const std::vector<Polynomial> id{Polynomial::variable(r2, 0), Polynomial::variable(r2, 1)};
    CHECK(jacobian_det(id) == Polynomial::constant(r2, 1));

    // rows (0, x2, x1), (x2, 0, x0), (x1, x0, 0): cofactor expansion along the
    // first row gives -x2*(0 - x0*x1) + x1*(x2*x0 - 0) = 2*x0*x1*x2
    const std::vector<Polynomial> s{parse_polynomial("x1*x2", r3), parse_polynomial("x0*x2", r3),
                                    parse_polynomial("x0*x1", r3)};
    CHECK(jacobian_det(s) == parse_polynomial("2*x0*x1*x2", r3));

    const std::vector<Polynomial> sq{parse_polynomial("x0^2", r2), parse_polynomial("x1^2", r2)};
    CHECK(jacobian_det(sq) == parse_polynomial("4*x0*x1", r2));

    const std::vector<Polynomial> bad{parse_polynomial("x0", r3)};
    CHECK(code_of([&] { jacobian_det(bad); }) == Errc::NotSquare);
}

TEST_CASE("graded_degree examples")
{
    CHECK(graded_degree(P("x0*x1*x2")) == 3);
    CHECK(graded_degree(P("x0*x3+x1*x2")) == 2);
    try {
        graded_degree(P("x0+x1*x2"));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotHomogeneous);
        REQUIRE(e.details().size() == 2);
        CHECK(e.details()[0].second == 2);
        CHECK(e.details()[1].second == 1);
    }
    CHECK(code_of([] { graded_degree(P("0")); }) == Errc::ZeroPolynomial);
}

TEST_CASE("exact division and determinants")
{
    const Polynomial f = P("x0^2 - x1^2");
    CHECK(exact_divide(f, P("x0 - x1")) == P("x0 + x1"));
    CHECK_FALSE(try_divide(f, P("x0 + x2")).has_value());
    CHECK(code_of([&] { exact_divide(P("x0"), P("x1")); }) == Errc::NotDivisible);

    PolyMatrix m{{P("x0"), P("x1")}, {P("x2"), P("x3")}};
    CHECK(determinant(m) == P("x0*x3 - x1*x2"));
    PolyMatrix z{{P("0"), P("x1")}, {P("x2"), P("0")}};
    CHECK(determinant(z) == P("-x1*x2"));
    PolyMatrix sing{{P("x0"), P("x1")}, {P("x0*x2"), P("x1*x2")}};
    CHECK(determinant(sing).is_zero());
    CHECK(rank_over_fraction_field(sing) == 1);
    PolyMatrix wide{{P("x0"), P("x1"), P("x2")}, {P("x1"), P("x2"), P("x3")}};
    CHECK(rank_over_fraction_field(wide) == 2);
}

TEST_CASE("scalar linear algebra")
{
    const Field q = Field::rationals();
    auto s = [&](long v) { return Scalar::from_int(q, v); };
    ScalarMatrix m{{s(1), s(2), s(3)}, {s(2), s(4), s(6)}};
    CHECK(rank(m, q, 3) == 1);
    const auto ns = nullspace(m, q, 3);
    CHECK(ns.size() == 2);
    for (const auto& v : ns)
        CHECK((s(1) * v[0] + s(2) * v[1] + s(3) * v[2]).is_zero());
    ScalarMatrix a{{s(2), s(1)}, {s(1), s(1)}};
    const auto inv = inverse(a, q);
    REQUIRE(inv.has_value());
    CHECK(multiply(a, *inv, q) == identity_matrix(2, q));
    CHECK_FALSE(inverse(m.size() == 2 ? ScalarMatrix{{s(1), s(2)}, {s(2), s(4)}} : m, q).has_value());
}

TEST_CASE("ring axioms on seeded triples")
{
    for (const Ring& ring : {Q4, GF4}) {
        Rng rng(11);
        for (int trial = 0; trial < 60; ++trial) {
            const Polynomial a = rng.form(ring, rng.uniform(0, 3), 4) + rng.form(ring, rng.uniform(0, 2), 4);
            const Polynomial b = rng.form(ring, rng.uniform(0, 3), 4);
            const Polynomial c = rng.form(ring, rng.uniform(0, 3), 4) - rng.form(ring, 1, 4);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
            CHECK((a + b) - b == a);
        }
    }
}

TEST_CASE("print/parse round trip, 1000 polynomials per field")
{
    for (const Ring& ring : {Q4, GF4}) {
        Rng rng(2024);
        for (int trial = 0; trial < 1000; ++trial) {
            Polynomial p(ring);
            const int parts = static_cast<int>(rng.uniform(0, 3));
            for (int k = 0; k < parts; ++k)
                p += rng.form(ring, rng.uniform(0, 4), 4, 40, 50);
            if (ring.field().is_rational() && trial % 3 == 0 && !p.is_zero())
                p = p.scaled(Scalar::from_rational(ring.field(), mpq_class(trial % 7 + 1, trial % 5 + 2)));
            const std::string text = p.to_string();
            const Polynomial back = parse_polynomial(text, ring);
            CHECK(back == p);
            CHECK(back.to_string() == text);
        }
    }
}

TEST_CASE("integer inputs agree after reduction mod p")
{
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial a = rng.form(Q4, 2, 4, 60, 40000);
        const Polynomial b = rng.form(Q4, 3, 4, 60, 40000);
        const Polynomial over_q = (a * b - a.pow(2) * P("x3")).in_ring(Q4);
        const auto reduce = [](const Polynomial& p) {
            std::vector<Term> terms;
            for (const auto& t : p.terms())
                terms.push_back({t.monomial, Scalar::from_rational(GF4.field(), t.coefficient.to_rational())});
            return Polynomial::from_terms(GF4, std::move(terms));
        };
        const Polynomial over_p = reduce(a) * reduce(b) - reduce(a).pow(2) * P("x3", GF4);
        CHECK(reduce(over_q) == over_p);
    }
}

TEST_CASE("substitute is a ring homomorphism")
{
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Polynomial> im;
        const unsigned d = static_cast<unsigned>(rng.uniform(1, 2));
        for (int i = 0; i < 4; ++i)
            im.push_back(rng.form(GF4, d, 4));
        const Polynomial a = rng.form(GF4, 2, 4);
        const Polynomial b = rng.form(GF4, 2, 4);
        CHECK(substitute(a * b, im) == substitute(a, im) * substitute(b, im));
        CHECK(substitute(a + b, im) == substitute(a, im) + substitute(b, im));
        const Polynomial s = substitute(a, im);
        if (!s.is_zero())
            CHECK(graded_degree(s) == 2 * static_cast<int>(d));
    }
}
