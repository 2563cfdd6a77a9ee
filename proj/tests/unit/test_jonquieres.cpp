#include <doctest.h>

#include "jonq/error.hpp"
#include "jonq/jonquieres/structure.hpp"
#include "jonq/ringkit/parse.hpp"
#include "jonq/ringkit/random.hpp"

using namespace jonq;

namespace {

const Ring Q3(3, Field::rationals());
const Ring Q4(4, Field::rationals());
const Ring GF3(3, Field::prime(kDefaultPrime));
const Ring GF4(4, Field::prime(kDefaultPrime));

Polynomial P(const char* text, const Ring& ring = Q4)
{
    return parse_polynomial(text, ring);
}

RationalMap M(std::initializer_list<const char*> coords, const Ring& ring = Q4)
{
    std::vector<Polynomial> v;
    for (const char* c : coords)
        v.push_back(P(c, ring));
    return make_map(v);
}

MobiusElement mobius(const char* a, const char* b, const char* c, const char* d, const Ring& ring = Q4)
{
    return make_mobius(P(a, ring), P(b, ring), P(c, ring), P(d, ring));
}

RationalMap T3()
{
    return M({"x0*x1*x2", "x0^2*x2", "x0^2*x1", "x1*x2*x3"});
}

RationalMap s3()
{
    return M({"x1*x2", "x0*x2", "x0*x1"}, Q3);
}

MobiusElement random_mobius(Rng& rng, const Ring& S, int r)
{
    const std::size_t n = S.nvars() - 1;
    for (;;) {
        auto form = [&](int degree) {
            return degree < 0 ? Polynomial(S) : rng.form(S, static_cast<unsigned>(degree), n, 70);
        };
        const Polynomial c = rng.coin(20) ? Polynomial(S) : form(r - 2);
        try {
            return make_mobius(form(r - 1), form(r), c, form(r - 1));
        } catch (const Error&) {
        }
    }
}

RationalMap random_linear(Rng& rng, const Ring& R)
{
    for (;;) {
        std::vector<Polynomial> coords;
        for (std::size_t i = 0; i < R.nvars(); ++i)
            coords.push_back(rng.form(R, 1, R.nvars(), 80));
        try {
            const RationalMap L = make_map(coords);
            if (L.degree() == 1) {
                linear_inverse(L);
                return L;
            }
        } catch (const Error&) {
        }
    }
}

} // namespace

TEST_CASE("make_mobius")
{
    const MobiusElement plane = mobius("x0", "x1^2", "1", "x1", Q3);
    CHECK(plane.r == 2);
    CHECK(plane.determinant() == P("x0*x1 - x1^2", Q3));
    CHECK(mobius("x0", "x1*x2", "1", "x2").r == 2);

    try {
        mobius("x0", "x0*x1", "1", "x1");
        FAIL("expected SingularDeterminant");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SingularDeterminant);
    }
    try {
        mobius("x0", "x1", "1", "x1");
        FAIL("expected DegeneratePattern");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegeneratePattern);
    }
    // ad - bc vanishes here as well, and that is checked first
    try {
        mobius("x0^2", "x0*x1*x2", "x0", "x1*x2");
        FAIL("expected SingularDeterminant");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SingularDeterminant);
    }
    try {
        mobius("x0^2", "x0*x1*x2", "x0", "x0*x2");
        FAIL("expected NotCoprime");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotCoprime);
    }
    CHECK_THROWS_AS(mobius("0", "x1", "0", "1"), Error);
    CHECK_THROWS_AS(mobius("x3", "x1^2", "1", "x1"), Error);
}

TEST_CASE("mobius_to_map")
{
    const RationalMap F = mobius_to_map(mobius("x0", "x1^2", "1", "x1", Q3));
    CHECK(F == M({"x0*x2 + x0*x1", "x1*x2 + x1^2", "x0*x2 + x1^2"}, Q3));
    CHECK(F.degree() == 2);
    CHECK(is_identity(mobius_to_map(mobius_identity(Q4))));
    CHECK(is_identity(mobius_to_map(mobius("3", "0", "0", "3"))));
}

TEST_CASE("mobius group law")
{
    const MobiusElement mu1 = mobius("x0", "x1^2", "1", "x1", Q3);
    const MobiusElement mu2 = mobius("1", "x0", "0", "1", Q3);
    const MobiusElement prod = mobius_compose(mu1, mu2);
    CHECK(prod.a == P("x0", Q3));
    CHECK(prod.b == P("x0^2 + x1^2", Q3));
    CHECK(prod.c == P("1", Q3));
    CHECK(prod.d == P("x0 + x1", Q3));
    CHECK(same_mobius(mobius_compose(mu1, mobius_identity(Q3)), mu1));
    CHECK(same_mobius(mobius_compose(mobius_identity(Q3), mu1), mu1));

    int trials = 0;
    for (std::uint64_t seed = 1; trials < 20; ++seed, ++trials) {
        Rng rng(seed);
        const Ring& S = seed % 2 ? GF3 : GF4;
        const MobiusElement x = random_mobius(rng, S, static_cast<int>(rng.uniform(1, 3)));
        const MobiusElement y = random_mobius(rng, S, static_cast<int>(rng.uniform(1, 2)));
        const MobiusElement xy = mobius_compose(x, y);
        CHECK(compose(mobius_to_map(x), mobius_to_map(y)) == mobius_to_map(xy));
        CHECK(mobius_to_map(xy).degree() == xy.r);
    }
}

TEST_CASE("mobius inverse")
{
    const MobiusElement t = mobius("1", "x0", "0", "1", Q3);
    const MobiusElement ti = mobius_inverse(t);
    CHECK(ti.b == P("-x0", Q3));
    CHECK(ti.a == P("1", Q3));
    CHECK(ti.d == P("1", Q3));
    CHECK(ti.c.is_zero());

    const MobiusElement mu = mobius("x0", "x1^2", "1", "x1", Q3);
    CHECK(check_inverse(mobius_to_map(mu), mobius_to_map(mobius_inverse(mu))));

    // trace zero: its own inverse in PGL(2)
    const MobiusElement inv = mobius("x0", "x1^2", "1", "-x0", Q3);
    CHECK(same_mobius(mobius_inverse(inv), inv));
    CHECK(is_identity(compose(mobius_to_map(inv), mobius_to_map(inv))));
}

TEST_CASE("mobius element properties")
{
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        Rng rng(seed);
        const Ring& S = seed % 2 ? GF3 : GF4;
        const MobiusElement x = random_mobius(rng, S, static_cast<int>(rng.uniform(1, 3)));
        const MobiusElement y = random_mobius(rng, S, static_cast<int>(rng.uniform(1, 2)));
        const MobiusElement z = random_mobius(rng, S, 2);
        CHECK(same_mobius(mobius_compose(mobius_compose(x, y), z), mobius_compose(x, mobius_compose(y, z))));
        CHECK(is_mobius_identity(mobius_compose(x, mobius_inverse(x))) ==
              is_identity(compose(mobius_to_map(x), mobius_to_map(mobius_inverse(x)))));
        CHECK(check_inverse(mobius_to_map(x), mobius_to_map(mobius_inverse(x))));
        CHECK(mobius_to_map(x).degree() == x.r);
        CHECK(is_identity(mobius_to_map(x)) == is_mobius_identity(x));

        // psi is injective: scalar matrices and only those give the identity
        const Polynomial alpha = Polynomial::constant(S, rng.scalar(S.field(), 9, true));
        CHECK(is_identity(mobius_to_map(make_mobius(alpha, Polynomial(S), Polynomial(S), alpha))));
    }
}

TEST_CASE("sigma lift")
{
    CHECK(sigma_lift(s3()) == T3());
    CHECK(is_identity(sigma_lift(RationalMap::identity(Q3))));
    CHECK(rho_project(sigma_lift(s3())) == s3());

    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Rng rng(seed);
        const RationalMap t = seed % 3 == 0 ? standard_cremona(GF3) : random_linear(rng, GF3);
        const RationalMap u = random_linear(rng, t.ring());
        CHECK(sigma_lift(compose(t, u)) == compose(sigma_lift(t), sigma_lift(u)));
        CHECK(rho_project(sigma_lift(t)) == t);
    }
}

TEST_CASE("detect_jonquieres")
{
    const JonquieresDecomposition d = require_jonquieres(T3());
    CHECK(d.G == s3());
    CHECK(d.q == P("x0"));
    CHECK(d.f == P("x1*x2*x3"));

    const auto power = detect_jonquieres(M({"x0^2", "x1^2", "x2^2", "x3^2"}));
    REQUIRE(std::holds_alternative<NotJonquieres>(power));
    CHECK(std::get<NotJonquieres>(power).failure == JonquieresFailure::FNotMonoid);
    try {
        rho_project(M({"x0^2", "x1^2", "x2^2", "x3^2"}));
        FAIL("expected NotJonquieres");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotJonquieres);
    }

    const MobiusElement mu = mobius("x0", "x1*x2", "1", "x2");
    const JonquieresDecomposition k = require_jonquieres(mobius_to_map(mu));
    CHECK(is_identity(k.G));
    CHECK(k.q == mu.q());
    CHECK(k.f == mu.f());
    CHECK(is_identity(rho_project(mobius_to_map(mu))));

    const auto inner = detect_jonquieres(M({"x0*x3", "x1*x2", "x2^2", "x3^2"}));
    CHECK(std::holds_alternative<NotJonquieres>(inner));
}

TEST_CASE("rho is a homomorphism; kernel is the Mobius image")
{
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Rng rng(seed);
        const RationalMap t1 = random_linear(rng, GF3);
        const RationalMap t2 = random_linear(rng, GF3);
        const RationalMap F1 = compose(sigma_lift(t1), mobius_to_map(random_mobius(rng, GF4, 2)));
        const RationalMap F2 = compose(sigma_lift(t2), mobius_to_map(random_mobius(rng, GF4, 2)));
        CHECK(rho_project(compose(F1, F2)) == compose(t1, t2));

        const MobiusElement mu = random_mobius(rng, GF4, 2);
        CHECK(is_identity(rho_project(mobius_to_map(mu))));
        // a map with identity rho splits with identity cremona part
        const SemidirectElement s = split_semidirect(mobius_to_map(mu));
        CHECK(is_identity(s.cremona_part));
        CHECK(same_mobius(s.mobius_part, mu));
        CHECK_FALSE(is_identity(rho_project(F1)));
    }
}

TEST_CASE("split_semidirect")
{
    const SemidirectElement t = split_semidirect(T3());
    CHECK(is_mobius_identity(t.mobius_part));
    CHECK(t.cremona_part == s3());

    const MobiusElement mu = mobius("x0", "x1*x2", "1", "x2");
    const SemidirectElement k = split_semidirect(mobius_to_map(mu));
    CHECK(same_mobius(k.mobius_part, mu));
    CHECK(is_identity(k.cremona_part));

    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Rng rng(seed);
        const MobiusElement m = random_mobius(rng, Q4, 2);
        const RationalMap F = compose(sigma_lift(s3()), mobius_to_map(m));
        const SemidirectElement s = split_semidirect(F);
        CHECK(s.cremona_part == s3());
        CHECK(same_mobius(s.mobius_part, m));
        CHECK(compose(sigma_lift(s.cremona_part), mobius_to_map(s.mobius_part)) == F);
    }

    // linear underlying map fixing the center: the map splits with a linear part
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        Rng rng(seed);
        const RationalMap t = random_linear(rng, GF3);
        const RationalMap F = compose(sigma_lift(t), mobius_to_map(random_mobius(rng, GF4, 2)));
        const SemidirectElement s = split_semidirect(F);
        CHECK(s.cremona_part.degree() == 1);
    }

    CHECK_THROWS_AS(split_semidirect(T3(), RationalMap::identity(Q3)), Error);
}

TEST_CASE("jonquieres_inverse")
{
    CHECK(jonquieres_inverse(T3(), s3()) == T3());
    CHECK(jonquieres_inverse(T3()) == T3());

    const MobiusElement mu = mobius("x0", "x1*x2", "1", "x2");
    CHECK(jonquieres_inverse(mobius_to_map(mu)) == mobius_to_map(mobius("x2", "-x1*x2", "-1", "x0")));

    Rng rng(11);
    const RationalMap t = random_linear(rng, GF3);
    const RationalMap ti = linear_inverse(t);
    CHECK(jonquieres_inverse(sigma_lift(t), ti) == sigma_lift(ti));

    const RationalMap F = compose(sigma_lift(s3()), mobius_to_map(mobius("x0", "x1^2", "1", "x2")));
    CHECK(check_inverse(F, jonquieres_inverse(F)));

    try {
        jonquieres_inverse(T3(), RationalMap::identity(Q3));
        FAIL("expected BadUnderlyingInverse");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadUnderlyingInverse);
    }
    try {
        const RationalMap G = M({"x0^2", "x1^2", "x2^2"}, Q3);
        jonquieres_inverse(qf_map(G, P("x3"), P("x0*x1*x3 + x2^3")));
        FAIL("expected UnderlyingInverseUnavailable");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnderlyingInverseUnavailable);
    }
}

TEST_CASE("qf_map")
{
    CHECK(qf_map(s3(), P("x0"), P("x1*x2*x3")) == T3());
    const RationalMap ak = qf_map(RationalMap::identity(Q3), P("x0"), P("x1*x3 + x2^2"));
    CHECK(ak == M({"x0^2", "x0*x1", "x0*x2", "x1*x3 + x2^2"}));
    try {
        qf_map(RationalMap::identity(Q3), P("x0"), P("x0*x3 + x0*x1"));
        FAIL("expected NotCoprime");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotCoprime);
    }
    try {
        qf_map(RationalMap::identity(Q3), P("x0"), P("x1*x3"));
        qf_map(RationalMap::identity(Q3), P("x0"), P("x3"));
        FAIL("expected DegreeMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegreeMismatch);
    }
}

TEST_CASE("contraction locus")
{
    const ContractionLocus c = contraction_locus(require_jonquieres(mobius_to_map(mobius("x0", "x1*x2", "1", "x2"))));
    CHECK(c.locus == P("x0*x2 - x1*x2") * P("x3 + x2"));
    CHECK(c.degree == 3);
    CHECK(c.bound == 12);
    CHECK(c.bound_ok);

    const ContractionLocus t = contraction_locus(require_jonquieres(T3()));
    CHECK(try_divide(t.locus, P("2*x0*x1*x2")).has_value());
    CHECK(try_divide(t.locus, P("x0")).has_value());
    CHECK(t.bound_ok);

    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Rng rng(seed);
        const MobiusElement m = random_mobius(rng, GF4, static_cast<int>(rng.uniform(2, 3)));
        const RationalMap F = compose(sigma_lift(standard_cremona(GF3)), mobius_to_map(m));
        const JonquieresDecomposition d = require_jonquieres(F);
        const ContractionLocus l = contraction_locus(d);
        CHECK(try_divide(l.locus, d.q).has_value());
        CHECK(l.bound_ok);
    }

    try {
        contraction_locus(require_jonquieres(qf_map(M({"x0", "x0", "x2"}, Q3), P("x3"), P("x1*x3 + x2^2"))));
        FAIL("expected ZeroJacobian");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ZeroJacobian);
    }
}

TEST_CASE("embedded prime criterion")
{
    const EmbeddedCriterion a = embedded_criterion(mobius("x0", "x1*x2", "1", "x2"));
    CHECK_FALSE(a.degree_condition());
    CHECK_FALSE(a.containment);
    CHECK_FALSE(a.embedded);
    CHECK(a.consistent());

    const EmbeddedCriterion b = embedded_criterion(mobius("x0", "x1*x2", "0", "x2"));
    CHECK(b.gamma_zero);
    CHECK(b.containment);
    CHECK(b.embedded);
    CHECK(b.consistent());

    const EmbeddedCriterion c = embedded_criterion(mobius("x0^2", "x1^2*x2", "x1", "x2^2"));
    CHECK(c.degree_at_least_3);
    CHECK(c.containment);
    CHECK(c.embedded);
    CHECK(c.consistent());

    CHECK_THROWS_AS(embedded_criterion(mobius("x0", "x1^2", "1", "x1", Q3)), Error);
}

TEST_CASE("standard Cremona maps")
{
    CHECK(standard_cremona(Q3) == s3());
    CHECK(is_identity(compose(standard_cremona(Q4), standard_cremona(Q4))));
}
