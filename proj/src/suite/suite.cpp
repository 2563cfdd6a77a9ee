#include "jonq/suite/suite.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <gmpxx.h>

#include "jonq/classify/structure.hpp"
#include "jonq/error.hpp"
#include "jonq/io/files.hpp"
#include "jonq/jonquieres/structure.hpp"
#include "jonq/resolve/syzygy.hpp"
#include "jonq/ringkit/parse.hpp"
#include "jonq/ringkit/random.hpp"

namespace jonq {

namespace {

class Checker {
public:
    void expect(bool ok, const std::string& what)
    {
        ++count_;
        if (ok)
            return;
        if (failed_++ < 4)
            detail_ += (detail_.empty() ? "" : "; ") + what;
    }

    bool passed() const { return failed_ == 0; }
    std::string detail() const
    {
        if (failed_ == 0)
            return std::to_string(count_) + " expectations";
        std::string out = std::to_string(failed_) + " of " + std::to_string(count_) + " failed: " + detail_;
        if (failed_ > 4)
            out += "; ...";
        return out;
    }

private:
    int count_ = 0;
    int failed_ = 0;
    std::string detail_;
};

struct Session {
    std::uint64_t seed;
    Field field;

    // independent stream per check and instance
    std::uint64_t instance_seed(int check, std::uint64_t k) const
    {
        std::uint64_t z = seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(check) * 0xBF58476D1CE4E5B9ull + k;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

using CheckFn = void (*)(Checker&, const Session&);

struct CheckSpec {
    int id;
    const char* name;
    const char* claim;
    double limit;
    CheckFn run;
};

Polynomial parse(const char* text, const Ring& ring)
{
    return parse_polynomial(text, ring);
}

RationalMap map_of(std::initializer_list<const char*> coords, const Ring& ring)
{
    std::vector<Polynomial> v;
    for (const char* c : coords)
        v.push_back(parse(c, ring));
    return make_map(v);
}

Ideal ideal_of(std::initializer_list<const char*> gens, const Ring& ring)
{
    std::vector<Polynomial> v;
    for (const char* g : gens)
        v.push_back(parse(g, ring));
    return Ideal(ring, v);
}

Ideal first_variables(const Ring& ring, std::size_t count)
{
    std::vector<Polynomial> xs;
    for (std::size_t i = 0; i < count; ++i)
        xs.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, xs);
}

BettiTable table(std::initializer_list<std::pair<std::pair<int, int>, int>> entries)
{
    BettiTable b{{{0, 0}, 1}};
    for (const auto& e : entries)
        b[e.first] = e.second;
    return b;
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
        } catch (const Error& e) {
            if (e.code() == Errc::BudgetExceeded)
                throw;
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
        } catch (const Error& e) {
            if (e.code() == Errc::BudgetExceeded)
                throw;
        }
    }
}

const RationalMap& t3_map()
{
    static const RationalMap T3 =
        map_of({"x0*x1*x2", "x0^2*x2", "x0^2*x1", "x1*x2*x3"}, Ring(4, Field::rationals()));
    return T3;
}

void check_t3(Checker& c, const Session&)
{
    const RationalMap& T3 = t3_map();
    const RationalMap TT = compose(T3, T3);
    c.expect(is_identity(TT), "T3 o T3 = " + TT.to_string());
    c.expect(compose_raw(T3, T3).degree() == 9, "raw composite has degree 9");
    c.expect(TT == RationalMap::identity(T3.ring()), "normalized composite is (x0 : x1 : x2 : x3)");
}

void check_mobius_composition(Checker& c, const Session& s)
{
    for (std::uint64_t k = 0; k < 20; ++k) {
        Rng rng(s.instance_seed(2, k));
        const Ring S(rng.coin(50) ? 3 : 4, s.field);
        const MobiusElement m1 = random_mobius(rng, S, static_cast<int>(rng.uniform(1, 3)));
        const MobiusElement m2 = random_mobius(rng, S, static_cast<int>(rng.uniform(1, 3)));
        const RationalMap lhs = mobius_to_map(mobius_compose(m1, m2));
        const RationalMap rhs = compose(mobius_to_map(m1), mobius_to_map(m2));
        c.expect(lhs == rhs, "instance " + std::to_string(k) + ": " + m1.to_string() + " * " + m2.to_string());
    }
}

void check_sections(Checker& c, const Session& s)
{
    const Ring R(3, s.field);
    const Ring S(4, s.field);
    for (std::uint64_t k = 0; k < 10; ++k) {
        Rng rng(s.instance_seed(3, k));
        RationalMap t;
        for (;;) {
            const unsigned degree = static_cast<unsigned>(rng.uniform(1, 2));
            std::vector<Polynomial> coords;
            for (std::size_t i = 0; i < 3; ++i)
                coords.push_back(rng.form(R, degree, 3, 70));
            // dominant maps only
            if (jacobian_det(coords).is_zero())
                continue;
            try {
                t = make_map(coords);
                break;
            } catch (const Error& e) {
                if (e.code() == Errc::BudgetExceeded)
                    throw;
            }
        }
        const std::string id = "instance " + std::to_string(k);
        c.expect(rho_project(sigma_lift(t)) == t, id + ": rho(sigma(t)) != t for t = " + t.to_string());

        const MobiusElement mu = random_mobius(rng, S, static_cast<int>(rng.uniform(1, 3)));
        const RationalMap F = mobius_to_map(mu);
        c.expect(is_identity(rho_project(F)), id + ": rho of a Mobius map is not the identity");
        c.expect(is_identity(F) == is_mobius_identity(mu), id + ": identity test disagrees for " + mu.to_string());

        const Scalar lambda = rng.scalar(s.field, 20, true);
        const MobiusElement scalar =
            make_mobius(Polynomial::constant(S, lambda), Polynomial(S), Polynomial(S), Polynomial::constant(S, lambda));
        c.expect(is_identity(mobius_to_map(scalar)), id + ": scalar matrix does not give the identity");
        const MobiusElement back = mobius_compose(mu, mobius_inverse(mu));
        c.expect(is_mobius_identity(back) && is_identity(mobius_to_map(back)), id + ": mu mu^-1 is not the identity");
    }
}

void check_noether(Checker& c, const Session&)
{
    const Ideal J = noether_ideal(Field::rationals());
    const Ring& S = J.ring();
    const BettiTable b = betti(free_resolution(J));
    c.expect(b == table({{{1, 2}, 4}, {{2, 3}, 3}, {{2, 4}, 1}, {{3, 5}, 1}}), "Betti table " + betti_to_string(b));
    c.expect(ideal_equal(saturate(J, first_variables(S, 4)), J), "J is not saturated");

    const Ideal unmixed = ideal_of({"x0", "x1"}, S);
    c.expect(is_associated(J, unmixed), "(x0, x1) is not associated");
    const Ideal primes[] = {
        ideal_of({"x0", "x1", "x3"}, S),
        ideal_of({"x1", "x2", "x3"}, S),
        ideal_of({"x0 - x2", "x1 - x2", "x3"}, S),
    };
    for (const auto& P : primes) {
        c.expect(is_associated(J, P), P.to_string() + " is not associated");
        const int deg = initial_degree(colon(J, P));
        c.expect(deg == 2, "initial degree of J : " + P.to_string() + " is " + std::to_string(deg));
    }
}

void check_subhankel(Checker& c, const Session&)
{
    const SubhankelReport r = subhankel_demo();
    c.expect(r.betti_ok, "Betti table " + betti_to_string(r.subhankel.betti));
    c.expect(r.subhankel.codim3.size() == 1, std::to_string(r.subhankel.codim3.size()) + " codimension 3 primes found");
    c.expect(r.unique_embedded, "the codimension 3 prime is not embedded");
    c.expect(r.noether_shape, "Noether does not show two minimal and one embedded prime");
}

void check_perfectness(Checker& c, const Session& s)
{
    for (std::uint64_t k = 0; k < 10; ++k) {
        Rng rng(s.instance_seed(6, k));
        for (std::size_t n : {2, 3}) {
            const Ring S(n + 1, s.field);
            const MobiusElement mu = random_mobius(rng, S, static_cast<int>(rng.uniform(2, 3)));
            const Ideal J = base_ideal(mobius_to_map(mu));
            const int cd = codim(J);
            const ProjectiveDimension pd = projective_dimension(J);
            const std::string id = "n=" + std::to_string(n) + " " + mu.to_string();
            c.expect(cd == 2, id + ": codim " + std::to_string(cd));
            if (n == 2)
                c.expect(pd.pd == 2 && pd.perfect, id + ": pd " + std::to_string(pd.pd));
            else
                c.expect(pd.pd == 3 && !pd.perfect, id + ": pd " + std::to_string(pd.pd));
        }
    }
}

void check_mapping_cone(Checker& c, const Session& s)
{
    const Ring R(3, s.field);
    const Ring S(4, s.field);
    const Ideal I = first_variables(R, 3);
    int built = 0;
    for (std::uint64_t k = 0; built < 10; ++k) {
        Rng rng(s.instance_seed(7, k));
        const unsigned dq = static_cast<unsigned>(rng.uniform(1, 2));
        const Polynomial q = rng.nonzero_form(S, dq, 4);
        Polynomial f(S);
        for (std::size_t i = 0; i < 3; ++i)
            f += Polynomial::variable(S, i) * rng.form(S, dq, 4);
        if (f.is_zero() || !gcd_forms(q, f).is_constant())
            continue;
        ++built;
        const FreeResolution cone = mapping_cone_qf(I, q, f);
        const std::string id = "q = " + q.to_string() + ", f = " + f.to_string();
        c.expect(cone.is_complex(), id + ": d d != 0");
        std::vector<Polynomial> gens;
        for (std::size_t i = 0; i < 3; ++i)
            gens.push_back(q * Polynomial::variable(S, i));
        gens.push_back(f);
        const FreeResolution reduced = minimize(cone);
        c.expect(betti(reduced) == betti(free_resolution(Ideal(S, gens))), id + ": Betti tables differ");
        c.expect(reduced.length() <= 3, id + ": length " + std::to_string(reduced.length()));
    }
}

Ideal normal_form_ideal(const Polynomial& q, const std::array<Polynomial, 3>& qi)
{
    const Ring& S = q.ring();
    Polynomial g(S);
    for (std::size_t i = 0; i < 3; ++i)
        g += qi[i] * Polynomial::variable(S, i);
    return Ideal(S, {q * Polynomial::variable(S, 0), q * Polynomial::variable(S, 1), q * Polynomial::variable(S, 2), g});
}

void check_main_theorem(Checker& c, const Session& s)
{
    const Ring S(4, s.field);
    const Ideal P = first_variables(S, 3);
    for (std::uint64_t k = 0; k < 10; ++k) {
        const int d = 2 + static_cast<int>(k % 3);
        Rng rng(s.instance_seed(8, k));
        Ideal J(S);
        Polynomial q(S);
        for (;;) {
            q = rng.nonzero_form(S, static_cast<unsigned>(d - 1), 4, 70);
            std::array<Polynomial, 3> qi;
            for (auto& p : qi)
                p = rng.nonzero_form(S, static_cast<unsigned>(d - 1), 4, 70);
            J = normal_form_ideal(q, qi);
            if (!gcd_forms(q, J[3]).is_constant())
                continue;
            if (d == 2 && !is_associated(J, P))
                continue;
            break;
        }
        const std::string id = "d=" + std::to_string(d) + " instance " + std::to_string(k);
        const TemplateMatch m = match_template(betti(free_resolution(J)), 3);
        c.expect(m.kind == TemplateKind::MainTheorem && m.d == d, id + ": template " + m.to_string());
        if (m.kind != TemplateKind::MainTheorem)
            continue;
        const MainTheoremExtraction e = verify_main_theorem(J);
        c.expect(ideal_equal(e.P, P), id + ": P = " + e.P.to_string());
        c.expect(ideal_equal(e.unmixed_part, Ideal(S, {q, J[3]})), id + ": unmixed part " + e.unmixed_part.to_string());
        c.expect(e.ci_degree == (d - 1) * d, id + ": CI degree " + std::to_string(e.ci_degree));
    }
}

void check_kernel_syzygies(Checker& c, const Session& s)
{
    const Ring S(4, s.field);
    std::vector<Polynomial> xs;
    for (std::size_t i = 0; i < 3; ++i)
        xs.push_back(Polynomial::variable(S, i));
    for (std::uint64_t k = 0; k < 5; ++k) {
        Rng rng(s.instance_seed(9, k));
        const int r = static_cast<int>(rng.uniform(2, 3));
        const MobiusElement mu = random_mobius(rng, S, r);
        const Polynomial q = mu.q();
        const Polynomial f = mu.f();
        const GradedMatrix M = GradedMatrix::row(S, {q * xs[0], q * xs[1], q * xs[2], f});
        const std::string id = mu.to_string();

        const Division content = divide(f, xs);
        c.expect(content.remainder.is_zero(), id + ": f is not in (x0, x1, x2)");
        if (!content.remainder.is_zero())
            continue;
        GradedMatrix expected(S, M.col_twists(), {r + 1, r + 1, r + 1, 2 * r - 1});
        const std::size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        for (std::size_t j = 0; j < 3; ++j) {
            expected.set(pairs[j][0], j, xs[pairs[j][1]]);
            expected.set(pairs[j][1], j, -xs[pairs[j][0]]);
        }
        for (std::size_t i = 0; i < 3; ++i)
            expected.set(i, 3, -content.quotients[i]);
        expected.set(3, 3, q);
        c.expect((M * expected).is_zero(), id + ": expected columns are not syzygies");
        c.expect(same_span(syzygies(M), expected), id + ": syzygy module differs");
    }
}

void check_contraction(Checker& c, const Session& s)
{
    const Ring R(3, s.field);
    const Ring S(4, s.field);
    for (std::uint64_t k = 0; k < 10; ++k) {
        Rng rng(s.instance_seed(10, k));
        const bool cremona = k % 2 == 0;
        const RationalMap G = cremona ? standard_cremona(R) : random_linear(rng, R);
        const MobiusElement mu = random_mobius(rng, S, static_cast<int>(rng.uniform(2, 3)));
        const RationalMap F = compose(sigma_lift(G), mobius_to_map(mu));
        const ContractionLocus l = contraction_locus(require_jonquieres(F));
        const long D = F.degree();
        const std::string id = "G = " + G.to_string() + ", " + mu.to_string();
        c.expect(l.degree <= 3 * D * D * (D - 1) * (D - 1), id + ": locus degree " + std::to_string(l.degree));
        c.expect(l.bound_ok, id + ": bound verdict");

        // sigma(G) contracts x0 = 0 unless G[0] already carries x0, which normalization removes
        std::vector<Polynomial> components{mu.q(), mu.determinant()};
        if (!try_divide(G[0], Polynomial::variable(R, 0)))
            components.push_back(Polynomial::variable(S, 0));
        if (cremona)
            for (std::size_t i = 1; i < 3; ++i)
                components.push_back(Polynomial::variable(S, i));
        for (const auto& comp : components)
            if (!comp.is_constant())
                c.expect(try_divide(l.locus, comp).has_value(), id + ": " + comp.to_string() + " does not divide the locus");
    }
}

long binomial(long n, long k)
{
    if (k < 0 || n < k)
        return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b.get_si();
}

void check_genus_bound(Checker& c, const Session&)
{
    c.expect(ch_bound({3, 2, 1}).bound == 1, "ch_bound(3,2,1)");
    c.expect(ch_bound({5, 3, 1}).bound == 2, "ch_bound(5,3,1)");
    for (long r = 2; r <= 4; ++r)
        for (long m = 1; m < r; ++m)
            c.expect(ch_bound({1, r, m}).bound == 0, "ch_bound(1," + std::to_string(r) + "," + std::to_string(m) + ")");
    for (long l = 1; l <= 8; ++l)
        for (long r = 2; r <= 4; ++r) {
            const long got = ch_bound({l, r, r - 1}).bound;
            c.expect(got == binomial(l - 1, r), "ch_bound(" + std::to_string(l) + "," + std::to_string(r) + "," +
                                                   std::to_string(r - 1) + ") = " + std::to_string(got));
        }
}

Polynomial random_polynomial(Rng& rng, const Ring& ring)
{
    std::vector<Term> terms;
    const long count = rng.uniform(0, 6);
    for (long t = 0; t < count; ++t) {
        Monomial m;
        for (std::size_t i = 0; i < ring.nvars(); ++i)
            if (rng.coin(40))
                m.set(i, static_cast<unsigned>(rng.uniform(1, 5)));
        Scalar coeff;
        if (ring.field().is_rational()) {
            mpz_class num(rng.uniform(-1000000, 1000000));
            num *= rng.uniform(-1000000, 1000000);
            mpq_class value(num, mpz_class(rng.uniform(1, 720)));
            value.canonicalize();
            coeff = Scalar::from_rational(ring.field(), value);
        } else {
            const long p = ring.field().characteristic();
            coeff = Scalar::from_int(ring.field(), rng.uniform(0, p - 1));
        }
        terms.push_back({m, coeff});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

void check_round_trip(Checker& c, const Session& s)
{
    std::vector<Field> fields{Field::rationals(), Field::prime(kDefaultPrime)};
    if (!(s.field == fields[0]) && !(s.field == fields[1]))
        fields.push_back(s.field);
    for (std::size_t fi = 0; fi < fields.size(); ++fi) {
        Rng rng(s.instance_seed(12, fi));
        int bad = 0;
        for (int k = 0; k < 1000; ++k) {
            const Ring ring(static_cast<std::size_t>(rng.uniform(1, 6)), fields[fi]);
            const Polynomial p = random_polynomial(rng, ring);
            const std::string text = p.to_string();
            if (!(parse_polynomial(text, ring) == p) && bad++ == 0)
                c.expect(false, fields[fi].name() + ": " + text);
        }
        c.expect(bad == 0, fields[fi].name() + ": " + std::to_string(bad) + " of 1000 did not re-parse");
    }

    const InputFile back = parse_input(format_map(t3_map()));
    c.expect(back.map && *back.map == t3_map(), "map file round trip");
    const Ideal J = noether_ideal(Field::rationals());
    c.expect(parse_input(format_ideal(J)).ideal.generators() == J.generators(), "ideal file round trip");

    // at least one basis even when run alone
    groebner(J);
    const EngineStats& st = engine_stats();
    c.expect(st.certificate_failures == 0, std::to_string(st.certificate_failures) + " certificate failures");
    c.expect(st.certified == st.bases && st.bases > 0,
             std::to_string(st.certified) + " of " + std::to_string(st.bases) + " bases certified");
}

const CheckSpec kChecks[] = {
    {1, "t3-involution", "T3 o T3 is the identity of P^3 over Q", 1.0, check_t3},
    {2, "mobius-composition", "the map of a product of Mobius matrices is the composite of their maps", 0,
     check_mobius_composition},
    {3, "semidirect-sections",
     "rho o sigma = id, Mobius maps lie in ker rho, and a Mobius map is the identity iff b = c = 0 and a = d", 0,
     check_sections},
    {4, "noether-scheme",
     "Noether's base ideal: Betti (1,2):4 (2,3):3 (2,4):1 (3,5):1, saturated, four associated linear primes, "
     "J : P starts in degree 2",
     10.0, check_noether},
    {5, "subhankel-scheme",
     "sub-Hankel base ideal: same Betti table, one codimension 3 associated linear prime, and it is embedded", 10.0,
     check_subhankel},
    {6, "perfectness", "Mobius base ideals are perfect on P^2 and have pd 3 > codim 2 on P^3", 0, check_perfectness},
    {7, "mapping-cone", "the cone over q I and f is a complex, minimizes to the resolution of (qI, f), length <= 3", 0,
     check_mapping_cone},
    {8, "main-theorem-round-trip",
     "normal-form ideals match MainTheorem(d) and give back P = (x0,x1,x2), the unmixed part and degree (d-1)d", 0,
     check_main_theorem},
    {9, "kernel-syzygies", "syzygies of Mobius base ideals on P^3 are the Koszul columns and one content syzygy", 0,
     check_kernel_syzygies},
    {10, "contraction-locus",
     "(ad-bc) q jac(G) has degree <= n D^2 (D-1)^2 and is divisible by every contracted component", 0,
     check_contraction},
    {11, "genus-bound", "Castelnuovo-Harris values and C(l-1, r) for m = r-1", 0, check_genus_bound},
    {12, "round-trip-and-certificates",
     "printed polynomials and files re-parse exactly; every Groebner basis passes the S-pair certificate", 0,
     check_round_trip},
};

} // namespace

std::string_view status_name(CheckStatus status)
{
    switch (status) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::Budget:
        return "budget";
    }
    return "fail";
}

std::vector<CheckResult> run_suite(const SuiteOptions& options, const std::function<void(const CheckResult&)>& on_result)
{
    const Session session{options.seed, options.field};
    const EngineStats saved = engine_stats();
    engine_stats() = EngineStats{};
    LimitScope scope(EngineLimits{options.budget, true});

    std::vector<CheckResult> results;
    for (const auto& spec : kChecks) {
        if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), spec.id) == options.only.end())
            continue;
        CheckResult r{spec.id, spec.name, spec.claim, CheckStatus::Fail, "", 0, spec.limit};
        const auto start = std::chrono::steady_clock::now();
        try {
            Checker c;
            spec.run(c, session);
            r.status = c.passed() ? CheckStatus::Pass : CheckStatus::Fail;
            r.detail = c.detail();
        } catch (const Error& e) {
            r.status = e.code() == Errc::BudgetExceeded ? CheckStatus::Budget : CheckStatus::Fail;
            r.detail = std::string(errc_name(e.code())) + ": " + e.what();
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.limit > 0 && r.seconds > r.limit && r.status == CheckStatus::Pass) {
            r.status = CheckStatus::Fail;
            r.detail = "took " + std::to_string(r.seconds) + " s, limit " + std::to_string(r.limit) + " s";
        }
        if (on_result)
            on_result(r);
        results.push_back(std::move(r));
    }
    engine_stats() = saved;
    return results;
}

int suite_exit_code(const std::vector<CheckResult>& results)
{
    bool budget = false;
    for (const auto& r : results) {
        if (r.status == CheckStatus::Fail)
            return 1;
        budget = budget || r.status == CheckStatus::Budget;
    }
    return budget ? 3 : 0;
}

} // namespace jonq
