#include "jonq/jonquieres/structure.hpp"

#include "jonq/error.hpp"

namespace jonq {

namespace {

NotJonquieres refuse(JonquieresFailure failure, std::string message)
{
    return {failure, std::move(message)};
}

Polynomial lift(const Polynomial& p, const Ring& S)
{
    return p.in_ring(S);
}

} // namespace

std::variant<JonquieresDecomposition, NotJonquieres> detect_jonquieres(const RationalMap& F)
{
    const std::size_t n = F.dimension();
    if (n < 2)
        return refuse(JonquieresFailure::Dimension, "de Jonquieres maps need n >= 2");
    const Ring& S = F.ring();
    const Ring R = S.with_nvars(n);

    std::vector<Polynomial> leading;
    for (std::size_t i = 0; i < n; ++i)
        if (!F[i].is_zero())
            leading.push_back(F[i]);
    if (leading.empty())
        return refuse(JonquieresFailure::LeadingCoordinatesZero, "the first n coordinates vanish");
    Polynomial q = gcd_all(leading);
    const Polynomial& f = F[n];

    if (q.degree_in(n) > 1)
        return refuse(JonquieresFailure::QNotMonoid,
                      "q = " + q.to_string() + " has x" + std::to_string(n) + "-degree " + std::to_string(q.degree_in(n)));
    std::vector<Polynomial> g;
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial gi = F[i].is_zero() ? Polynomial(S) : exact_divide(F[i], q);
        if (gi.involves(n))
            return refuse(JonquieresFailure::UnderlyingInvolvesLast,
                          "cofactor " + std::to_string(i) + " involves x" + std::to_string(n));
        g.push_back(gi.in_ring(R));
    }
    if (f.degree_in(n) > 1)
        return refuse(JonquieresFailure::FNotMonoid,
                      "f has x" + std::to_string(n) + "-degree " + std::to_string(f.degree_in(n)));
    if (f.degree_in(n) < 1 && q.degree_in(n) < 1)
        return refuse(JonquieresFailure::NoLastVariable, "neither q nor f involves x" + std::to_string(n));
    if (!f.is_zero() && !gcd_forms(q, f).is_constant())
        return refuse(JonquieresFailure::NotCoprime, "q and f share a factor");

    const RationalMap G = make_map(g);
    std::size_t k = 0;
    while (g[k].is_zero())
        ++k;
    q = q.scaled(g[k].leading_coefficient() / G[k].leading_coefficient());
    return JonquieresDecomposition{G, q, f};
}

std::string_view failure_name(JonquieresFailure failure)
{
    switch (failure) {
    case JonquieresFailure::Dimension:
        return "Dimension";
    case JonquieresFailure::LeadingCoordinatesZero:
        return "LeadingCoordinatesZero";
    case JonquieresFailure::UnderlyingInvolvesLast:
        return "UnderlyingInvolvesLast";
    case JonquieresFailure::QNotMonoid:
        return "QNotMonoid";
    case JonquieresFailure::FNotMonoid:
        return "FNotMonoid";
    case JonquieresFailure::NotCoprime:
        return "NotCoprime";
    case JonquieresFailure::NoLastVariable:
        return "NoLastVariable";
    }
    return "Unknown";
}

JonquieresDecomposition require_jonquieres(const RationalMap& F)
{
    auto result = detect_jonquieres(F);
    if (auto* refusal = std::get_if<NotJonquieres>(&result))
        raise(Errc::NotJonquieres, refusal->message, {{"failure", static_cast<std::int64_t>(refusal->failure)}});
    return std::get<JonquieresDecomposition>(std::move(result));
}

RationalMap sigma_lift(const RationalMap& t)
{
    const std::size_t n = t.ring().nvars();
    const Ring S = t.ring().with_nvars(n + 1);
    const Polynomial x0 = Polynomial::variable(S, 0);
    std::vector<Polynomial> coords;
    for (const auto& ti : t.coords())
        coords.push_back(x0 * lift(ti, S));
    coords.push_back(lift(t[0], S) * Polynomial::variable(S, n));
    return make_map(std::move(coords));
}

RationalMap rho_project(const RationalMap& F)
{
    return require_jonquieres(F).G;
}

std::optional<RationalMap> derive_inverse(const RationalMap& G)
{
    if (is_identity(G))
        return G;
    if (G.degree() == 1) {
        try {
            return linear_inverse(G);
        } catch (const Error&) {
            return std::nullopt;
        }
    }
    if (is_identity(compose(G, G)))
        return G;
    if (G.dimension() >= 2) {
        auto found = detect_jonquieres(G);
        if (auto* dec = std::get_if<JonquieresDecomposition>(&found)) {
            if (const auto under = derive_inverse(dec->G)) {
                try {
                    return jonquieres_inverse(G, *under);
                } catch (const Error&) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::nullopt;
}

SemidirectElement split_semidirect(const RationalMap& F, const std::optional<RationalMap>& underlying_inverse)
{
    const JonquieresDecomposition dec = require_jonquieres(F);
    const RationalMap& G = dec.G;
    std::optional<RationalMap> inv = underlying_inverse;
    if (!inv) {
        inv = derive_inverse(G);
        if (!inv)
            raise(Errc::UnderlyingInverseUnavailable, "no inverse known for the underlying map " + G.to_string());
    }
    if (!check_inverse(G, *inv))
        raise(Errc::BadUnderlyingInverse, inv->to_string() + " is not inverse to " + G.to_string());

    const RationalMap kernel_part = compose(sigma_lift(*inv), F);
    const JonquieresDecomposition k = require_jonquieres(kernel_part);
    if (!is_identity(k.G))
        raise(Errc::Internal, "sigma(G^-1) o F is not in the kernel of rho");
    const Scalar lambda = k.G[0].leading_coefficient();
    const Polynomial q = k.q.scaled(lambda);
    const std::size_t n = F.dimension();
    const MobiusElement mu =
        make_mobius(k.f.coefficient_in(n, 1), k.f.coefficient_in(n, 0), q.coefficient_in(n, 1), q.coefficient_in(n, 0));

    if (!same_map(compose(sigma_lift(G), mobius_to_map(mu)), F))
        raise(Errc::Internal, "semidirect parts do not reassemble to " + F.to_string());
    return {F, dec, mu, G};
}

RationalMap jonquieres_inverse(const RationalMap& F, const RationalMap& underlying_inverse)
{
    const SemidirectElement s = split_semidirect(F, underlying_inverse);
    return compose(mobius_to_map(mobius_inverse(s.mobius_part)), sigma_lift(underlying_inverse));
}

RationalMap jonquieres_inverse(const RationalMap& F)
{
    const RationalMap G = rho_project(F);
    const auto inv = derive_inverse(G);
    if (!inv)
        raise(Errc::UnderlyingInverseUnavailable, "no inverse known for the underlying map " + G.to_string());
    return jonquieres_inverse(F, *inv);
}

RationalMap qf_map(const RationalMap& G, const Polynomial& q, const Polynomial& f)
{
    require_same_ring(q, f);
    const Ring& S = q.ring();
    const std::size_t n = G.ring().nvars();
    if (S.nvars() != n + 1)
        raise(Errc::DimensionMismatch, "q and f must live in the ring with one more variable than G");
    const int dq = graded_degree(q);
    const int df = graded_degree(f);
    if (df != G.degree() + dq)
        raise(Errc::DegreeMismatch,
              "deg f = " + std::to_string(df) + " but deg G + deg q = " + std::to_string(G.degree() + dq),
              {{"deg_f", df}, {"deg_G", G.degree()}, {"deg_q", dq}});
    const Polynomial g = gcd_forms(q, f);
    if (!g.is_constant())
        raise(Errc::NotCoprime, "q and f share the factor " + g.to_string());
    std::vector<Polynomial> coords;
    for (const auto& gi : G.coords())
        coords.push_back(q * lift(gi, S));
    coords.push_back(f);
    return make_map(std::move(coords));
}

RationalMap standard_cremona(const Ring& ring)
{
    std::vector<Polynomial> coords;
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
        Monomial m;
        for (std::size_t j = 0; j < ring.nvars(); ++j)
            if (j != i)
                m.set(j, 1);
        coords.push_back(Polynomial::monomial(ring, m));
    }
    return make_map(std::move(coords));
}

ContractionLocus contraction_locus(const JonquieresDecomposition& J)
{
    const Ring& S = J.q.ring();
    const std::size_t n = S.nvars() - 1;
    const Polynomial a = J.f.coefficient_in(n, 1);
    const Polynomial b = J.f.coefficient_in(n, 0);
    const Polynomial c = J.q.coefficient_in(n, 1);
    const Polynomial d = J.q.coefficient_in(n, 0);
    const Polynomial det = a * d - b * c;
    if (det.is_zero())
        raise(Errc::SingularDeterminant, "ad - bc = 0");
    const Polynomial jac = jacobian_det(J.G.coords());
    if (jac.is_zero())
        raise(Errc::ZeroJacobian, "the underlying map " + J.G.to_string() + " has zero Jacobian");

    const Polynomial locus = det * J.q * lift(jac, S);
    const long D = J.G.degree() + J.t();
    const long bound = static_cast<long>(n) * D * D * (D - 1) * (D - 1);
    const long degree = locus.total_degree();
    return {locus, degree, bound, degree <= bound};
}

EmbeddedCriterion embedded_criterion(const MobiusElement& mu)
{
    if (mu.dimension() != 3)
        raise(Errc::DimensionMismatch, "the criterion is stated for maps of P^3", {{"n", static_cast<std::int64_t>(mu.dimension())}});
    const Ring& S = mu.ring;
    const Ideal P(S, {Polynomial::variable(S, 0), Polynomial::variable(S, 1), Polynomial::variable(S, 2)});
    const GroebnerBasis GP = groebner(P);
    const Ideal J = base_ideal(mobius_to_map(mu));

    EmbeddedCriterion out{};
    out.gamma_zero = mu.c.is_zero();
    out.degree_at_least_3 = mobius_to_map(mu).degree() >= 3;
    out.containment = contains(GP, mu.q()) && contains(GP, mu.f());
    const Ideal away = saturate(J, Ideal(S, {Polynomial::variable(S, 3)}));
    const bool associated = !is_subset(colon(away, P), away);
    const Ideal outside = saturate(J, P);
    const bool minimal = !is_subset(outside, P);
    out.embedded = associated && !minimal;
    return out;
}

} // namespace jonq
