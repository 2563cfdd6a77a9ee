#include "jonq/classify/structure.hpp"

#include <algorithm>
#include <set>

#include "jonq/error.hpp"
#include "jonq/ringkit/parse.hpp"

namespace jonq {

namespace {

bool is_linear_form(const Polynomial& p)
{
    return !p.is_zero() && p.is_homogeneous() && p.total_degree() == 1;
}

std::vector<Scalar> linear_coefficients(const Polynomial& p)
{
    std::vector<Scalar> out;
    for (std::size_t j = 0; j < p.ring().nvars(); ++j)
        out.push_back(p.coefficient(Monomial::variable(j)));
    return out;
}

Polynomial linear_form(const Ring& ring, const std::vector<Scalar>& coefficients)
{
    Polynomial out(ring);
    for (std::size_t j = 0; j < coefficients.size(); ++j)
        out += Polynomial::monomial(ring, Monomial::variable(j), coefficients[j]);
    return out;
}

// images of x_k under x = m y
std::vector<Polynomial> linear_images(const Ring& ring, const ScalarMatrix& m)
{
    std::vector<Polynomial> out;
    for (const auto& row : m)
        out.push_back(linear_form(ring, row));
    return out;
}

Ideal transformed(const Ideal& I, const std::vector<Polynomial>& images)
{
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators())
        gens.push_back(substitute(g, images));
    return Ideal(I.ring(), gens);
}

[[noreturn]] void mismatch(const std::string& message)
{
    raise(Errc::TemplateMismatch, message);
}

} // namespace

MainTheoremExtraction verify_main_theorem(const Ideal& J)
{
    const Ring& S = J.ring();
    const Field k = S.field();
    if (S.nvars() != 4)
        mismatch("the template lives in four variables");
    if (!J.is_homogeneous())
        raise(Errc::NotHomogeneous, "the ideal must be homogeneous");
    if (codim(J) != 2)
        mismatch("the ideal does not have codimension 2");

    const FreeResolution r = free_resolution(J);
    const TemplateMatch m = match_template(betti(r), 3);
    if (m.kind != TemplateKind::MainTheorem)
        mismatch("Betti table " + betti_to_string(m.witness) + " matches " + m.to_string());
    const int d = m.d;
    const GradedMatrix& phi = r.d(2);
    const GradedMatrix& psi = r.d(3);

    // the last syzygy
    ScalarMatrix lambda_rows(4, std::vector<Scalar>(4, Scalar::zero(k)));
    for (std::size_t i = 0; i < 4; ++i) {
        const Polynomial& e = psi.at(i, 0);
        if (e.is_zero())
            continue;
        if (!is_linear_form(e))
            raise(Errc::EntriesNotIndependent, "last syzygy entry " + e.to_string() + " is not linear");
        lambda_rows[i] = linear_coefficients(e);
    }
    const std::size_t rk = rank(lambda_rows, k, 4);
    if (d == 2 && rk == 4)
        raise(Errc::UnmixedForD2, "the last syzygy has four independent entries; J has no embedded linear prime");
    if (rk != 3)
        raise(Errc::EntriesNotIndependent,
              "the last syzygy entries span " + std::to_string(rk) + " dimensions instead of 3", {{"rank", static_cast<std::int64_t>(rk)}});

    // basis change of F_2 sending psi to (l0, l1, l2, 0)
    ScalarMatrix transposed(4, std::vector<Scalar>(4, Scalar::zero(k)));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            transposed[j][i] = lambda_rows[i][j];
    const auto relation = nullspace(transposed, k, 4).at(0);
    std::size_t dropped = 0;
    while (relation[dropped] == Scalar::zero(k))
        ++dropped;
    ScalarMatrix A(4, std::vector<Scalar>(4, Scalar::zero(k)));
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < 4; ++i)
        if (i != dropped)
            kept.push_back(i);
    for (std::size_t row = 0; row < 3; ++row)
        A[row][kept[row]] = Scalar::one(k);
    A[3] = relation;
    const ScalarMatrix A_inv = *inverse(A, k);

    // coordinates y = L x with y_i = l_i
    ScalarMatrix L;
    for (std::size_t i : kept)
        L.push_back(lambda_rows[i]);
    for (std::size_t j = 0; j < 4; ++j) {
        std::vector<Scalar> unit(4, Scalar::zero(k));
        unit[j] = Scalar::one(k);
        L.push_back(unit);
        if (rank(L, k, 4) == 4)
            break;
        L.pop_back();
    }
    const ScalarMatrix L_inv = *inverse(L, k);
    const std::vector<Polynomial> to_new = linear_images(S, L_inv);
    const std::vector<Polynomial> to_old = linear_images(S, L);

    // phi A^-1 in the new coordinates
    PolyMatrix phi1(4, std::vector<Polynomial>(4, Polynomial(S)));
    for (std::size_t row = 0; row < 4; ++row)
        for (std::size_t col = 0; col < 4; ++col) {
            Polynomial sum(S);
            for (std::size_t t = 0; t < 4; ++t)
                if (!phi.at(row, t).is_zero() && !(A_inv[t][col] == Scalar::zero(k)))
                    sum += phi.at(row, t).scaled(A_inv[t][col]);
            phi1[row][col] = substitute(sum, to_new);
        }

    // rows of the first three columns are combinations of the Koszul rows
    // (0, -y2, y1), (y2, 0, -y0), (-y1, y0, 0)
    const Polynomial y[3] = {Polynomial::variable(S, 0), Polynomial::variable(S, 1), Polynomial::variable(S, 2)};
    ScalarMatrix augmented(4, std::vector<Scalar>(7, Scalar::zero(k)));
    for (std::size_t row = 0; row < 4; ++row) {
        const Polynomial& a0 = phi1[row][0];
        const Polynomial& a1 = phi1[row][1];
        const Polynomial& a2 = phi1[row][2];
        const Scalar c1 = a0.coefficient(Monomial::variable(2));
        const Scalar c2 = -a0.coefficient(Monomial::variable(1));
        const Scalar c0 = -a1.coefficient(Monomial::variable(2));
        const bool koszul = a0 == y[2].scaled(c1) - y[1].scaled(c2) && a1 == y[0].scaled(c2) - y[2].scaled(c0) &&
                            a2 == y[1].scaled(c0) - y[0].scaled(c1);
        if (!koszul)
            mismatch("second differential is not of Koszul block form");
        augmented[row][0] = c0;
        augmented[row][1] = c1;
        augmented[row][2] = c2;
        augmented[row][3 + row] = Scalar::one(k);
    }
    const RowEchelon echelon = row_reduce(augmented, k, 7);
    if (echelon.pivots.size() < 3 || echelon.pivots[0] != 0 || echelon.pivots[1] != 1 || echelon.pivots[2] != 2)
        mismatch("Koszul part of the second differential has rank below 3");

    // E phi1: column 3 becomes (-q0, -q1, -q2, q)
    Polynomial u[4] = {Polynomial(S), Polynomial(S), Polynomial(S), Polynomial(S)};
    for (std::size_t row = 0; row < 4; ++row)
        for (std::size_t t = 0; t < 4; ++t) {
            const Scalar& e = echelon.reduced[row][3 + t];
            if (!(e == Scalar::zero(k)))
                u[row] += phi1[t][3].scaled(e);
        }
    const Polynomial q_new = u[3];
    if (q_new.is_zero() || q_new.total_degree() != d - 1)
        mismatch("no form of degree d - 1 in the content column");
    const Polynomial qi_new[3] = {-u[0], -u[1], -u[2]};
    const Polynomial g_new = qi_new[0] * y[0] + qi_new[1] * y[1] + qi_new[2] * y[2];
    if (!ideal_equal(transformed(J, to_new), Ideal(S, {q_new * y[0], q_new * y[1], q_new * y[2], g_new})))
        mismatch("J is not (q x0', q x1', q x2', sum q_i x_i') in the new coordinates");

    MainTheoremExtraction out{d, L, Ideal(S), substitute(q_new, to_old), {}, Ideal(S), 0};
    std::vector<Polynomial> prime;
    for (std::size_t i = 0; i < 3; ++i) {
        out.qi[i] = substitute(qi_new[i], to_old);
        prime.push_back(to_old[i]);
    }
    out.P = Ideal(S, prime);
    if (d == 2 && !is_associated(J, out.P))
        raise(Errc::UnmixedForD2, "J : P = J for the linear prime " + out.P.to_string());

    out.unmixed_part = unmixed_part(J, out.P);
    const Polynomial g = out.qi[0] * to_old[0] + out.qi[1] * to_old[1] + out.qi[2] * to_old[2];
    const Ideal ci(S, {out.q, g});
    if (!ideal_equal(out.unmixed_part, ci))
        mismatch("saturation " + out.unmixed_part.to_string() + " differs from " + ci.to_string());
    if (codim(ci) != 2 || minimalize(ci).size() != 2)
        mismatch("(q, sum q_i x_i) is not a complete intersection");
    out.ci_degree = (d - 1) * d;
    return out;
}

bool is_associated(const Ideal& J, const Ideal& P)
{
    ScalarMatrix rows;
    for (const auto& g : P.generators()) {
        if (!is_linear_form(g))
            raise(Errc::NotLinearPrime, g.to_string() + " is not a linear form");
        rows.push_back(linear_coefficients(g));
    }
    if (rows.empty() || rank(rows, P.ring().field(), P.ring().nvars()) != rows.size())
        raise(Errc::NotLinearPrime, "the generators of " + P.to_string() + " are not independent linear forms");
    return !is_subset(colon(J, P), J);
}

Ideal unmixed_part(const Ideal& J, const Ideal& P)
{
    return saturate(J, P);
}

std::vector<LinearPrimeReport> linear_prime_sweep(const Ideal& J, const FreeResolution& r)
{
    const Ring& S = J.ring();
    const Field k = S.field();
    std::vector<Polynomial> forms;
    for (const auto& m : r.maps)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const Polynomial& e = m.at(i, j);
                if (!is_linear_form(e))
                    continue;
                const Polynomial monic = e.monic();
                if (std::find(forms.begin(), forms.end(), monic) == forms.end())
                    forms.push_back(monic);
            }

    const std::size_t read = forms.size();
    for (std::size_t a = 0; a < read; ++a)
        for (std::size_t b = a + 1; b < read; ++b) {
            const Polynomial diff = forms[a] - forms[b];
            if (diff.is_zero())
                continue;
            const Polynomial monic = diff.monic();
            if (std::find(forms.begin(), forms.end(), monic) == forms.end())
                forms.push_back(monic);
        }

    std::vector<LinearPrimeReport> out;
    std::set<std::string> seen;
    for (std::size_t a = 0; a < forms.size(); ++a)
        for (std::size_t b = a + 1; b < forms.size(); ++b)
            for (std::size_t c = b + 1; c < forms.size(); ++c) {
                const ScalarMatrix rows = {linear_coefficients(forms[a]), linear_coefficients(forms[b]),
                                           linear_coefficients(forms[c])};
                const RowEchelon e = row_reduce(rows, k, S.nvars());
                if (e.rank() != 3)
                    continue;
                std::vector<Polynomial> gens;
                std::string key;
                for (std::size_t i = 0; i < 3; ++i) {
                    gens.push_back(linear_form(S, e.reduced[i]));
                    key += gens.back().to_string() + ";";
                }
                if (!seen.insert(key).second)
                    continue;
                const Ideal P(S, gens);
                if (!is_associated(J, P))
                    continue;
                out.push_back({P, true, !is_subset(saturate(J, P), P)});
            }
    return out;
}

int SchemeReport::minimal_count() const
{
    return static_cast<int>(std::count_if(codim3.begin(), codim3.end(), [](const auto& p) { return p.minimal; }));
}

int SchemeReport::embedded_count() const
{
    return static_cast<int>(std::count_if(codim3.begin(), codim3.end(), [](const auto& p) { return p.embedded(); }));
}

SchemeReport scheme_report(const Ideal& J)
{
    const FreeResolution r = free_resolution(J);
    const BettiTable b = betti(r);
    return {J, b, match_template(b, static_cast<int>(J.ring().nvars()) - 1), linear_prime_sweep(J, r)};
}

namespace {

Ideal parse_ideal(const Ring& ring, std::initializer_list<const char*> gens)
{
    std::vector<Polynomial> v;
    for (const char* g : gens)
        v.push_back(parse_polynomial(g, ring));
    return Ideal(ring, v);
}

} // namespace

Ideal noether_ideal(Field field)
{
    return parse_ideal(Ring(4, field), {"x0*x3", "x1*x3", "x0*x1 - x0*x2", "x0*x1 - x1^2"});
}

Ideal subhankel_ideal(Field field)
{
    return parse_ideal(Ring(4, field), {"x3^2", "x2*x3", "x2^2 - 2/3*x1*x3", "x1*x2 - x0*x3"});
}

SubhankelReport subhankel_demo()
{
    SubhankelReport out{scheme_report(subhankel_ideal()), scheme_report(noether_ideal()), false, false, false};
    out.betti_ok = out.subhankel.betti == near_noether_table(2);
    out.unique_embedded = out.subhankel.codim3.size() == 1 && out.subhankel.codim3[0].embedded();
    out.noether_shape = out.noether.codim3.size() == 3 && out.noether.minimal_count() == 2 && out.noether.embedded_count() == 1;
    return out;
}

} // namespace jonq
