#include "jonq/resolve/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "jonq/error.hpp"
#include "jonq/resolve/syzygy.hpp"

namespace jonq {

std::vector<int> FreeResolution::twists(std::size_t k) const
{
    if (k == 0)
        return maps.empty() ? std::vector<int>{0} : maps[0].row_twists();
    if (k > maps.size())
        return {};
    return maps[k - 1].col_twists();
}

bool FreeResolution::is_complex() const
{
    for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
        if (maps[k].cols() != maps[k + 1].rows())
            return false;
        if (!(maps[k] * maps[k + 1]).is_zero())
            return false;
    }
    return true;
}

namespace {

std::size_t matrix_rank(const GradedMatrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    return rank_over_fraction_field(m.entries());
}

} // namespace

bool FreeResolution::ranks_exact() const
{
    for (std::size_t k = 1; k < maps.size(); ++k)
        if (matrix_rank(maps[k - 1]) + matrix_rank(maps[k]) != maps[k - 1].cols())
            return false;
    return true;
}

FreeResolution resolve_generators(const Ring& ring, const std::vector<Polynomial>& gens)
{
    for (const auto& g : gens)
        if (!g.is_homogeneous())
            raise(Errc::NotHomogeneous, "cannot resolve the inhomogeneous generator " + g.to_string());
    FreeResolution r{ring, {}};
    GradedMatrix d = GradedMatrix::row(ring, gens);
    while (d.cols() > 0) {
        if (r.maps.size() > ring.nvars())
            raise(Errc::Internal, "resolution longer than the number of variables");
        GradedMatrix next = syzygies(d);
        r.maps.push_back(std::move(d));
        d = std::move(next);
    }
    return r;
}

FreeResolution free_resolution(const Ideal& I)
{
    if (!I.is_homogeneous())
        raise(Errc::NotHomogeneous, "free_resolution needs a homogeneous ideal");
    const Ideal m = minimalize(I);
    for (const auto& g : m.generators())
        if (g.is_constant())
            raise(Errc::UnitIdeal, "S/I is zero for the unit ideal");
    return minimize(resolve_generators(I.ring(), m.generators()));
}

namespace {

// Split off the summand at the scalar entry (r, c) of d_k (maps[k-1]).
void split_unit(FreeResolution& res, std::size_t k, std::size_t r, std::size_t c)
{
    GradedMatrix& d = res.maps[k - 1];
    const Scalar u_inv = d.at(r, c).leading_coefficient().inverse();
    GradedMatrix updated = d;
    for (std::size_t i = 0; i < d.rows(); ++i) {
        if (i == r || d.at(i, c).is_zero())
            continue;
        const Polynomial factor = d.at(i, c).scaled(u_inv);
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (j == c || d.at(r, j).is_zero())
                continue;
            updated.set(i, j, d.at(i, j) - factor * d.at(r, j));
        }
    }
    d = updated.without_row(r).without_column(c);
    if (k >= 2)
        res.maps[k - 2] = res.maps[k - 2].without_column(r);
    if (k < res.maps.size())
        res.maps[k] = res.maps[k].without_row(c);
}

} // namespace

FreeResolution minimize(FreeResolution r)
{
    for (std::size_t k = 1; k <= r.maps.size();) {
        std::size_t row = 0, col = 0;
        if (r.maps[k - 1].find_unit(row, col)) {
            split_unit(r, k, row, col);
            continue;
        }
        ++k;
    }
    while (!r.maps.empty() && r.maps.back().cols() == 0)
        r.maps.pop_back();
    return r;
}

BettiTable betti(const FreeResolution& r)
{
    BettiTable b;
    for (int t : r.twists(0))
        ++b[{0, t}];
    for (std::size_t k = 1; k <= r.maps.size(); ++k) {
        std::size_t row = 0, col = 0;
        if (r.maps[k - 1].find_unit(row, col))
            raise(Errc::NotMinimal, "differential d" + std::to_string(k) + " has a scalar entry at (" +
                                        std::to_string(row) + "," + std::to_string(col) + ")");
        for (int t : r.maps[k - 1].col_twists())
            ++b[{static_cast<int>(k), t}];
    }
    return b;
}

ProjectiveDimension projective_dimension(const Ideal& I)
{
    const FreeResolution r = free_resolution(I);
    const int pd = static_cast<int>(r.length());
    return {pd, pd == codim(I)};
}

FreeResolution mapping_cone_qf(const Ideal& I, const Polynomial& q, const Polynomial& f)
{
    require_same_ring(q, f);
    const Ring S = q.ring();
    if (q.is_zero() || f.is_zero())
        raise(Errc::ZeroPolynomial, "q and f must be nonzero");
    if (!q.is_homogeneous() || !f.is_homogeneous())
        raise(Errc::NotHomogeneous, "q and f must be forms");
    const std::size_t xn = S.nvars() - 1;

    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) {
        const Polynomial h = g.in_ring(S.with_nvars(g.ring().nvars())).in_ring(S);
        if (h.involves(xn))
            raise(Errc::InvalidArgument, "the underlying ideal must not involve the last variable");
        gens.push_back(h);
    }
    if (gens.empty())
        raise(Errc::InvalidArgument, "the underlying ideal is zero");
    const int d = graded_degree(gens[0]);
    for (const auto& g : gens)
        if (graded_degree(g) != d)
            raise(Errc::DegreeMismatch, "generators of the underlying ideal have different degrees");
    const int dq = graded_degree(q);
    const int D = graded_degree(f);
    if (D != d + dq)
        raise(Errc::DegreeMismatch,
              "deg f = " + std::to_string(D) + " but deg I + deg q = " + std::to_string(d + dq),
              {{"deg_f", D}, {"deg_I", d}, {"deg_q", dq}});
    if (!gcd_forms(q, f).is_constant())
        raise(Errc::NotCoprime, "q and f share the factor " + gcd_forms(q, f).to_string());

    // F: resolution of S/qIS
    FreeResolution top = resolve_generators(S, gens);
    for (std::size_t k = 0; k < top.maps.size(); ++k) {
        GradedMatrix& m = top.maps[k];
        std::vector<int> rt = m.row_twists(), ct = m.col_twists();
        for (auto& t : ct)
            t += dq;
        if (k > 0)
            for (auto& t : rt)
                t += dq;
        GradedMatrix shifted(S, rt, ct);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                shifted.set(i, j, k == 0 ? q * m.at(i, j) : m.at(i, j));
        m = std::move(shifted);
    }

    // G: resolution of S/q(IS:f), shifted by D
    const Ideal quotient = colon(Ideal(S, gens), Ideal(S, {f}));
    FreeResolution bottom = resolve_generators(S, quotient.generators());
    for (std::size_t k = 0; k < bottom.maps.size(); ++k) {
        GradedMatrix& m = bottom.maps[k];
        std::vector<int> rt = m.row_twists(), ct = m.col_twists();
        for (auto& t : ct)
            t += dq + D;
        for (auto& t : rt)
            t += (k == 0 ? D : dq + D);
        GradedMatrix shifted(S, rt, ct);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                shifted.set(i, j, k == 0 ? q * m.at(i, j) : m.at(i, j));
        m = std::move(shifted);
    }

    auto top_twists = [&](std::size_t k) { return top.twists(k); };
    auto bottom_twists = [&](std::size_t k) {
        if (k == 0)
            return std::vector<int>{D};
        return bottom.twists(k);
    };
    auto top_map = [&](std::size_t k) {
        return k <= top.length() ? top.d(k) : GradedMatrix(S, top_twists(k - 1), top_twists(k));
    };
    auto bottom_map = [&](std::size_t k) {
        return k <= bottom.length() ? bottom.d(k) : GradedMatrix(S, bottom_twists(k - 1), bottom_twists(k));
    };

    // comparison maps alpha_k : G_k -> F_k
    std::vector<GradedMatrix> alpha;
    {
        GradedMatrix a0(S, {0}, {D});
        a0.set(0, 0, f);
        alpha.push_back(std::move(a0));
    }
    const std::size_t length = std::max(top.length(), bottom.length() + 1);
    for (std::size_t k = 1; k < length; ++k) {
        const GradedMatrix target = alpha[k - 1] * bottom_map(k);
        GradedMatrix ak(S, top_twists(k), bottom_twists(k));
        if (ak.cols() > 0 && !target.is_zero()) {
            const ModuleMap lifter(top_map(k));
            for (std::size_t j = 0; j < target.cols(); ++j) {
                const auto h = lifter.lift(target.column(j));
                if (!h)
                    raise(Errc::Internal, "comparison map does not lift at step " + std::to_string(k));
                for (std::size_t i = 0; i < ak.rows(); ++i)
                    ak.set(i, j, (*h)[i]);
            }
        }
        alpha.push_back(std::move(ak));
    }

    FreeResolution cone{S, {}};
    for (std::size_t k = 1; k <= length; ++k) {
        const std::vector<int> fr = top_twists(k - 1);
        const std::vector<int> fc = top_twists(k);
        const std::vector<int> gr = k >= 2 ? bottom_twists(k - 2) : std::vector<int>{};
        const std::vector<int> gc = bottom_twists(k - 1);
        std::vector<int> rows = fr, cols = fc;
        rows.insert(rows.end(), gr.begin(), gr.end());
        cols.insert(cols.end(), gc.begin(), gc.end());
        GradedMatrix m(S, rows, cols);
        const GradedMatrix df = top_map(k);
        for (std::size_t i = 0; i < fr.size(); ++i)
            for (std::size_t j = 0; j < fc.size(); ++j)
                m.set(i, j, df.at(i, j));
        const GradedMatrix& a = alpha[k - 1];
        for (std::size_t i = 0; i < fr.size(); ++i)
            for (std::size_t j = 0; j < gc.size(); ++j)
                m.set(i, fc.size() + j, a.at(i, j));
        if (k >= 2) {
            const GradedMatrix dg = bottom_map(k - 1);
            for (std::size_t i = 0; i < gr.size(); ++i)
                for (std::size_t j = 0; j < gc.size(); ++j)
                    m.set(fr.size() + i, fc.size() + j, -dg.at(i, j));
        }
        cone.maps.push_back(std::move(m));
    }
    while (!cone.maps.empty() && cone.maps.back().cols() == 0)
        cone.maps.pop_back();
    return cone;
}

std::string betti_display(const BettiTable& b)
{
    int max_i = 0, min_row = 0, max_row = 0;
    bool first = true;
    for (const auto& [key, n] : b) {
        const int row = key.second - key.first;
        max_i = std::max(max_i, key.first);
        if (first) {
            min_row = max_row = row;
            first = false;
        }
        min_row = std::min(min_row, row);
        max_row = std::max(max_row, row);
    }
    std::vector<int> totals(static_cast<std::size_t>(max_i) + 1, 0);
    for (const auto& [key, n] : b)
        totals[static_cast<std::size_t>(key.first)] += n;

    std::size_t width = 1;
    for (int t : totals)
        width = std::max(width, std::to_string(t).size());
    std::ostringstream out;
    auto cell = [&](const std::string& s) { out << ' ' << std::string(width - s.size(), ' ') << s; };
    out << "       ";
    for (int i = 0; i <= max_i; ++i)
        cell(std::to_string(i));
    out << "\ntotal:";
    for (int t : totals)
        cell(std::to_string(t));
    out << '\n';
    for (int row = min_row; row <= max_row; ++row) {
        const std::string label = std::to_string(row) + ":";
        out << std::string(6 - std::min<std::size_t>(6, label.size()), ' ') << label;
        for (int i = 0; i <= max_i; ++i) {
            const auto it = b.find({i, i + row});
            cell(it == b.end() ? "." : std::to_string(it->second));
        }
        out << '\n';
    }
    return out.str();
}

std::string betti_to_string(const BettiTable& b)
{
    std::string out = "{";
    bool first = true;
    for (const auto& [key, n] : b) {
        if (key.first == 0)
            continue;
        out += (first ? "" : ", ") + std::string("(") + std::to_string(key.first) + "," + std::to_string(key.second) +
               "):" + std::to_string(n);
        first = false;
    }
    return out + "}";
}

} // namespace jonq
