#include "jonq/groebner/module.hpp"

#include <algorithm>
#include <utility>

#include "jonq/error.hpp"
#include "jonq/groebner/limits.hpp"

namespace jonq {

FreeModule::FreeModule(Ring r, std::size_t rk, std::vector<int> w) : ring(r), rank(rk), weights(std::move(w))
{
    if (!weights.empty() && weights.size() != rank)
        raise(Errc::DimensionMismatch, "module weights do not match the rank");
}

ModVec to_modvec(const Polynomial& p, std::uint32_t component)
{
    ModVec v;
    v.reserve(p.size());
    for (const auto& t : p.terms())
        v.push_back({component, t.monomial, t.coefficient});
    return v;
}

std::vector<Polynomial> to_columns(const ModVec& v, const FreeModule& m)
{
    std::vector<std::vector<Term>> parts(m.rank);
    for (const auto& t : v)
        parts[t.component].push_back({t.monomial, t.coefficient});
    std::vector<Polynomial> out;
    out.reserve(m.rank);
    for (auto& p : parts)
        out.push_back(Polynomial::from_sorted_terms(m.ring, std::move(p)));
    return out;
}

ModVec from_entries(const std::vector<Polynomial>& entries, const FreeModule& m)
{
    if (entries.size() != m.rank)
        raise(Errc::DimensionMismatch, "vector length " + std::to_string(entries.size()) + " in a module of rank " +
                                           std::to_string(m.rank));
    ModVec v;
    for (std::uint32_t c = 0; c < entries.size(); ++c) {
        const Polynomial e = entries[c].in_ring(m.ring);
        for (const auto& t : e.terms())
            v.push_back({c, t.monomial, t.coefficient});
    }
    return v;
}

Polynomial component_of(const ModVec& v, std::uint32_t component, const FreeModule& m)
{
    std::vector<Term> terms;
    for (const auto& t : v)
        if (t.component == component)
            terms.push_back({t.monomial, t.coefficient});
    return Polynomial::from_sorted_terms(m.ring, std::move(terms));
}

namespace {

// out = a[ia..] - c * mono * b[ib..]
void merge_sub(ModVec& out, const ModVec& a, std::size_t ia, const Scalar& c, const Monomial& mono, const ModVec& b,
               std::size_t ib, const FreeModule& m)
{
    out.clear();
    out.reserve(a.size() - ia + b.size() - ib);
    while (ia < a.size() && ib < b.size()) {
        const Monomial bm = b[ib].monomial * mono;
        const int cmp = m.compare(a[ia].component, a[ia].monomial, b[ib].component, bm);
        if (cmp > 0) {
            out.push_back(a[ia++]);
        } else if (cmp < 0) {
            out.push_back({b[ib].component, bm, -(c * b[ib].coefficient)});
            ++ib;
        } else {
            Scalar s = a[ia].coefficient - c * b[ib].coefficient;
            if (!s.is_zero())
                out.push_back({a[ia].component, a[ia].monomial, std::move(s)});
            ++ia;
            ++ib;
        }
    }
    for (; ia < a.size(); ++ia)
        out.push_back(a[ia]);
    for (; ib < b.size(); ++ib)
        out.push_back({b[ib].component, b[ib].monomial * mono, -(c * b[ib].coefficient)});
}

const ModVec* find_reducer(const ModTerm& lead, const std::vector<const ModVec*>& basis)
{
    for (const ModVec* g : basis) {
        const ModTerm& gl = g->front();
        if (gl.component == lead.component && gl.monomial.divides(lead.monomial))
            return g;
    }
    return nullptr;
}

ModVec reduce_by(const ModVec& v, const std::vector<const ModVec*>& basis, const FreeModule& m, bool tail)
{
    ModVec p = v;
    ModVec scratch;
    ModVec out;
    std::size_t head = 0;
    while (head < p.size()) {
        const ModTerm& lead = p[head];
        if (const ModVec* g = find_reducer(lead, basis)) {
            const ModTerm& gl = g->front();
            const Scalar c = lead.coefficient / gl.coefficient;
            const Monomial mono = lead.monomial / gl.monomial;
            merge_sub(scratch, p, head + 1, c, mono, *g, 1, m);
            std::swap(p, scratch);
            head = 0;
        } else {
            if (!tail) {
                out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(head), p.end());
                return out;
            }
            out.push_back(lead);
            ++head;
        }
    }
    return out;
}

int vec_degree(const ModVec& v, const FreeModule& m)
{
    int d = 0;
    for (const auto& t : v)
        d = std::max(d, static_cast<int>(t.monomial.degree()) + m.weight(t.component));
    return d;
}

ModVec spoly(const ModVec& f, const ModVec& g, const Monomial& lcm, const FreeModule& m)
{
    const Monomial mf = lcm / f.front().monomial;
    const Monomial mg = lcm / g.front().monomial;
    // f and g are monic
    ModVec lhs;
    lhs.reserve(f.size());
    for (std::size_t i = 1; i < f.size(); ++i)
        lhs.push_back({f[i].component, f[i].monomial * mf, f[i].coefficient});
    ModVec out;
    merge_sub(out, lhs, 0, Scalar::one(m.ring.field()), mg, g, 1, m);
    return out;
}

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint32_t component;
    int sugar;
};

class Buchberger {
public:
    explicit Buchberger(const FreeModule& m) : m_(m) {}

    std::vector<ModVec> run(std::vector<ModVec> gens)
    {
        std::sort(gens.begin(), gens.end(), [&](const ModVec& a, const ModVec& b) {
            if (a.empty() || b.empty())
                return !a.empty() && b.empty();
            return m_.compare(a.front().component, a.front().monomial, b.front().component, b.front().monomial) < 0;
        });
        for (auto& g : gens) {
            if (g.empty())
                continue;
            ModVec h = make_monic(reduce_by(g, active_ptrs(), m_, true));
            if (h.empty())
                continue;
            const int sugar = vec_degree(g, m_);
            insert(std::move(h), sugar);
        }

        const std::uint64_t budget = current_limits().budget;
        std::uint64_t reductions = 0;
        while (!pairs_.empty()) {
            const std::size_t pick = select();
            const Pair p = pairs_[pick];
            pairs_[pick] = pairs_.back();
            pairs_.pop_back();

            if (++reductions > budget) {
                engine_stats().reductions += reductions - 1;
                raise(Errc::BudgetExceeded,
                      "Groebner basis needs more than " + std::to_string(budget) + " S-pair reductions",
                      {{"budget", static_cast<std::int64_t>(budget)}});
            }
            ModVec s = spoly(elems_[p.i], elems_[p.j], p.lcm, m_);
            ModVec h = reduce_by(s, active_ptrs(), m_, true);
            if (h.empty())
                continue;
            const int sugar = std::max(p.sugar, vec_degree(h, m_));
            insert(make_monic(h), sugar);
        }
        engine_stats().reductions += reductions;
        ++engine_stats().bases;

        std::vector<ModVec> basis;
        for (std::size_t i = 0; i < elems_.size(); ++i)
            if (active_[i])
                basis.push_back(elems_[i]);
        return basis;
    }

private:
    std::vector<const ModVec*> active_ptrs() const
    {
        std::vector<const ModVec*> out;
        for (std::size_t i = 0; i < elems_.size(); ++i)
            if (active_[i])
                out.push_back(&elems_[i]);
        return out;
    }

    std::size_t select() const
    {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            const Pair& a = pairs_[k];
            const Pair& b = pairs_[best];
            if (a.sugar != b.sugar) {
                if (a.sugar < b.sugar)
                    best = k;
                continue;
            }
            const int c = m_.compare(a.component, a.lcm, b.component, b.lcm);
            if (c < 0 || (c == 0 && std::pair(a.i, a.j) < std::pair(b.i, b.j)))
                best = k;
        }
        return best;
    }

    void insert(ModVec h, int sugar)
    {
        const std::size_t hi = elems_.size();
        const ModTerm& hl = h.front();
        const bool product = m_.rank == 1;

        struct Candidate {
            std::size_t g;
            Monomial lcm;
            bool coprime;
            bool keep = true;
        };
        std::vector<Candidate> cands;
        for (std::size_t g = 0; g < elems_.size(); ++g) {
            if (!active_[g] || elems_[g].front().component != hl.component)
                continue;
            const Monomial& gm = elems_[g].front().monomial;
            cands.push_back({g, Monomial::lcm(hl.monomial, gm), product && hl.monomial.coprime(gm)});
        }
        // chain criterion among the new pairs (Gebauer-Moeller)
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (cands[a].coprime)
                continue;
            for (std::size_t b = 0; b < cands.size(); ++b) {
                const bool pending = b > a;
                const bool kept = b < a && cands[b].keep;
                if ((pending || kept) && cands[b].lcm.divides(cands[a].lcm)) {
                    cands[a].keep = false;
                    break;
                }
            }
        }
        // old pairs made redundant by h
        std::erase_if(pairs_, [&](const Pair& p) {
            if (p.component != hl.component || !hl.monomial.divides(p.lcm))
                return false;
            const Monomial li = Monomial::lcm(elems_[p.i].front().monomial, hl.monomial);
            const Monomial lj = Monomial::lcm(elems_[p.j].front().monomial, hl.monomial);
            return !(li == p.lcm) && !(lj == p.lcm);
        });
        for (const auto& c : cands) {
            if (!c.keep || c.coprime)
                continue;
            const ModTerm& gl = elems_[c.g].front();
            const int sg = sugars_[c.g] + static_cast<int>(c.lcm.degree() - gl.monomial.degree());
            const int sh = sugar + static_cast<int>(c.lcm.degree() - hl.monomial.degree());
            pairs_.push_back({c.g, hi, c.lcm, hl.component, std::max(sg, sh)});
        }
        for (std::size_t g = 0; g < elems_.size(); ++g) {
            if (active_[g] && elems_[g].front().component == hl.component &&
                hl.monomial.divides(elems_[g].front().monomial))
                active_[g] = false;
        }
        elems_.push_back(std::move(h));
        sugars_.push_back(sugar);
        active_.push_back(true);
    }

    const FreeModule& m_;
    std::vector<ModVec> elems_;
    std::vector<int> sugars_;
    std::vector<bool> active_;
    std::vector<Pair> pairs_;
};

} // namespace

ModVec sub_multiple(const ModVec& a, const Scalar& c, const Monomial& mono, const ModVec& b, const FreeModule& m)
{
    ModVec out;
    merge_sub(out, a, 0, c, mono, b, 0, m);
    return out;
}

ModVec scale(const ModVec& v, const Scalar& c)
{
    if (c.is_zero())
        return {};
    ModVec out = v;
    for (auto& t : out)
        t.coefficient *= c;
    return out;
}

ModVec make_monic(const ModVec& v)
{
    if (v.empty() || v.front().coefficient.is_one())
        return v;
    return scale(v, v.front().coefficient.inverse());
}

ModVec reduce(const ModVec& v, const std::vector<ModVec>& basis, const FreeModule& m)
{
    std::vector<const ModVec*> ptrs;
    for (const auto& g : basis)
        if (!g.empty())
            ptrs.push_back(&g);
    return reduce_by(v, ptrs, m, true);
}

std::vector<ModVec> module_groebner(std::vector<ModVec> gens, const FreeModule& m)
{
    std::vector<ModVec> basis = Buchberger(m).run(std::move(gens));

    // interreduce tails
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<const ModVec*> others;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != i)
                others.push_back(&basis[j]);
        ModVec tail(basis[i].begin() + 1, basis[i].end());
        ModVec reduced = reduce_by(tail, others, m, true);
        reduced.insert(reduced.begin(), basis[i].front());
        basis[i] = std::move(reduced);
    }
    std::sort(basis.begin(), basis.end(), [&](const ModVec& a, const ModVec& b) {
        return m.compare(a.front().component, a.front().monomial, b.front().component, b.front().monomial) < 0;
    });

    if (current_limits().certify) {
        ++engine_stats().certified;
        if (!check_certificate(basis, m))
            ++engine_stats().certificate_failures;
    }
    return basis;
}

bool check_certificate(const std::vector<ModVec>& basis, const FreeModule& m)
{
    std::vector<const ModVec*> ptrs;
    for (const auto& g : basis)
        ptrs.push_back(&g);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const ModTerm& a = basis[i].front();
            const ModTerm& b = basis[j].front();
            if (a.component != b.component)
                continue;
            ModVec f = make_monic(basis[i]);
            ModVec g = make_monic(basis[j]);
            const ModVec s = spoly(f, g, Monomial::lcm(a.monomial, b.monomial), m);
            if (!reduce_by(s, ptrs, m, false).empty())
                return false;
        }
    }
    return true;
}

} // namespace jonq
