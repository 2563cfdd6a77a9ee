#include "jonq/resolve/syzygy.hpp"

#include <algorithm>
#include <numeric>

#include "jonq/error.hpp"

namespace jonq {

namespace {

std::vector<ModVec> column_vectors(const GradedMatrix& m, const FreeModule& fm)
{
    std::vector<ModVec> out;
    for (std::size_t j = 0; j < m.cols(); ++j)
        out.push_back(from_entries(m.column(j), fm));
    return out;
}

} // namespace

Submodule::Submodule(const GradedMatrix& columns)
    : module_(columns.ring(), columns.rows(), columns.row_twists()),
      basis_(module_groebner(column_vectors(columns, module_), module_))
{
}

bool Submodule::contains(const std::vector<Polynomial>& v) const
{
    return reduce(from_entries(v, module_), basis_, module_).empty();
}

bool Submodule::contains_all(const GradedMatrix& other) const
{
    if (other.rows() != module_.rank)
        raise(Errc::DimensionMismatch, "columns live in a free module of another rank");
    for (std::size_t j = 0; j < other.cols(); ++j)
        if (!contains(other.column(j)))
            return false;
    return true;
}

bool same_span(const GradedMatrix& a, const GradedMatrix& b)
{
    return Submodule(a).contains_all(b) && Submodule(b).contains_all(a);
}

ModuleMap::ModuleMap(const GradedMatrix& m) : map_(m)
{
    std::vector<int> weights = m.row_twists();
    weights.insert(weights.end(), m.col_twists().begin(), m.col_twists().end());
    augmented_ = FreeModule(m.ring(), m.rows() + m.cols(), weights);
    std::vector<ModVec> gens;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::vector<Polynomial> entries = m.column(j);
        for (std::size_t k = 0; k < m.cols(); ++k)
            entries.push_back(k == j ? Polynomial::constant(m.ring(), 1) : Polynomial(m.ring()));
        gens.push_back(from_entries(entries, augmented_));
    }
    basis_ = module_groebner(std::move(gens), augmented_);
}

GradedMatrix ModuleMap::kernel() const
{
    const auto offset = static_cast<std::uint32_t>(map_.rows());
    std::vector<std::vector<Polynomial>> columns;
    std::vector<int> degrees;
    for (const auto& v : basis_) {
        if (v.front().component < offset)
            continue;
        std::vector<Polynomial> col;
        for (std::uint32_t c = 0; c < map_.cols(); ++c)
            col.push_back(component_of(v, offset + c, augmented_));
        degrees.push_back(static_cast<int>(v.front().monomial.degree()) + augmented_.weight(v.front().component));
        columns.push_back(std::move(col));
    }
    GradedMatrix k(map_.ring(), map_.col_twists(), degrees);
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < map_.cols(); ++i)
            k.set(i, j, columns[j][i]);
    return minimal_columns(k);
}

std::optional<std::vector<Polynomial>> ModuleMap::lift(const std::vector<Polynomial>& v) const
{
    if (v.size() != map_.rows())
        raise(Errc::DimensionMismatch, "lift target has the wrong length");
    std::vector<Polynomial> entries = v;
    for (std::size_t k = 0; k < map_.cols(); ++k)
        entries.push_back(Polynomial(map_.ring()));
    const ModVec r = reduce(from_entries(entries, augmented_), basis_, augmented_);
    const auto offset = static_cast<std::uint32_t>(map_.rows());
    if (!r.empty() && r.front().component < offset)
        return std::nullopt;
    std::vector<Polynomial> h;
    for (std::uint32_t c = 0; c < map_.cols(); ++c)
        h.push_back(-component_of(r, offset + c, augmented_));
    return h;
}

GradedMatrix syzygies(const GradedMatrix& m)
{
    if (m.cols() == 0)
        return GradedMatrix(m.ring(), {}, {});
    return ModuleMap(m).kernel();
}

GradedMatrix minimal_columns(const GradedMatrix& m)
{
    std::vector<std::size_t> order(m.cols());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return m.col_twists()[a] < m.col_twists()[b]; });

    const FreeModule fm(m.ring(), m.rows(), m.row_twists());
    std::vector<ModVec> kept_vecs;
    std::vector<std::size_t> kept;
    std::vector<ModVec> basis;
    bool stale = false;
    for (std::size_t j : order) {
        const ModVec v = from_entries(m.column(j), fm);
        if (v.empty())
            continue;
        if (stale) {
            basis = module_groebner(kept_vecs, fm);
            stale = false;
        }
        if (!kept.empty() && reduce(v, basis, fm).empty())
            continue;
        kept.push_back(j);
        kept_vecs.push_back(v);
        stale = true;
    }

    std::vector<int> twists;
    for (std::size_t j : kept)
        twists.push_back(m.col_twists()[j]);
    GradedMatrix out(m.ring(), m.row_twists(), twists);
    for (std::size_t k = 0; k < kept.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i)
            out.set(i, k, m.at(i, kept[k]));
    return out;
}

} // namespace jonq
