#include "jonq/resolve/graded_matrix.hpp"

#include "jonq/error.hpp"

namespace jonq {

GradedMatrix::GradedMatrix(Ring ring, std::vector<int> row_twists, std::vector<int> col_twists)
    : ring_(ring), row_twists_(std::move(row_twists)), col_twists_(std::move(col_twists)),
      entries_(row_twists_.size() * col_twists_.size(), Polynomial(ring))
{
}

GradedMatrix::GradedMatrix(Ring ring, const PolyMatrix& entries, std::vector<int> row_twists, std::vector<int> col_twists)
    : GradedMatrix(ring, std::move(row_twists), std::move(col_twists))
{
    if (entries.size() != rows())
        raise(Errc::DimensionMismatch, "matrix has " + std::to_string(entries.size()) + " rows but " +
                                           std::to_string(rows()) + " row twists");
    for (std::size_t i = 0; i < rows(); ++i) {
        if (entries[i].size() != cols())
            raise(Errc::DimensionMismatch, "matrix row " + std::to_string(i) + " has the wrong length");
        for (std::size_t j = 0; j < cols(); ++j)
            set(i, j, entries[i][j]);
    }
}

GradedMatrix GradedMatrix::row(Ring ring, const std::vector<Polynomial>& gens)
{
    std::vector<int> twists;
    for (const auto& g : gens)
        twists.push_back(graded_degree(g));
    GradedMatrix m(ring, {0}, twists);
    for (std::size_t j = 0; j < gens.size(); ++j)
        m.set(0, j, gens[j]);
    return m;
}

void GradedMatrix::set(std::size_t i, std::size_t j, Polynomial p)
{
    if (!p.is_zero()) {
        const int want = col_twists_[j] - row_twists_[i];
        const int got = graded_degree(p);
        if (got != want)
            raise(Errc::DegreeMismatch,
                  "entry (" + std::to_string(i) + "," + std::to_string(j) + ") has degree " + std::to_string(got) +
                      ", twists require " + std::to_string(want),
                  {{"row", static_cast<std::int64_t>(i)}, {"col", static_cast<std::int64_t>(j)}});
        p = p.in_ring(ring_);
    } else {
        p = Polynomial(ring_);
    }
    entries_[i * cols() + j] = std::move(p);
}

std::vector<Polynomial> GradedMatrix::column(std::size_t j) const
{
    std::vector<Polynomial> out;
    out.reserve(rows());
    for (std::size_t i = 0; i < rows(); ++i)
        out.push_back(at(i, j));
    return out;
}

PolyMatrix GradedMatrix::entries() const
{
    PolyMatrix out(rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j)
            out[i].push_back(at(i, j));
    return out;
}

bool GradedMatrix::is_zero() const
{
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

bool GradedMatrix::find_unit(std::size_t& row, std::size_t& col) const
{
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j)
            if (!at(i, j).is_zero() && at(i, j).is_constant()) {
                row = i;
                col = j;
                return true;
            }
    return false;
}

GradedMatrix GradedMatrix::without_row(std::size_t r) const
{
    std::vector<int> rt = row_twists_;
    rt.erase(rt.begin() + static_cast<std::ptrdiff_t>(r));
    GradedMatrix out(ring_, rt, col_twists_);
    for (std::size_t i = 0, k = 0; i < rows(); ++i) {
        if (i == r)
            continue;
        for (std::size_t j = 0; j < cols(); ++j)
            out.entries_[k * cols() + j] = at(i, j);
        ++k;
    }
    return out;
}

GradedMatrix GradedMatrix::without_column(std::size_t c) const
{
    std::vector<int> ct = col_twists_;
    ct.erase(ct.begin() + static_cast<std::ptrdiff_t>(c));
    GradedMatrix out(ring_, row_twists_, ct);
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0, k = 0; j < cols(); ++j) {
            if (j == c)
                continue;
            out.entries_[i * out.cols() + k++] = at(i, j);
        }
    return out;
}

GradedMatrix GradedMatrix::operator-() const
{
    GradedMatrix out = *this;
    for (auto& e : out.entries_)
        e = -e;
    return out;
}

std::string GradedMatrix::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < rows(); ++i) {
        out += "| ";
        for (std::size_t j = 0; j < cols(); ++j)
            out += (j ? ", " : "") + at(i, j).to_string();
        out += " |\n";
    }
    return out;
}

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b)
{
    if (a.cols() != b.rows())
        raise(Errc::DimensionMismatch, "cannot compose a " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                           " matrix with a " + std::to_string(b.rows()) + "x" +
                                           std::to_string(b.cols()) + " one");
    GradedMatrix out(a.ring(), a.row_twists(), b.col_twists());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Polynomial s(a.ring());
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (!a.at(i, k).is_zero() && !b.at(k, j).is_zero())
                    s += a.at(i, k) * b.at(k, j);
            out.set(i, j, std::move(s));
        }
    return out;
}

} // namespace jonq
