#include "bars/qlinalg.hpp"

#include <stdexcept>

namespace bars {

QMatrix QMatrix::identity(std::size_t n)
{
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows)
{
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    QMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionMismatch("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

std::vector<Rational> QMatrix::row(std::size_t r) const
{
    return std::vector<Rational>(a_.begin() + static_cast<long>(r * cols_), a_.begin() + static_cast<long>((r + 1) * cols_));
}

std::vector<Rational> QMatrix::col(std::size_t c) const
{
    std::vector<Rational> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

QMatrix QMatrix::transposed() const
{
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

std::vector<Rational> QMatrix::operator*(std::span<const Rational> x) const
{
    if (x.size() != cols_)
        throw DimensionMismatch("matrix-vector size mismatch");
    std::vector<Rational> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            y[r] += (*this)(r, c) * x[c];
    return y;
}

Rational QFunctional::operator()(const QNum& x) const
{
    require_same_space(space, x.space());
    Rational acc(0);
    for (std::size_t i = 0; i < row.size(); ++i)
        acc += row[i] * x.coords()[i];
    return acc;
}

QFunctional QFunctional::operator*(const Rational& c) const
{
    QFunctional f = *this;
    for (auto& x : f.row)
        x *= c;
    return f;
}

QMatrix coordinate_matrix(std::span<const QNum> numbers)
{
    if (numbers.empty())
        return {};
    const SpacePtr& space = numbers.front().space();
    QMatrix m(space->dimension(), numbers.size());
    for (std::size_t j = 0; j < numbers.size(); ++j) {
        require_same_space(space, numbers[j].space());
        for (std::size_t i = 0; i < space->dimension(); ++i)
            m(i, j) = numbers[j].coords()[i];
    }
    return m;
}

namespace {

// Gauss-Jordan elimination in place. Returns the pivot column of each
// reduced row. When `track` is given, the same row operations are applied
// to it (used to recover left-null witnesses).
std::vector<std::size_t> reduce(QMatrix& m, std::size_t col_limit, QMatrix* track = nullptr)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < col_limit && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        auto swap_rows = [](QMatrix& a, std::size_t i, std::size_t j) {
            for (std::size_t k = 0; k < a.cols(); ++k)
                std::swap(a(i, k), a(j, k));
        };
        if (p != r) {
            swap_rows(m, p, r);
            if (track)
                swap_rows(*track, p, r);
        }
        Rational inv = 1 / m(r, c);
        for (std::size_t k = 0; k < m.cols(); ++k)
            m(r, k) *= inv;
        if (track)
            for (std::size_t k = 0; k < track->cols(); ++k)
                (*track)(r, k) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            Rational f = m(i, c);
            for (std::size_t k = 0; k < m.cols(); ++k)
                m(i, k) -= f * m(r, k);
            if (track)
                for (std::size_t k = 0; k < track->cols(); ++k)
                    (*track)(i, k) -= f * (*track)(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t matrix_rank(const QMatrix& a)
{
    QMatrix m = a;
    return reduce(m, m.cols()).size();
}

Rational determinant(const QMatrix& a)
{
    if (a.rows() != a.cols())
        throw DimensionMismatch("determinant of a non-square matrix");
    QMatrix m = a;
    Rational det(1);
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k)
                std::swap(m(p, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0)
                continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t k = c; k < n; ++k)
                m(i, k) -= f * m(c, k);
        }
    }
    return det;
}

std::vector<std::vector<Rational>> null_space(const QMatrix& a)
{
    QMatrix m = a;
    std::vector<std::size_t> pivots = reduce(m, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank_over_Q(std::span<const QNum> lengths)
{
    if (lengths.empty())
        return 0;
    return matrix_rank(coordinate_matrix(lengths));
}

std::vector<std::size_t> independent_subset(std::span<const QNum> lengths)
{
    if (lengths.empty())
        return {};
    // Pivot columns of the coordinate matrix are exactly the greedy
    // left-to-right choice.
    QMatrix m = coordinate_matrix(lengths);
    return reduce(m, m.cols());
}

std::vector<QFunctional> dual_functionals(std::span<const QNum> basis)
{
    if (basis.empty())
        return {};
    const SpacePtr& space = basis.front().space();
    QMatrix rows = coordinate_matrix(basis).transposed(); // one row per basis number
    if (matrix_rank(rows) != basis.size())
        throw DependentInput("dual functionals need Q-linearly independent inputs");
    std::vector<QFunctional> out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<Rational> e(basis.size());
        e[i] = 1;
        auto x = solve_exact(rows, e);
        if (!x)
            throw DependentInput("dual functional system is inconsistent");
        out.push_back(QFunctional{space, std::move(*x)});
    }
    return out;
}

std::variant<std::vector<Rational>, Inconsistency> solve_or_witness(const QMatrix& a, std::span<const Rational> b)
{
    if (b.size() != a.rows())
        throw DimensionMismatch("right-hand side length does not match the matrix");
    QMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    QMatrix track = QMatrix::identity(a.rows());
    std::vector<std::size_t> pivots = reduce(aug, a.cols(), &track);
    for (std::size_t r = pivots.size(); r < a.rows(); ++r)
        if (aug(r, a.cols()) != 0)
            return Inconsistency{track.row(r)};
    std::vector<Rational> x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug(i, a.cols());
    return x;
}

std::optional<std::vector<Rational>> solve_exact(const QMatrix& a, std::span<const Rational> b)
{
    auto r = solve_or_witness(a, b);
    if (auto* x = std::get_if<std::vector<Rational>>(&r))
        return std::move(*x);
    return std::nullopt;
}

} // namespace bars
