#include "bars/qlinalg.hpp"

namespace bars {

namespace {

void column_combine(IntMatrix& m, std::size_t p, std::size_t j, const Integer& s, const Integer& t, const Integer& u,
                    const Integer& v)
{
    // (col_p, col_j) <- (s col_p + t col_j, u col_p + v col_j)
    for (auto& row : m) {
        Integer a = row[p], b = row[j];
        row[p] = s * a + t * b;
        row[j] = u * a + v * b;
    }
}

} // namespace

HermiteForm hermite_column_form(const IntMatrix& a)
{
    std::size_t rows = a.size();
    std::size_t cols = rows ? a.front().size() : 0;
    HermiteForm out;
    out.h = a;
    out.u.assign(cols, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < cols; ++i)
        out.u[i][i] = 1;
    out.pivot_rows.assign(cols, -1);

    IntMatrix& h = out.h;
    std::size_t p = 0;
    for (std::size_t r = 0; r < rows && p < cols; ++r) {
        for (std::size_t j = p + 1; j < cols; ++j) {
            if (h[r][j] == 0)
                continue;
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h[r][p].get_mpz_t(), h[r][j].get_mpz_t());
            Integer u = -h[r][j] / g, v = h[r][p] / g;
            column_combine(h, p, j, s, t, u, v);
            column_combine(out.u, p, j, s, t, u, v);
        }
        if (h[r][p] == 0)
            continue;
        if (h[r][p] < 0) {
            for (auto& row : h)
                row[p] = -row[p];
            for (auto& row : out.u)
                row[p] = -row[p];
        }
        for (std::size_t j = 0; j < p; ++j) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h[r][j].get_mpz_t(), h[r][p].get_mpz_t());
            if (q == 0)
                continue;
            for (auto& row : h)
                row[j] -= q * row[p];
            for (auto& row : out.u)
                row[j] -= q * row[p];
        }
        out.pivot_rows[p] = static_cast<long>(r);
        ++p;
    }
    return out;
}

std::optional<std::vector<Integer>> lattice_membership(const QNum& x, std::span<const QNum> generators)
{
    const std::size_t d = x.dimension();
    const std::size_t m = generators.size();
    for (const auto& g : generators)
        require_same_space(x.space(), g.space());
    if (m == 0) {
        if (x.is_zero())
            return std::vector<Integer>{};
        return std::nullopt;
    }

    // Scale each coordinate row by the lcm of its denominators; integer
    // solutions are unchanged.
    IntMatrix a(d, std::vector<Integer>(m));
    std::vector<Integer> b(d);
    for (std::size_t i = 0; i < d; ++i) {
        Integer den = x.coords()[i].get_den();
        for (const auto& g : generators)
            den = lcm(den, g.coords()[i].get_den());
        for (std::size_t j = 0; j < m; ++j) {
            Rational v = generators[j].coords()[i] * den;
            a[i][j] = v.get_num();
        }
        Rational v = x.coords()[i] * den;
        b[i] = v.get_num();
    }

    HermiteForm hf = hermite_column_form(a);
    // Forward substitution on H y = b, pivot columns in row order.
    std::vector<Integer> y(m);
    std::vector<Integer> residual = b;
    std::size_t col = 0;
    for (std::size_t r = 0; r < d; ++r) {
        if (col < m && hf.pivot_rows[col] == static_cast<long>(r)) {
            const Integer& piv = hf.h[r][col];
            if (residual[r] % piv != 0)
                return std::nullopt;
            y[col] = residual[r] / piv;
            for (std::size_t i = r; i < d; ++i)
                residual[i] -= hf.h[i][col] * y[col];
            ++col;
        } else if (residual[r] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Integer> z(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            z[i] += hf.u[i][j] * y[j];
    return z;
}

} // namespace bars
