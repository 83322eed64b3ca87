#include "bars/posbasis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bars {

void PosBasisParams::validate() const
{
    if (margin <= 1)
        throw std::invalid_argument("positive basis margin must exceed 1");
    if (delta <= 0)
        throw std::invalid_argument("positive basis rounding step must be positive");
    if (max_rounds < 1)
        throw std::invalid_argument("positive basis needs at least one round");
}

namespace {

std::vector<Integer> primitive_integer(const std::vector<Rational>& v)
{
    Integer den = 1;
    for (const auto& x : v)
        den = lcm(den, x.get_den());
    std::vector<Integer> z(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * den;
        z[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    if (g > 1)
        for (auto& x : z)
            x /= g;
    return z;
}

// Sparsest primitive integer relation among the columns of `set`.
std::vector<Integer> sparsest_relation(std::span<const QNum> set)
{
    auto kernel = null_space(coordinate_matrix(set));
    std::vector<Integer> best;
    std::size_t best_support = 0;
    for (const auto& v : kernel) {
        auto z = primitive_integer(v);
        std::size_t support = std::count_if(z.begin(), z.end(), [](const Integer& x) { return x != 0; });
        if (best.empty() || support < best_support) {
            best = std::move(z);
            best_support = support;
        }
    }
    return best;
}

void drop_duplicates(std::vector<QNum>& set)
{
    std::vector<QNum> out;
    for (auto& x : set)
        if (std::find(out.begin(), out.end(), x) == out.end())
            out.push_back(std::move(x));
    set = std::move(out);
}

// Replace set elements by differences along integer relations until the set
// is a basis. Every input stays a nonnegative integer combination of the
// current set: x -> x - y keeps x = (x - y) + y, and an element is dropped
// only when it equals a nonnegative integer combination of the others.
std::optional<std::vector<QNum>> reduce_by_relations(std::span<const QNum> lengths, std::size_t rank, unsigned max_steps,
                                                     unsigned& steps)
{
    std::vector<QNum> set(lengths.begin(), lengths.end());
    for (;;) {
        drop_duplicates(set);
        if (set.size() == rank)
            return set;
        if (steps >= max_steps)
            return std::nullopt;
        ++steps;

        std::vector<Integer> rel = sparsest_relation(set);
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rel.size(); ++i) {
            if (rel[i] > 0)
                pos.push_back(i);
            else if (rel[i] < 0)
                neg.push_back(i);
        }
        if (pos.size() == 1 && rel[pos[0]] == 1) {
            set.erase(set.begin() + static_cast<long>(pos[0]));
            continue;
        }
        if (neg.size() == 1 && rel[neg[0]] == -1) {
            set.erase(set.begin() + static_cast<long>(neg[0]));
            continue;
        }

        // Subtract y from x where the relation has opposite signs on them and
        // x is larger. Prefer the step that shrinks the relation the most,
        // then the larger remaining element.
        std::optional<std::size_t> bx, by;
        Integer best_norm;
        Rational best_value;
        bool undecided = false;
        for (std::size_t x = 0; x < set.size(); ++x) {
            for (std::size_t y = 0; y < set.size(); ++y) {
                if (rel[x] == 0 || rel[y] == 0 || (rel[x] > 0) == (rel[y] > 0))
                    continue;
                Ordering o;
                try {
                    o = qnum_compare(set[x], set[y]);
                } catch (const IndeterminateSign&) {
                    undecided = true;
                    continue;
                }
                if (o != Ordering::Greater)
                    continue;
                Integer norm = 0;
                for (std::size_t i = 0; i < rel.size(); ++i) {
                    Integer a = i == y ? Integer(rel[y] + rel[x]) : rel[i];
                    norm += abs(a);
                }
                Rational value = (set[x] - set[y]).interval().midpoint();
                if (!bx || norm < best_norm || (norm == best_norm && value > best_value)) {
                    bx = x;
                    by = y;
                    best_norm = norm;
                    best_value = value;
                }
            }
        }
        if (!bx) {
            if (undecided)
                throw IndeterminateSign("positive basis reduction cannot order the current generators");
            return std::nullopt;
        }
        set[*bx] = set[*bx] - set[*by];
    }
}

std::vector<Rational> coordinates_in(std::span<const QNum> basis, const QNum& x)
{
    auto c = solve_exact(coordinate_matrix(basis), x.coords());
    if (!c)
        throw std::logic_error("length outside the span of its basis");
    return std::move(*c);
}

QMatrix coefficient_matrix(std::span<const QNum> lengths, std::span<const QNum> basis)
{
    QMatrix m(lengths.size(), basis.size());
    QMatrix a = coordinate_matrix(basis);
    for (std::size_t j = 0; j < lengths.size(); ++j) {
        auto c = solve_exact(a, lengths[j].coords());
        if (!c)
            throw std::logic_error("length outside the span of its basis");
        for (std::size_t i = 0; i < basis.size(); ++i)
            m(j, i) = (*c)[i];
    }
    return m;
}

bool all_nonnegative(const QMatrix& m)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) < 0)
                return false;
    return true;
}

Rational round_to_step(double w, const Rational& step)
{
    Rational t = Rational(w) / step;
    t += Rational(1, 2);
    Integer n;
    mpz_fdiv_q(n.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    return Rational(n) * step;
}

// Regular simplex around the positive direction in the coordinates of an
// independent subset, rounded to a rational grid and verified exactly.
PosBasisResult simplex_construction(std::span<const QNum> lengths, const PosBasisParams& params)
{
    std::vector<std::size_t> idx = independent_subset(lengths);
    const std::size_t k = idx.size();
    std::vector<QNum> sub;
    for (auto i : idx)
        sub.push_back(lengths[i]);

    std::vector<std::vector<double>> v;
    for (const auto& x : lengths) {
        auto c = coordinates_in(sub, x);
        std::vector<double> d;
        for (const auto& q : c)
            d.push_back(to_double(q));
        v.push_back(std::move(d));
    }

    std::vector<double> dir(k);
    for (std::size_t i = 0; i < k; ++i)
        dir[i] = to_double(sub[i].interval().midpoint());
    double norm = std::sqrt(std::inner_product(dir.begin(), dir.end(), dir.begin(), 0.0));
    for (auto& x : dir)
        x /= norm;

    // Spread of the inputs after scaling onto the hyperplane <dir, p> = 1.
    double spread = 0;
    for (const auto& vj : v) {
        double l = std::inner_product(vj.begin(), vj.end(), dir.begin(), 0.0);
        double dist2 = 0;
        for (std::size_t i = 0; i < k; ++i) {
            double d = vj[i] / l - dir[i];
            dist2 += d * d;
        }
        spread = std::max(spread, std::sqrt(dist2));
    }
    spread = std::max(spread, 1e-9);
    const double circumradius = std::max<double>(1, static_cast<double>(k) - 1) * to_double(params.margin) * spread;

    // Vertices of a regular simplex in the plane orthogonal to (1,...,1),
    // reflected onto the plane orthogonal to dir.
    std::vector<double> u(k, 1.0 / std::sqrt(static_cast<double>(k)));
    std::vector<double> w(k);
    for (std::size_t i = 0; i < k; ++i)
        w[i] = u[i] - dir[i];
    double ww = std::inner_product(w.begin(), w.end(), w.begin(), 0.0);
    std::vector<std::vector<double>> vertices;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<double> s(k, -1.0 / static_cast<double>(k));
        s[i] += 1.0;
        double sn = std::sqrt(std::inner_product(s.begin(), s.end(), s.begin(), 0.0));
        if (k > 1)
            for (auto& x : s)
                x /= sn;
        else
            s.assign(1, 0.0);
        if (ww > 1e-30) {
            double proj = std::inner_product(w.begin(), w.end(), s.begin(), 0.0);
            for (std::size_t t = 0; t < k; ++t)
                s[t] -= 2 * proj / ww * w[t];
        }
        std::vector<double> vert(k);
        for (std::size_t t = 0; t < k; ++t)
            vert[t] = dir[t] + circumradius * s[t];
        vertices.push_back(std::move(vert));
    }

    Rational step = params.delta;
    bool undecided = false;
    for (unsigned round = 0; round < params.max_rounds; ++round, step /= 2) {
        QMatrix e(k, k);
        std::vector<QNum> candidate;
        for (std::size_t i = 0; i < k; ++i) {
            QNum b = QNum::zero(lengths.front().space());
            for (std::size_t t = 0; t < k; ++t) {
                e(i, t) = round_to_step(vertices[i][t], step);
                b += sub[t] * e(i, t);
            }
            candidate.push_back(std::move(b));
        }
        if (determinant(e) == 0)
            continue;
        bool positive = true;
        for (const auto& b : candidate) {
            try {
                positive = positive && qnum_sign(b) == Sign::Positive;
            } catch (const IndeterminateSign&) {
                undecided = true;
                positive = false;
            }
        }
        if (!positive)
            continue;
        QMatrix coeffs = coefficient_matrix(lengths, candidate);
        if (!all_nonnegative(coeffs))
            continue;
        PosBasisResult r;
        r.basis = std::move(candidate);
        r.coeffs = std::move(coeffs);
        r.method_used = PosBasisMethod::Simplex;
        r.iterations = round + 1;
        return r;
    }
    if (undecided)
        throw IndeterminateSign("simplex candidates could not be signed at declared precision");
    throw RefinementExhausted("no verified positive basis after " + std::to_string(params.max_rounds) + " rounds");
}

} // namespace

PosBasisResult positive_basis(std::span<const QNum> lengths, const PosBasisParams& params)
{
    params.validate();
    if (lengths.empty())
        throw std::invalid_argument("positive basis of an empty list");
    for (const auto& x : lengths)
        if (qnum_sign(x) != Sign::Positive)
            throw std::invalid_argument("positive basis inputs must be positive, got " + x.to_string());
    const std::size_t k = rank_over_Q(lengths);

    if (params.method != PosBasisMethod::Simplex) {
        unsigned steps = 0;
        auto reduced = reduce_by_relations(lengths, k, params.max_reduction_steps, steps);
        if (reduced) {
            std::sort(reduced->begin(), reduced->end(), qnum_less);
            PosBasisResult r;
            r.coeffs = coefficient_matrix(lengths, *reduced);
            r.basis = std::move(*reduced);
            r.method_used = PosBasisMethod::Reduction;
            r.iterations = steps;
            return r;
        }
        if (params.method == PosBasisMethod::Reduction)
            throw RefinementExhausted("relation reduction did not finish in " +
                                      std::to_string(params.max_reduction_steps) + " steps");
    }
    return simplex_construction(lengths, params);
}

PosBasisResult positive_integer_basis(std::span<const QNum> lengths, const PosBasisParams& params)
{
    PosBasisResult r = positive_basis(lengths, params);
    const std::size_t n = r.coeffs.rows(), k = r.coeffs.cols();
    IntMatrix ints(n, std::vector<Integer>(k));
    for (std::size_t i = 0; i < k; ++i) {
        Integer d = 1;
        for (std::size_t j = 0; j < n; ++j)
            d = lcm(d, r.coeffs(j, i).get_den());
        r.basis[i] = r.basis[i] / Rational(d);
        for (std::size_t j = 0; j < n; ++j) {
            r.coeffs(j, i) *= d;
            ints[j][i] = r.coeffs(j, i).get_num();
        }
    }
    r.integer_coeffs = std::move(ints);
    if (auto defect = find_basis_defect(lengths, r))
        throw std::logic_error("integer positive basis failed re-verification: " + *defect);
    return r;
}

std::optional<std::string> find_basis_defect(std::span<const QNum> lengths, const PosBasisResult& result)
{
    const std::size_t n = lengths.size(), k = result.basis.size();
    if (result.coeffs.rows() != n || result.coeffs.cols() != k)
        return "coefficient matrix has the wrong shape";
    for (const auto& b : result.basis) {
        try {
            if (qnum_sign(b) != Sign::Positive)
                return "basis element " + b.to_string() + " is not positive";
        } catch (const IndeterminateSign&) {
            return "sign of basis element " + b.to_string() + " is undecided";
        }
    }
    if (!all_nonnegative(result.coeffs))
        return "negative coefficient";
    for (std::size_t j = 0; j < n; ++j) {
        QNum sum = QNum::zero(lengths[j].space());
        for (std::size_t i = 0; i < k; ++i)
            sum += result.basis[i] * result.coeffs(j, i);
        if (!(sum == lengths[j]))
            return "length " + lengths[j].to_string() + " is not reconstructed (got " + sum.to_string() + ")";
    }
    if (rank_over_Q(result.basis) != k || k != rank_over_Q(lengths))
        return "basis rank differs from the rank of the lengths";
    if (result.integer_coeffs) {
        const auto& ints = *result.integer_coeffs;
        if (ints.size() != n)
            return "integer coefficient matrix has the wrong shape";
        for (std::size_t j = 0; j < n; ++j) {
            if (ints[j].size() != k)
                return "integer coefficient matrix has the wrong shape";
            for (std::size_t i = 0; i < k; ++i)
                if (Rational(ints[j][i]) != result.coeffs(j, i))
                    return "integer coefficients disagree with rational coefficients";
        }
    }
    return std::nullopt;
}

} // namespace bars
