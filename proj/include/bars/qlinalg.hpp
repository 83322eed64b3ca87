#pragma once

// Exact linear algebra over Q and integer lattice membership.

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "bars/exactnum.hpp"

namespace bars {

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;
    std::vector<Rational> col(std::size_t c) const;
    QMatrix transposed() const;
    std::vector<Rational> operator*(std::span<const Rational> x) const;

    friend bool operator==(const QMatrix& a, const QMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

// Q-linear map from the symbol space to Q, stored as a covector over the
// space's coordinates (unit first).
struct QFunctional {
    SpacePtr space;
    std::vector<Rational> row;

    Rational operator()(const QNum& x) const;
    QFunctional operator*(const Rational& c) const;
};

// Matrix whose columns are the coordinate vectors of the given numbers.
QMatrix coordinate_matrix(std::span<const QNum> numbers);

std::size_t matrix_rank(const QMatrix& a);
Rational determinant(const QMatrix& a);
// Basis of {x : A x = 0}; one vector per free column, free entry set to 1.
std::vector<std::vector<Rational>> null_space(const QMatrix& a);

std::size_t rank_over_Q(std::span<const QNum> lengths);

// Greedy left-to-right maximal independent subset.
std::vector<std::size_t> independent_subset(std::span<const QNum> lengths);

// f_i(basis[j]) = delta_ij. Throws DependentInput if the basis is dependent.
std::vector<QFunctional> dual_functionals(std::span<const QNum> basis);

// Witness of inconsistency: y with y^T A = 0 and y . b != 0.
struct Inconsistency {
    std::vector<Rational> witness;
};

// Exact solve of A x = b. Underdetermined consistent systems get the pivot
// solution (free variables zero), which is deterministic.
std::variant<std::vector<Rational>, Inconsistency> solve_or_witness(const QMatrix& a, std::span<const Rational> b);
std::optional<std::vector<Rational>> solve_exact(const QMatrix& a, std::span<const Rational> b);

using IntMatrix = std::vector<std::vector<Integer>>;

// Column-style Hermite normal form: A U = H with U unimodular and H lower
// echelon (pivot entries positive, entries left of a pivot reduced modulo it).
struct HermiteForm {
    IntMatrix h;
    IntMatrix u;
    // pivot_rows[j] is the row of column j's pivot, or -1 for a zero column.
    std::vector<long> pivot_rows;
};

HermiteForm hermite_column_form(const IntMatrix& a);

// Integers z with x = sum z_i * generators[i], or nullopt when x is not in
// the subgroup the generators span.
std::optional<std::vector<Integer>> lattice_membership(const QNum& x, std::span<const QNum> generators);

} // namespace bars
