#pragma once

// Positive bases: given positive reals x_1..x_n spanning a k-dimensional
// Q-space, find positive e_1..e_k such that every x_j is a nonnegative
// (rational, then integer) combination of them.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bars/exactnum.hpp"
#include "bars/qlinalg.hpp"

namespace bars {

enum class PosBasisMethod {
    // Relation reduction first, simplex construction if it does not finish.
    Auto,
    // Integer-relation reduction of the input set only.
    Reduction,
    // Rounded regular simplex around the positive direction only.
    Simplex,
};

struct PosBasisParams {
    // Inradius of the simplex relative to the spread of the normalized inputs.
    Rational margin{2};
    // First rounding step for simplex vertices; halved after every failed round.
    Rational delta{1, 1024};
    unsigned max_rounds = 40;
    PosBasisMethod method = PosBasisMethod::Auto;
    unsigned max_reduction_steps = 10000;

    void validate() const;
};

struct PosBasisResult {
    std::vector<QNum> basis;
    // coeffs(j, i) is the weight of basis[i] in lengths[j].
    QMatrix coeffs;
    std::optional<IntMatrix> integer_coeffs;
    PosBasisMethod method_used = PosBasisMethod::Auto;
    // Reduction steps or simplex rounds spent.
    unsigned iterations = 0;
};

PosBasisResult positive_basis(std::span<const QNum> lengths, const PosBasisParams& params = {});

// positive_basis followed by dividing each basis element by the lcm of the
// denominators in its coefficient column.
PosBasisResult positive_integer_basis(std::span<const QNum> lengths, const PosBasisParams& params = {});

// Exact check of a claimed result: positive basis elements, nonnegative
// coefficients, exact reconstruction, matching rank, and (when present)
// integer coefficients equal to the rational ones. Returns a description of
// the first defect, or nullopt when the result is sound.
std::optional<std::string> find_basis_defect(std::span<const QNum> lengths, const PosBasisResult& result);

} // namespace bars
