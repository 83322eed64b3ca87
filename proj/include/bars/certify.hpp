#pragma once

// Additive box functions and the impossibility certificates built from them.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bars/exactnum.hpp"
#include "bars/geometry.hpp"
#include "bars/qlinalg.hpp"

namespace bars {

// Product over axes of factor(side); an empty factor is the side itself.
struct ProductForm {
    std::vector<std::optional<QFunctional>> factors;
};

// Square block of a determinant form. Columns are the listed axes; the rows
// are the raw sides (when identity_row is set) followed by each functional
// applied to the sides.
struct DeterminantBlock {
    std::vector<std::size_t> axes;
    bool identity_row = false;
    std::vector<QFunctional> functionals;
};

// Product of the block determinants times every side whose axis is in no
// block.
struct DeterminantForm {
    std::size_t dimension = 0;
    std::vector<DeterminantBlock> blocks;
};

// Signed vertex sum of F(p) = alpha * [p - base in G^n] * (1 + sum_i (p_i - base_i))^exponent,
// with sign +1 on vertices lying on an even number of lower faces.
struct VertexForm {
    std::vector<QNum> base;
    std::vector<QNum> generators;
    Rational alpha{1};
    unsigned exponent = 0;
};

using AdditiveFn = std::variant<ProductForm, DeterminantForm, VertexForm>;

std::size_t additive_dimension(const AdditiveFn& fn);

SymPoly eval_additive(const AdditiveFn& fn, const PlacedBox& b);
SymPoly eval_additive(const AdditiveFn& fn, const BoxSpec& b);

// Sum over the pieces equals the value on the whole, exactly.
bool check_additivity(const AdditiveFn& fn, const Dissection& d);

enum class CertificateKind { DehnRect, Bar3D, KBarGeneral, T3, T4, Goodness };

std::string to_string(CertificateKind kind);

struct Certificate {
    CertificateKind kind;
    AdditiveFn function;
    std::vector<QNum> box;
    SymPoly whole_value;
    QInterval sign_witness;
    std::string narrative;
};

// nullopt when w and h are commensurable.
std::optional<Certificate> dehn_rectangle_certificate(const QNum& w, const QNum& h);

// nullopt when the sides span at most k dimensions over Q.
std::optional<Certificate> bar_impossibility_certificate(const BoxSpec& box, std::size_t k);

// 4D box a x a x b x b against pieces of type x x x y.
std::optional<Certificate> theorem3_certificate(const QNum& a, const QNum& b);

// 4D box a x a x a x b against pieces of type x x y y.
std::optional<Certificate> theorem4_certificate(const QNum& a, const QNum& b);

std::string certificate_text(const Certificate& c);

} // namespace bars
