#pragma once

// Exact numbers: GMP rationals, declared symbol spaces, Q-linear
// combinations of symbols (QNum), rational intervals, and polynomials.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bars/errors.hpp"

namespace bars {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };
enum class Ordering { Less, Equal, Greater };

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// Accepts decimal and scientific notation ("1.41421", "-0.5", "1e-12",
// "2.5E3") as well as the rational forms above. The result is exact.
Rational parse_decimal(std::string_view text);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

Integer lcm(const Integer& a, const Integer& b);

// Closed rational interval [lo, hi].
class QInterval {
public:
    QInterval() = default;
    QInterval(Rational lo, Rational hi);
    static QInterval point(const Rational& x) { return QInterval(x, x); }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational midpoint() const;
    Rational width() const { return hi_ - lo_; }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool excludes_zero() const { return lo_ > 0 || hi_ < 0; }
    // Sign of every point in the interval; throws IndeterminateSign when the
    // interval straddles or touches zero without being exactly {0}.
    Sign sign() const;

    QInterval operator+(const QInterval& o) const;
    QInterval operator-(const QInterval& o) const;
    QInterval operator-() const;
    QInterval operator*(const QInterval& o) const;
    QInterval scaled(const Rational& c) const;
    QInterval pow(unsigned n) const;

    std::string to_string() const;

private:
    Rational lo_{0};
    Rational hi_{0};
};

// A declared real: name, decimal midpoint and radius.
struct Symbol {
    std::string name;
    Rational approx;
    Rational eps;

    QInterval range() const { return QInterval(approx - eps, approx + eps); }
};

// Ordered set of symbols asserted to be Q-linearly independent together
// with 1. Coordinate 0 of every QNum is the rational unit; coordinate i+1
// is symbol i.
class SymbolSpace {
public:
    static std::shared_ptr<const SymbolSpace> make(std::vector<Symbol> symbols);
    // Shared space with no symbols (pure rationals).
    static std::shared_ptr<const SymbolSpace> rational();

    std::size_t symbol_count() const { return symbols_.size(); }
    std::size_t dimension() const { return symbols_.size() + 1; }
    const Symbol& symbol(std::size_t i) const { return symbols_.at(i); }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    std::optional<std::size_t> find(std::string_view name) const;

    QInterval coordinate_range(std::size_t coord) const;
    std::string coordinate_name(std::size_t coord) const;

private:
    explicit SymbolSpace(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
    std::vector<Symbol> symbols_;
};

using SpacePtr = std::shared_ptr<const SymbolSpace>;

void require_same_space(const SpacePtr& a, const SpacePtr& b);

// A real number given as a rational coordinate vector over a symbol space.
class QNum {
public:
    QNum(SpacePtr space, std::vector<Rational> coords);

    static QNum zero(SpacePtr space);
    static QNum rational(SpacePtr space, const Rational& value);
    // The declared symbol with the given index (not coordinate).
    static QNum symbol(SpacePtr space, std::size_t index);

    const SpacePtr& space() const { return space_; }
    const std::vector<Rational>& coords() const { return coords_; }
    std::size_t dimension() const { return coords_.size(); }

    bool is_zero() const;
    bool is_rational() const;
    std::optional<Rational> as_rational() const;

    // Enclosure of the real value from the symbol ranges.
    QInterval interval() const;

    QNum operator+(const QNum& o) const;
    QNum operator-(const QNum& o) const;
    QNum operator-() const;
    QNum operator*(const Rational& c) const;
    QNum operator/(const Rational& c) const;
    QNum& operator+=(const QNum& o);
    QNum& operator-=(const QNum& o);

    friend QNum operator*(const Rational& c, const QNum& x) { return x * c; }
    friend bool operator==(const QNum& a, const QNum& b);

    std::string to_string() const;

private:
    SpacePtr space_;
    std::vector<Rational> coords_;
};

Ordering qnum_compare(const QNum& x, const QNum& y);
Sign qnum_sign(const QNum& x);
bool qnum_less(const QNum& x, const QNum& y);

// Sparse polynomial over the declared symbols with rational coefficients.
// Exponent vectors have one entry per declared symbol.
class SymPoly {
public:
    using Monomial = std::vector<unsigned>;

    explicit SymPoly(SpacePtr space);
    static SymPoly constant(SpacePtr space, const Rational& c);
    static SymPoly from_qnum(const QNum& x);

    const SpacePtr& space() const { return space_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::optional<Rational> constant_value() const;
    unsigned total_degree() const;

    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator-() const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly operator*(const Rational& c) const;
    SymPoly& operator+=(const SymPoly& o);
    SymPoly pow(unsigned n) const;

    friend bool operator==(const SymPoly& a, const SymPoly& b);

    // Interval enclosure using the declared symbol ranges.
    QInterval eval_interval() const;
    // Interval enclosure for arbitrary per-symbol ranges.
    QInterval eval_interval(std::span<const QInterval> ranges) const;
    // Exact value at a rational point (one value per declared symbol).
    Rational eval_at(std::span<const Rational> point) const;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    SpacePtr space_;
    std::map<Monomial, Rational> terms_;
};

QInterval sympoly_eval_interval(const SymPoly& p);

// Dense univariate polynomial with ascending coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coefficients);
    static UniPoly monomial(unsigned degree, const Rational& c = 1);

    const std::vector<Rational>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coefficient(std::size_t i) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    // p(x + a)
    UniPoly shifted(const Rational& a) const;
    // p(x + a) - p(x)
    UniPoly difference(const Rational& a) const;
    Rational eval(const Rational& x) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Delta_{a_1} ... Delta_{a_n} x^k. Every shift must be positive.
UniPoly finite_difference_power(unsigned k, std::span<const Rational> shifts);

} // namespace bars
