#pragma once

// Random generators and independent oracles shared by the test binaries.

#include <random>
#include <vector>

#include "bars/certify.hpp"
#include "bars/dissector.hpp"
#include "bars/exactnum.hpp"
#include "bars/geometry.hpp"
#include "bars/goodness.hpp"

namespace testing {

using namespace bars;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5)
{
    return std::bernoulli_distribution(p)(rng);
}

// floor(sqrt(p) * 10^digits) / 10^digits, with eps one unit in the last
// digit, so the interval always contains sqrt(p).
inline Symbol sqrt_symbol(const std::string& name, unsigned long p, unsigned digits = 30)
{
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Integer radicand = Integer(p) * scale * scale;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    Rational approx(root, scale);
    approx.canonicalize();
    Rational eps(Integer(1), scale);
    eps.canonicalize();
    return Symbol{name, approx, eps};
}

// Symbols s1..sm bound to sqrt(2), sqrt(3), sqrt(5), ... (independent over Q
// together with 1).
inline SpacePtr sqrt_space(std::size_t m)
{
    static const unsigned long primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
    std::vector<Symbol> syms;
    for (std::size_t i = 0; i < m; ++i)
        syms.push_back(sqrt_symbol("s" + std::to_string(i + 1), primes[i]));
    return SymbolSpace::make(syms);
}

inline Rational frac(long num, long den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational small_rational(Rng& rng, long num = 6, long den = 4)
{
    Rational q(uniform(rng, -num, num), uniform(rng, 1, den));
    q.canonicalize();
    return q;
}

// Random QNum that is clearly positive (lower end of its enclosure above 1/100).
inline QNum random_positive(Rng& rng, const SpacePtr& space, long num = 6, long den = 4)
{
    while (true) {
        std::vector<Rational> c(space->dimension());
        for (auto& x : c)
            x = small_rational(rng, num, den);
        QNum q(space, c);
        if (q.interval().lo() > Rational(1, 100))
            return q;
    }
}

// k positive numbers independent over Q. Needs k <= dimension of the space.
inline std::vector<QNum> random_independent(Rng& rng, const SpacePtr& space, std::size_t k)
{
    while (true) {
        std::vector<QNum> out;
        for (std::size_t i = 0; i < k; ++i)
            out.push_back(random_positive(rng, space));
        if (rank_over_Q(out) == k)
            return out;
    }
}

// Nonnegative integer combination of the generators with coefficient sum in
// [1, max_sum].
inline QNum random_combination(Rng& rng, const std::vector<QNum>& gens, long max_sum)
{
    while (true) {
        QNum q = QNum::zero(gens.front().space());
        long budget = uniform(rng, 1, max_sum);
        bool any = false;
        for (long t = 0; t < budget; ++t) {
            q += gens[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(gens.size()) - 1))];
            any = true;
        }
        if (any)
            return q;
    }
}

// A k-bar: every side drawn from at most k random positive values.
inline BoxSpec random_k_bar(Rng& rng, const SpacePtr& space, std::size_t n, std::size_t k)
{
    std::size_t distinct = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(k)));
    std::vector<QNum> values;
    for (std::size_t i = 0; i < distinct; ++i)
        values.push_back(random_positive(rng, space));
    std::vector<QNum> sides;
    for (std::size_t a = 0; a < n; ++a)
        sides.push_back(values[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(distinct) - 1))]);
    return BoxSpec(sides);
}

inline std::vector<QNum> random_offset(Rng& rng, const SpacePtr& space, std::size_t n)
{
    std::vector<QNum> off;
    for (std::size_t a = 0; a < n; ++a)
        off.push_back(coin(rng) ? QNum::zero(space) : random_positive(rng, space) - random_positive(rng, space));
    return off;
}

// Splits a random piece along a random axis, `splits` times. Cut points are
// rational fractions of the side or, when it fits, a random positive number.
inline Dissection random_split_dissection(Rng& rng, const PlacedBox& whole, std::size_t splits)
{
    Dissection d{whole, {whole}};
    const SpacePtr& space = whole.spec.space();
    for (std::size_t s = 0; s < splits; ++s) {
        std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(d.pieces.size()) - 1));
        PlacedBox p = d.pieces[i];
        std::size_t a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(p.dimension()) - 1));
        const QNum& side = p.spec.side(a);
        QNum cut = side * frac(uniform(rng, 1, 7), 8);
        if (coin(rng, 0.3)) {
            QNum alt = random_positive(rng, space, 2, 3);
            if (alt.interval().hi() < side.interval().lo())
                cut = alt;
        }
        std::vector<QNum> lo_sides = p.spec.sides(), hi_sides = p.spec.sides();
        lo_sides[a] = cut;
        hi_sides[a] = side - cut;
        std::vector<QNum> hi_off = p.offset;
        hi_off[a] += cut;
        d.pieces[i] = PlacedBox(p.offset, BoxSpec(lo_sides));
        d.pieces.emplace_back(hi_off, BoxSpec(hi_sides));
    }
    return d;
}

// Good-box generator: sides in G are positive combinations of positive
// generators, tracked by their coefficient vectors so that cuts can stay in G.
struct GoodSide {
    QNum value = QNum::zero(SymbolSpace::rational());
    std::vector<long> coeffs; // empty: not constructed in G
};

inline QNum from_coeffs(const std::vector<QNum>& gens, const std::vector<long>& c)
{
    QNum q = QNum::zero(gens.front().space());
    for (std::size_t i = 0; i < c.size(); ++i)
        q += gens[i] * Rational(c[i]);
    return q;
}

// Recursively splits a good box; in a G-direction the cut is a sub-combination
// so both parts stay in G, in other directions the cut is arbitrary.
inline Dissection random_good_dissection(Rng& rng, const std::vector<QNum>& gens, const std::vector<GoodSide>& sides,
                                         std::size_t splits)
{
    const SpacePtr& space = gens.front().space();
    struct Piece {
        std::vector<QNum> offset;
        std::vector<GoodSide> sides;
    };
    std::vector<Piece> pieces{{std::vector<QNum>(sides.size(), QNum::zero(space)), sides}};
    for (std::size_t s = 0; s < splits; ++s) {
        std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(pieces.size()) - 1));
        Piece p = pieces[i];
        std::size_t a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(sides.size()) - 1));
        GoodSide& side = p.sides[a];
        GoodSide lo, hi;
        if (!side.coeffs.empty()) {
            long total = 0;
            for (auto c : side.coeffs)
                total += c;
            if (total < 2)
                continue;
            std::vector<long> part(side.coeffs.size()), rest(side.coeffs.size());
            long taken;
            do {
                taken = 0;
                for (std::size_t j = 0; j < part.size(); ++j) {
                    part[j] = uniform(rng, 0, side.coeffs[j]);
                    rest[j] = side.coeffs[j] - part[j];
                    taken += part[j];
                }
            } while (taken == 0 || taken == total);
            lo = {from_coeffs(gens, part), part};
            hi = {from_coeffs(gens, rest), rest};
        } else {
            QNum cut = side.value * frac(uniform(rng, 1, 5), 6);
            lo = {cut, {}};
            hi = {side.value - cut, {}};
        }
        Piece a_piece = p, b_piece = p;
        a_piece.sides[a] = lo;
        b_piece.sides[a] = hi;
        b_piece.offset[a] += lo.value;
        pieces[i] = a_piece;
        pieces.push_back(b_piece);
    }
    auto spec = [](const std::vector<GoodSide>& ss) {
        std::vector<QNum> v;
        for (const auto& s : ss)
            v.push_back(s.value);
        return BoxSpec(v);
    };
    Dissection d{PlacedBox::at_origin(spec(sides)), {}};
    for (const auto& p : pieces)
        d.pieces.emplace_back(p.offset, spec(p.sides));
    return d;
}

// Oracle for Delta_{a_1} ... Delta_{a_n} x^k: inclusion-exclusion over the
// subsets of shifts, each (x + sum_S a)^k expanded by the binomial theorem.
inline std::vector<Rational> finite_difference_oracle(unsigned k, const std::vector<Rational>& shifts)
{
    const std::size_t n = shifts.size();
    std::vector<Rational> coeff(k + 1, Rational(0));
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Rational s = 0;
        std::size_t size = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) {
                s += shifts[i];
                ++size;
            }
        int sign = (n - size) % 2 ? -1 : 1;
        for (unsigned j = 0; j <= k; ++j) {
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), k, j);
            Rational pw = 1;
            for (unsigned t = 0; t < k - j; ++t)
                pw *= s;
            coeff[j] += Rational(binom) * pw * sign;
        }
    }
    while (!coeff.empty() && coeff.back() == 0)
        coeff.pop_back();
    return coeff;
}

inline bool all_pieces_k_bars(const Dissection& d, std::size_t k)
{
    for (const auto& p : d.pieces)
        if (!is_k_bar(p.spec, k))
            return false;
    return true;
}

} // namespace testing
