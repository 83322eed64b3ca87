#include "bars/exactnum.hpp"

#include <sstream>

namespace bars {

UniPoly::UniPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients))
{
    trim();
}

UniPoly UniPoly::monomial(unsigned degree, const Rational& c)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rational UniPoly::coefficient(std::size_t i) const
{
    return i < c_.size() ? c_[i] : Rational(0);
}

UniPoly UniPoly::operator+(const UniPoly& o) const
{
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = coefficient(i) + o.coefficient(i);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const
{
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = coefficient(i) - o.coefficient(i);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const
{
    if (is_zero() || o.is_zero())
        return {};
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::shifted(const Rational& a) const
{
    // Horner in the ring: p(x+a) = (...(c_n (x+a) + c_{n-1})(x+a) + ...).
    const UniPoly step(std::vector<Rational>{a, Rational(1)});
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * step + UniPoly(std::vector<Rational>{*it});
    return acc;
}

UniPoly UniPoly::difference(const Rational& a) const
{
    return shifted(a) - *this;
}

Rational UniPoly::eval(const Rational& x) const
{
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string UniPoly::to_string() const
{
    if (c_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        if (i == 0 || mag != 1)
            out << mag.get_str();
        if (i > 0)
            out << (mag != 1 ? "*x" : "x");
        if (i > 1)
            out << "^" << i;
        first = false;
    }
    return out.str();
}

UniPoly finite_difference_power(unsigned k, std::span<const Rational> shifts)
{
    for (const auto& a : shifts)
        if (a <= 0)
            throw std::invalid_argument("finite difference shifts must be positive");
    UniPoly p = UniPoly::monomial(k);
    for (const auto& a : shifts) {
        p = p.difference(a);
        if (p.is_zero())
            break;
    }
    return p;
}

} // namespace bars
