#include "bars/exactnum.hpp"

#include <sstream>

namespace bars {

SymPoly::SymPoly(SpacePtr space) : space_(std::move(space))
{
    if (!space_)
        throw std::invalid_argument("SymPoly without a symbol space");
}

SymPoly SymPoly::constant(SpacePtr space, const Rational& c)
{
    SymPoly p(std::move(space));
    p.add_term(Monomial(p.space_->symbol_count(), 0), c);
    return p;
}

SymPoly SymPoly::from_qnum(const QNum& x)
{
    SymPoly p(x.space());
    std::size_t m = x.space()->symbol_count();
    p.add_term(Monomial(m, 0), x.coords()[0]);
    for (std::size_t i = 0; i < m; ++i) {
        Monomial e(m, 0);
        e[i] = 1;
        p.add_term(e, x.coords()[i + 1]);
    }
    return p;
}

void SymPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

std::optional<Rational> SymPoly::constant_value() const
{
    if (terms_.empty())
        return Rational(0);
    if (terms_.size() == 1 && total_degree() == 0)
        return terms_.begin()->second;
    return std::nullopt;
}

unsigned SymPoly::total_degree() const
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        unsigned s = 0;
        for (unsigned e : m)
            s += e;
        d = std::max(d, s);
    }
    return d;
}

SymPoly SymPoly::operator+(const SymPoly& o) const
{
    SymPoly r = *this;
    r += o;
    return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& o)
{
    require_same_space(space_, o.space_);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

SymPoly SymPoly::operator-(const SymPoly& o) const
{
    return *this + (-o);
}

SymPoly SymPoly::operator-() const
{
    SymPoly r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

SymPoly SymPoly::operator*(const SymPoly& o) const
{
    require_same_space(space_, o.space_);
    SymPoly r(space_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

SymPoly SymPoly::operator*(const Rational& c) const
{
    if (c == 0)
        return SymPoly(space_);
    SymPoly r = *this;
    for (auto& [m, v] : r.terms_)
        v *= c;
    return r;
}

SymPoly SymPoly::pow(unsigned n) const
{
    SymPoly r = constant(space_, 1);
    for (unsigned i = 0; i < n; ++i)
        r = r * *this;
    return r;
}

bool operator==(const SymPoly& a, const SymPoly& b)
{
    return a.space_ == b.space_ && a.terms_ == b.terms_;
}

QInterval SymPoly::eval_interval() const
{
    std::vector<QInterval> ranges;
    for (const auto& s : space_->symbols())
        ranges.push_back(s.range());
    return eval_interval(ranges);
}

QInterval SymPoly::eval_interval(std::span<const QInterval> ranges) const
{
    if (ranges.size() != space_->symbol_count())
        throw DimensionMismatch("one range per symbol expected");
    QInterval acc = QInterval::point(0);
    for (const auto& [m, c] : terms_) {
        QInterval t = QInterval::point(c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0)
                t = t * ranges[i].pow(m[i]);
        acc = acc + t;
    }
    return acc;
}

Rational SymPoly::eval_at(std::span<const Rational> point) const
{
    if (point.size() != space_->symbol_count())
        throw DimensionMismatch("one value per symbol expected");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e)
                t *= point[i];
        acc += t;
    }
    return acc;
}

QInterval sympoly_eval_interval(const SymPoly& p)
{
    return p.eval_interval();
}

std::string SymPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    // Highest monomials first so the constant lands at the end.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = abs(c);
        out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += space_->symbol(i).name;
            if (m[i] > 1)
                mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty())
            out << mag.get_str();
        else if (mag == 1)
            out << mono;
        else
            out << mag.get_str() << "*" << mono;
        first = false;
    }
    return out.str();
}

} // namespace bars
