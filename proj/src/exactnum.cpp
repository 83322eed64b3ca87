#include "bars/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bars {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer pow10(unsigned long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    Integer n{std::string(num)}, d{std::string(den)};
    if (d == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

Rational parse_decimal(std::string_view text)
{
    if (text.find('/') != std::string_view::npos)
        return parse_rational(text);
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string_view::npos) {
        std::string_view es = s.substr(epos + 1);
        bool eneg = false;
        if (!es.empty() && (es.front() == '-' || es.front() == '+')) {
            eneg = es.front() == '-';
            es.remove_prefix(1);
        }
        if (!all_digits(es) || es.size() > 6)
            throw std::invalid_argument("bad exponent in '" + std::string(text) + "'");
        exponent = std::stol(std::string(es));
        if (eneg)
            exponent = -exponent;
        s = s.substr(0, epos);
    }
    auto dot = s.find('.');
    std::string digits(s.substr(0, dot));
    std::string frac = dot == std::string_view::npos ? std::string() : std::string(s.substr(dot + 1));
    if (digits.empty() && frac.empty())
        throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
    if ((!digits.empty() && !all_digits(digits)) || (!frac.empty() && !all_digits(frac)))
        throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
    Integer mantissa(digits.empty() && frac.empty() ? "0" : digits + frac);
    exponent -= static_cast<long>(frac.size());
    Rational q = exponent >= 0 ? Rational(mantissa * pow10(exponent)) : Rational(mantissa, pow10(-exponent));
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

double to_double(const Rational& q)
{
    return q.get_d();
}

Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// ---------------------------------------------------------------------------
// QInterval

QInterval::QInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (lo_ > hi_)
        throw std::invalid_argument("interval with lo > hi");
}

Rational QInterval::midpoint() const
{
    return Rational((lo_ + hi_) / 2);
}

Sign QInterval::sign() const
{
    if (lo_ > 0)
        return Sign::Positive;
    if (hi_ < 0)
        return Sign::Negative;
    if (lo_ == 0 && hi_ == 0)
        return Sign::Zero;
    throw IndeterminateSign("interval " + to_string() + " contains zero");
}

QInterval QInterval::operator+(const QInterval& o) const
{
    return QInterval(lo_ + o.lo_, hi_ + o.hi_);
}

QInterval QInterval::operator-(const QInterval& o) const
{
    return QInterval(lo_ - o.hi_, hi_ - o.lo_);
}

QInterval QInterval::operator-() const
{
    return QInterval(-hi_, -lo_);
}

QInterval QInterval::operator*(const QInterval& o) const
{
    Rational p[4] = {lo_ * o.lo_, lo_ * o.hi_, hi_ * o.lo_, hi_ * o.hi_};
    auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
    return QInterval(*mn, *mx);
}

QInterval QInterval::scaled(const Rational& c) const
{
    if (c >= 0)
        return QInterval(lo_ * c, hi_ * c);
    return QInterval(hi_ * c, lo_ * c);
}

QInterval QInterval::pow(unsigned n) const
{
    if (n == 0)
        return point(1);
    auto ipow = [](const Rational& x, unsigned e) {
        Rational r(1);
        for (unsigned i = 0; i < e; ++i)
            r *= x;
        return r;
    };
    Rational a = ipow(lo_, n), b = ipow(hi_, n);
    if (n % 2 == 1 || lo_ >= 0)
        return QInterval(std::min(a, b), std::max(a, b));
    if (hi_ <= 0)
        return QInterval(b, a);
    return QInterval(Rational(0), std::max(a, b));
}

std::string QInterval::to_string() const
{
    return "[" + bars::to_string(lo_) + ", " + bars::to_string(hi_) + "]";
}

// ---------------------------------------------------------------------------
// SymbolSpace

std::shared_ptr<const SymbolSpace> SymbolSpace::make(std::vector<Symbol> symbols)
{
    std::set<std::string> seen;
    for (const auto& s : symbols) {
        if (s.name.empty())
            throw std::invalid_argument("symbol with empty name");
        if (!seen.insert(s.name).second)
            throw std::invalid_argument("duplicate symbol '" + s.name + "'");
        if (s.eps <= 0)
            throw std::invalid_argument("symbol '" + s.name + "' needs eps > 0");
    }
    return std::shared_ptr<const SymbolSpace>(new SymbolSpace(std::move(symbols)));
}

std::shared_ptr<const SymbolSpace> SymbolSpace::rational()
{
    static const std::shared_ptr<const SymbolSpace> space(new SymbolSpace({}));
    return space;
}

std::optional<std::size_t> SymbolSpace::find(std::string_view name) const
{
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name == name)
            return i;
    return std::nullopt;
}

QInterval SymbolSpace::coordinate_range(std::size_t coord) const
{
    if (coord == 0)
        return QInterval::point(1);
    return symbols_.at(coord - 1).range();
}

std::string SymbolSpace::coordinate_name(std::size_t coord) const
{
    if (coord == 0)
        return "1";
    return symbols_.at(coord - 1).name;
}

void require_same_space(const SpacePtr& a, const SpacePtr& b)
{
    if (a != b)
        throw SpaceMismatch("values belong to different symbol spaces");
}

// ---------------------------------------------------------------------------
// QNum

QNum::QNum(SpacePtr space, std::vector<Rational> coords) : space_(std::move(space)), coords_(std::move(coords))
{
    if (!space_)
        throw std::invalid_argument("QNum without a symbol space");
    if (coords_.size() != space_->dimension())
        throw DimensionMismatch("QNum coordinate count does not match its space");
}

QNum QNum::zero(SpacePtr space)
{
    std::size_t d = space->dimension();
    return QNum(std::move(space), std::vector<Rational>(d));
}

QNum QNum::rational(SpacePtr space, const Rational& value)
{
    QNum x = zero(std::move(space));
    x.coords_[0] = value;
    return x;
}

QNum QNum::symbol(SpacePtr space, std::size_t index)
{
    if (index >= space->symbol_count())
        throw std::out_of_range("symbol index out of range");
    QNum x = zero(std::move(space));
    x.coords_[index + 1] = 1;
    return x;
}

bool QNum::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool QNum::is_rational() const
{
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<Rational> QNum::as_rational() const
{
    if (!is_rational())
        return std::nullopt;
    return coords_[0];
}

QInterval QNum::interval() const
{
    QInterval acc = QInterval::point(coords_[0]);
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0)
            acc = acc + space_->coordinate_range(i).scaled(coords_[i]);
    return acc;
}

QNum QNum::operator+(const QNum& o) const
{
    QNum r = *this;
    r += o;
    return r;
}

QNum QNum::operator-(const QNum& o) const
{
    QNum r = *this;
    r -= o;
    return r;
}

QNum QNum::operator-() const
{
    QNum r = *this;
    for (auto& c : r.coords_)
        c = -c;
    return r;
}

QNum QNum::operator*(const Rational& c) const
{
    QNum r = *this;
    for (auto& x : r.coords_)
        x *= c;
    return r;
}

QNum QNum::operator/(const Rational& c) const
{
    if (c == 0)
        throw std::domain_error("division of QNum by zero");
    QNum r = *this;
    for (auto& x : r.coords_)
        x /= c;
    return r;
}

QNum& QNum::operator+=(const QNum& o)
{
    require_same_space(space_, o.space_);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += o.coords_[i];
    return *this;
}

QNum& QNum::operator-=(const QNum& o)
{
    require_same_space(space_, o.space_);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= o.coords_[i];
    return *this;
}

bool operator==(const QNum& a, const QNum& b)
{
    return a.space_ == b.space_ && a.coords_ == b.coords_;
}

std::string QNum::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const Rational& c = coords_[i];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        if (i == 0)
            out << mag.get_str();
        else if (mag == 1)
            out << space_->coordinate_name(i);
        else
            out << mag.get_str() << "*" << space_->coordinate_name(i);
        first = false;
    }
    return first ? "0" : out.str();
}

Ordering qnum_compare(const QNum& x, const QNum& y)
{
    require_same_space(x.space(), y.space());
    if (x.coords() == y.coords())
        return Ordering::Equal;
    QInterval d = (x - y).interval();
    if (d.lo() > 0)
        return Ordering::Greater;
    if (d.hi() < 0)
        return Ordering::Less;
    throw IndeterminateSign("cannot order " + x.to_string() + " and " + y.to_string() +
                            " at declared precision (difference in " + d.to_string() + ")");
}

Sign qnum_sign(const QNum& x)
{
    if (x.is_zero())
        return Sign::Zero;
    QInterval r = x.interval();
    if (r.lo() > 0)
        return Sign::Positive;
    if (r.hi() < 0)
        return Sign::Negative;
    throw IndeterminateSign("sign of " + x.to_string() + " undecided at declared precision (value in " +
                            r.to_string() + ")");
}

bool qnum_less(const QNum& x, const QNum& y)
{
    return qnum_compare(x, y) == Ordering::Less;
}

} // namespace bars
