#include "bars/instance.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace bars {

const QNum* Instance::find_length(std::string_view name) const
{
    for (const auto& [n, v] : lengths)
        if (n == name)
            return &v;
    return nullptr;
}

const BoxSpec* Instance::find_box(std::string_view name) const
{
    for (const auto& [n, v] : boxes)
        if (n == name)
            return &v;
    return nullptr;
}

const Subgroup* Instance::find_group(std::string_view name) const
{
    for (const auto& [n, v] : groups)
        if (n == name)
            return &v;
    return nullptr;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string> words(std::string_view s)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string w;
    while (in >> w)
        out.push_back(w);
    return out;
}

bool is_name(std::string_view s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return s != "x";
}

class ExprParser {
public:
    ExprParser(const Instance& inst, std::string_view text) : inst_(inst), s_(text) {}

    QNum parse()
    {
        QNum total = QNum::zero(inst_.space);
        skip();
        bool first = true;
        while (true) {
            skip();
            Rational sign = 1;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                break;
            }
            total += term() * sign;
            first = false;
            skip();
            if (pos_ >= s_.size())
                break;
        }
        skip();
        if (pos_ != s_.size())
            throw std::invalid_argument("unexpected '" + std::string(s_.substr(pos_)) + "' in expression");
        return total;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    QNum term()
    {
        if (pos_ >= s_.size())
            throw std::invalid_argument("expression ends where a term is expected");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
                                        s_[pos_] == '/'))
                ++pos_;
            Rational q = parse_decimal(s_.substr(start, pos_ - start));
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                skip();
                return name() * q;
            }
            return QNum::rational(inst_.space, q);
        }
        return name();
    }

    QNum name()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        std::string_view n = s_.substr(start, pos_ - start);
        if (n.empty())
            throw std::invalid_argument("expected a name at '" + std::string(s_.substr(start)) + "'");
        if (auto i = inst_.space->find(n))
            return QNum::symbol(inst_.space, *i);
        if (const QNum* l = inst_.find_length(n))
            return *l;
        throw std::invalid_argument("unknown name '" + std::string(n) + "'");
    }

    const Instance& inst_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

struct Line {
    std::size_t number;
    std::string text;
};

std::vector<std::string> split_top(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// "(a, b, c)" -> {"a", "b", "c"}
std::vector<std::string> tuple_items(std::string_view s)
{
    s = trim(s);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("expected a parenthesized list");
    return split_top(s.substr(1, s.size() - 2), ',');
}

} // namespace

QNum parse_expression(const Instance& inst, std::string_view text)
{
    if (trim(text).empty())
        throw std::invalid_argument("empty expression");
    return ExprParser(inst, text).parse();
}

Instance parse_instance(std::string_view text)
{
    std::vector<Line> lines;
    {
        std::size_t number = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find('\n', start);
            if (end == std::string_view::npos)
                end = text.size();
            ++number;
            std::string_view l = text.substr(start, end - start);
            auto hash = l.find('#');
            if (hash != std::string_view::npos)
                l = l.substr(0, hash);
            l = trim(l);
            if (!l.empty())
                lines.push_back({number, std::string(l)});
            start = end + 1;
        }
    }

    std::set<std::string> names;
    auto claim = [&](std::size_t line, const std::string& name) {
        if (!is_name(name))
            throw ParseError(line, "invalid name '" + name + "'");
        if (!names.insert(name).second)
            throw ParseError(line, "duplicate name '" + name + "'");
    };

    std::vector<Symbol> symbols;
    for (const auto& l : lines) {
        auto w = words(l.text);
        if (w.front() != "symbol")
            continue;
        if (!((w.size() == 4 && w[2] == "~") || (w.size() == 6 && w[2] == "~" && w[4] == "eps")))
            throw ParseError(l.number, "expected 'symbol <name> ~ <decimal> [eps <decimal>]'");
        claim(l.number, w[1]);
        try {
            Rational approx = parse_decimal(w[3]);
            Rational eps = w.size() == 6 ? parse_decimal(w[5]) : parse_decimal("1e-12");
            if (eps <= 0)
                throw std::invalid_argument("eps must be positive");
            symbols.push_back(Symbol{w[1], approx, eps});
        } catch (const std::invalid_argument& e) {
            throw ParseError(l.number, e.what());
        }
    }

    Instance inst;
    inst.space = symbols.empty() ? SymbolSpace::rational() : SymbolSpace::make(symbols);

    auto expr = [&](std::size_t line, std::string_view s) {
        try {
            return parse_expression(inst, s);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(line, e.what());
        }
    };
    auto positive = [&](std::size_t line, const QNum& q, const std::string& what) {
        Sign sg;
        try {
            sg = qnum_sign(q);
        } catch (const IndeterminateSign&) {
            throw ParseError(line, what + " " + q.to_string() + " has undetermined sign");
        }
        if (sg != Sign::Positive)
            throw ParseError(line, what + " " + q.to_string() + " is not positive");
    };
    // "<kw> <name> = <rhs>"
    auto definition = [&](const Line& l, std::string_view kw) {
        std::string_view s = trim(std::string_view(l.text).substr(kw.size()));
        auto eq = s.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(l.number, "expected '" + std::string(kw) + " <name> = ...'");
        std::string name(trim(s.substr(0, eq)));
        std::string rhs(trim(s.substr(eq + 1)));
        if (rhs.empty())
            throw ParseError(l.number, "missing right-hand side");
        claim(l.number, name);
        return std::make_pair(name, rhs);
    };

    std::optional<std::size_t> tiling_line;
    bool tiling_closed = false;
    for (const auto& l : lines) {
        auto w = words(l.text);
        const std::string& kw = w.front();
        if (tiling_line && !tiling_closed) {
            if (kw == "end") {
                if (w.size() != 1)
                    throw ParseError(l.number, "unexpected text after 'end'");
                tiling_closed = true;
                continue;
            }
            if (kw != "piece")
                throw ParseError(l.number, "expected 'piece' or 'end' inside a tiling");
            std::string_view s = trim(std::string_view(l.text).substr(5));
            if (s.substr(0, 2) != "at")
                throw ParseError(l.number, "expected 'piece at (...) size (...)'");
            s = trim(s.substr(2));
            auto sz = s.find("size");
            if (sz == std::string_view::npos)
                throw ParseError(l.number, "expected 'size (...)'");
            std::vector<QNum> offset, sides;
            try {
                for (const auto& item : tuple_items(s.substr(0, sz)))
                    offset.push_back(expr(l.number, item));
                for (const auto& item : tuple_items(s.substr(sz + 4)))
                    sides.push_back(expr(l.number, item));
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception& e) {
                throw ParseError(l.number, e.what());
            }
            Dissection& d = inst.tiling->dissection;
            if (offset.size() != d.whole.dimension() || sides.size() != d.whole.dimension())
                throw ParseError(l.number, "piece dimension differs from the tiled box");
            for (const auto& x : sides)
                positive(l.number, x, "piece side");
            d.pieces.emplace_back(std::move(offset), BoxSpec(std::move(sides)));
            continue;
        }
        if (kw == "symbol")
            continue;
        if (kw == "length") {
            auto [name, rhs] = definition(l, "length");
            QNum v = expr(l.number, rhs);
            positive(l.number, v, "length");
            inst.lengths.emplace_back(name, v);
        } else if (kw == "box") {
            auto [name, rhs] = definition(l, "box");
            std::vector<QNum> sides;
            std::string cur;
            for (const auto& t : words(rhs)) {
                if (t == "x") {
                    sides.push_back(expr(l.number, cur));
                    cur.clear();
                } else {
                    cur += t + " ";
                }
            }
            sides.push_back(expr(l.number, cur));
            for (const auto& x : sides)
                positive(l.number, x, "box side");
            inst.boxes.emplace_back(name, BoxSpec(std::move(sides)));
        } else if (kw == "group") {
            auto [name, rhs] = definition(l, "group");
            Subgroup g;
            for (const auto& item : split_top(rhs, ','))
                g.generators.push_back(expr(l.number, item));
            inst.groups.emplace_back(name, std::move(g));
        } else if (kw == "tiling") {
            if (tiling_line)
                throw ParseError(l.number, "only one tiling per file");
            if (w.size() != 3 || w[1] != "of")
                throw ParseError(l.number, "expected 'tiling of <box>'");
            const BoxSpec* b = inst.find_box(w[2]);
            if (!b)
                throw ParseError(l.number, "unknown box '" + w[2] + "'");
            tiling_line = l.number;
            inst.tiling = Tiling{w[2], Dissection{PlacedBox::at_origin(*b), {}}};
        } else {
            throw ParseError(l.number, "unknown statement '" + kw + "'");
        }
    }
    if (tiling_line && !tiling_closed)
        throw ParseError(*tiling_line, "tiling is missing 'end'");
    if (tiling_line && inst.tiling->dissection.pieces.empty())
        throw ParseError(*tiling_line, "tiling has no pieces");
    return inst;
}

std::string decimal_string(const Rational& q)
{
    Integer den = q.get_den();
    unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), Integer(2).get_mpz_t());
    unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), Integer(5).get_mpz_t());
    if (den != 1)
        return to_string(q);
    unsigned long digits = std::max(twos, fives);
    if (digits == 0)
        return to_string(q);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Rational scaled = q * scale;
    Integer n = abs(scaled.get_num());
    std::string s = n.get_str();
    if (s.size() <= digits)
        s.insert(0, digits - s.size() + 1, '0');
    s.insert(s.size() - digits, ".");
    return (q < 0 ? "-" : "") + s;
}

std::string emit_instance(const Instance& inst)
{
    std::ostringstream out;
    for (const auto& s : inst.space->symbols())
        out << "symbol " << s.name << " ~ " << decimal_string(s.approx) << " eps " << decimal_string(s.eps) << "\n";
    for (const auto& [name, v] : inst.lengths)
        out << "length " << name << " = " << v.to_string() << "\n";
    for (const auto& [name, g] : inst.groups) {
        out << "group " << name << " =";
        for (std::size_t i = 0; i < g.generators.size(); ++i)
            out << (i ? ", " : " ") << g.generators[i].to_string();
        out << "\n";
    }
    for (const auto& [name, b] : inst.boxes)
        out << "box " << name << " = " << b.to_string() << "\n";
    if (inst.tiling) {
        out << "tiling of " << inst.tiling->box << "\n";
        for (const auto& p : inst.tiling->dissection.pieces) {
            out << "piece at (";
            for (std::size_t a = 0; a < p.dimension(); ++a)
                out << (a ? ", " : "") << p.offset[a].to_string();
            out << ") size (";
            for (std::size_t a = 0; a < p.dimension(); ++a)
                out << (a ? ", " : "") << p.spec.side(a).to_string();
            out << ")\n";
        }
        out << "end\n";
    }
    return out.str();
}

} // namespace bars
