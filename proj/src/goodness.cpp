#include "bars/goodness.hpp"

#include <algorithm>
#include <sstream>

namespace bars {

bool Subgroup::contains(const QNum& x) const
{
    return lattice_membership(x, generators).has_value();
}

std::string Subgroup::to_string() const
{
    std::string out = "<";
    for (std::size_t i = 0; i < generators.size(); ++i)
        out += (i ? ", " : "") + generators[i].to_string();
    return out + ">";
}

GoodnessInfo is_good_box(const BoxSpec& b, const Subgroup& g, std::size_t k_dirs)
{
    if (k_dirs == 0 || k_dirs > b.dimension())
        throw std::invalid_argument("the number of good directions must be between 1 and the dimension");
    GoodnessInfo info;
    for (std::size_t a = 0; a < b.dimension(); ++a)
        if (g.contains(b.side(a)))
            info.directions.push_back(a);
    info.good = info.directions.size() >= k_dirs;
    return info;
}

GoodnessCheck check_goodness_theorem(const Dissection& d, const Subgroup& g, std::size_t k_dirs)
{
    TilingVerdict verdict = verify_tiling(d);
    if (!verdict.valid())
        throw InvalidDissection("not a tiling: " + verdict.violation->describe());
    GoodnessCheck out{GoodnessStatus::Consistent, {}, {}};
    for (std::size_t i = 0; i < d.pieces.size(); ++i)
        if (!is_good_box(d.pieces[i].spec, g, k_dirs).good)
            out.bad_pieces.push_back(i);
    GoodnessInfo whole = is_good_box(d.whole.spec, g, k_dirs);
    out.whole_directions = whole.directions;
    if (!out.bad_pieces.empty())
        out.status = GoodnessStatus::NotAllPiecesGood;
    else if (!whole.good)
        out.status = GoodnessStatus::TheoremViolation;
    return out;
}

namespace {

// Sum over subsets S of the shifts of (-1)^(m-|S|) (1 + sum_S a)^e as a polynomial
// in the shifts themselves, evaluated over their enclosures. Its coefficients
// are nonnegative, so the enclosure is tight enough to fix the sign.
QInterval difference_enclosure(const std::vector<QNum>& shifts, unsigned e)
{
    const std::size_t m = shifts.size();
    std::vector<Symbol> vars;
    for (std::size_t i = 0; i < m; ++i)
        vars.push_back(Symbol{"a" + std::to_string(i + 1), 1, 1});
    SpacePtr space = SymbolSpace::make(vars);
    SymPoly total(space);
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        QNum s = QNum::rational(space, 1);
        std::size_t size = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) {
                s += QNum::symbol(space, i);
                ++size;
            }
        SymPoly term = SymPoly::from_qnum(s).pow(e);
        total = (m - size) % 2 ? total - term : total + term;
    }
    std::vector<QInterval> ranges;
    for (const auto& a : shifts)
        ranges.push_back(a.interval());
    return total.eval_interval(ranges);
}

} // namespace

std::optional<GoodnessCertificate> goodness_impossibility_certificate(const PlacedBox& b, const Subgroup& g,
                                                                      std::size_t k_dirs)
{
    GoodnessInfo info = is_good_box(b.spec, g, k_dirs);
    if (info.good)
        return std::nullopt;
    const std::size_t n = b.dimension();
    const std::size_t m = info.directions.size();
    const unsigned exponent = static_cast<unsigned>(k_dirs - 1);

    GoodnessCertificate c{b.spec.sides(), b.offset, info.directions, exponent, SymPoly(b.spec.space()), {}, 1, {}, ""};
    c.alpha = (n - m) % 2 ? Rational(-1) : Rational(1);
    c.form = VertexForm{b.offset, g.generators, c.alpha, exponent};
    c.signed_sum = eval_additive(c.form, b);

    std::vector<QNum> shifts;
    for (auto a : info.directions)
        shifts.push_back(b.spec.side(a));
    c.sign_witness = difference_enclosure(shifts, exponent);
    if (c.sign_witness.lo() <= 0)
        throw IndeterminateSign("signed vertex sum " + c.signed_sum.to_string() + " has enclosure " +
                                c.sign_witness.to_string());

    std::ostringstream coset;
    coset << "alpha(p) = " << to_string(c.alpha) << " if p - (";
    for (std::size_t i = 0; i < n; ++i)
        coset << (i ? ", " : "") << b.offset[i].to_string();
    coset << ") lies in G^" << n << " with G = " << g.to_string() << ", else 0";
    c.alpha_coset = coset.str();
    return c;
}

std::string certificate_text(const GoodnessCertificate& c)
{
    std::ostringstream out;
    out << "certificate kind=" << to_string(CertificateKind::Goodness) << "\n";
    out << "box = ";
    for (std::size_t i = 0; i < c.box.size(); ++i)
        out << (i ? " x " : "") << c.box[i].to_string();
    out << "\n";
    out << "coset base = (";
    for (std::size_t i = 0; i < c.base_vertex.size(); ++i)
        out << (i ? ", " : "") << c.base_vertex[i].to_string();
    out << ")\n";
    out << "group =";
    for (std::size_t i = 0; i < c.form.generators.size(); ++i)
        out << (i ? ", " : " ") << c.form.generators[i].to_string();
    out << "\n";
    out << "good directions =";
    for (auto a : c.good_directions)
        out << " " << a + 1;
    out << "\n";
    out << "form vertex alpha=" << to_string(c.alpha) << " exponent=" << c.exponent << "\n";
    out << "value = " << c.signed_sum.to_string() << "\n";
    out << "interval = " << c.sign_witness.to_string() << "\n";
    out << "# " << c.alpha_coset << "; F(p) = alpha(p) * (1 + sum of p - base)^" << c.exponent
        << " vanishes in signed vertex sum on every good box\n";
    return out.str();
}

std::variant<UnpackabilityProof, Inconclusive> prove_unpackable(const BoxSpec& box, const std::vector<BoxSpec>& bricks,
                                                                const Subgroup& g, std::size_t k_dirs)
{
    const std::size_t n = box.dimension();
    std::size_t factorial = 1;
    for (std::size_t i = 2; i <= n; ++i)
        factorial *= i;

    std::vector<OrientationGoodness> orientations;
    for (std::size_t bi = 0; bi < bricks.size(); ++bi) {
        const BoxSpec& brick = bricks[bi];
        if (brick.dimension() != n)
            throw DimensionMismatch("brick and box differ in dimension");
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i)
            perm[i] = i;
        std::size_t seen = 0;
        do {
            std::vector<QNum> sides;
            for (auto p : perm)
                sides.push_back(brick.side(p));
            GoodnessInfo info = is_good_box(BoxSpec(sides), g, k_dirs);
            if (!info.good)
                return Inconclusive{"brick " + std::to_string(bi + 1) + " in orientation (" + BoxSpec(sides).to_string() +
                                    ") is not good"};
            orientations.push_back(OrientationGoodness{bi, perm, info.directions});
            ++seen;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (seen != factorial)
            throw std::logic_error("orientation enumeration is incomplete");
    }
    auto cert = goodness_impossibility_certificate(PlacedBox::at_origin(box), g, k_dirs);
    if (!cert)
        return Inconclusive{"the box itself is good"};
    return UnpackabilityProof{std::move(orientations), std::move(*cert)};
}

std::vector<BoxSpec> scale_instance(const std::vector<BoxSpec>& boxes, const std::vector<Rational>& factors)
{
    std::vector<BoxSpec> out;
    for (const auto& b : boxes) {
        if (b.dimension() != factors.size())
            throw DimensionMismatch("one scale factor per axis is required");
        std::vector<QNum> sides;
        for (std::size_t a = 0; a < b.dimension(); ++a) {
            if (factors[a] <= 0)
                throw std::invalid_argument("scale factors must be positive");
            sides.push_back(b.side(a) / factors[a]);
        }
        out.emplace_back(std::move(sides));
    }
    return out;
}

} // namespace bars
