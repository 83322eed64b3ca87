#include "bars/certify.hpp"

#include <sstream>

namespace bars {

namespace {

Rational rational_det(const QMatrix& m)
{
    return m.rows() == 0 ? Rational(1) : determinant(m);
}

SymPoly block_value(const DeterminantBlock& block, const std::vector<QNum>& sides)
{
    const std::size_t s = block.axes.size();
    const std::size_t fr = block.functionals.size();
    if (s != fr + (block.identity_row ? 1 : 0))
        throw DimensionMismatch("determinant block is not square");
    const SpacePtr& space = sides.front().space();

    QMatrix f(fr, s);
    for (std::size_t i = 0; i < fr; ++i)
        for (std::size_t j = 0; j < s; ++j)
            f(i, j) = block.functionals[i](sides.at(block.axes[j]));

    if (!block.identity_row)
        return SymPoly::constant(space, rational_det(f));

    // Expansion along the symbolic first row.
    SymPoly out(space);
    for (std::size_t j = 0; j < s; ++j) {
        QMatrix minor(fr, s - 1);
        for (std::size_t i = 0; i < fr; ++i)
            for (std::size_t c = 0, cc = 0; c < s; ++c)
                if (c != j)
                    minor(i, cc++) = f(i, c);
        Rational cof = rational_det(minor);
        if (cof == 0)
            continue;
        if (j % 2)
            cof = -cof;
        out += SymPoly::from_qnum(sides[block.axes[j]]) * cof;
    }
    return out;
}

SymPoly eval_on_sides(const ProductForm& fn, const std::vector<QNum>& sides)
{
    SymPoly v = SymPoly::constant(sides.front().space(), 1);
    for (std::size_t a = 0; a < sides.size(); ++a) {
        const auto& f = fn.factors[a];
        v = f ? v * (*f)(sides[a]) : v * SymPoly::from_qnum(sides[a]);
    }
    return v;
}

SymPoly eval_on_sides(const DeterminantForm& fn, const std::vector<QNum>& sides)
{
    std::vector<bool> used(sides.size(), false);
    SymPoly v = SymPoly::constant(sides.front().space(), 1);
    for (const auto& block : fn.blocks) {
        for (auto a : block.axes) {
            if (a >= sides.size() || used[a])
                throw DimensionMismatch("determinant blocks must use distinct axes");
            used[a] = true;
        }
        v = v * block_value(block, sides);
        if (v.is_zero())
            return v;
    }
    for (std::size_t a = 0; a < sides.size(); ++a)
        if (!used[a])
            v = v * SymPoly::from_qnum(sides[a]);
    return v;
}

SymPoly point_value(const VertexForm& fn, const std::vector<QNum>& p)
{
    const SpacePtr& space = p.front().space();
    QNum sum = QNum::rational(space, 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        QNum d = p[i] - fn.base[i];
        if (!lattice_membership(d, fn.generators))
            return SymPoly(space);
        sum += d;
    }
    return SymPoly::from_qnum(sum).pow(fn.exponent) * fn.alpha;
}

SymPoly eval_vertex(const VertexForm& fn, const PlacedBox& b)
{
    const std::size_t n = b.dimension();
    SymPoly total(b.spec.space());
    std::vector<QNum> p(b.offset);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::size_t lower_faces = 0;
        for (std::size_t a = 0; a < n; ++a) {
            if (mask >> a & 1) {
                p[a] = b.upper(a);
            } else {
                p[a] = b.lower(a);
                ++lower_faces;
            }
        }
        SymPoly v = point_value(fn, p);
        if (lower_faces % 2)
            total = total - v;
        else
            total += v;
    }
    return total;
}

void require_dimension(const AdditiveFn& fn, std::size_t n)
{
    if (additive_dimension(fn) != n)
        throw DimensionMismatch("additive function and box differ in dimension");
}

} // namespace

std::size_t additive_dimension(const AdditiveFn& fn)
{
    return std::visit(
        [](const auto& f) -> std::size_t {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, ProductForm>)
                return f.factors.size();
            else if constexpr (std::is_same_v<T, DeterminantForm>)
                return f.dimension;
            else
                return f.base.size();
        },
        fn);
}

SymPoly eval_additive(const AdditiveFn& fn, const PlacedBox& b)
{
    require_dimension(fn, b.dimension());
    if (const auto* v = std::get_if<VertexForm>(&fn))
        return eval_vertex(*v, b);
    return eval_additive(fn, b.spec);
}

SymPoly eval_additive(const AdditiveFn& fn, const BoxSpec& b)
{
    require_dimension(fn, b.dimension());
    if (const auto* p = std::get_if<ProductForm>(&fn))
        return eval_on_sides(*p, b.sides());
    if (const auto* d = std::get_if<DeterminantForm>(&fn))
        return eval_on_sides(*d, b.sides());
    return eval_vertex(std::get<VertexForm>(fn), PlacedBox::at_origin(b));
}

bool check_additivity(const AdditiveFn& fn, const Dissection& d)
{
    SymPoly sum(d.whole.spec.space());
    for (const auto& p : d.pieces)
        sum += eval_additive(fn, p);
    return sum == eval_additive(fn, d.whole);
}

std::string to_string(CertificateKind kind)
{
    switch (kind) {
    case CertificateKind::DehnRect:
        return "DehnRect";
    case CertificateKind::Bar3D:
        return "Bar3D";
    case CertificateKind::KBarGeneral:
        return "KBarGeneral";
    case CertificateKind::T3:
        return "T3";
    case CertificateKind::T4:
        return "T4";
    case CertificateKind::Goodness:
        return "Goodness";
    }
    return "?";
}

namespace {

void require_positive(const QNum& x)
{
    if (qnum_sign(x) != Sign::Positive)
        throw std::invalid_argument(x.to_string() + " is not positive");
}

// Dual functionals of the independent pair (a, b): f(a) = 0, f(b) = 1.
std::optional<QFunctional> pair_functional(const QNum& a, const QNum& b)
{
    require_same_space(a.space(), b.space());
    require_positive(a);
    require_positive(b);
    std::vector<QNum> pair{a, b};
    if (rank_over_Q(pair) < 2)
        return std::nullopt;
    return dual_functionals(pair)[1];
}

Certificate finish(CertificateKind kind, AdditiveFn fn, std::vector<QNum> box, QInterval witness, std::string narrative)
{
    SymPoly value = eval_additive(fn, BoxSpec(box));
    Certificate c{kind, std::move(fn), std::move(box), std::move(value), witness, std::move(narrative)};
    if (!c.sign_witness.excludes_zero())
        throw IndeterminateSign("certificate value " + c.whole_value.to_string() + " has enclosure " +
                                c.sign_witness.to_string());
    return c;
}

} // namespace

std::optional<Certificate> dehn_rectangle_certificate(const QNum& w, const QNum& h)
{
    auto f = pair_functional(w, h);
    if (!f)
        return std::nullopt;
    DeterminantForm form{2, {DeterminantBlock{{0, 1}, true, {*f}}}};
    return finish(CertificateKind::DehnRect, form, {w, h}, w.interval(),
                  "F = w*f(h) - h*f(w) with f(w) = 0, f(h) = 1 vanishes on every square and equals w on the "
                  "rectangle, so no dissection into squares exists");
}

std::optional<Certificate> bar_impossibility_certificate(const BoxSpec& box, std::size_t k)
{
    if (k == 0)
        throw std::invalid_argument("k must be positive");
    const std::size_t n = box.dimension();
    const auto& sides = box.sides();
    auto indep = independent_subset(sides);
    if (indep.size() <= k)
        return std::nullopt;

    if (n == 2 && k == 1)
        return dehn_rectangle_certificate(sides[0], sides[1]);

    if (n == 3 && k == 2) {
        auto duals = dual_functionals(sides);
        DeterminantForm form{3, {DeterminantBlock{{0, 1, 2}, true, {duals[1], duals[2]}}}};
        return finish(CertificateKind::Bar3D, form, sides, sides[0].interval(),
                      "det of (sides; f(sides); g(sides)) with f, g dual to the second and third side vanishes on "
                      "every bar (two equal columns) and equals the first side on the box");
    }

    indep.resize(k + 1);
    std::vector<QNum> chosen;
    for (auto i : indep)
        chosen.push_back(sides[i]);
    DeterminantForm form{n, {DeterminantBlock{indep, false, dual_functionals(chosen)}}};
    QInterval witness = QInterval::point(1);
    std::vector<bool> designated(n, false);
    for (auto i : indep)
        designated[i] = true;
    for (std::size_t a = 0; a < n; ++a)
        if (!designated[a])
            witness = witness * sides[a].interval();
    std::ostringstream narrative;
    narrative << "det(f_i(l_j)) over the " << k + 1
              << " designated independent sides times the other sides vanishes on every " << k
              << "-bar (two designated columns coincide) and is positive on the box";
    return finish(CertificateKind::KBarGeneral, form, sides, witness, narrative.str());
}

std::optional<Certificate> theorem3_certificate(const QNum& a, const QNum& b)
{
    auto f = pair_functional(a, b);
    if (!f)
        return std::nullopt;
    DeterminantForm form{4, {DeterminantBlock{{0, 2}, true, {*f}}, DeterminantBlock{{1, 3}, true, {*f}}}};
    return finish(CertificateKind::T3, form, {a, a, b, b}, a.interval().pow(2),
                  "F = (x1 f(x3) - x3 f(x1)) (x2 f(x4) - x4 f(x2)) with f(a) = 0, f(b) = 1 vanishes on every "
                  "x*x*x*y box and equals a^2 on a*a*b*b");
}

std::optional<Certificate> theorem4_certificate(const QNum& a, const QNum& b)
{
    auto f = pair_functional(a, b);
    if (!f)
        return std::nullopt;
    // f(a) = -1, f(b) = 1
    QFunctional g = *f;
    {
        auto duals = dual_functionals(std::vector<QNum>{a, b});
        for (std::size_t i = 0; i < g.row.size(); ++i)
            g.row[i] = duals[1].row[i] - duals[0].row[i];
    }
    ProductForm form{{g, g, g, g}};
    return finish(CertificateKind::T4, form, {a, a, a, b}, QInterval::point(-1),
                  "F = f(x1) f(x2) f(x3) f(x4) with f(a) = -1, f(b) = 1 is a square f(x)^2 f(y)^2 >= 0 on every "
                  "x*x*y*y box and equals -1 on a*a*a*b");
}

namespace {

void write_functional(std::ostream& out, const std::string& name, const QFunctional& f)
{
    out << "functional " << name << " =";
    for (std::size_t i = 0; i < f.row.size(); ++i)
        out << (i ? "," : " ") << to_string(f.row[i]);
    out << "\n";
}

} // namespace

std::string certificate_text(const Certificate& c)
{
    std::ostringstream out;
    out << "certificate kind=" << to_string(c.kind) << "\n";
    const SpacePtr& space = c.box.front().space();
    out << "coordinates =";
    for (std::size_t i = 0; i < space->dimension(); ++i)
        out << (i ? "," : " ") << space->coordinate_name(i);
    out << "\n";
    out << "box = ";
    for (std::size_t i = 0; i < c.box.size(); ++i)
        out << (i ? " x " : "") << c.box[i].to_string();
    out << "\n";
    std::visit(
        [&](const auto& fn) {
            using T = std::decay_t<decltype(fn)>;
            if constexpr (std::is_same_v<T, ProductForm>) {
                out << "form product";
                for (std::size_t a = 0; a < fn.factors.size(); ++a)
                    out << " " << (fn.factors[a] ? "f" + std::to_string(a + 1) : std::string("id"));
                out << "\n";
                for (std::size_t a = 0; a < fn.factors.size(); ++a)
                    if (fn.factors[a])
                        write_functional(out, "f" + std::to_string(a + 1), *fn.factors[a]);
            } else if constexpr (std::is_same_v<T, DeterminantForm>) {
                std::size_t fi = 0;
                for (std::size_t bi = 0; bi < fn.blocks.size(); ++bi) {
                    const auto& bl = fn.blocks[bi];
                    out << "form determinant block " << bi + 1 << " axes";
                    for (auto a : bl.axes)
                        out << " " << a + 1;
                    out << " rows" << (bl.identity_row ? " id" : "");
                    std::size_t first = fi;
                    for (std::size_t i = 0; i < bl.functionals.size(); ++i)
                        out << " f" << ++fi;
                    out << "\n";
                    for (std::size_t i = 0; i < bl.functionals.size(); ++i)
                        write_functional(out, "f" + std::to_string(first + i + 1), bl.functionals[i]);
                }
            } else {
                out << "form vertex alpha=" << to_string(fn.alpha) << " exponent=" << fn.exponent << "\n";
                out << "coset base = (";
                for (std::size_t i = 0; i < fn.base.size(); ++i)
                    out << (i ? ", " : "") << fn.base[i].to_string();
                out << ")\n";
                out << "group =";
                for (std::size_t i = 0; i < fn.generators.size(); ++i)
                    out << (i ? ", " : " ") << fn.generators[i].to_string();
                out << "\n";
            }
        },
        c.function);
    out << "value = " << c.whole_value.to_string() << "\n";
    out << "interval = " << c.sign_witness.to_string() << "\n";
    if (!c.narrative.empty())
        out << "# " << c.narrative << "\n";
    return out.str();
}

} // namespace bars
