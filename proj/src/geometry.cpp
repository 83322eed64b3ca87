#include "bars/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace bars {

BoxSpec::BoxSpec(std::vector<QNum> sides) : sides_(std::move(sides))
{
    if (sides_.empty())
        throw DimensionMismatch("a box needs at least one side");
    for (const auto& s : sides_) {
        require_same_space(sides_.front().space(), s.space());
        if (qnum_sign(s) != Sign::Positive)
            throw std::invalid_argument("box side " + s.to_string() + " is not positive");
    }
}

SymPoly BoxSpec::volume() const
{
    SymPoly v = SymPoly::constant(space(), 1);
    for (const auto& s : sides_)
        v = v * SymPoly::from_qnum(s);
    return v;
}

std::string BoxSpec::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < sides_.size(); ++i) {
        if (i)
            out += " x ";
        out += sides_[i].to_string();
    }
    return out;
}

PlacedBox::PlacedBox(std::vector<QNum> offset_, BoxSpec spec_) : offset(std::move(offset_)), spec(std::move(spec_))
{
    if (offset.size() != spec.dimension())
        throw DimensionMismatch("offset and box dimension differ");
    for (const auto& o : offset)
        require_same_space(spec.space(), o.space());
}

PlacedBox PlacedBox::at_origin(BoxSpec spec)
{
    std::vector<QNum> zero(spec.dimension(), QNum::zero(spec.space()));
    return PlacedBox(std::move(zero), std::move(spec));
}

std::string Violation::describe() const
{
    std::ostringstream out;
    switch (kind) {
    case ViolationKind::Gap:
        out << "gap";
        break;
    case ViolationKind::Overlap:
        out << "overlap";
        break;
    case ViolationKind::OutOfBounds:
        out << "piece outside the whole box";
        break;
    }
    if (!cell.empty()) {
        out << " at cell (";
        for (std::size_t i = 0; i < cell.size(); ++i)
            out << (i ? "," : "") << cell[i];
        out << ") covered " << count << " time" << (count == 1 ? "" : "s");
    }
    if (!pieces.empty()) {
        out << "; pieces";
        for (auto p : pieces)
            out << " " << p;
    }
    return out.str();
}

namespace {

std::size_t index_of(const std::vector<QNum>& sorted, const QNum& x)
{
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x, qnum_less);
    return static_cast<std::size_t>(it - sorted.begin());
}

} // namespace

TilingVerdict verify_tiling(const Dissection& d, const TilingOptions& options)
{
    const std::size_t n = d.whole.dimension();
    if (d.pieces.empty())
        throw InvalidDissection("a dissection needs at least one piece");
    for (const auto& p : d.pieces) {
        if (p.dimension() != n)
            throw DimensionMismatch("piece dimension differs from the whole box");
        require_same_space(d.whole.spec.space(), p.spec.space());
    }

    TilingVerdict verdict;
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        const auto& p = d.pieces[i];
        for (std::size_t a = 0; a < n; ++a) {
            if (qnum_less(p.lower(a), d.whole.lower(a)) || qnum_less(d.whole.upper(a), p.upper(a))) {
                verdict.violation = Violation{ViolationKind::OutOfBounds, {}, 0, {i}};
                return verdict;
            }
        }
    }

    // Distinct bounds per axis, sorted.
    std::vector<std::vector<QNum>> bounds(n);
    for (std::size_t a = 0; a < n; ++a) {
        auto& xs = bounds[a];
        xs.push_back(d.whole.lower(a));
        xs.push_back(d.whole.upper(a));
        for (const auto& p : d.pieces) {
            xs.push_back(p.lower(a));
            xs.push_back(p.upper(a));
        }
        std::sort(xs.begin(), xs.end(), qnum_less);
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    }

    std::vector<std::size_t> extent(n), stride(n);
    std::size_t cells = 1;
    for (std::size_t a = n; a-- > 0;) {
        extent[a] = bounds[a].size() - 1;
        stride[a] = cells;
        if (extent[a] != 0 && cells > options.max_cells / extent[a])
            throw GridTooLarge("refinement grid exceeds " + std::to_string(options.max_cells) + " cells");
        cells *= extent[a];
    }
    verdict.cells = cells;

    std::vector<std::uint32_t> cover(cells, 0);
    std::vector<std::pair<std::size_t, std::size_t>> range(n);
    for (const auto& p : d.pieces) {
        std::size_t count = 1;
        for (std::size_t a = 0; a < n; ++a) {
            range[a] = {index_of(bounds[a], p.lower(a)), index_of(bounds[a], p.upper(a))};
            count *= range[a].second - range[a].first;
        }
        std::vector<std::size_t> idx(n);
        for (std::size_t a = 0; a < n; ++a)
            idx[a] = range[a].first;
        for (std::size_t c = 0; c < count; ++c) {
            std::size_t flat = 0;
            for (std::size_t a = 0; a < n; ++a)
                flat += idx[a] * stride[a];
            ++cover[flat];
            for (std::size_t a = n; a-- > 0;) {
                if (++idx[a] < range[a].second)
                    break;
                idx[a] = range[a].first;
            }
        }
    }

    for (std::size_t flat = 0; flat < cells; ++flat) {
        if (cover[flat] == 1)
            continue;
        Violation v;
        v.kind = cover[flat] == 0 ? ViolationKind::Gap : ViolationKind::Overlap;
        v.count = cover[flat];
        v.cell.resize(n);
        for (std::size_t a = 0; a < n; ++a)
            v.cell[a] = (flat / stride[a]) % extent[a];
        for (std::size_t i = 0; i < d.pieces.size(); ++i) {
            bool inside = true;
            for (std::size_t a = 0; a < n && inside; ++a) {
                std::size_t lo = index_of(bounds[a], d.pieces[i].lower(a));
                std::size_t hi = index_of(bounds[a], d.pieces[i].upper(a));
                inside = lo <= v.cell[a] && v.cell[a] < hi;
            }
            if (inside)
                v.pieces.push_back(i);
        }
        verdict.violation = std::move(v);
        return verdict;
    }
    return verdict;
}

std::size_t distinct_side_count(const BoxSpec& b)
{
    std::vector<const QNum*> seen;
    for (const auto& s : b.sides())
        if (std::none_of(seen.begin(), seen.end(), [&](const QNum* t) { return *t == s; }))
            seen.push_back(&s);
    return seen.size();
}

bool is_k_bar(const BoxSpec& b, std::size_t k)
{
    return distinct_side_count(b) <= k;
}

} // namespace bars
