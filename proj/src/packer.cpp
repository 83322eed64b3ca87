#include "bars/packer.hpp"

#include <algorithm>
#include <numeric>

namespace bars {

namespace {

struct Choice {
    std::size_t type;
    std::vector<std::uint64_t> extent;
};

void validate(const PackProblem& p)
{
    if (p.dims.empty())
        throw DimensionMismatch("the box needs at least one dimension");
    if (p.bricks.empty())
        throw std::invalid_argument("at least one brick type is required");
    std::uint64_t cells = 1;
    for (auto d : p.dims) {
        if (d == 0)
            throw std::invalid_argument("box dimensions must be positive");
        if (cells > p.max_cells / d)
            throw GridTooLarge("box exceeds " + std::to_string(p.max_cells) + " cells");
        cells *= d;
    }
    for (const auto& b : p.bricks) {
        if (b.dims.size() != p.dims.size())
            throw DimensionMismatch("brick and box differ in dimension");
        if (std::find(b.dims.begin(), b.dims.end(), 0) != b.dims.end())
            throw std::invalid_argument("brick dimensions must be positive");
        if (b.count && *b.count == 0)
            throw std::invalid_argument("brick counts must be positive");
    }
}

std::uint64_t volume(const std::vector<std::uint64_t>& dims)
{
    std::uint64_t v = 1;
    for (auto d : dims)
        v *= d;
    return v;
}

bool volume_rules_out(const PackProblem& p)
{
    std::uint64_t box = volume(p.dims);
    std::uint64_t g = 0;
    bool limited = true;
    Integer supply = 0;
    for (const auto& b : p.bricks) {
        g = std::gcd(g, volume(b.dims));
        if (b.count)
            supply += Integer(static_cast<unsigned long>(*b.count)) * Integer(static_cast<unsigned long>(volume(b.dims)));
        else
            limited = false;
    }
    if (box % g != 0)
        return true;
    return limited && supply < Integer(static_cast<unsigned long>(box));
}

std::vector<Choice> choices(const PackProblem& p)
{
    std::vector<Choice> out;
    for (std::size_t t = 0; t < p.bricks.size(); ++t) {
        std::vector<std::uint64_t> e = p.bricks[t].dims;
        if (!p.allow_rotations) {
            out.push_back({t, e});
            continue;
        }
        std::sort(e.begin(), e.end());
        do
            out.push_back({t, e});
        while (std::next_permutation(e.begin(), e.end()));
    }
    return out;
}

} // namespace

PackResult pack(const PackProblem& p, std::uint64_t node_limit)
{
    validate(p);
    if (volume_rules_out(p))
        return Infeasible{true, 0};

    const std::size_t n = p.dims.size();
    std::vector<std::uint64_t> stride(n);
    std::uint64_t cells = 1;
    for (std::size_t a = n; a-- > 0;) {
        stride[a] = cells;
        cells *= p.dims[a];
    }
    const std::vector<Choice> options = choices(p);
    std::vector<std::uint64_t> remaining;
    for (const auto& b : p.bricks)
        remaining.push_back(b.count.value_or(UINT64_MAX));

    std::vector<char> filled(cells, 0);
    std::vector<std::uint64_t> corner(n);

    auto coords_of = [&](std::uint64_t flat) {
        for (std::size_t a = 0; a < n; ++a)
            corner[a] = (flat / stride[a]) % p.dims[a];
    };
    // Visits every cell of the brick at `flat` with the given extent.
    auto for_cells = [&](std::uint64_t flat, const std::vector<std::uint64_t>& ext, auto&& fn) {
        std::vector<std::uint64_t> idx(n, 0);
        std::uint64_t total = volume(ext);
        for (std::uint64_t c = 0; c < total; ++c) {
            std::uint64_t f = flat;
            for (std::size_t a = 0; a < n; ++a)
                f += idx[a] * stride[a];
            if (!fn(f))
                return false;
            for (std::size_t a = n; a-- > 0;) {
                if (++idx[a] < ext[a])
                    break;
                idx[a] = 0;
            }
        }
        return true;
    };
    auto fits = [&](std::uint64_t flat, const Choice& c) {
        if (remaining[c.type] == 0)
            return false;
        coords_of(flat);
        for (std::size_t a = 0; a < n; ++a)
            if (corner[a] + c.extent[a] > p.dims[a])
                return false;
        return for_cells(flat, c.extent, [&](std::uint64_t f) { return !filled[f]; });
    };
    auto mark = [&](std::uint64_t flat, const Choice& c, char v) {
        for_cells(flat, c.extent, [&](std::uint64_t f) {
            filled[f] = v;
            return true;
        });
        if (remaining[c.type] != UINT64_MAX)
            remaining[c.type] += v ? -1 : 1;
    };

    struct Frame {
        std::uint64_t cell;
        std::size_t next;
    };
    std::vector<Frame> stack;
    std::vector<std::size_t> placed;
    std::uint64_t nodes = 0;
    std::uint64_t cursor = 0;

    auto first_empty = [&](std::uint64_t from) {
        while (from < cells && filled[from])
            ++from;
        return from;
    };

    cursor = first_empty(0);
    stack.push_back({cursor, 0});
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.cell == cells) {
            Packing out;
            out.nodes = nodes;
            std::uint64_t flat = 0;
            for (std::size_t i = 0; i < placed.size(); ++i) {
                flat = stack[i].cell;
                coords_of(flat);
                out.bricks.push_back(PlacedBrick{options[placed[i]].type, corner, options[placed[i]].extent});
            }
            return out;
        }
        bool advanced = false;
        while (top.next < options.size()) {
            std::size_t ci = top.next++;
            if (!fits(top.cell, options[ci]))
                continue;
            if (++nodes > node_limit)
                return LimitExceeded{nodes - 1};
            mark(top.cell, options[ci], 1);
            placed.push_back(ci);
            std::uint64_t nxt = first_empty(top.cell);
            stack.push_back({nxt, 0});
            advanced = true;
            break;
        }
        if (advanced)
            continue;
        stack.pop_back();
        if (stack.empty())
            break;
        mark(stack.back().cell, options[placed.back()], 0);
        placed.pop_back();
    }
    return Infeasible{false, nodes};
}

Dissection to_dissection(const PackProblem& p, const Packing& packing)
{
    SpacePtr space = SymbolSpace::rational();
    auto num = [&](std::uint64_t v) { return QNum::rational(space, Rational(static_cast<unsigned long>(v))); };
    std::vector<QNum> dims;
    for (auto d : p.dims)
        dims.push_back(num(d));
    Dissection d{PlacedBox::at_origin(BoxSpec(dims)), {}};
    for (const auto& b : packing.bricks) {
        std::vector<QNum> off, ext;
        for (std::size_t a = 0; a < b.offset.size(); ++a) {
            off.push_back(num(b.offset[a]));
            ext.push_back(num(b.extent[a]));
        }
        d.pieces.emplace_back(std::move(off), BoxSpec(std::move(ext)));
    }
    return d;
}

} // namespace bars
