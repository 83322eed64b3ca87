#include "bars/dissector.hpp"

namespace bars {

Dissection grid_dissection(const BoxSpec& box, const AxisCuts& cuts, std::size_t max_pieces)
{
    const std::size_t n = box.dimension();
    if (cuts.size() != n)
        throw DimensionMismatch("one cut list per axis is required");
    std::size_t total = 1;
    std::vector<std::vector<QNum>> starts(n);
    for (std::size_t a = 0; a < n; ++a) {
        if (cuts[a].empty())
            throw SegmentSumMismatch("axis " + std::to_string(a) + " has no segments");
        QNum pos = QNum::zero(box.space());
        for (const auto& seg : cuts[a]) {
            require_same_space(box.space(), seg.space());
            if (qnum_sign(seg) != Sign::Positive)
                throw std::invalid_argument("segment " + seg.to_string() + " is not positive");
            starts[a].push_back(pos);
            pos += seg;
        }
        if (!(pos == box.side(a)))
            throw SegmentSumMismatch("segments on axis " + std::to_string(a) + " sum to " + pos.to_string() +
                                     ", side is " + box.side(a).to_string());
        if (total > max_pieces / cuts[a].size())
            throw GridTooLarge("grid dissection exceeds " + std::to_string(max_pieces) + " pieces");
        total *= cuts[a].size();
    }

    Dissection d{PlacedBox::at_origin(box), {}};
    d.pieces.reserve(total);
    std::vector<std::size_t> idx(n, 0);
    for (std::size_t c = 0; c < total; ++c) {
        std::vector<QNum> offset, sides;
        for (std::size_t a = 0; a < n; ++a) {
            offset.push_back(starts[a][idx[a]]);
            sides.push_back(cuts[a][idx[a]]);
        }
        d.pieces.emplace_back(std::move(offset), BoxSpec(std::move(sides)));
        for (std::size_t a = n; a-- > 0;) {
            if (++idx[a] < cuts[a].size())
                break;
            idx[a] = 0;
        }
    }
    return d;
}

KBarDissection dissect_into_k_bars(const BoxSpec& box, std::size_t k, const PosBasisParams& params,
                                   std::size_t max_pieces)
{
    if (k == 0)
        throw std::invalid_argument("k must be positive");
    if (auto cert = bar_impossibility_certificate(box, k))
        throw NotDissectable(std::move(*cert));

    PosBasisResult basis = positive_integer_basis(box.sides(), params);
    const IntMatrix& c = *basis.integer_coeffs;
    AxisCuts cuts(box.dimension());
    for (std::size_t j = 0; j < box.dimension(); ++j) {
        Integer count = 0;
        for (const auto& cji : c[j])
            count += cji;
        if (count > Integer(static_cast<unsigned long>(max_pieces)))
            throw GridTooLarge("axis " + std::to_string(j) + " needs " + count.get_str() + " segments");
        for (std::size_t i = 0; i < basis.basis.size(); ++i)
            for (Integer t = 0; t < c[j][i]; ++t)
                cuts[j].push_back(basis.basis[i]);
    }
    Dissection d = grid_dissection(box, cuts, max_pieces);
    return KBarDissection{std::move(d), std::move(basis), std::move(cuts)};
}

} // namespace bars
