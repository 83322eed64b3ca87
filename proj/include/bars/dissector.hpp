#pragma once

// Explicit k-bar dissections from positive integer bases.

#include <vector>

#include "bars/certify.hpp"
#include "bars/geometry.hpp"
#include "bars/posbasis.hpp"

namespace bars {

// The box cannot be cut into k-bars; carries the proof.
class NotDissectable : public Error {
public:
    explicit NotDissectable(Certificate c)
        : Error("box is not dissectable into k-bars: " + to_string(c.kind) + " certificate"),
          certificate(std::move(c))
    {
    }

    Certificate certificate;
};

using AxisCuts = std::vector<std::vector<QNum>>;

// Product grid of the per-axis segments; pieces in lexicographic cell order
// (axis 0 slowest). Segments on each axis must sum to the side exactly.
Dissection grid_dissection(const BoxSpec& box, const AxisCuts& cuts, std::size_t max_pieces = std::size_t{1} << 22);

struct KBarDissection {
    Dissection dissection;
    PosBasisResult basis;
    AxisCuts cuts;
};

KBarDissection dissect_into_k_bars(const BoxSpec& box, std::size_t k, const PosBasisParams& params = {},
                                   std::size_t max_pieces = std::size_t{1} << 22);

} // namespace bars
